#include "saw/verify.hpp"

#include "saw/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace saw {

namespace {

using nlohmann::json;

constexpr int kReportFormatVersion = 1;

json evidence_json(const Evidence& e) { return {{"lower", e.lower}, {"upper", e.upper}}; }

Evidence evidence_from(const json& node) {
    return {node.at("lower").get<std::string>(), node.at("upper").get<std::string>()};
}

std::string join_params(const Parameters& params) {
    std::string out;
    for (const auto& [k, v] : params) {
        if (!out.empty()) out += ' ';
        out += k + '=' + v;
    }
    return out;
}

std::string interval_text(const Evidence& e) { return e.lower == e.upper ? e.lower : "[" + e.lower + ", " + e.upper + "]"; }

}  // namespace

std::string serialize_report(const Report& report) {
    json doc;
    doc["format_version"] = kReportFormatVersion;
    doc["kind"] = "saw-verify-report";
    doc["toolkit_version"] = report.toolkit_version;
    doc["timestamp"] = report.timestamp;
    doc["census"] = {{"dimension", report.census.dimension},
                     {"max_length", report.census.max_length},
                     {"checksum", report.census.checksum}};
    if (report.bracket) {
        const auto& br = *report.bracket;
        doc["mu_bracket"] = {{"mu_low", format_double(br.mu_low)},
                             {"mu_high", format_double(br.mu_high)},
                             {"n_low", br.n_low},
                             {"n_high", br.n_high},
                             {"max_length", br.max_length}};
    }
    doc["phi"] = report.phi_description;
    doc["summary"] = {{"holds", report.count(Status::holds)},
                      {"fails", report.count(Status::fails)},
                      {"inconclusive", report.count(Status::inconclusive)}};
    json verdicts = json::array();
    for (const auto& v : report.verdicts) {
        json params = json::array();
        for (const auto& [k, val] : v.parameters) params.push_back({k, val});
        verdicts.push_back({{"subject", v.subject},
                            {"status", to_string(v.status)},
                            {"parameters", std::move(params)},
                            {"lhs", evidence_json(v.lhs)},
                            {"rhs", evidence_json(v.rhs)},
                            {"message", v.message}});
    }
    doc["verdicts"] = std::move(verdicts);
    return doc.dump(1) + "\n";
}

Report parse_report(const std::string& text) {
    try {
        const json doc = json::parse(text);
        if (doc.at("format_version").get<int>() != kReportFormatVersion) {
            throw VersionMismatchError("unsupported report format_version");
        }
        Report report;
        report.toolkit_version = doc.at("toolkit_version").get<std::string>();
        report.timestamp = doc.at("timestamp").get<std::string>();
        const auto& c = doc.at("census");
        report.census = {c.at("dimension").get<int>(), c.at("max_length").get<int>(), c.at("checksum").get<std::string>()};
        if (doc.contains("mu_bracket")) {
            const auto& b = doc.at("mu_bracket");
            MuBracket br;
            br.mu_low = parse_double(b.at("mu_low").get<std::string>());
            br.mu_high = parse_double(b.at("mu_high").get<std::string>());
            br.n_low = b.at("n_low").get<int>();
            br.n_high = b.at("n_high").get<int>();
            br.max_length = b.at("max_length").get<int>();
            report.bracket = br;
        }
        report.phi_description = doc.at("phi").get<std::string>();
        for (const auto& v : doc.at("verdicts")) {
            Verdict verdict;
            verdict.subject = v.at("subject").get<std::string>();
            verdict.status = parse_status(v.at("status").get<std::string>());
            for (const auto& p : v.at("parameters")) verdict.parameters.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
            verdict.lhs = evidence_from(v.at("lhs"));
            verdict.rhs = evidence_from(v.at("rhs"));
            verdict.message = v.at("message").get<std::string>();
            report.verdicts.push_back(std::move(verdict));
        }
        return report;
    } catch (const json::exception& e) {
        throw MalformedFileError(std::string("malformed report: ") + e.what());
    }
}

std::string render_table(const Report& report) {
    std::vector<std::array<std::string, 5>> rows;
    rows.push_back({"status", "subject", "parameters", "lhs", "rhs"});
    for (const auto& v : report.verdicts) {
        rows.push_back({to_string(v.status), v.subject, join_params(v.parameters), interval_text(v.lhs), interval_text(v.rhs)});
    }
    std::array<std::size_t, 5> width{};
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    }

    std::ostringstream out;
    out << "census d=" << report.census.dimension << " N=" << report.census.max_length << "  phi: " << report.phi_description
        << "\n";
    if (report.bracket) {
        out << "mu bracket [" << format_double(report.bracket->mu_low) << ", " << format_double(report.bracket->mu_high)
            << "]  (n_low=" << report.bracket->n_low << ", n_high=" << report.bracket->n_high << ")\n";
    }
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            out << r[i];
            if (i + 1 < r.size()) out << std::string(width[i] - r[i].size() + 2, ' ');
        }
        out << "\n";
    }
    out << report.count(Status::holds) << " holds, " << report.count(Status::fails) << " fails, "
        << report.count(Status::inconclusive) << " inconclusive\n";
    return out.str();
}

}  // namespace saw

#include "saw/phi_model.hpp"

#include "saw/errors.hpp"
#include "saw/numeric.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>

namespace saw {

PhiModel PhiModel::zero() { return PhiModel(); }

PhiModel PhiModel::power_law(double C, double nu) {
    if (!(C > 0.0) || !std::isfinite(C)) throw DomainError("power-law coefficient C must be positive");
    if (!(nu > 1.0) || !std::isfinite(nu)) throw DomainError("power-law exponent nu must exceed 1");
    PhiModel m;
    m.kind_ = Kind::power_law;
    m.C_ = C;
    m.nu_ = nu;
    return m;
}

PhiModel PhiModel::tabulated(std::vector<Breakpoint> breakpoints) {
    if (breakpoints.empty()) throw DomainError("tabulated phi needs at least one breakpoint");
    for (std::size_t i = 0; i < breakpoints.size(); ++i) {
        const auto& bp = breakpoints[i];
        if (!(bp.eps > 0.0 && bp.eps <= 1.0)) throw DomainError("breakpoint eps must lie in (0, 1]");
        if (!(bp.phi >= 0.0) || !std::isfinite(bp.phi)) throw DomainError("breakpoint phi must be finite and >= 0");
        if (i > 0 && !(breakpoints[i - 1].eps < bp.eps)) throw DomainError("breakpoints must be strictly increasing");
        if (i > 0 && breakpoints[i - 1].phi > bp.phi) throw DomainError("tabulated phi must be nondecreasing");
    }
    PhiModel m;
    m.kind_ = Kind::tabulated;
    m.table_ = std::move(breakpoints);

    // Piece i covers [eps_i, eps_{i+1}) (the last one [eps_k, 1]); on it phi/delta
    // has infimum phi_i / right end.
    const std::size_t k = m.table_.size();
    m.suffix_ratio_min_.assign(k, 0.0);
    for (std::size_t i = k; i-- > 0;) {
        const double right = i + 1 < k ? m.table_[i + 1].eps : 1.0;
        const double ratio = m.table_[i].phi / right;
        m.suffix_ratio_min_[i] = i + 1 < k ? std::min(ratio, m.suffix_ratio_min_[i + 1]) : ratio;
    }
    return m;
}

double PhiModel::domain_min() const noexcept { return kind_ == Kind::tabulated ? table_.front().eps : 0.0; }

bool PhiModel::defined_at(double eps) const noexcept {
    if (!(eps > 0.0 && eps <= 1.0)) return false;
    return kind_ != Kind::tabulated || eps >= table_.front().eps;
}

namespace {

// Index of the largest breakpoint <= eps.
std::size_t piece_of(const std::vector<Breakpoint>& table, double eps) {
    const auto it = std::upper_bound(table.begin(), table.end(), eps,
                                     [](double e, const Breakpoint& bp) { return e < bp.eps; });
    return static_cast<std::size_t>(it - table.begin()) - 1;
}

void require_defined(const PhiModel& m, double eps) {
    if (!m.defined_at(eps)) {
        throw DomainError("phi is undefined at eps = " + format_double(eps) + " (domain starts at " +
                          format_double(m.domain_min()) + ")");
    }
}

}  // namespace

double PhiModel::operator()(double eps) const {
    require_defined(*this, eps);
    switch (kind_) {
        case Kind::zero: return 0.0;
        case Kind::power_law: return C_ * std::pow(eps, nu_);
        case Kind::tabulated: return table_[piece_of(table_, eps)].phi;
    }
    return 0.0;
}

double PhiModel::capital_phi(double eps) const {
    require_defined(*this, eps);
    switch (kind_) {
        case Kind::zero: return 0.0;
        // delta^{-1} C delta^nu is increasing for nu > 1, so the infimum sits at delta = eps.
        case Kind::power_law: return C_ * std::pow(eps, nu_ - 1.0);
        case Kind::tabulated: return suffix_ratio_min_[piece_of(table_, eps)];
    }
    return 0.0;
}

std::string PhiModel::describe() const {
    switch (kind_) {
        case Kind::zero: return "zero";
        case Kind::power_law: return "power_law(C=" + format_double(C_) + ", nu=" + format_double(nu_) + ")";
        case Kind::tabulated:
            return "tabulated(" + std::to_string(table_.size()) + " breakpoints, eps >= " +
                   format_double(table_.front().eps) + ")";
    }
    return "";
}

PhiModel monotonize_phi(std::vector<Breakpoint> raw) {
    for (const auto& bp : raw) {
        if (!(bp.eps > 0.0 && bp.eps <= 1.0)) throw DomainError("sample eps must lie in (0, 1]");
        if (!(bp.phi >= 0.0)) throw DomainError("sample phi must be >= 0");
    }
    std::sort(raw.begin(), raw.end(), [](const Breakpoint& a, const Breakpoint& b) { return a.eps < b.eps; });
    std::vector<Breakpoint> out;
    double running = 0.0;
    for (const auto& bp : raw) {
        running = std::max(running, bp.phi);
        if (!out.empty() && out.back().eps == bp.eps) {
            out.back().phi = running;
        } else {
            out.push_back({bp.eps, running});
        }
    }
    if (out.empty() || running == 0.0) return PhiModel::zero();
    return PhiModel::tabulated(std::move(out));
}

std::string serialize_phi(const PhiModel& model) {
    nlohmann::json doc;
    switch (model.kind()) {
        case PhiModel::Kind::zero: doc["kind"] = "zero"; break;
        case PhiModel::Kind::power_law:
            doc["kind"] = "power_law";
            doc["C"] = format_double(model.coefficient());
            doc["nu"] = format_double(model.exponent());
            break;
        case PhiModel::Kind::tabulated: {
            doc["kind"] = "tabulated";
            auto rows = nlohmann::json::array();
            for (const auto& bp : model.breakpoints()) rows.push_back({format_double(bp.eps), format_double(bp.phi)});
            doc["breakpoints"] = std::move(rows);
            break;
        }
    }
    return doc.dump(1) + "\n";
}

PhiModel parse_phi(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
        const auto kind = doc.at("kind").get<std::string>();
        if (kind == "zero") return PhiModel::zero();
        if (kind == "power_law") {
            return PhiModel::power_law(parse_double(doc.at("C").get<std::string>()),
                                       parse_double(doc.at("nu").get<std::string>()));
        }
        if (kind == "tabulated") {
            std::vector<Breakpoint> table;
            for (const auto& row : doc.at("breakpoints")) {
                if (!row.is_array() || row.size() != 2) throw MalformedFileError("breakpoint rows are [eps, phi] pairs");
                table.push_back({parse_double(row[0].get<std::string>()), parse_double(row[1].get<std::string>())});
            }
            return PhiModel::tabulated(std::move(table));
        }
        throw MalformedFileError("unknown phi kind '" + kind + "'");
    } catch (const nlohmann::json::exception& e) {
        throw MalformedFileError(std::string("malformed phi model: ") + e.what());
    } catch (const DomainError& e) {
        throw MalformedFileError(std::string("invalid phi model: ") + e.what());
    }
}

}  // namespace saw

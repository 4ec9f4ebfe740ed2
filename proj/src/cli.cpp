#include "saw/cli.hpp"

#include "saw/bounds.hpp"
#include "saw/census.hpp"
#include "saw/errors.hpp"
#include "saw/genfun.hpp"
#include "saw/table_io.hpp"
#include "saw/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <thread>

namespace saw::cli {

namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// zero | empirical | power:C,NU | file:PATH
PhiModel resolve_phi(const std::string& arg, const std::optional<Census>& census) {
    if (arg == "zero") return PhiModel::zero();
    if (arg == "empirical") {
        if (!census) throw UsageError("--phi empirical needs a census file");
        return phi_empirical(*census);
    }
    if (arg.rfind("power:", 0) == 0) {
        const auto body = arg.substr(6);
        const auto comma = body.find(',');
        if (comma == std::string::npos) throw UsageError("power-law phi is written power:C,NU");
        try {
            return PhiModel::power_law(parse_double(body.substr(0, comma)), parse_double(body.substr(comma + 1)));
        } catch (const Error& e) {
            throw UsageError(std::string("bad power-law phi: ") + e.what());
        }
    }
    if (arg.rfind("file:", 0) == 0) return parse_phi(read_file(arg.substr(5)));
    throw UsageError("unknown --phi '" + arg + "' (expected zero, empirical, power:C,NU or file:PATH)");
}

std::vector<long long> sample_lengths(long long target, int points) {
    if (target < 0) throw UsageError("target length must be >= 0");
    std::vector<long long> out;
    if (points <= 0) {
        for (long long n = 0; n <= target; ++n) out.push_back(n);
        return out;
    }
    std::set<long long> picked;
    if (target <= 1 || points == 1) {
        picked.insert(target);
    } else {
        const double top = std::log(static_cast<double>(target));
        for (int i = 0; i < points; ++i) {
            picked.insert(std::llround(std::exp(top * i / (points - 1))));
        }
        picked.insert(target);
    }
    return {picked.begin(), picked.end()};
}

Table bound_table(const PhiModel& phi, const std::vector<long long>& lengths, std::optional<double> mu_high) {
    Table t;
    t.header = {"n", "hw_log", "quant_log", "eps_classic", "eps_quant", "lambda_quant", "mu_high_used"};
    for (const long long n : lengths) {
        const BoundRow row = quant_log_bound(phi, n, mu_high);
        t.rows.push_back({std::to_string(n), format_double(row.hw_log), format_double(row.quant_log),
                          format_double(row.eps_classic), format_double(row.eps_quant),
                          format_double(row.lambda_quant), mu_high ? format_double(*mu_high) : ""});
    }
    return t;
}

Table phi_table(const PhiModel& phi) {
    Table t;
    t.header = {"eps", "phi", "capital_phi"};
    for (const auto& bp : phi.breakpoints()) {
        t.rows.push_back({format_double(bp.eps), format_double(bp.phi), format_double(phi.capital_phi(bp.eps))});
    }
    return t;
}

void emit(const Table& table, const std::string& path, std::ostream& out, const std::vector<std::string>& comments = {}) {
    if (path.empty() || path == "-") {
        for (const auto& c : comments) out << "# " << c << "\n";
        write_csv(out, table);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot write " + path);
    for (const auto& c : comments) file << "# " << c << "\n";
    write_csv(file, table);
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream out;
    out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return out.str();
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    const auto digits = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) throw UsageError("bad rational '" + text + "'");
        return BigInt(s);
    };
    if (slash == std::string::npos) return Rational(digits(text));
    const BigInt den = digits(text.substr(slash + 1));
    if (den == 0) throw UsageError("zero denominator in '" + text + "'");
    return Rational(digits(text.substr(0, slash)), den);
}

std::string fit_summary(const PowerLawFit& fit) {
    return "power-law fit C=" + format_double(fit.C) + " nu=" + format_double(fit.nu) +
           " residual=" + format_double(fit.residual) + " points=" + std::to_string(fit.points) + " (" + fit.note + ")";
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Self-avoiding walk census and bound verification toolkit", "saw"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolkitVersion);

    int dimension = 2;
    int max_length = 0;
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    int prefix_depth = 6;
    std::string output;
    std::string census_path;
    std::string phi_arg = "zero";
    long long target = 0;
    int points = 0;
    int min_length = 1;
    bool fit = false;
    std::string model_out;
    std::string report_path = "report.json";
    int plot_points = 50;
    std::string z_grid;
    std::string eps_grid;
    int padding_ulps = Padding{}.ulps;
    bool quiet = false;

    auto* census_cmd = app.add_subcommand("census", "enumerate walks and bridges and write a census file");
    census_cmd->add_option("-d,--dimension", dimension, "lattice dimension")->check(CLI::Range(2, 127));
    census_cmd->add_option("-N,--max-length", max_length, "largest walk length")->required()->check(CLI::NonNegativeNumber);
    census_cmd->add_option("-j,--workers", workers, "worker threads")->check(CLI::PositiveNumber);
    census_cmd->add_option("--prefix-depth", prefix_depth, "depth at which the search is split into tasks")
        ->check(CLI::NonNegativeNumber);
    census_cmd->add_option("-o,--output", output, "census file to write")->required();

    auto* mu_cmd = app.add_subcommand("mu", "print the connective-constant bracket of a census");
    mu_cmd->add_option("census", census_path, "census file")->required();

    auto* bounds_cmd = app.add_subcommand("bounds", "emit classical and quantitative log-bounds as CSV");
    bounds_cmd->add_option("--phi", phi_arg, "zero | empirical | power:C,NU | file:PATH");
    bounds_cmd->add_option("-n,--target", target, "largest length")->required()->check(CLI::NonNegativeNumber);
    bounds_cmd->add_option("--points", points, "log-spaced sample size (default: every n)")->check(CLI::NonNegativeNumber);
    bounds_cmd->add_option("--census", census_path, "census file supplying mu_high (and empirical phi)");
    bounds_cmd->add_option("-o,--output", output, "CSV file (default stdout)");

    auto* phi_cmd = app.add_subcommand("phi", "extract the empirical rate function from a census");
    phi_cmd->add_option("census", census_path, "census file")->required();
    phi_cmd->add_option("--min-length", min_length, "ignore lengths below this")->check(CLI::PositiveNumber);
    phi_cmd->add_flag("--fit", fit, "also fit C eps^nu to the positive breakpoints");
    phi_cmd->add_option("--model-out", model_out, "write the tabulated model here");
    phi_cmd->add_option("-o,--output", output, "CSV file (default stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "check every inequality against a census");
    verify_cmd->add_option("census", census_path, "census file")->required();
    verify_cmd->add_option("--phi", phi_arg, "zero | empirical | power:C,NU | file:PATH");
    verify_cmd->add_option("-o,--output", report_path, "report file")->capture_default_str();
    verify_cmd->add_option("--z-grid", z_grid, "comma-separated rationals, e.g. 1/24,1/12");
    verify_cmd->add_option("--eps-grid", eps_grid, "comma-separated decimals in (0,1)");
    verify_cmd->add_option("--padding-ulps", padding_ulps, "outward padding for exp/log")->check(CLI::PositiveNumber);
    verify_cmd->add_flag("-q,--quiet", quiet, "do not print the verdict table");

    auto* plot_cmd = app.add_subcommand("plot-data", "emit CSV series for external plotting");
    plot_cmd->add_option("--phi", phi_arg, "zero | empirical | power:C,NU | file:PATH");
    plot_cmd->add_option("-n,--target", target, "largest length")->required()->check(CLI::NonNegativeNumber);
    plot_cmd->add_option("--points", plot_points, "log-spaced sample size")->capture_default_str()->check(CLI::NonNegativeNumber);
    plot_cmd->add_option("--census", census_path, "census file (adds mu_high and the phi series)");
    plot_cmd->add_option("-o,--output", output, "output prefix")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        std::optional<Census> census;
        if (!census_path.empty()) census = load_census(census_path);

        if (*census_cmd) {
            EnumerateOptions opts;
            opts.workers = workers;
            opts.prefix_depth = prefix_depth;
            const Census c = enumerate_census(LatticeDim(dimension), max_length, opts);
            save_census(c, output);
            out << "wrote " << output << ": d=" << dimension << " N=" << max_length << " c_N=" << c.c.back()
                << " b_N=" << c.b.back() << "\n";
            return kExitOk;
        }
        if (*mu_cmd) {
            const MuBracket br = mu_bracket(*census);
            out << "mu_low  = " << format_double(br.mu_low) << "  (n = " << br.n_low << ")\n";
            out << "mu_high = " << format_double(br.mu_high) << "  (n = " << br.n_high << ")\n";
            out << "z_c in [" << format_double(round_down(br.z_low())) << ", " << format_double(round_up(br.z_high()))
                << "]  from census d=" << census->dimension << " N=" << census->max_length << "\n";
            return kExitOk;
        }
        if (*bounds_cmd) {
            const PhiModel phi = resolve_phi(phi_arg, census);
            std::optional<double> mu_high;
            if (census) mu_high = mu_bracket(*census).mu_high;
            emit(bound_table(phi, sample_lengths(target, points), mu_high), output, out);
            return kExitOk;
        }
        if (*phi_cmd) {
            const PhiModel phi = phi_empirical(*census, min_length);
            std::vector<std::string> comments;
            if (fit) {
                try {
                    comments.push_back(fit_summary(fit_power_law(phi)));
                } catch (const InsufficientDataError& e) {
                    comments.push_back(std::string("no power-law fit: ") + e.what());
                }
            }
            if (!model_out.empty()) {
                std::ofstream file(model_out, std::ios::binary);
                if (!file) throw UsageError("cannot write " + model_out);
                file << serialize_phi(phi);
            }
            emit(phi_table(phi), output, out, comments);
            return kExitOk;
        }
        if (*verify_cmd) {
            VerifyConfig config;
            config.padding.ulps = padding_ulps;
            if (!z_grid.empty()) {
                std::vector<Rational> zs;
                for (const auto& item : split_list(z_grid)) zs.push_back(parse_rational(item));
                config.z_grid = std::move(zs);
            }
            if (!eps_grid.empty()) {
                std::vector<double> es;
                for (const auto& item : split_list(eps_grid)) es.push_back(parse_double(item));
                config.eps_grid = std::move(es);
            }
            const PhiModel phi = resolve_phi(phi_arg, census);
            Report report = run_all(*census, phi, config);
            report.timestamp = utc_timestamp();
            report.toolkit_version = kToolkitVersion;
            std::ofstream file(report_path, std::ios::binary);
            if (!file) throw UsageError("cannot write " + report_path);
            file << serialize_report(report);
            if (!quiet) out << render_table(report);
            out << "report written to " << report_path << "\n";
            return report.count(Status::fails) == 0 ? kExitOk : kExitFails;
        }
        if (*plot_cmd) {
            const PhiModel phi = resolve_phi(phi_arg, census);
            std::optional<double> mu_high;
            if (census) mu_high = mu_bracket(*census).mu_high;
            emit(bound_table(phi, sample_lengths(target, plot_points), mu_high), output + "_bounds.csv", out);
            out << "wrote " << output << "_bounds.csv\n";
            if (census) {
                emit(phi_table(phi_empirical(*census)), output + "_phi.csv", out);
                out << "wrote " << output << "_phi.csv\n";
            }
            return kExitOk;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace saw::cli

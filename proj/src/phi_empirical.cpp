#include "saw/bounds.hpp"

#include "saw/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

namespace saw {

namespace {

// Rates are lowered by this much so the certificate A <= b_n exp(-rate n)
// survives rounding in log/exp with room to spare.
constexpr double kRateMargin = 1e-12;

double log_count(const BigInt& v) { return std::log(v.convert_to<double>()); }

}  // namespace

PhiModel phi_empirical(const Census& census, int min_length) {
    if (census.max_length < 1) throw DomainError("phi_empirical needs a census with max_length >= 1");
    min_length = std::max(min_length, 1);
    if (min_length > census.max_length) throw DomainError("phi_empirical: min_length exceeds the census length");

    // ratio m/n in lowest terms -> smallest rate among the pairs with that ratio
    struct Ratio {
        int num, den;
        bool operator<(const Ratio& o) const { return num * o.den < o.num * den; }
    };
    std::map<Ratio, double> rate_at;
    constexpr double kInf = std::numeric_limits<double>::infinity();

    for (int n = 1; n <= census.max_length; ++n) {
        const BigInt& total = census.b[static_cast<std::size_t>(n)];
        for (int m = 1; m <= n; ++m) {
            const int g = std::gcd(m, n);
            const Ratio key{m / g, n / g};
            auto [it, inserted] = rate_at.try_emplace(key, kInf);
            if (n < min_length || total == 0) continue;
            const BigInt reach = bridges_reaching(census, n, m);
            double r = kInf;
            if (reach == total) r = 0.0;
            else if (reach > 0) r = std::max(0.0, (log_count(total) - log_count(reach)) / n - kRateMargin);
            it->second = std::min(it->second, r);
        }
    }

    // phi^(q) = min of rates over ratios >= q: a suffix minimum in ratio order.
    std::vector<Breakpoint> table;
    double running = kInf;
    for (auto it = rate_at.rbegin(); it != rate_at.rend(); ++it) {
        running = std::min(running, it->second);
        table.push_back({static_cast<double>(it->first.num) / it->first.den, running});
    }
    std::reverse(table.begin(), table.end());
    // Ratio 1 always has data (the straight walk), so every suffix minimum is finite.
    if (!std::isfinite(table.back().phi)) throw InsufficientDataError("phi_empirical: no enumerated bridges");
    return PhiModel::tabulated(std::move(table));
}

PowerLawFit fit_power_law(const PhiModel& tabulated) {
    if (tabulated.kind() != PhiModel::Kind::tabulated) throw DomainError("fit_power_law expects a tabulated model");
    std::vector<double> xs, ys;
    for (const auto& bp : tabulated.breakpoints()) {
        if (bp.phi > 0.0) {
            xs.push_back(std::log(bp.eps));
            ys.push_back(std::log(bp.phi));
        }
    }
    if (xs.size() < 3) {
        throw InsufficientDataError("fit_power_law needs at least 3 breakpoints with phi > 0, got " +
                                    std::to_string(xs.size()));
    }
    const double k = static_cast<double>(xs.size());
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / k;
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / k;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    PowerLawFit fit;
    fit.points = static_cast<int>(xs.size());
    fit.nu = sxx > 0.0 ? sxy / sxx : 0.0;
    const double log_c = my - fit.nu * mx;
    fit.C = std::exp(log_c);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - (log_c + fit.nu * xs[i]);
        fit.residual += r * r;
    }
    fit.nu_not_above_one = !(fit.nu > 1.0);
    fit.note = "extrapolation, not a certificate";
    if (fit.nu_not_above_one) fit.note += "; fitted nu <= 1, which no valid rate function can have";
    return fit;
}

}  // namespace saw

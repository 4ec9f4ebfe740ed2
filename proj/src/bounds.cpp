#include "saw/bounds.hpp"

#include "saw/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace saw {

namespace {

constexpr double kLambdaCap = 0x1p60;
constexpr int kBisectionSteps = 80;
constexpr int kGridDenominator = 1024;
constexpr int kGeometricPerOctave = 16;
constexpr int kGeometricOctaves = 40;
constexpr int kRefineRounds = 3;
constexpr int kRefineSamples = 64;

void require_open_unit(double eps, const char* what) {
    if (!(eps > 0.0 && eps < 1.0)) throw DomainError(std::string(what) + ": eps must lie in (0, 1)");
}

}  // namespace

std::optional<double> psi_gap(const PhiModel& phi, double lambda) {
    if (!(lambda > 1.0)) throw DomainError("psi_gap: lambda must exceed 1");
    const double inv = 1.0 / lambda;
    if (!phi.defined_at(inv)) return std::nullopt;
    const double x = phi.capital_phi(inv) / (lambda - 1.0);
    return -std::expm1(-x);
}

double psi(const PhiModel& phi, double eps) {
    require_open_unit(eps, "psi");
    const auto member = [&](double lambda) {
        const auto g = psi_gap(phi, lambda);
        return g && *g >= eps;
    };

    double lo = 1.0;
    double hi = 2.0;
    while (member(hi)) {
        lo = hi;
        if (hi >= kLambdaCap) return lo;
        hi *= 2.0;
    }
    for (int i = 0; i < kBisectionSteps; ++i) {
        const double mid = lo + (hi - lo) / 2.0;
        if (mid <= lo || mid >= hi) break;
        if (member(mid)) lo = mid;
        else hi = mid;
    }
    return lo;
}

double psi_objective(double eps, double lambda, long long n) {
    const double log_keep = std::log1p(-eps);
    return 2.0 / -std::expm1(lambda * log_keep) - static_cast<double>(n + 1) * log_keep;
}

BigPsi big_psi(const PhiModel& phi, long long n) {
    if (n < 0) throw DomainError("big_psi: n must be >= 0");

    std::vector<double> grid;
    for (int k = 1; k < kGridDenominator; ++k) grid.push_back(static_cast<double>(k) / kGridDenominator);
    if (n > 2) grid.push_back(std::sqrt(2.0 / static_cast<double>(n)));
    // Geometric points reach the eps ~ n^{-alpha} optima that lie below 1/1024.
    for (int j = 1; j <= kGeometricPerOctave * kGeometricOctaves; ++j) {
        grid.push_back(std::exp2(-static_cast<double>(j) / kGeometricPerOctave));
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    BigPsi best{std::numeric_limits<double>::infinity(), 0.0, 1.0};
    const auto consider = [&](double eps) {
        const double lambda = psi(phi, eps);
        const double value = psi_objective(eps, lambda, n);
        if (value < best.value) best = {value, eps, lambda};
        return value;
    };

    std::size_t arg = 0;
    double arg_value = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double v = consider(grid[i]);
        if (v < arg_value) {
            arg_value = v;
            arg = i;
        }
    }

    double left = arg > 0 ? grid[arg - 1] : grid[arg] / 2.0;
    double right = arg + 1 < grid.size() ? grid[arg + 1] : (grid[arg] + 1.0) / 2.0;
    for (int round = 0; round < kRefineRounds; ++round) {
        const double step = (right - left) / (kRefineSamples + 1);
        double round_best = std::numeric_limits<double>::infinity();
        double round_arg = best.witness_eps;
        for (int i = 1; i <= kRefineSamples; ++i) {
            const double eps = left + step * i;
            if (!(eps > 0.0 && eps < 1.0)) continue;
            const double v = consider(eps);
            if (v < round_best) {
                round_best = v;
                round_arg = eps;
            }
        }
        left = std::max(round_arg - step, left);
        right = std::min(round_arg + step, right);
    }
    return best;
}

double hw_explicit_log_bound(long long n) {
    if (n <= 2) throw DomainError("hw_explicit_log_bound requires n > 2");
    const double nd = static_cast<double>(n);
    return std::sqrt(2.0 * nd) - 2.0 - (nd + 1.0) * std::log1p(-std::sqrt(2.0 / nd));
}

EvalValue hw_explicit_log_bound_enclosure(long long n, Padding pad) {
    if (n <= 2) throw DomainError("hw_explicit_log_bound requires n > 2");
    const auto nd = EvalValue::exact(static_cast<double>(n));
    const auto root_2n = sqrt(scale(nd, 2.0));
    const auto eps = sqrt(div(EvalValue::exact(2.0), nd));
    const auto log_keep = log(sub(EvalValue::exact(1.0), eps), pad);
    const auto n1 = EvalValue::exact(static_cast<double>(n + 1));
    return sub(sub(root_2n, EvalValue::exact(2.0)), mul(n1, log_keep));
}

BoundRow quant_log_bound(const PhiModel& phi, long long n, std::optional<double> mu_high) {
    BoundRow row;
    row.n = n;
    if (n > 2) {
        row.hw_log = hw_explicit_log_bound(n);
        row.eps_classic = std::sqrt(2.0 / static_cast<double>(n));
    } else {
        row.hw_log = std::numeric_limits<double>::infinity();
        row.eps_classic = std::numeric_limits<double>::quiet_NaN();
    }
    const BigPsi bp = big_psi(phi, n);
    row.quant_log = bp.value - 2.0;
    row.eps_quant = bp.witness_eps;
    row.lambda_quant = bp.witness_lambda;
    row.mu_high_used = mu_high;
    return row;
}

EvalValue quant_log_enclosure(double eps, double lambda, long long n, Padding pad) {
    require_open_unit(eps, "quant_log_enclosure");
    const auto log_keep = log(sub(EvalValue::exact(1.0), EvalValue::exact(eps)), pad);
    const auto power = exp(scale(log_keep, lambda), pad);
    const auto bridge_bound = div(EvalValue::exact(2.0), sub(EvalValue::exact(1.0), power));
    const auto n1 = EvalValue::exact(static_cast<double>(n + 1));
    return sub(sub(bridge_bound, mul(n1, log_keep)), EvalValue::exact(2.0));
}

ScalingExponents corollary_alpha(double nu) {
    if (!(nu > 1.0)) throw DomainError("corollary_alpha: nu must exceed 1 (nu <= 1 cannot satisfy the rate bound)");
    if (std::isinf(nu)) return {0.5, 0.5};
    return {nu / (2.0 * nu - 1.0), (nu - 1.0) / (2.0 * nu - 1.0)};
}

double bridge_genfun_upper(const PhiModel& phi, double eps) {
    require_open_unit(eps, "bridge_genfun_upper");
    const double lambda = psi(phi, eps);
    if (lambda == 1.0) return 1.0 / eps;
    return 1.0 / -std::expm1(lambda * std::log1p(-eps));
}

double xi_lower_from_phi(const PhiModel& phi, double eps, double lambda) {
    require_open_unit(eps, "xi_lower_from_phi");
    if (!(lambda >= 1.0)) throw DomainError("xi_lower_from_phi: lambda must be >= 1");
    const double rate = -std::log1p(-eps);
    return std::min(lambda * rate, rate + phi.capital_phi(1.0 / lambda));
}

}  // namespace saw

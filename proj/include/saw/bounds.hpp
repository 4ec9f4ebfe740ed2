#pragma once

#include "saw/census.hpp"
#include "saw/enclosure.hpp"
#include "saw/phi_model.hpp"

#include <optional>
#include <string>
#include <utility>

namespace saw {

// g(lambda) = 1 - exp(-capital_phi(1/lambda) / (lambda - 1)); nonincreasing in lambda.
// Returns nullopt where the model is undefined at 1/lambda.
std::optional<double> psi_gap(const PhiModel& phi, double lambda);

// A certified member lambda >= 1 of {lambda : eps <= g(lambda)}, found by doubling
// then bisection, close to the supremum. 1 when no lambda > 1 qualifies.
double psi(const PhiModel& phi, double eps);

// 2 / (1 - (1-eps)^lambda) - (n+1) log(1-eps)
double psi_objective(double eps, double lambda, long long n);

struct BigPsi {
    double value = 0.0;
    double witness_eps = 0.0;
    double witness_lambda = 1.0;
};

// Minimum of psi_objective(eps, psi(eps), n) over a fixed eps grid plus local
// refinement. Any eps gives a valid bound, so the minimum is one too.
BigPsi big_psi(const PhiModel& phi, long long n);

// sqrt(2n) - 2 - (n+1) log(1 - sqrt(2/n)); requires n > 2.
double hw_explicit_log_bound(long long n);
EvalValue hw_explicit_log_bound_enclosure(long long n, Padding pad = {});

struct BoundRow {
    long long n = 0;
    double hw_log = 0.0;  // +inf for n <= 2
    double quant_log = 0.0;
    double eps_classic = 0.0;  // NaN for n <= 2
    double eps_quant = 0.0;
    double lambda_quant = 1.0;
    std::optional<double> mu_high_used;
};

BoundRow quant_log_bound(const PhiModel& phi, long long n, std::optional<double> mu_high = {});

// Enclosure of psi_objective(eps, lambda, n) - 2 evaluated with outward rounding.
EvalValue quant_log_enclosure(double eps, double lambda, long long n, Padding pad = {});

struct ScalingExponents {
    double alpha = 0.0;
    double exponent = 0.0;
};

// alpha = nu/(2nu-1), exponent = (nu-1)/(2nu-1); rejects nu <= 1.
ScalingExponents corollary_alpha(double nu);

// [1 - (1-eps)^psi(eps)]^{-1}
double bridge_genfun_upper(const PhiModel& phi, double eps);

// min{-lambda log(1-eps), -log(1-eps) + capital_phi(1/lambda)}
double xi_lower_from_phi(const PhiModel& phi, double eps, double lambda);

// Empirical rate: phi^(eps) = min over enumerated (n, m), n >= min_length,
// m/n >= eps, of -(1/n) log(A(n,m)/b_n). Breakpoints at every ratio m/n.
PhiModel phi_empirical(const Census& census, int min_length = 1);

struct PowerLawFit {
    double C = 0.0;
    double nu = 0.0;
    double residual = 0.0;  // sum of squared residuals in log space
    int points = 0;
    bool nu_not_above_one = false;
    std::string note;
};

// Least-squares fit of log phi against log eps over positive breakpoints.
// An extrapolation, not a certificate.
PowerLawFit fit_power_law(const PhiModel& tabulated);

}  // namespace saw

#include "saw/genfun.hpp"

#include "saw/errors.hpp"

#include <cmath>
#include <limits>

namespace saw {

namespace {

constexpr double kRootSlack = 0x1p-40;

// Best double approximation of count^{1/n}; relative error far below kRootSlack.
double nth_root(const BigInt& count, int n) {
    if (n == 1) return count.convert_to<double>();
    return std::exp(std::log(count.convert_to<double>()) / n);
}

Rational horner(const std::vector<BigInt>& coeffs, std::size_t upto, const Rational& z) {
    Rational acc = 0;
    for (std::size_t i = upto + 1; i-- > 0;) acc = acc * z + Rational(coeffs[i]);
    return acc;
}

void require_nonnegative(const Rational& z) {
    if (z < 0) throw DomainError("generating functions are evaluated at z >= 0 only");
}

}  // namespace

Rational MuBracket::z_low() const {
    if (!std::isfinite(mu_high)) return Rational(0);
    return Rational(1) / exact_rational(mu_high);
}

Rational MuBracket::z_high() const { return Rational(1) / exact_rational(mu_low); }

bool MuBracket::contains(const MuBracket& inner) const {
    return mu_low <= inner.mu_low && inner.mu_high <= mu_high;
}

MuBracket mu_bracket(const Census& census) {
    MuBracket br;
    br.max_length = census.max_length;
    br.mu_low = 1.0;
    br.mu_high = std::numeric_limits<double>::infinity();
    for (int n = 1; n <= census.max_length; ++n) {
        const auto un = static_cast<std::size_t>(n);
        if (census.b[un] > 0) {
            double low = nth_root(census.b[un], n);
            if (n > 1) low *= 1.0 - kRootSlack;
            if (low > br.mu_low) {
                br.mu_low = low;
                br.n_low = n;
            }
        }
        double high = nth_root(census.c[un], n);
        if (n > 1) high *= 1.0 + kRootSlack;
        if (high < br.mu_high) {
            br.mu_high = high;
            br.n_high = n;
        }
    }
    return br;
}

Rational chi_trunc_exact(const SeriesContext& ctx) {
    require_nonnegative(ctx.z);
    return horner(ctx.census.c, static_cast<std::size_t>(ctx.census.max_length), ctx.z);
}

Rational B_trunc_exact(const SeriesContext& ctx) {
    require_nonnegative(ctx.z);
    return horner(ctx.census.b, static_cast<std::size_t>(ctx.census.max_length), ctx.z);
}

Rational a_trunc_exact(const SeriesContext& ctx, int height) {
    require_nonnegative(ctx.z);
    if (height < 0 || height > ctx.census.max_length) {
        throw DomainError("a_trunc: height " + std::to_string(height) + " outside 0.." +
                          std::to_string(ctx.census.max_length));
    }
    Rational acc = 0;
    for (int m = ctx.census.max_length; m >= 0; --m) {
        const auto& row = ctx.census.bridge_by_height[static_cast<std::size_t>(m)];
        acc *= ctx.z;
        if (height <= m) acc += Rational(row[static_cast<std::size_t>(height)]);
    }
    return acc;
}

EvalValue chi_trunc(const SeriesContext& ctx) { return EvalValue::of(chi_trunc_exact(ctx)); }
EvalValue B_trunc(const SeriesContext& ctx) { return EvalValue::of(B_trunc_exact(ctx)); }
EvalValue a_trunc(const SeriesContext& ctx, int height) { return EvalValue::of(a_trunc_exact(ctx, height)); }

EvalValue B_tail_bound(const Census& census, const Rational& z, double mu_high, Padding) {
    require_nonnegative(z);
    if (!std::isfinite(mu_high)) throw DivergentTailError("B_tail_bound: mu_high is not finite");
    // z, mu_high and hence the whole bound are exact rationals.
    const Rational ratio = z * exact_rational(mu_high);
    if (ratio >= 1) throw DivergentTailError("B_tail_bound: z * mu_high >= 1, the bridge tail diverges");
    const Rational head = B_trunc_exact({census, z});
    Rational tail = 1;
    for (int i = 0; i <= census.max_length; ++i) tail *= ratio;
    tail /= 1 - ratio;
    return {round_down(head), round_up(head + tail)};
}

std::vector<Rational> exp_bridge_coeffs(const Census& census) {
    // F = exp(G), G = sum_{k>=1} 2 b_k z^k  =>  k e_k = sum_{j=1}^k j g_j e_{k-j}
    const auto size = static_cast<std::size_t>(census.max_length) + 1;
    std::vector<Rational> e(size, Rational(0));
    e[0] = 1;
    for (std::size_t k = 1; k < size; ++k) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= k; ++j) acc += Rational(2 * j) * Rational(census.b[j]) * e[k - j];
        e[k] = acc / Rational(k);
    }
    return e;
}

std::vector<double> xi_upper(const Census& census, const Rational& z, Padding pad) {
    if (z <= 0) throw DomainError("xi_upper requires z > 0");
    std::vector<double> out;
    for (int n = 1; n <= census.max_length; ++n) {
        const Rational a = a_trunc_exact({census, z}, n);
        if (a == 0) {
            out.push_back(std::numeric_limits<double>::infinity());
            continue;
        }
        const EvalValue bound = div(neg(log(EvalValue::of(a), pad)), EvalValue::exact(n));
        out.push_back(bound.upper);
    }
    return out;
}

}  // namespace saw

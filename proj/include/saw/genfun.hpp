#pragma once

#include "saw/census.hpp"
#include "saw/enclosure.hpp"

#include <vector>

namespace saw {

// Rigorous bracket mu_low <= mu_c <= mu_high from a finite census.
struct MuBracket {
    double mu_low = 1.0;
    double mu_high = 0.0;
    int n_low = 0;   // length whose bridge count gave mu_low
    int n_high = 0;  // length whose walk count gave mu_high
    int max_length = 0;

    // 1/mu_high <= z_c <= 1/mu_low
    Rational z_low() const;
    Rational z_high() const;
    bool contains(const MuBracket& inner) const;
};

// mu_low = max_n b_n^{1/n}, mu_high = min_n c_n^{1/n}, each rounded outward.
MuBracket mu_bracket(const Census& census);

// Partial sums of the walk and bridge generating functions at a rational point.
struct SeriesContext {
    const Census& census;
    Rational z;
};

Rational chi_trunc_exact(const SeriesContext& ctx);
Rational B_trunc_exact(const SeriesContext& ctx);
// Sum over m <= N of b_{m,height} z^m.
Rational a_trunc_exact(const SeriesContext& ctx, int height);

EvalValue chi_trunc(const SeriesContext& ctx);
EvalValue B_trunc(const SeriesContext& ctx);
EvalValue a_trunc(const SeriesContext& ctx, int height);

// Upper bound on the full series B(z) using b_m <= mu_high^m beyond N.
// Throws DivergentTailError unless z * mu_high < 1.
EvalValue B_tail_bound(const Census& census, const Rational& z, double mu_high, Padding pad = {});

// Coefficients e_0..e_N of exp(2(B(z) - 1)). e_k depends only on b_1..b_k, so
// degree N is the highest that the census determines.
std::vector<Rational> exp_bridge_coeffs(const Census& census);

// Entry n-1 holds -(1/n) log a_trunc(z, n), an upper bound on xi(z); +inf when
// no enumerated bridge reaches height n.
std::vector<double> xi_upper(const Census& census, const Rational& z, Padding pad = {});

}  // namespace saw

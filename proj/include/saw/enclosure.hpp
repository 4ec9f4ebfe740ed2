#pragma once

#include "saw/numeric.hpp"

namespace saw {

// Outward padding, in ulps, applied to transcendental results (exp, log).
// Basic arithmetic is rounded outward exactly and ignores it.
struct Padding {
    int ulps = 2;

    Padding doubled() const { return {2 * ulps}; }
};

// Closed interval [lower, upper] that contains the true value.
struct EvalValue {
    double lower = 0.0;
    double upper = 0.0;

    static EvalValue exact(double x) { return {x, x}; }
    static EvalValue of(const Rational& q);
    static EvalValue of(const BigInt& n);

    bool contains(double x) const { return lower <= x && x <= upper; }
    double width() const { return upper - lower; }
};

// [lo, hi] moved outward by pad.ulps ulps on each side.
EvalValue widen(double lo, double hi, Padding pad);

EvalValue add(EvalValue a, EvalValue b);
EvalValue sub(EvalValue a, EvalValue b);
EvalValue mul(EvalValue a, EvalValue b);
// [-inf, inf] when b contains 0.
EvalValue div(EvalValue a, EvalValue b);
EvalValue neg(EvalValue a);
EvalValue scale(EvalValue a, double k);
EvalValue sqrt(EvalValue a);
// a >= 0, k >= 0.
EvalValue pow(EvalValue a, int k);

// exp(0) = 1 and log(1) = 0 are returned exactly.
EvalValue exp(EvalValue a, Padding pad = {});
// Nonpositive endpoints map to -inf.
EvalValue log(EvalValue a, Padding pad = {});

}  // namespace saw

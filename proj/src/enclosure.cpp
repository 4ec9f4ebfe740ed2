#include "saw/enclosure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace saw {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double step_down(double x, int ulps) {
    for (int i = 0; i < ulps && x != -kInf; ++i) x = std::nextafter(x, -kInf);
    return x;
}

double step_up(double x, int ulps) {
    for (int i = 0; i < ulps && x != kInf; ++i) x = std::nextafter(x, kInf);
    return x;
}

// Directed results from the rounded value s and the sign of the exact error
// (true value = s + err).
double directed(double s, double err, bool upward) {
    if (std::isnan(s)) return upward ? kInf : -kInf;
    if (!std::isfinite(s)) {
        if (upward) return s;
        return s == kInf ? std::numeric_limits<double>::max() : s;
    }
    if (std::isnan(err)) return upward ? std::nextafter(s, kInf) : std::nextafter(s, -kInf);
    if (upward) return err > 0.0 ? std::nextafter(s, kInf) : s;
    return err < 0.0 ? std::nextafter(s, -kInf) : s;
}

// TwoSum: a + b = s + err exactly.
double add_dir(double a, double b, bool upward) {
    const double s = a + b;
    const double bb = s - a;
    const double err = (a - (s - bb)) + (b - bb);
    return directed(s, err, upward);
}

double mul_dir(double a, double b, bool upward) {
    if (a == 0.0 || b == 0.0) return 0.0;
    const double p = a * b;
    return directed(p, std::fma(a, b, -p), upward);
}

double div_dir(double a, double b, bool upward) {
    const double q = a / b;
    if (!std::isfinite(q) || !std::isfinite(b)) return directed(q, std::numeric_limits<double>::quiet_NaN(), upward);
    // a = q*b + r exactly; the error of q is r/b, which has the sign of r*b.
    const double r = std::fma(-q, b, a);
    return directed(q, b > 0.0 ? r : -r, upward);
}

double sqrt_dir(double x, bool upward) {
    if (x <= 0.0) return 0.0;
    const double s = std::sqrt(x);
    return directed(s, std::fma(-s, s, x), upward);
}

double mul_bound(EvalValue a, EvalValue b, bool upward) {
    const double p[] = {mul_dir(a.lower, b.lower, upward), mul_dir(a.lower, b.upper, upward),
                        mul_dir(a.upper, b.lower, upward), mul_dir(a.upper, b.upper, upward)};
    return upward ? *std::max_element(std::begin(p), std::end(p)) : *std::min_element(std::begin(p), std::end(p));
}

}  // namespace

EvalValue EvalValue::of(const Rational& q) { return {round_down(q), round_up(q)}; }

EvalValue EvalValue::of(const BigInt& n) { return of(Rational(n)); }

EvalValue widen(double lo, double hi, Padding pad) {
    if (std::isnan(lo)) lo = -kInf;
    if (std::isnan(hi)) hi = kInf;
    return {step_down(lo, pad.ulps), step_up(hi, pad.ulps)};
}

EvalValue add(EvalValue a, EvalValue b) { return {add_dir(a.lower, b.lower, false), add_dir(a.upper, b.upper, true)}; }

EvalValue sub(EvalValue a, EvalValue b) { return add(a, neg(b)); }

EvalValue neg(EvalValue a) { return {-a.upper, -a.lower}; }

EvalValue mul(EvalValue a, EvalValue b) { return {mul_bound(a, b, false), mul_bound(a, b, true)}; }

EvalValue div(EvalValue a, EvalValue b) {
    if (b.lower <= 0.0 && b.upper >= 0.0) return {-kInf, kInf};
    const double q[] = {div_dir(a.lower, b.lower, false), div_dir(a.lower, b.upper, false),
                        div_dir(a.upper, b.lower, false), div_dir(a.upper, b.upper, false)};
    const double r[] = {div_dir(a.lower, b.lower, true), div_dir(a.lower, b.upper, true),
                        div_dir(a.upper, b.lower, true), div_dir(a.upper, b.upper, true)};
    return {*std::min_element(std::begin(q), std::end(q)), *std::max_element(std::begin(r), std::end(r))};
}

EvalValue scale(EvalValue a, double k) { return mul(a, EvalValue::exact(k)); }

EvalValue sqrt(EvalValue a) { return {sqrt_dir(a.lower, false), sqrt_dir(a.upper, true)}; }

EvalValue pow(EvalValue a, int k) {
    EvalValue result = EvalValue::exact(1.0);
    EvalValue base = a;
    for (unsigned e = static_cast<unsigned>(k); e; e >>= 1) {
        if (e & 1u) result = mul(result, base);
        if (e > 1) base = mul(base, base);
    }
    return result;
}

EvalValue exp(EvalValue a, Padding pad) {
    const auto one = [&](double x, bool upward) {
        if (x == 0.0) return 1.0;
        const double v = std::exp(x);
        return upward ? step_up(v, pad.ulps) : std::max(0.0, step_down(v, pad.ulps));
    };
    return {one(a.lower, false), one(a.upper, true)};
}

EvalValue log(EvalValue a, Padding pad) {
    const auto one = [&](double x, bool upward) {
        if (!(x > 0.0)) return -kInf;
        if (x == 1.0) return 0.0;
        const double v = std::log(x);
        return upward ? step_up(v, pad.ulps) : step_down(v, pad.ulps);
    };
    return {one(a.lower, false), one(a.upper, true)};
}

}  // namespace saw

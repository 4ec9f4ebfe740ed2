#include "saw/numeric.hpp"

#include "saw/errors.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <system_error>

namespace saw {

Rational exact_rational(double x) {
    if (!std::isfinite(x)) throw DomainError("exact_rational: non-finite value");
    if (x == 0.0) return Rational(0);
    int e = 0;
    const double m = std::frexp(x, &e);
    const auto mantissa = static_cast<std::int64_t>(std::ldexp(m, 53));
    e -= 53;
    Rational q(mantissa);
    if (e > 0) {
        q *= Rational(BigInt(1) << e);
    } else if (e < 0) {
        q /= Rational(BigInt(1) << -e);
    }
    return q;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double nearest(const Rational& q) { return q.convert_to<double>(); }

}  // namespace

double round_down(const Rational& q) {
    double d = nearest(q);
    while (std::isfinite(d) && exact_rational(d) > q) d = std::nextafter(d, -kInf);
    if (d == kInf) d = std::numeric_limits<double>::max();
    return d;
}

double round_up(const Rational& q) {
    double d = nearest(q);
    while (std::isfinite(d) && exact_rational(d) < q) d = std::nextafter(d, kInf);
    if (d == -kInf) d = std::numeric_limits<double>::lowest();
    return d;
}

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& text) {
    double x = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    if (first != last && *first == '+') ++first;
    const auto res = std::from_chars(first, last, x);
    if (res.ec != std::errc() || res.ptr != last) {
        throw MalformedFileError("not a decimal number: '" + text + "'");
    }
    return x;
}

}  // namespace saw

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace saw {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact value of a finite double.
Rational exact_rational(double x);

// Largest double <= q and smallest double >= q.
double round_down(const Rational& q);
double round_up(const Rational& q);

// Shortest decimal text that parses back to the same double; locale independent.
std::string format_double(double x);
double parse_double(const std::string& text);

}  // namespace saw

#pragma once

#include <cstdint>
#include <string>

namespace scv {

// Reduced fraction with positive denominator. Carried alongside floating
// probabilities so integral-input runs can be printed exactly (e.g. 6/13).
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

// Normalizes sign and reduces by gcd. Throws std::invalid_argument on den == 0.
Rational make_rational(std::int64_t num, std::int64_t den);

double to_double(const Rational& r);

// "0", "1", "a/b".
std::string to_string(const Rational& r);

bool operator==(const Rational& a, const Rational& b);

}  // namespace scv

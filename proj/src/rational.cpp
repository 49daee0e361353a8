#include "scv/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace scv {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{num, den};
}

double to_double(const Rational& r) {
  return static_cast<double>(r.num) / static_cast<double>(r.den);
}

std::string to_string(const Rational& r) {
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

bool operator==(const Rational& a, const Rational& b) {
  return a.num == b.num && a.den == b.den;
}

}  // namespace scv

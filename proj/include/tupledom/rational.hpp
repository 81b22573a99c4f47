#pragma once

#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tupledom {

// Exact rational. Normalized so that den > 0 and gcd(|num|, den) == 1.
struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n) : num(n) {}
  Rat(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    return a.num * b.den <=> b.num * a.den;
  }
};

inline std::string to_string(const Rat& r) {
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

// ceil(a / b) for b > 0, correct for negative a.
inline long long ceil_div(long long a, long long b) {
  if (b <= 0) throw std::domain_error("ceil_div needs a positive divisor");
  long long q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

}  // namespace tupledom

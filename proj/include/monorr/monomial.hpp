#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace monorr {

using exponent_t = std::uint64_t;

/// A monomial x_1^{e_1} ... x_n^{e_n}, stored as its exponent vector.
///
/// The total degree is cached at construction; every arithmetic helper below
/// checks for 64-bit overflow and throws exponent_overflow instead of wrapping.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<exponent_t> exponents);
  Monomial(std::initializer_list<exponent_t> exponents);

  static Monomial unit(std::size_t n);
  /// x_i^e in n variables.
  static Monomial pure_power(std::size_t n, std::size_t i, exponent_t e);

  std::size_t size() const noexcept { return exps_.size(); }
  exponent_t operator[](std::size_t i) const { return exps_[i]; }
  std::span<const exponent_t> exponents() const noexcept { return exps_; }
  exponent_t degree() const noexcept { return degree_; }
  bool is_unit() const noexcept { return degree_ == 0; }

  /// Index of the only nonzero exponent, or size() when m is not a pure power.
  std::size_t pure_power_index() const noexcept;

  bool operator==(const Monomial& other) const noexcept { return exps_ == other.exps_; }

private:
  std::vector<exponent_t> exps_;
  exponent_t degree_ = 0;
};

/// Canonical total order: ascending total degree, ties broken by descending
/// lexicographic order on exponents (so x^2 < xy < y^2).
bool graded_less(const Monomial& a, const Monomial& b);

struct GradedLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return graded_less(a, b); }
};

bool divides(const Monomial& a, const Monomial& b);

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial mul(const Monomial& a, const Monomial& b);
Monomial pow(const Monomial& m, exponent_t k);

/// a / b; requires divides(b, a).
Monomial exact_div(const Monomial& a, const Monomial& b);

/// Generator of <a> : <b>, i.e. a / gcd(a, b).
Monomial colon(const Monomial& a, const Monomial& b);

struct LcmGcdProduct {
  Monomial lcm;
  Monomial gcd;
  Monomial product;
};

LcmGcdProduct lcm_gcd_mul(const Monomial& a, const Monomial& b);

void require_same_size(std::size_t lhs, std::size_t rhs);

namespace detail {
exponent_t checked_add(exponent_t a, exponent_t b);
exponent_t checked_mul(exponent_t a, exponent_t b);
} // namespace detail

} // namespace monorr

#include "monorr/monomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "monorr/errors.hpp"

namespace monorr {

namespace detail {

exponent_t checked_add(exponent_t a, exponent_t b) {
  exponent_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw exponent_overflow("exponent addition overflows 64 bits");
  return r;
}

exponent_t checked_mul(exponent_t a, exponent_t b) {
  exponent_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw exponent_overflow("exponent multiplication overflows 64 bits");
  return r;
}

} // namespace detail

namespace {

exponent_t total_degree(const std::vector<exponent_t>& e) {
  exponent_t d = 0;
  for (auto v : e)
    d = detail::checked_add(d, v);
  return d;
}

} // namespace

void require_same_size(std::size_t lhs, std::size_t rhs) {
  if (lhs != rhs)
    throw dimension_mismatch(lhs, rhs);
}

Monomial::Monomial(std::vector<exponent_t> exponents)
    : exps_(std::move(exponents)), degree_(total_degree(exps_)) {}

Monomial::Monomial(std::initializer_list<exponent_t> exponents)
    : Monomial(std::vector<exponent_t>(exponents)) {}

Monomial Monomial::unit(std::size_t n) { return Monomial(std::vector<exponent_t>(n, 0)); }

Monomial Monomial::pure_power(std::size_t n, std::size_t i, exponent_t e) {
  if (i >= n)
    throw std::out_of_range("variable index out of range");
  std::vector<exponent_t> v(n, 0);
  v[i] = e;
  return Monomial(std::move(v));
}

std::size_t Monomial::pure_power_index() const noexcept {
  std::size_t found = exps_.size();
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0)
      continue;
    if (found != exps_.size())
      return exps_.size();
    found = i;
  }
  return found;
}

bool graded_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree())
    return a.degree() < b.degree();
  auto ea = a.exponents();
  auto eb = b.exponents();
  return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(), ea.end());
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same_size(a.size(), b.size());
  if (a.degree() > b.degree())
    return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i])
      return false;
  return true;
}

namespace {

template <class Op>
Monomial zip(const Monomial& a, const Monomial& b, Op op) {
  require_same_size(a.size(), b.size());
  std::vector<exponent_t> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = op(a[i], b[i]);
  return Monomial(std::move(r));
}

} // namespace

Monomial lcm(const Monomial& a, const Monomial& b) {
  return zip(a, b, [](exponent_t x, exponent_t y) { return std::max(x, y); });
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  return zip(a, b, [](exponent_t x, exponent_t y) { return std::min(x, y); });
}

Monomial mul(const Monomial& a, const Monomial& b) { return zip(a, b, detail::checked_add); }

Monomial pow(const Monomial& m, exponent_t k) {
  std::vector<exponent_t> r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    r[i] = detail::checked_mul(m[i], k);
  return Monomial(std::move(r));
}

Monomial exact_div(const Monomial& a, const Monomial& b) {
  return zip(a, b, [](exponent_t x, exponent_t y) {
    if (y > x)
      throw std::domain_error("exact_div: divisor does not divide dividend");
    return x - y;
  });
}

Monomial colon(const Monomial& a, const Monomial& b) {
  return zip(a, b, [](exponent_t x, exponent_t y) { return x > y ? x - y : exponent_t{0}; });
}

LcmGcdProduct lcm_gcd_mul(const Monomial& a, const Monomial& b) {
  return {lcm(a, b), gcd(a, b), mul(a, b)};
}

} // namespace monorr

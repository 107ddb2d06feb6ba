#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monorr {

/// Two operands live in polynomial rings with different variable counts.
class dimension_mismatch : public std::invalid_argument {
public:
  dimension_mismatch(std::size_t lhs, std::size_t rhs)
      : std::invalid_argument("dimension mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)),
        lhs_(lhs), rhs_(rhs) {}

  std::size_t lhs() const noexcept { return lhs_; }
  std::size_t rhs() const noexcept { return rhs_; }

private:
  std::size_t lhs_;
  std::size_t rhs_;
};

/// An exponent or a degree left the 64-bit range.
class exponent_overflow : public std::overflow_error {
public:
  using std::overflow_error::overflow_error;
};

/// No generator of the form x_i^d (d > 0) exists for the reported variable.
class not_m_primary : public std::domain_error {
public:
  explicit not_m_primary(std::size_t variable)
      : std::domain_error("ideal is not m-primary: no pure power of variable " + std::to_string(variable)),
        variable_(variable) {}

  std::size_t variable() const noexcept { return variable_; }

private:
  std::size_t variable_;
};

/// The power-index search ran past lcm(d_1..d_n).
class no_k_found : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

} // namespace monorr

#pragma once

#include <cstddef>
#include <vector>

#include "monorr/monomial.hpp"

namespace monorr {

/// A monomial ideal in K[x_1..x_n], held as its unique minimal generating set.
///
/// Generators form a divisibility antichain sorted by graded_less, so two
/// ideals are equal exactly when their generator lists are equal. The zero
/// ideal has no generators; the unit ideal has the single generator 1.
class MonomialIdeal {
public:
  explicit MonomialIdeal(std::size_t n = 0) : n_(n) {}

  static MonomialIdeal unit(std::size_t n);
  /// Reduces `generators` to the minimal generating set.
  static MonomialIdeal generated_by(std::size_t n, std::vector<Monomial> generators);

  std::size_t num_vars() const noexcept { return n_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }

  auto begin() const noexcept { return gens_.begin(); }
  auto end() const noexcept { return gens_.end(); }

  bool operator==(const MonomialIdeal& other) const = default;

private:
  friend MonomialIdeal reduce_generators(std::size_t n, std::vector<Monomial> ms);

  std::size_t n_;
  std::vector<Monomial> gens_;
};

/// Exponents d_1..d_n of the pure-power generators x_i^{d_i} of an m-primary ideal.
struct MPrimaryProfile {
  std::vector<exponent_t> d;

  std::size_t size() const noexcept { return d.size(); }
  /// mu_i = x_i^{d_i}.
  Monomial mu(std::size_t i) const { return Monomial::pure_power(d.size(), i, d[i]); }
  /// mu_1^{a_1} ... mu_n^{a_n}.
  Monomial corner(std::span<const exponent_t> a) const;
  /// J = <mu_1, ..., mu_n>.
  MonomialIdeal pure_power_ideal() const;

  bool operator==(const MPrimaryProfile&) const = default;
};

/// Minimal elements of `ms` under divisibility, in canonical order.
MonomialIdeal reduce_generators(std::size_t n, std::vector<Monomial> ms);

bool contains(const MonomialIdeal& I, const Monomial& m);

MonomialIdeal ideal_sum(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal ideal_product(const MonomialIdeal& I, const MonomialIdeal& J);
/// I^0 = <1>; each further factor is multiplied in and reduced immediately.
MonomialIdeal ideal_power(const MonomialIdeal& I, exponent_t l);
/// Multiplies every generator by m.
MonomialIdeal shift(const MonomialIdeal& I, const Monomial& m);

MonomialIdeal colon_monomial(const MonomialIdeal& I, const Monomial& m);
/// I : J as the intersection of I : g over g in G(J). Throws std::invalid_argument for J = 0.
MonomialIdeal colon_ideal(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);

bool equals(const MonomialIdeal& I, const MonomialIdeal& J);
bool is_subset(const MonomialIdeal& I, const MonomialIdeal& J);

/// Throws not_m_primary naming the first variable with no pure-power generator.
MPrimaryProfile mprimary_profile(const MonomialIdeal& I);

/// G(I) with the pure powers x_i^{d_i} removed.
std::vector<Monomial> non_corner_generators(const MonomialIdeal& I);

} // namespace monorr

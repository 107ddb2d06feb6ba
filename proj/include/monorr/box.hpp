#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "monorr/ideal.hpp"
#include "monorr/monomial.hpp"

namespace monorr {

/// Coordinates (a_1..a_n) of the box [a_1 d_1, (a_1+1) d_1] x ... x [a_n d_n, (a_n+1) d_n].
struct BoxCoord {
  std::vector<exponent_t> coords;

  std::size_t size() const noexcept { return coords.size(); }
  exponent_t operator[](std::size_t i) const { return coords[i]; }
  /// a_1 + ... + a_n.
  exponent_t sum() const;

  bool operator==(const BoxCoord&) const = default;
  auto operator<=>(const BoxCoord&) const = default;
};

/// Every box containing m. Per coordinate the candidates are floor(e/d) and,
/// when e > 0 is a multiple of d, also e/d - 1; the result is their product.
std::vector<BoxCoord> boxes_containing(const Monomial& m, const MPrimaryProfile& d);

/// Coordinatewise floor(e_i / d_i); dominates every box containing m.
BoxCoord largest_box(const Monomial& m, const MPrimaryProfile& d);

/// Smallest coordinate sum over all boxes containing m.
exponent_t smallest_box_sum(const Monomial& m, const MPrimaryProfile& d);

bool is_corner(const Monomial& m, const MPrimaryProfile& d);

/// I_a = I^{|a|+1} : <mu^a>.
///
/// For a good ideal this is the ideal generated by the minimal generators of
/// I^{|a|+1} lying in box a, translated back to the origin. For bad ideals the
/// colon is still returned, without that interpretation.
MonomialIdeal box_ideal(const MonomialIdeal& I, const BoxCoord& a);

/// One coordinate of a cone: Fixed(v) pins the coordinate to v, Free(v)
/// allows any value >= v.
struct ConeEntry {
  bool fixed = false;
  exponent_t value = 0;

  static ConeEntry Fixed(exponent_t v) { return {true, v}; }
  static ConeEntry Free(exponent_t v) { return {false, v}; }

  bool operator==(const ConeEntry&) const = default;
};

class Cone {
public:
  Cone() = default;
  explicit Cone(std::vector<ConeEntry> entries) : entries_(std::move(entries)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<ConeEntry>& entries() const noexcept { return entries_; }
  const ConeEntry& operator[](std::size_t i) const { return entries_[i]; }

  /// Number of free coordinates.
  std::size_t dimension() const;
  BoxCoord vertex() const;
  bool contains(const BoxCoord& p) const;

  /// "C(0_,1,2)"; a trailing underscore marks a fixed coordinate.
  std::string to_string() const;

  bool operator==(const Cone&) const = default;

private:
  std::vector<ConeEntry> entries_;
};

/// The prod(a_i + 1) cones that pick, per coordinate, Fixed(v) for some
/// v < a_i or Free(a_i). They partition N^n. Order: first coordinate varies
/// slowest, each coordinate ascending with the free choice last.
std::vector<Cone> cone_family(const BoxCoord& a);

/// Splits cone c into disjoint cones around p in c: one of full dimension with
/// vertex p and the rest strictly lower dimensional. Throws
/// std::invalid_argument when p is not in c.
std::vector<Cone> decompose_cone(const Cone& c, const BoxCoord& p);

} // namespace monorr

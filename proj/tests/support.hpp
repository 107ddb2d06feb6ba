// Shared fixtures for the test binaries: the worked-example ideals, random
// corpus generators and brute-force oracles that do not reuse the library's
// fast paths.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "monorr/box.hpp"
#include "monorr/goodness.hpp"
#include "monorr/ideal.hpp"
#include "monorr/io.hpp"

namespace monorr::test {

inline MonomialIdeal ideal(const std::string& text) { return to_ideal(parse_ideal(text)); }

inline const std::vector<std::string> xyz = {"x", "y", "z"};
inline const std::vector<std::string> xyzw = {"x", "y", "z", "w"};

inline Monomial mono(const std::string& text, const std::vector<std::string>& vars = xyz) {
  return parse_monomial(text, vars);
}

inline MonomialIdeal over(const std::vector<std::string>& vars, const std::string& gens) {
  std::string header = "vars: ";
  for (std::size_t i = 0; i < vars.size(); ++i)
    header += (i ? "," : "") + vars[i];
  return ideal(header + "\n" + gens);
}

// Worked examples.
inline MonomialIdeal example_d29() {
  return over(xyz, "x^29, y^29, z^29, x^28*y^8*z^8, x^8*y^28*z^8, x^8*y^8*z^28");
}
inline MonomialIdeal example_four_vars() {
  return over(xyzw, "x^53, y^56, z^59, w^61, x^50*y^18*z^20*w^25, x^15*y^54*z^22*w^24, "
                    "x^18*y^20*z^56*w^22, x^16*y^19*z^23*w^60");
}
inline MonomialIdeal example_d41() {
  return over(xyz, "x^41, y^41, z^41, x^40*y^5*z^5, x^5*y^40*z^5, x^5*y^5*z^40");
}
/// <x_1^d, ..., x_n^d>^k.
inline MonomialIdeal power_of_mu(std::size_t n, exponent_t d, exponent_t k) {
  std::vector<Monomial> mus;
  for (std::size_t i = 0; i < n; ++i)
    mus.push_back(Monomial::pure_power(n, i, d));
  return ideal_power(reduce_generators(n, mus), k);
}

inline MonomialIdeal example_plane() { return over({"x", "y"}, "x^5, y^5, x*y^4, x^4*y"); }

using Rng = std::mt19937_64;

/// Pure powers x_i^{d_i} plus up to `extra` random monomials with every
/// exponent below d_i; exponents are drawn in [low_frac * d_i, d_i).
inline MonomialIdeal random_mprimary(Rng& rng, std::size_t n, exponent_t max_d, std::size_t extra,
                                     double low_frac = 0.0) {
  std::uniform_int_distribution<exponent_t> dd(2, max_d);
  std::vector<exponent_t> d(n);
  for (auto& v : d)
    v = dd(rng);
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < n; ++i)
    gens.push_back(Monomial::pure_power(n, i, d[i]));
  std::uniform_int_distribution<std::size_t> count(0, extra);
  const std::size_t t = count(rng);
  for (std::size_t k = 0; k < t; ++k) {
    std::vector<exponent_t> e(n);
    exponent_t total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto lo = static_cast<exponent_t>(low_frac * static_cast<double>(d[i]));
      std::uniform_int_distribution<exponent_t> ed(std::min(lo, d[i] - 1), d[i] - 1);
      e[i] = ed(rng);
      total += e[i];
    }
    if (total == 0)
      continue; // the unit would swallow everything
    gens.emplace_back(std::move(e));
  }
  return reduce_generators(n, std::move(gens));
}

/// Like random_mprimary, but each extra generator sits next to one axis:
/// exponent d_i - 1 or d_i - 2 there and at most d_j / 3 elsewhere. Such
/// ideals are the ones whose closure tends to grow.
inline MonomialIdeal near_axis_mprimary(Rng& rng, std::size_t n, exponent_t max_d, std::size_t extra) {
  std::uniform_int_distribution<exponent_t> dd(2, max_d);
  std::vector<exponent_t> d(n);
  for (auto& v : d)
    v = dd(rng);
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < n; ++i)
    gens.push_back(Monomial::pure_power(n, i, d[i]));
  const std::size_t t = 1 + rng() % extra;
  for (std::size_t k = 0; k < t; ++k) {
    const std::size_t axis = rng() % n;
    std::vector<exponent_t> e(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == axis) {
        e[i] = d[i] - 1 - (d[i] > 2 ? rng() % 2 : 0);
      } else {
        const exponent_t hi = std::max<exponent_t>(1, d[i] / 3);
        e[i] = std::min<exponent_t>(1 + rng() % hi, d[i] - 1);
      }
    }
    gens.emplace_back(std::move(e));
  }
  return reduce_generators(n, std::move(gens));
}

/// Draws until classify() says good.
inline MonomialIdeal random_good(Rng& rng, std::size_t n, exponent_t max_d, std::size_t extra) {
  for (;;) {
    auto I = random_mprimary(rng, n, max_d, extra, 0.35);
    if (classify(I).good())
      return I;
  }
}

inline Monomial random_monomial(Rng& rng, std::size_t n, exponent_t max_e) {
  std::uniform_int_distribution<exponent_t> ed(0, max_e);
  std::vector<exponent_t> e(n);
  for (auto& v : e)
    v = ed(rng);
  return Monomial(std::move(e));
}

// ---- oracles -------------------------------------------------------------

inline bool brute_divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i])
      return false;
  return true;
}

/// O(k^2) minimal-element filter; result sorted with std::sort on exponents.
inline std::vector<std::vector<exponent_t>> brute_minimal(const std::vector<Monomial>& ms) {
  std::vector<std::vector<exponent_t>> out;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < ms.size() && minimal; ++j)
      if (!(ms[j] == ms[i]) && brute_divides(ms[j], ms[i]))
        minimal = false;
    if (minimal)
      out.emplace_back(ms[i].exponents().begin(), ms[i].exponents().end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<std::vector<exponent_t>> sorted_exponents(const MonomialIdeal& I) {
  std::vector<std::vector<exponent_t>> out;
  for (const auto& g : I)
    out.emplace_back(g.exponents().begin(), g.exponents().end());
  std::sort(out.begin(), out.end());
  return out;
}

inline bool brute_member(const MonomialIdeal& I, const Monomial& m) {
  for (const auto& g : I.generators())
    if (brute_divides(g, m))
      return true;
  return false;
}

/// Box ideal by scanning G(I^l) for monomials inside box a and shifting them
/// back to the origin.
inline MonomialIdeal box_ideal_by_scan(const MonomialIdeal& I, const BoxCoord& a) {
  const auto d = mprimary_profile(I);
  const auto power = ideal_power(I, a.sum() + 1);
  const auto shift = d.corner(a.coords);
  std::vector<Monomial> inside;
  for (const auto& g : power) {
    bool in_box = true;
    for (std::size_t i = 0; i < g.size() && in_box; ++i)
      in_box = a[i] * d.d[i] <= g[i] && g[i] <= (a[i] + 1) * d.d[i];
    if (in_box)
      inside.push_back(exact_div(g, shift));
  }
  return reduce_generators(I.num_vars(), std::move(inside));
}

/// K by explicit membership of m^K in the K-th power of <mu_1..mu_n>.
inline exponent_t brute_power_index(const Monomial& m, const MPrimaryProfile& d, exponent_t limit) {
  const auto J = d.pure_power_ideal();
  MonomialIdeal JK = MonomialIdeal::unit(d.size());
  for (exponent_t K = 1; K <= limit; ++K) {
    JK = ideal_product(JK, J);
    if (brute_member(JK, pow(m, K)))
      return K;
  }
  return 0;
}

/// All compositions of `total` into n nonnegative parts.
inline std::vector<std::vector<exponent_t>> compositions(std::size_t n, exponent_t total) {
  std::vector<std::vector<exponent_t>> out;
  std::vector<exponent_t> cur(n, 0);
  auto rec = [&](auto&& self, std::size_t i, exponent_t left) -> void {
    if (i + 1 == n) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (exponent_t v = 0; v <= left; ++v) {
      cur[i] = v;
      self(self, i + 1, left - v);
    }
  };
  if (n == 0)
    return out;
  rec(rec, 0, total);
  return out;
}

} // namespace monorr::test

#include "monorr/ideal.hpp"

#include <algorithm>
#include <stdexcept>

#include "monorr/errors.hpp"

namespace monorr {

Monomial MPrimaryProfile::corner(std::span<const exponent_t> a) const {
  require_same_size(d.size(), a.size());
  std::vector<exponent_t> e(d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    e[i] = detail::checked_mul(a[i], d[i]);
  return Monomial(std::move(e));
}

MonomialIdeal MPrimaryProfile::pure_power_ideal() const {
  std::vector<Monomial> mus;
  mus.reserve(d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    mus.push_back(mu(i));
  return reduce_generators(d.size(), std::move(mus));
}

MonomialIdeal MonomialIdeal::unit(std::size_t n) { return reduce_generators(n, {Monomial::unit(n)}); }

MonomialIdeal MonomialIdeal::generated_by(std::size_t n, std::vector<Monomial> generators) {
  return reduce_generators(n, std::move(generators));
}

MonomialIdeal reduce_generators(std::size_t n, std::vector<Monomial> ms) {
  for (const auto& m : ms)
    require_same_size(n, m.size());
  std::sort(ms.begin(), ms.end(), graded_less);
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());

  // After sorting, only strictly earlier (lower or equal degree, distinct)
  // monomials can divide a candidate.
  MonomialIdeal out(n);
  for (auto& m : ms) {
    bool redundant = false;
    for (const auto& kept : out.gens_) {
      if (kept.degree() >= m.degree())
        break;
      if (divides(kept, m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant)
      out.gens_.push_back(std::move(m));
  }
  return out;
}

bool contains(const MonomialIdeal& I, const Monomial& m) {
  require_same_size(I.num_vars(), m.size());
  for (const auto& g : I) {
    if (g.degree() > m.degree())
      break;
    if (divides(g, m))
      return true;
  }
  return false;
}

MonomialIdeal ideal_sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_size(I.num_vars(), J.num_vars());
  std::vector<Monomial> all(I.generators());
  all.insert(all.end(), J.begin(), J.end());
  return reduce_generators(I.num_vars(), std::move(all));
}

MonomialIdeal ideal_product(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_size(I.num_vars(), J.num_vars());
  std::vector<Monomial> products;
  products.reserve(I.size() * J.size());
  for (const auto& g : I)
    for (const auto& h : J)
      products.push_back(mul(g, h));
  return reduce_generators(I.num_vars(), std::move(products));
}

MonomialIdeal ideal_power(const MonomialIdeal& I, exponent_t l) {
  MonomialIdeal result = MonomialIdeal::unit(I.num_vars());
  for (exponent_t k = 0; k < l; ++k)
    result = ideal_product(result, I);
  return result;
}

MonomialIdeal shift(const MonomialIdeal& I, const Monomial& m) {
  require_same_size(I.num_vars(), m.size());
  std::vector<Monomial> out;
  out.reserve(I.size());
  for (const auto& g : I)
    out.push_back(mul(g, m));
  return reduce_generators(I.num_vars(), std::move(out));
}

MonomialIdeal colon_monomial(const MonomialIdeal& I, const Monomial& m) {
  require_same_size(I.num_vars(), m.size());
  std::vector<Monomial> out;
  out.reserve(I.size());
  for (const auto& g : I)
    out.push_back(colon(g, m));
  return reduce_generators(I.num_vars(), std::move(out));
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_size(I.num_vars(), J.num_vars());
  // A generator of one side that already lies in the other side generates
  // every lcm it takes part in.
  std::vector<Monomial> out;
  std::vector<const Monomial*> rest_i;
  std::vector<const Monomial*> rest_j;
  for (const auto& g : I) {
    if (contains(J, g))
      out.push_back(g);
    else
      rest_i.push_back(&g);
  }
  for (const auto& h : J) {
    if (contains(I, h))
      out.push_back(h);
    else
      rest_j.push_back(&h);
  }
  for (const auto* g : rest_i)
    for (const auto* h : rest_j)
      out.push_back(lcm(*g, *h));
  return reduce_generators(I.num_vars(), std::move(out));
}

MonomialIdeal colon_ideal(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_size(I.num_vars(), J.num_vars());
  if (J.is_zero())
    throw std::invalid_argument("colon by the zero ideal");
  MonomialIdeal result = colon_monomial(I, J.generators().front());
  for (std::size_t k = 1; k < J.size(); ++k)
    result = intersect(result, colon_monomial(I, J.generators()[k]));
  return result;
}

bool equals(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_size(I.num_vars(), J.num_vars());
  return I.generators() == J.generators();
}

bool is_subset(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_size(I.num_vars(), J.num_vars());
  return std::all_of(I.begin(), I.end(), [&](const Monomial& g) { return contains(J, g); });
}

MPrimaryProfile mprimary_profile(const MonomialIdeal& I) {
  const std::size_t n = I.num_vars();
  std::vector<exponent_t> d(n, 0);
  for (const auto& g : I) {
    std::size_t i = g.pure_power_index();
    if (i < n)
      d[i] = g[i];
  }
  for (std::size_t i = 0; i < n; ++i)
    if (d[i] == 0)
      throw not_m_primary(i);
  return MPrimaryProfile{std::move(d)};
}

std::vector<Monomial> non_corner_generators(const MonomialIdeal& I) {
  std::vector<Monomial> out;
  for (const auto& g : I)
    if (g.pure_power_index() == g.size())
      out.push_back(g);
  return out;
}

} // namespace monorr

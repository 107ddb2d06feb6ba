#include "monorr/box.hpp"

#include <stdexcept>

#include "monorr/errors.hpp"

namespace monorr {

exponent_t BoxCoord::sum() const {
  exponent_t s = 0;
  for (auto c : coords)
    s = detail::checked_add(s, c);
  return s;
}

std::vector<BoxCoord> boxes_containing(const Monomial& m, const MPrimaryProfile& d) {
  require_same_size(m.size(), d.size());
  std::vector<BoxCoord> out{BoxCoord{{}}};
  for (std::size_t i = 0; i < m.size(); ++i) {
    const exponent_t hi = m[i] / d.d[i];
    const bool on_wall = m[i] > 0 && m[i] % d.d[i] == 0;
    std::vector<BoxCoord> next;
    next.reserve(out.size() * (on_wall ? 2 : 1));
    for (const auto& prefix : out) {
      if (on_wall) {
        auto lower = prefix;
        lower.coords.push_back(hi - 1);
        next.push_back(std::move(lower));
      }
      auto upper = prefix;
      upper.coords.push_back(hi);
      next.push_back(std::move(upper));
    }
    out = std::move(next);
  }
  return out;
}

BoxCoord largest_box(const Monomial& m, const MPrimaryProfile& d) {
  require_same_size(m.size(), d.size());
  BoxCoord b;
  b.coords.reserve(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    b.coords.push_back(m[i] / d.d[i]);
  return b;
}

exponent_t smallest_box_sum(const Monomial& m, const MPrimaryProfile& d) {
  require_same_size(m.size(), d.size());
  exponent_t s = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    exponent_t c = m[i] / d.d[i];
    if (m[i] > 0 && m[i] % d.d[i] == 0)
      --c;
    s += c;
  }
  return s;
}

bool is_corner(const Monomial& m, const MPrimaryProfile& d) {
  require_same_size(m.size(), d.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] % d.d[i] != 0)
      return false;
  return true;
}

MonomialIdeal box_ideal(const MonomialIdeal& I, const BoxCoord& a) {
  const auto profile = mprimary_profile(I);
  require_same_size(a.size(), profile.size());
  const exponent_t l = detail::checked_add(a.sum(), 1);
  return colon_monomial(ideal_power(I, l), profile.corner(a.coords));
}

std::size_t Cone::dimension() const {
  std::size_t k = 0;
  for (const auto& e : entries_)
    if (!e.fixed)
      ++k;
  return k;
}

BoxCoord Cone::vertex() const {
  BoxCoord v;
  v.coords.reserve(entries_.size());
  for (const auto& e : entries_)
    v.coords.push_back(e.value);
  return v;
}

bool Cone::contains(const BoxCoord& p) const {
  require_same_size(entries_.size(), p.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (e.fixed ? p[i] != e.value : p[i] < e.value)
      return false;
  }
  return true;
}

std::string Cone::to_string() const {
  std::string s = "C(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i)
      s += ',';
    s += std::to_string(entries_[i].value);
    if (entries_[i].fixed)
      s += '_';
  }
  s += ')';
  return s;
}

std::vector<Cone> cone_family(const BoxCoord& a) {
  std::vector<std::vector<ConeEntry>> out{{}};
  for (auto ai : a.coords) {
    std::vector<std::vector<ConeEntry>> next;
    next.reserve(out.size() * (ai + 1));
    for (const auto& prefix : out) {
      for (exponent_t v = 0; v <= ai; ++v) {
        auto e = prefix;
        e.push_back(v < ai ? ConeEntry::Fixed(v) : ConeEntry::Free(ai));
        next.push_back(std::move(e));
      }
    }
    out = std::move(next);
  }
  std::vector<Cone> cones;
  cones.reserve(out.size());
  for (auto& e : out)
    cones.emplace_back(std::move(e));
  return cones;
}

std::vector<Cone> decompose_cone(const Cone& c, const BoxCoord& p) {
  if (!c.contains(p))
    throw std::invalid_argument("decompose_cone: point is not in " + c.to_string());

  // Work in the free coordinates only, relative to the cone's vertex.
  std::vector<std::size_t> free_idx;
  BoxCoord offset;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!c[i].fixed) {
      free_idx.push_back(i);
      offset.coords.push_back(p[i] - c[i].value);
    }
  }

  std::vector<Cone> out;
  for (const auto& sub : cone_family(offset)) {
    std::vector<ConeEntry> entries = c.entries();
    for (std::size_t k = 0; k < free_idx.size(); ++k) {
      const std::size_t i = free_idx[k];
      entries[i] = sub[k];
      entries[i].value += c[i].value;
    }
    out.emplace_back(std::move(entries));
  }
  return out;
}

} // namespace monorr

#include "monorr/freiman.hpp"

#include <stdexcept>

#include "monorr/errors.hpp"
#include "monorr/ratliff_rush.hpp"

namespace monorr {

std::optional<exponent_t> equigenerated_degree(const MonomialIdeal& I) {
  if (I.is_zero())
    return std::nullopt;
  const exponent_t deg = I.generators().front().degree();
  for (const auto& g : I)
    if (g.degree() != deg)
      return std::nullopt;
  return deg;
}

bool is_equigenerated(const MonomialIdeal& I) { return equigenerated_degree(I).has_value(); }

FreimanReport freiman_check(const MonomialIdeal& I) {
  FreimanReport r;
  r.degree = equigenerated_degree(I);
  r.equigenerated = r.degree.has_value();
  r.n = I.num_vars();
  r.g1 = I.size();
  r.g2 = ideal_power(I, 2).size();
  const auto n = static_cast<std::int64_t>(r.n);
  r.bound = n * static_cast<std::int64_t>(r.g1) - n * (n - 1) / 2;

  try {
    (void)mprimary_profile(I);
    r.m_primary = true;
  } catch (const not_m_primary&) {
    r.m_primary = false;
  }
  if (r.m_primary)
    r.very_good = is_very_good(I);

  if (!r.m_primary || !r.equigenerated) {
    r.verdict = FreimanVerdict::not_applicable;
    return r;
  }
  r.verdict = static_cast<std::int64_t>(r.g2) == r.bound ? FreimanVerdict::freiman : FreimanVerdict::not_freiman;
  if ((r.verdict == FreimanVerdict::freiman) != *r.very_good)
    throw std::logic_error("freiman_check: Freiman verdict disagrees with I^2 = IJ");
  return r;
}

} // namespace monorr

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "monorr/ideal.hpp"

namespace monorr {

/// Common total degree of all generators, if there is one.
std::optional<exponent_t> equigenerated_degree(const MonomialIdeal& I);
bool is_equigenerated(const MonomialIdeal& I);

enum class FreimanVerdict { freiman, not_freiman, not_applicable };

struct FreimanReport {
  bool equigenerated = false;
  std::optional<exponent_t> degree;
  bool m_primary = false;
  /// Variable count; the analytic spread of an m-primary ideal.
  std::size_t n = 0;
  std::size_t g1 = 0;
  std::size_t g2 = 0;
  /// n * g1 - C(n, 2).
  std::int64_t bound = 0;
  /// Set whenever the ideal is m-primary.
  std::optional<bool> very_good;
  FreimanVerdict verdict = FreimanVerdict::not_applicable;
};

/// |G(I^2)| against the Freiman bound. The verdict is only given for
/// equigenerated m-primary ideals; other inputs get the numbers and
/// not_applicable. Throws std::logic_error if an applicable ideal's verdict
/// disagrees with is_very_good (the two are equivalent there).
FreimanReport freiman_check(const MonomialIdeal& I);

} // namespace monorr

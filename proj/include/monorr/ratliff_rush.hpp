#pragma once

#include <cstddef>
#include <vector>

#include "monorr/ideal.hpp"
#include "monorr/monomial.hpp"

namespace monorr {

struct ClosureOptions {
  /// Skip the good-ideal gate. The formula is only proven for good ideals.
  bool skip_classify = false;
  /// Worker threads for independent axes; 0 or 1 runs sequentially.
  unsigned threads = 1;
};

/// Growth of the box ideals I_{t e_i} along one coordinate axis until they
/// stop changing.
struct AxisStabilization {
  std::size_t axis = 0;
  /// First index with I_{q e_i} = I_{(q+1) e_i}.
  exponent_t q = 0;
  /// I_{q e_i}.
  MonomialIdeal ideal;
  /// new_monomials[t] = F_t, the generators of I_{t e_i} not in I_{(t-1) e_i};
  /// F_0 = G(I) and the last entry, F_{q+1}, is empty.
  std::vector<std::vector<Monomial>> new_monomials;
  /// chain[t] = I_{t e_i} for t = 0..q.
  std::vector<MonomialIdeal> chain;
};

/// Computes I_{q e_i} by propagating only the newly found generators: each
/// round multiplies F_t by the non-pure-power generators of I, keeps products
/// with x_j-degree below d_j for j != i, divides by mu_i and drops whatever
/// the current ideal already contains. Throws bad_ideal unless skipped.
AxisStabilization axis_stabilize(const MonomialIdeal& I, std::size_t axis, const ClosureOptions& opts = {});

/// Ratliff-Rush closure of a good ideal: the intersection over all axes of
/// the stabilized axis ideals.
MonomialIdeal rr_closure(const MonomialIdeal& I, const ClosureOptions& opts = {});

/// I^{k+1} : I^k on explicit powers.
MonomialIdeal successive_quotient(const MonomialIdeal& I, exponent_t k);

struct OracleReport {
  exponent_t k_max = 0;
  std::size_t window = 0;
  /// quotients[k] = I^{k+1} : I^k for k = 0..k_max.
  std::vector<MonomialIdeal> quotients;
  /// Sum of all computed quotients.
  MonomialIdeal union_ideal;
  /// The last `window` quotients coincide and add nothing to the union
  /// accumulated before them. Evidence only: later quotients may still grow.
  bool stabilized = false;

  std::vector<std::size_t> generator_counts() const;
};

inline constexpr exponent_t default_oracle_depth = 15;
inline constexpr std::size_t default_oracle_window = 2;

/// Truncation of the union of I^{k+1} : I^k at k_max. Works for any ideal.
OracleReport oracle_closure(const MonomialIdeal& I, exponent_t k_max = default_oracle_depth,
                            std::size_t window = default_oracle_window);

/// I equals its closure. Good ideals use rr_closure; bad ones fall back to
/// oracle_closure at the default depth, which can only witness failure with
/// certainty.
bool is_ratliff_rush(const MonomialIdeal& I);

/// I^2 = I * <mu_1, ..., mu_n>.
bool is_very_good(const MonomialIdeal& I);

} // namespace monorr

#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "monorr/ideal.hpp"
#include "monorr/monomial.hpp"

namespace monorr {

enum class Verdict { good, bad };

/// Which test settled the verdict.
enum class Rule { necessary_failed, sufficient_passed, exhaustive };

/// A product of generators lying in I^power whose boxes all have coordinate
/// sum at most box_sum < power - 1.
struct Witness {
  Monomial monomial;
  exponent_t power = 0;
  exponent_t box_sum = 0;
};

struct ClassificationReport {
  Verdict verdict = Verdict::good;
  Rule rule = Rule::exhaustive;
  std::optional<Witness> witness;
  /// Non-corner generators of I, in canonical order.
  std::vector<Monomial> non_corners;
  /// K_i for each entry of non_corners; empty when the necessary condition fails.
  std::vector<exponent_t> k_bounds;

  bool good() const noexcept { return verdict == Verdict::good; }
};

/// Raised where an operation requires a good ideal.
class bad_ideal : public std::domain_error {
public:
  explicit bad_ideal(ClassificationReport report)
      : std::domain_error("ideal is bad (box decomposition principle fails)"), report_(std::move(report)) {}

  const ClassificationReport& report() const noexcept { return report_; }

private:
  ClassificationReport report_;
};

/// sum_i e_i/d_i >= 1 for every minimal generator (exact arithmetic).
bool check_necessary(const MonomialIdeal& I, const MPrimaryProfile& d);
bool check_necessary(const MonomialIdeal& I);

/// sum_i e_i/d_i >= n/2 for every non-corner minimal generator (exact arithmetic).
bool check_sufficient(const MonomialIdeal& I, const MPrimaryProfile& d);
bool check_sufficient(const MonomialIdeal& I);

/// Smallest K >= 1 with m^K in <mu_1..mu_n>^K. Throws no_k_found when no
/// K <= lcm(d) works, which happens exactly when sum_i e_i/d_i < 1.
exponent_t power_index_K(const Monomial& m, const MPrimaryProfile& d);

/// Good/bad verdict for an m-primary ideal.
///
/// A failed necessary condition yields the smallest power m^l of the
/// offending generator whose largest box sums to less than l - 1. Otherwise,
/// if the sufficient condition holds the ideal is good. Otherwise every
/// product m_1^{j_1}...m_t^{j_t} of non-corner generators with j_i < K_i is
/// tested in graded order, and the first one with largest-box sum below
/// (sum j_i) - 1 is reported.
ClassificationReport classify(const MonomialIdeal& I);

struct BoxDecompositionCheck {
  bool holds = true;
  std::optional<Monomial> counterexample;
};

/// Brute force: expands G(I^l) and checks each generator lies in a box with
/// coordinate sum exactly l - 1.
BoxDecompositionCheck verify_box_decomposition(const MonomialIdeal& I, exponent_t l);

/// Throws bad_ideal unless classify(I) is good.
void require_good(const MonomialIdeal& I);

} // namespace monorr

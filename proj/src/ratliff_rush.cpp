#include "monorr/ratliff_rush.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

#include "monorr/goodness.hpp"

namespace monorr {

AxisStabilization axis_stabilize(const MonomialIdeal& I, std::size_t axis, const ClosureOptions& opts) {
  const auto d = mprimary_profile(I);
  if (axis >= d.size())
    throw std::out_of_range("axis_stabilize: axis out of range");
  if (!opts.skip_classify)
    require_good(I);

  const std::size_t n = I.num_vars();
  const Monomial mu = d.mu(axis);
  const auto multipliers = non_corner_generators(I);

  AxisStabilization out;
  out.axis = axis;

  MonomialIdeal current(n);
  std::vector<Monomial> fresh = I.generators();
  out.new_monomials.push_back(fresh);

  for (;;) {
    std::vector<Monomial> merged = current.generators();
    merged.insert(merged.end(), fresh.begin(), fresh.end());
    current = reduce_generators(n, std::move(merged));
    out.chain.push_back(current);

    std::vector<Monomial> candidates;
    for (const auto& f : fresh) {
      for (const auto& m : multipliers) {
        Monomial fm = mul(f, m);
        bool inside = true;
        for (std::size_t j = 0; j < n && inside; ++j)
          inside = j == axis || fm[j] < d.d[j];
        if (!inside)
          continue;
        // For good ideals deg_{x_axis}(fm) >= d_axis, so this is fm / mu.
        Monomial a = colon(fm, mu);
        if (!contains(current, a))
          candidates.push_back(std::move(a));
      }
    }
    fresh = reduce_generators(n, std::move(candidates)).generators();
    out.new_monomials.push_back(fresh);
    if (fresh.empty())
      break;
  }

  out.q = out.chain.size() - 1;
  out.ideal = out.chain.back();
  return out;
}

MonomialIdeal rr_closure(const MonomialIdeal& I, const ClosureOptions& opts) {
  const auto d = mprimary_profile(I);
  if (!opts.skip_classify)
    require_good(I);

  ClosureOptions inner = opts;
  inner.skip_classify = true;
  const std::size_t n = d.size();

  std::vector<MonomialIdeal> axis_ideals(n);
  if (opts.threads > 1 && n > 1) {
    std::vector<std::future<MonomialIdeal>> pending;
    for (std::size_t i = 0; i < n; ++i)
      pending.push_back(std::async(std::launch::async, [&, i] { return axis_stabilize(I, i, inner).ideal; }));
    for (std::size_t i = 0; i < n; ++i)
      axis_ideals[i] = pending[i].get();
  } else {
    for (std::size_t i = 0; i < n; ++i)
      axis_ideals[i] = axis_stabilize(I, i, inner).ideal;
  }

  MonomialIdeal closure = axis_ideals.front();
  for (std::size_t i = 1; i < n; ++i)
    closure = intersect(closure, axis_ideals[i]);
  return closure;
}

MonomialIdeal successive_quotient(const MonomialIdeal& I, exponent_t k) {
  const auto lower = ideal_power(I, k);
  return colon_ideal(ideal_product(lower, I), lower);
}

std::vector<std::size_t> OracleReport::generator_counts() const {
  std::vector<std::size_t> counts;
  counts.reserve(quotients.size());
  for (const auto& q : quotients)
    counts.push_back(q.size());
  return counts;
}

OracleReport oracle_closure(const MonomialIdeal& I, exponent_t k_max, std::size_t window) {
  if (k_max < 1 || window < 1)
    throw std::invalid_argument("oracle_closure: k_max and window must be >= 1");

  OracleReport report;
  report.k_max = k_max;
  report.window = window;
  report.union_ideal = MonomialIdeal(I.num_vars());

  // union_before_window: sum of quotients[0 .. k_max - window].
  MonomialIdeal union_before_window(I.num_vars());
  const exponent_t window_start = k_max + 1 >= window ? k_max + 1 - window : 0;

  MonomialIdeal lower = MonomialIdeal::unit(I.num_vars());
  for (exponent_t k = 0; k <= k_max; ++k) {
    MonomialIdeal upper = ideal_product(lower, I);
    report.quotients.push_back(colon_ideal(upper, lower));
    if (k < window_start)
      union_before_window = report.union_ideal = ideal_sum(report.union_ideal, report.quotients.back());
    else
      report.union_ideal = ideal_sum(report.union_ideal, report.quotients.back());
    lower = std::move(upper);
  }

  if (report.quotients.size() >= window && window_start > 0) {
    const auto& last = report.quotients.back();
    const bool plateau = std::all_of(report.quotients.end() - static_cast<std::ptrdiff_t>(window),
                                     report.quotients.end(), [&](const MonomialIdeal& q) { return q == last; });
    report.stabilized = plateau && is_subset(last, union_before_window);
  }
  return report;
}

bool is_ratliff_rush(const MonomialIdeal& I) {
  const auto report = classify(I);
  if (report.good())
    return equals(rr_closure(I, {.skip_classify = true}), I);
  return equals(oracle_closure(I).union_ideal, I);
}

bool is_very_good(const MonomialIdeal& I) {
  const auto d = mprimary_profile(I);
  return equals(ideal_power(I, 2), ideal_product(I, d.pure_power_ideal()));
}

} // namespace monorr

#include "monorr/goodness.hpp"

#include <functional>
#include <numeric>

#include "monorr/box.hpp"
#include "monorr/errors.hpp"

namespace monorr {

namespace {

using wide = unsigned __int128;

wide wide_mul(wide a, wide b) {
  wide r;
  if (__builtin_mul_overflow(a, b, &r))
    throw exponent_overflow("rational comparison overflows 128 bits");
  return r;
}

wide wide_add(wide a, wide b) {
  wide r;
  if (__builtin_add_overflow(a, b, &r))
    throw exponent_overflow("rational comparison overflows 128 bits");
  return r;
}

wide common_denominator(const MPrimaryProfile& d) {
  wide D = 1;
  for (auto di : d.d) {
    const wide g = std::gcd(static_cast<std::uint64_t>(D % di), di);
    D = wide_mul(D / g, di);
  }
  return D;
}

/// D * sum_i e_i/d_i as an exact integer.
wide scaled_weight(const Monomial& m, const MPrimaryProfile& d, wide D) {
  wide w = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    w = wide_add(w, wide_mul(m[i], D / d.d[i]));
  return w;
}

exponent_t largest_box_sum(const Monomial& m, const MPrimaryProfile& d) { return largest_box(m, d).sum(); }

/// Smallest l >= 2 such that every box containing m^l sums to less than l - 1.
Witness necessary_witness(const Monomial& m, const MPrimaryProfile& d) {
  for (exponent_t l = 2;; ++l) {
    auto p = pow(m, l);
    const auto s = largest_box_sum(p, d);
    if (s + 1 < l)
      return Witness{std::move(p), l, s};
  }
}

} // namespace

bool check_necessary(const MonomialIdeal& I, const MPrimaryProfile& d) {
  require_same_size(I.num_vars(), d.size());
  const wide D = common_denominator(d);
  for (const auto& g : I)
    if (scaled_weight(g, d, D) < D)
      return false;
  return true;
}

bool check_necessary(const MonomialIdeal& I) { return check_necessary(I, mprimary_profile(I)); }

bool check_sufficient(const MonomialIdeal& I, const MPrimaryProfile& d) {
  require_same_size(I.num_vars(), d.size());
  const wide D = common_denominator(d);
  const wide n = I.num_vars();
  for (const auto& g : non_corner_generators(I))
    if (wide_mul(2, scaled_weight(g, d, D)) < wide_mul(n, D))
      return false;
  return true;
}

bool check_sufficient(const MonomialIdeal& I) { return check_sufficient(I, mprimary_profile(I)); }

exponent_t power_index_K(const Monomial& m, const MPrimaryProfile& d) {
  require_same_size(m.size(), d.size());
  // x^e lies in <mu>^K iff sum_i floor(e_i/d_i) >= K.
  const wide D = common_denominator(d);
  for (wide K = 1; K <= D; ++K) {
    wide s = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
      s += wide_mul(K, m[i]) / d.d[i];
    if (s >= K)
      return static_cast<exponent_t>(K);
  }
  throw no_k_found("no K <= lcm(d) with m^K in <mu>^K; the generator violates the necessary condition");
}

ClassificationReport classify(const MonomialIdeal& I) {
  const auto d = mprimary_profile(I);
  const wide D = common_denominator(d);

  ClassificationReport report;
  report.non_corners = non_corner_generators(I);

  for (const auto& g : I) {
    if (scaled_weight(g, d, D) < D) {
      report.verdict = Verdict::bad;
      report.rule = Rule::necessary_failed;
      report.witness = necessary_witness(g, d);
      return report;
    }
  }

  for (const auto& m : report.non_corners)
    report.k_bounds.push_back(power_index_K(m, d));

  if (check_sufficient(I, d)) {
    report.verdict = Verdict::good;
    report.rule = Rule::sufficient_passed;
    return report;
  }

  report.rule = Rule::exhaustive;
  const auto& gens = report.non_corners;
  const auto& K = report.k_bounds;
  const std::size_t t = gens.size();
  // capacity[i] = largest sum j_i + ... + j_t still reachable.
  std::vector<exponent_t> capacity(t + 1, 0);
  for (std::size_t i = t; i-- > 0;)
    capacity[i] = capacity[i + 1] + (K[i] - 1);
  const exponent_t max_total = capacity[0];

  // Tuples (j_1..j_t) with j_i < K_i, by total degree l and then
  // lexicographically with larger j_1 first.
  std::optional<Witness> failure;
  std::function<bool(std::size_t, exponent_t, const Monomial&, exponent_t)> walk =
      [&](std::size_t i, exponent_t remaining, const Monomial& acc, exponent_t l) -> bool {
    if (remaining > capacity[i])
      return false;
    if (i == t) {
      const auto s = largest_box_sum(acc, d);
      if (s + 1 < l) {
        failure = Witness{acc, l, s};
        return true;
      }
      return false;
    }
    const exponent_t top = std::min<exponent_t>(remaining, K[i] - 1);
    for (exponent_t j = top + 1; j-- > 0;) {
      if (walk(i + 1, remaining - j, j == 0 ? acc : mul(acc, pow(gens[i], j)), l))
        return true;
    }
    return false;
  };
  for (exponent_t l = 1; l <= max_total; ++l)
    if (walk(0, l, Monomial::unit(I.num_vars()), l))
      break;

  if (failure) {
    report.verdict = Verdict::bad;
    report.witness = std::move(failure);
  } else {
    report.verdict = Verdict::good;
  }
  return report;
}

BoxDecompositionCheck verify_box_decomposition(const MonomialIdeal& I, exponent_t l) {
  const auto d = mprimary_profile(I);
  if (l == 0)
    throw std::invalid_argument("verify_box_decomposition: l must be >= 1");
  for (const auto& g : ideal_power(I, l)) {
    const exponent_t target = l - 1;
    if (smallest_box_sum(g, d) > target || largest_box_sum(g, d) < target)
      return {false, g};
  }
  return {true, std::nullopt};
}

void require_good(const MonomialIdeal& I) {
  auto report = classify(I);
  if (!report.good())
    throw bad_ideal(std::move(report));
}

} // namespace monorr

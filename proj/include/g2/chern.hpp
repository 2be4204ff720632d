#pragma once

#include <atomic>
#include <cstdint>
#include <utility>

#include "g2/cohomology.hpp"
#include "g2/concurrent_memo.hpp"
#include "g2/genus_zero.hpp"

namespace g2 {

struct DescendantKey {
  int ambient = 3;
  int degree = 1;
  int a_power = 0;
  int psi_power = 0;
  ExponentMultiset insertions;

  friend bool operator==(const DescendantKey&, const DescendantKey&) = default;
};

struct DescendantKeyHash {
  std::size_t operator()(const DescendantKey& k) const;
};

struct ReductionStats {
  std::uint64_t evaluations = 0;
  std::size_t entries = 0;
  int max_depth = 0;
};

/// Intersection numbers of a^i c1(L*)^j on spaces of one- and two-component
/// rational curves through constraints, where a is the hyperplane class at
/// the marked point. Thread-safe; shares the genus-zero table.
class Pairings {
 public:
  explicit Pairings(GenusZero& gw) : gw_(gw) {}
  Pairings(const Pairings&) = delete;
  Pairings& operator=(const Pairings&) = delete;

  GenusZero& genus_zero() { return gw_; }

  /// <a^i c1(L*)^j> over degree-d maps with one extra marked point and
  /// constraint classes `insertions`. Lenient: off-dimension gives 0.
  Rational descendant(int n, int d, int i, int j, const ExponentMultiset& insertions);

  /// <a^i c1(L*)^j, V1(mu)>; i + j must equal dim V1.
  Rational pair_v1(const ConstraintProfile& mu, int i, int j);

  /// <a^i c1(L1*)^j1 c1(L2*)^j2, V2(mu)>; i + j1 + j2 must equal dim V2.
  Rational pair_v2(const ConstraintProfile& mu, int i, int j1, int j2);

  /// Cuspidal rational plane curves through the constraints.
  Rational s1_count(const ConstraintProfile& mu);
  /// (<a, S1>, <c1(L*), S1>) for P^3.
  std::pair<Rational, Rational> s1_pairings_p3(const ConstraintProfile& mu);
  /// Two rational components meeting at a tacnode, P^3.
  Rational s2_count(const ConstraintProfile& mu);

  ReductionStats stats() const;

 private:
  Rational descend(const DescendantKey& key, int depth);

  GenusZero& gw_;
  WriteOnceMap<DescendantKey, Rational, DescendantKeyHash> memo_;
  std::atomic<std::uint64_t> evaluations_{0};
  std::atomic<int> max_depth_{0};
};

int dim_v1(const ConstraintProfile& mu);
int dim_v2(const ConstraintProfile& mu);

}  // namespace g2

#include "g2/chern.hpp"

#include <string>
#include <tuple>

#include "g2/errors.hpp"
#include "g2/node_counts.hpp"

namespace g2 {

std::size_t DescendantKeyHash::operator()(const DescendantKey& k) const {
  std::size_t seed = static_cast<std::size_t>(k.ambient);
  hash_mix(seed, static_cast<std::size_t>(k.degree));
  hash_mix(seed, static_cast<std::size_t>(k.a_power));
  hash_mix(seed, static_cast<std::size_t>(k.psi_power));
  for (int e = 0; e < ExponentMultiset::kSlots; ++e) {
    hash_mix(seed, static_cast<std::size_t>(k.insertions.count(e)));
  }
  return seed;
}

int dim_v1(const ConstraintProfile& mu) {
  return (mu.ambient + 1) * mu.degree + mu.ambient - 2 - mu.insertions().excess_codim();
}

int dim_v2(const ConstraintProfile& mu) { return dim_v1(mu) - 2; }

Rational Pairings::descendant(int n, int d, int i, int j, const ExponentMultiset& insertions) {
  if (i < 0 || j < 0) return 0;
  return descend({n, d, i, j, insertions}, 0);
}

Rational Pairings::descend(const DescendantKey& key, int depth) {
  const int n = key.ambient;
  const int d = key.degree;
  const int i = key.a_power;
  const int j = key.psi_power;
  if (i > n) return 0;
  if (j == 0) {
    ExponentMultiset m = key.insertions;
    m.add(i);
    return gw_.value(n, d, m);
  }
  if (d <= 0) return 0;
  if (key.insertions.count(0) > 0) return 0;

  Rational factor = 1;
  DescendantKey k = key;
  if (const int divisors = k.insertions.count(1); divisors > 0) {
    k.insertions.add(1, -divisors);
    for (int t = 0; t < divisors; ++t) factor *= d;
  }
  if (i + j + k.insertions.excess_codim() != (n + 1) * d + n - 2) return 0;

  if (auto hit = memo_.find(k)) return factor * *hit;

  evaluations_.fetch_add(1, std::memory_order_relaxed);
  int seen = max_depth_.load(std::memory_order_relaxed);
  while (depth > seen && !max_depth_.compare_exchange_weak(seen, depth)) {
  }

  // Every rewrite lowers the c1 exponent; boundary terms also lower the degree.
  auto sub = [&](int dd, int ii, int jj, const ExponentMultiset& m) -> Rational {
    if (std::tuple(jj, dd) >= std::tuple(j, d)) throw ConsistencyError("c1 rewrite failed to reduce the measure");
    return descend({n, dd, ii, jj, m}, depth + 1);
  };

  ExponentMultiset with_h = k.insertions;
  with_h.add(2);
  Rational result = sub(d, i, j - 1, with_h);
  result -= Rational(2 * d) * sub(d, i + 1, j - 1, k.insertions);

  for (int d0 = 1; d0 < d; ++d0) {
    const int d1 = d - d0;
    for_each_distribution(k.insertions, [&](const ExponentMultiset& s0, const ExponentMultiset& s1, const BigInt& w) {
      for (int c = 0; c <= n; ++c) {
        ExponentMultiset far = s1;
        far.add(n - c);
        Rational g = gw_.value(n, d1, far);
        if (g.is_zero()) continue;
        ExponentMultiset near = s0;
        near.add(c);
        Rational t = sub(d0, i, j - 1, near);
        if (j >= 2) t += sub(d0, i + c, j - 2, s0);
        result += Rational(w * d1 * d1) * t * g;
      }
    });
  }
  result /= Rational(d * d);
  return factor * memo_.insert(k, result);
}

namespace {

void check_monomial(bool ok, const std::string& space, int dim) {
  if (!ok) throw ValidationError("monomial degree must equal dim " + space + " = " + std::to_string(dim));
}

}  // namespace

Rational Pairings::pair_v1(const ConstraintProfile& mu, int i, int j) {
  check_ambient(mu.ambient);
  const int dim = dim_v1(mu);
  check_monomial(i >= 0 && j >= 0 && i + j == dim, "V1", dim);
  return descendant(mu.ambient, mu.degree, i, j, mu.insertions());
}

Rational Pairings::pair_v2(const ConstraintProfile& mu, int i, int j1, int j2) {
  check_ambient(mu.ambient);
  const int dim = dim_v2(mu);
  check_monomial(i >= 0 && j1 >= 0 && j2 >= 0 && i + j1 + j2 == dim, "V2", dim);
  const int n = mu.ambient;
  Rational total;
  for (int d1 = 1; d1 < mu.degree; ++d1) {
    const int d2 = mu.degree - d1;
    for_each_distribution(mu.insertions(), [&](const ExponentMultiset& s1, const ExponentMultiset& s2, const BigInt& w) {
      for (int c = 0; c <= n; ++c) {
        Rational left = descendant(n, d1, i + c, j1, s1);
        if (left.is_zero()) continue;
        total += Rational(w) * left * descendant(n, d2, n - c, j2, s2);
      }
    });
  }
  return total / 2;
}

Rational Pairings::s1_count(const ConstraintProfile& mu) {
  if (mu.ambient != 2) throw ValidationError("|S1| is computed directly only for P^2");
  return Rational(3) * pair_v1(mu, 2, 0) + Rational(3) * pair_v1(mu, 1, 1) + pair_v1(mu, 0, 2) -
         pair_v2(mu, 0, 0, 0);
}

std::pair<Rational, Rational> Pairings::s1_pairings_p3(const ConstraintProfile& mu) {
  if (mu.ambient != 3) throw ValidationError("S1 pairings are defined for P^3");
  const Rational v31 = pair_v1(mu, 3, 1);
  const Rational v22 = pair_v1(mu, 2, 2);
  const Rational v13 = pair_v1(mu, 1, 3);
  const Rational v04 = pair_v1(mu, 0, 4);
  Rational a = Rational(6) * v31 + Rational(4) * v22 + v13 -
               (Rational(4) * pair_v2(mu, 2, 0, 0) + pair_v2(mu, 1, 1, 0) + pair_v2(mu, 1, 0, 1));
  Rational c = Rational(4) * v31 + Rational(6) * v22 + Rational(4) * v13 + v04 - tau3(gw_, mu);
  return {a, c};
}

Rational Pairings::s2_count(const ConstraintProfile& mu) {
  if (mu.ambient != 3) throw ValidationError("|S2| is defined for P^3");
  return Rational(6) * pair_v2(mu, 2, 0, 0) + Rational(4) * (pair_v2(mu, 1, 1, 0) + pair_v2(mu, 1, 0, 1)) +
         pair_v2(mu, 0, 2, 0) + pair_v2(mu, 0, 0, 2) + pair_v2(mu, 0, 1, 1) - Rational(3) * tau3(gw_, mu);
}

ReductionStats Pairings::stats() const { return {evaluations_.load(), memo_.size(), max_depth_.load()}; }

}  // namespace g2

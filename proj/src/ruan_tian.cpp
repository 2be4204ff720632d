#include "g2/ruan_tian.hpp"

#include <string>

#include "g2/errors.hpp"

namespace g2 {

namespace {

Rational three_point(GenusZero& gw, int n, int d, std::vector<int> fixed, const ExponentMultiset& mu) {
  if (d == 0) {
    if (mu.size() != 0) return 0;
    int sum = 0;
    for (int e : fixed) sum += e;
    return sum == n ? 1 : 0;
  }
  ExponentMultiset m = mu;
  for (int e : fixed) {
    if (e == 0) continue;
    if (!add_class(m, e, n)) return 0;
  }
  return gw.value(n, d, m);
}

Rational split_law(GenusZero& gw, int n, int d, int a, int b, int c, int e, const ExponentMultiset& mu) {
  Rational total;
  for (int d1 = 0; d1 <= d; ++d1) {
    const int d2 = d - d1;
    for_each_distribution(mu, [&](const ExponentMultiset& m1, const ExponentMultiset& m2, const BigInt& w) {
      for (int k = 0; k <= n; ++k) {
        Rational left = three_point(gw, n, d1, {a, b, k}, m1);
        if (left.is_zero()) continue;
        Rational right = three_point(gw, n, d2, {n - k, c, e}, m2);
        if (!right.is_zero()) total += Rational(w) * left * right;
      }
    });
  }
  return total;
}

Rational four_point(GenusZero& gw, int n, int d, std::vector<int> fixed, const ExponentMultiset& mu) {
  for (std::size_t s = 0; s < fixed.size(); ++s) {
    if (fixed[s] == 0) {
      fixed.erase(fixed.begin() + static_cast<long>(s));
      return three_point(gw, n, d, fixed, mu);
    }
  }
  return split_law(gw, n, d, fixed[0], fixed[1], fixed[2], fixed[3], mu);
}

void check_slots(int n, std::initializer_list<int> fixed, const ExponentMultiset& mu) {
  check_ambient(n);
  for (int e : fixed) {
    if (e < 0 || e > n) throw ValidationError("fixed insertion h^" + std::to_string(e) + " out of range");
  }
  for (int e = n + 1; e < ExponentMultiset::kSlots; ++e) {
    if (mu.count(e) > 0) throw ValidationError("constraint class out of range");
  }
}

}  // namespace

bool rt_balanced(const RTQuery& q) {
  int lhs = q.free.excess_codim();
  for (int e : q.primary) lhs += e;
  return lhs == (q.ambient + 1) * q.degree + q.ambient * (1 - q.genus);
}

Rational rt0_three_point(GenusZero& gw, int n, int d, int a, int b, int c, const ExponentMultiset& mu) {
  check_slots(n, {a, b, c}, mu);
  if (d < 0) throw ValidationError("negative degree");
  bool balanced = rt_balanced({n, 0, d, {a, b, c}, mu});
  if (!balanced && d > 0) {
    ExponentMultiset m = mu;
    for (int e : {a, b, c}) {
      if (e != 0) m.add(e);
    }
    balanced = gw_balanced(n, d, m);
  }
  if (!balanced) throw ValidationError("unbalanced three-point query");
  return three_point(gw, n, d, {a, b, c}, mu);
}

Rational rt0_four_point(GenusZero& gw, int n, int d, int a, int b, int c, int e, const ExponentMultiset& mu) {
  check_slots(n, {a, b, c, e}, mu);
  if (d < 0) throw ValidationError("negative degree");
  if (!rt_balanced({n, 0, d, {a, b, c, e}, mu})) throw ValidationError("unbalanced four-point query");
  return four_point(gw, n, d, {a, b, c, e}, mu);
}

Rational rt0_four_point_split(GenusZero& gw, int n, int d, int a, int b, int c, int e,
                              const ExponentMultiset& mu) {
  check_slots(n, {a, b, c, e}, mu);
  if (d < 0) throw ValidationError("negative degree");
  return split_law(gw, n, d, a, b, c, e, mu);
}

namespace {

Rational reduce(GenusZero& gw, int n, int g, int d, std::vector<int> primary, const ExponentMultiset& mu) {
  if (g > 0) {
    Rational total;
    for (int k = 0; k <= n; ++k) {
      primary.push_back(k);
      primary.push_back(n - k);
      total += reduce(gw, n, g - 1, d, primary, mu);
      primary.resize(primary.size() - 2);
    }
    return total;
  }
  if (primary.size() == 3) return three_point(gw, n, d, primary, mu);
  return four_point(gw, n, d, primary, mu);
}

}  // namespace

Rational rt_genus_reduce(GenusZero& gw, const RTQuery& q) {
  check_ambient(q.ambient);
  if (q.genus < 0 || q.genus > 2) throw ValidationError("genus must be 0, 1 or 2");
  if (q.degree < 0) throw ValidationError("negative degree");
  for (int e : q.primary) {
    if (e < 0 || e > q.ambient) throw ValidationError("primary insertion out of range");
  }
  const std::size_t slots = q.primary.size() + 2 * static_cast<std::size_t>(q.genus);
  if (slots != 3 && slots != 4) {
    throw ValidationError("unsupported: genus reduction ends in a " + std::to_string(slots) +
                          "-point genus-zero invariant");
  }
  if (!rt_balanced(q)) throw ValidationError("unbalanced RT query");
  return reduce(gw, q.ambient, q.genus, q.degree, q.primary, q.free);
}

Rational rt2(GenusZero& gw, int n, int d, const ExponentMultiset& mu) {
  return rt_genus_reduce(gw, RTQuery{n, 2, d, {}, mu});
}

}  // namespace g2

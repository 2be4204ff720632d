#include "g2/genus_zero.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "g2/errors.hpp"

namespace g2 {

std::size_t GWKeyHash::operator()(const GWKey& k) const {
  std::size_t seed = static_cast<std::size_t>(k.ambient);
  hash_mix(seed, static_cast<std::size_t>(k.degree));
  for (int e = 0; e < ExponentMultiset::kSlots; ++e) {
    hash_mix(seed, static_cast<std::size_t>(k.insertions.count(e)));
  }
  return seed;
}

bool gw_balanced(int n, int d, const ExponentMultiset& insertions) {
  return insertions.excess_codim() == gw_balance_target(n, d);
}

bool add_class(ExponentMultiset& m, int e, int n) {
  if (e > n) return false;
  m.add(e);
  return true;
}

Rational GenusZero::invariant(int n, int d, std::span<const int> insertions) {
  check_ambient(n);
  if (d < 0) throw ValidationError("negative degree");
  for (int e : insertions) {
    if (e < 0 || e > n) {
      throw ValidationError("insertion h^" + std::to_string(e) + " is not a class on P^" + std::to_string(n));
    }
  }
  if (d == 0 && insertions.size() != 3) {
    throw ValidationError("degree-0 invariants need exactly three insertions");
  }
  return value(n, d, ExponentMultiset::from(insertions));
}

Rational GenusZero::value(int n, int d, const ExponentMultiset& insertions) {
  for (int e = n + 1; e < ExponentMultiset::kSlots; ++e) {
    if (insertions.count(e) > 0) return 0;
  }
  if (d < 0) return 0;
  if (d == 0) {
    if (insertions.size() != 3) return 0;
    int sum = 0;
    for (int e : insertions.sorted()) sum += e;
    return sum == n ? 1 : 0;
  }
  if (insertions.count(0) > 0) return 0;

  Rational factor = 1;
  ExponentMultiset key_ins = insertions;
  if (const int divisors = insertions.count(1); divisors > 0) {
    key_ins.add(1, -divisors);
    for (int i = 0; i < divisors; ++i) factor *= d;
  }
  if (!gw_balanced(n, d, key_ins)) return 0;
  if (key_ins.size() < 3) {
    const bool base = d == 1 && key_ins.size() == 2 && key_ins.count(n) == 2;
    return base ? factor : Rational(0);
  }

  const GWKey key{n, d, key_ins};
  if (auto hit = table_.find(key)) {
    hits_.fetch_add(1, std::memory_order_relaxed);
    if (hit->preloaded) preloaded_hits_.fetch_add(1, std::memory_order_relaxed);
    return factor * hit->value;
  }
  misses_.fetch_add(1, std::memory_order_relaxed);
  Rational v = reconstruct(key);
  return factor * table_.insert(key, GWEntry{std::move(v), false}).value;
}

namespace {

// Lexicographic measure (degree, insertion count, smallest codimension);
// every WDVV step must strictly lower it.
std::tuple<int, int, int> measure(int d, const ExponentMultiset& m) {
  const auto s = m.sorted();
  return {d, static_cast<int>(s.size()), s.empty() ? 0 : s.front()};
}

}  // namespace

Rational GenusZero::reconstruct(const GWKey& key) {
  const int n = key.ambient;
  const int d = key.degree;
  std::vector<int> s = key.insertions.sorted();

  // gamma_1 = h * gamma' with gamma' = h^(g1 - 1); gamma_2, gamma_3 partners.
  const int g1 = s.front();
  s.erase(s.begin());
  int g2 = 0;
  int g3 = 0;
  if (pivot_ == Pivot::LargestPartners) {
    g2 = s.back();
    s.pop_back();
    g3 = s.back();
    s.pop_back();
  } else {
    g2 = s.front();
    g3 = s[1];
    s.erase(s.begin(), s.begin() + 2);
  }
  const int gp = g1 - 1;
  const ExponentMultiset rest = ExponentMultiset::from(s);
  const auto bound = measure(d, key.insertions);

  auto sub = [&](int dd, const ExponentMultiset& base, std::initializer_list<int> extra) -> Rational {
    ExponentMultiset m = base;
    for (int e : extra) {
      if (!add_class(m, e, n)) return 0;
    }
    if (measure(dd, m) >= bound) throw ConsistencyError("WDVV step failed to reduce the measure");
    return value(n, dd, m);
  };

  Rational result = sub(d, rest, {gp, g2 + 1, g3});
  result += Rational(d) * sub(d, rest, {g2, gp + g3});
  result -= Rational(d) * sub(d, rest, {gp, g2 + g3});

  for (int d1 = 1; d1 < d; ++d1) {
    const int d2 = d - d1;
    for_each_distribution(rest, [&](const ExponentMultiset& s1, const ExponentMultiset& s2, const BigInt& w) {
      for (int k = 0; k <= n; ++k) {
        Rational a = sub(d1, s1, {g2, k});
        if (!a.is_zero()) {
          Rational b = sub(d2, s2, {n - k, gp, g3});
          if (!b.is_zero()) result += Rational(w * d1) * a * b;
        }
        Rational c = sub(d1, s1, {gp, k});
        if (!c.is_zero()) {
          Rational e = sub(d2, s2, {n - k, g2, g3});
          if (!e.is_zero()) result -= Rational(w * d1) * c * e;
        }
      }
    });
  }
  return result;
}

GWStats GenusZero::stats() const {
  return {hits_.load(), misses_.load(), preloaded_hits_.load(), table_.size()};
}

std::vector<std::pair<GWKey, Rational>> GenusZero::entries() const {
  std::vector<std::pair<GWKey, Rational>> out;
  for (auto& [k, e] : table_.snapshot()) out.emplace_back(k, e.value);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tuple(a.first.ambient, a.first.degree, a.first.insertions.sorted()) <
           std::tuple(b.first.ambient, b.first.degree, b.first.insertions.sorted());
  });
  return out;
}

void GenusZero::preload(const std::vector<std::pair<GWKey, Rational>>& entries) {
  for (const auto& [k, v] : entries) table_.insert(k, GWEntry{v, true});
}

BigInt plane_count(int d) {
  if (d <= 0) throw ValidationError("plane curve degree must be positive");
  std::vector<BigInt> n(static_cast<std::size_t>(d) + 1);
  n[1] = 1;
  for (int e = 2; e <= d; ++e) {
    BigInt sum = 0;
    for (int d1 = 1; d1 < e; ++d1) {
      const int d2 = e - d1;
      const BigInt w = BigInt(d1 * d1 * d2 * d2) * binomial(3 * e - 4, 3 * d1 - 2) -
                       BigInt(d1 * d1 * d1 * d2) * binomial(3 * e - 4, 3 * d1 - 1);
      sum += n[d1] * n[d2] * w;
    }
    n[e] = sum;
  }
  return n[d];
}

BigInt space_count(GenusZero& gw, int d, int p, int q) {
  if (d < 1 || p < 0 || q < 0 || 2 * p + q != 4 * d) {
    throw ValidationError("space curve counts need d >= 1 and 2p+q = 4d");
  }
  ExponentMultiset m;
  m.add(3, p);
  m.add(2, q);
  return gw.value(3, d, m).to_integer();
}

}  // namespace g2

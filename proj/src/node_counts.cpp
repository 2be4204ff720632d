#include "g2/node_counts.hpp"

#include <string>

#include "g2/errors.hpp"

namespace g2 {

BigInt tau2_p2(int d) {
  if (d < 2) return 0;
  BigInt twice = 0;
  for (int d1 = 1; d1 < d; ++d1) {
    const int d2 = d - d1;
    twice += binomial(3 * d - 2, 3 * d1 - 1) * d1 * d2 * plane_count(d1) * plane_count(d2);
  }
  return twice / 2;
}

namespace {

void split_three(GenusZero& gw, int n, const std::array<int, 3>& degrees, const ExponentMultiset& mu,
                 const DiagonalDecomposition& diag, Rational& total) {
  for_each_distribution(mu, [&](const ExponentMultiset& m1, const ExponentMultiset& rest, const BigInt& w1) {
    for_each_distribution(rest, [&](const ExponentMultiset& m2, const ExponentMultiset& m3, const BigInt& w2) {
      for (const auto& term : diag.terms) {
        const ExponentMultiset* sides[3] = {&m1, &m2, &m3};
        Rational product = term.coeff * Rational(w1 * w2);
        for (int s = 0; s < 3 && !product.is_zero(); ++s) {
          ExponentMultiset m = *sides[s];
          product *= add_class(m, term.exponents[s], n) ? gw.value(n, degrees[s], m) : Rational(0);
        }
        total += product;
      }
    });
  });
}

}  // namespace

Rational tau_common_node(GenusZero& gw, int n, int d, const ExponentMultiset& mu, int arity, int decoration) {
  check_ambient(n);
  if (decoration != 0 && decoration != 2) {
    throw ValidationError("node decoration must be h^0 or h^2, got h^" + std::to_string(decoration));
  }
  DiagonalDecomposition diag = diagonal(n, arity);
  for (auto& term : diag.terms) term.exponents[0] += decoration;

  Rational total;
  if (arity == 2) {
    for (int d1 = 1; d1 < d; ++d1) {
      for_each_distribution(mu, [&](const ExponentMultiset& m1, const ExponentMultiset& m2, const BigInt& w) {
        for (const auto& term : diag.terms) {
          ExponentMultiset a = m1;
          ExponentMultiset b = m2;
          if (!add_class(a, term.exponents[0], n) || !add_class(b, term.exponents[1], n)) continue;
          Rational left = gw.value(n, d1, a);
          if (left.is_zero()) continue;
          total += term.coeff * Rational(w) * left * gw.value(n, d - d1, b);
        }
      });
    }
    return total / 2;
  }
  for (int d1 = 1; d1 < d; ++d1) {
    for (int d2 = 1; d1 + d2 < d; ++d2) {
      split_three(gw, n, {d1, d2, d - d1 - d2}, mu, diag, total);
    }
  }
  return total / 6;
}

Rational tau3(GenusZero& gw, const ConstraintProfile& profile) {
  if (profile.ambient != 3) throw ValidationError("tau_3 is defined for P^3");
  return tau_common_node(gw, 3, profile.degree, profile.insertions(), 3, 0);
}

Rational tau2_on_line(GenusZero& gw, const ConstraintProfile& profile) {
  if (profile.ambient != 3) throw ValidationError("tau_2^(2) is defined for P^3");
  return tau_common_node(gw, 3, profile.degree, profile.insertions(), 2, 2);
}

Rational boundary_pairing(GenusZero& gw, int n, int d1, int d2, const ExponentMultiset& side1,
                          const ExponentMultiset& side2) {
  check_ambient(n);
  if (d1 <= 0 || d2 <= 0) return 0;
  if (side1.excess_codim() + side2.excess_codim() + n - 2 != gw_balance_target(n, d1) + gw_balance_target(n, d2)) {
    throw ValidationError("boundary pairing: decorations do not match the stratum dimension");
  }
  Rational total;
  for (int k = 0; k <= n; ++k) {
    ExponentMultiset a = side1;
    ExponentMultiset b = side2;
    a.add(k);
    b.add(n - k);
    Rational left = gw.value(n, d1, a);
    if (!left.is_zero()) total += left * gw.value(n, d2, b);
  }
  return total;
}

}  // namespace g2

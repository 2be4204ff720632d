#pragma once

#include <vector>

#include "g2/cohomology.hpp"
#include "g2/genus_zero.hpp"

namespace g2 {

/// RT_{g,d}(alpha; mu): `primary` are the fixed marked insertions, `free`
/// the constraint classes carried by unfixed marked points.
struct RTQuery {
  int ambient = 2;
  int genus = 0;
  int degree = 0;
  std::vector<int> primary;
  ExponentMultiset free;
};

/// Dimension condition sum_alpha c + sum_mu (c - 1) = (n+1)d + n(1-g).
bool rt_balanced(const RTQuery& q);

/// Three fixed points. For d > 0 fundamental-class slots are dropped first
/// and the rest is a plain genus-zero invariant; in degree 0 it is the
/// triple intersection. Throws on an unbalanced query.
Rational rt0_three_point(GenusZero& gw, int n, int d, int a, int b, int c, const ExponentMultiset& mu);

/// Four fixed points with fixed cross-ratio, by the splitting law.
/// Throws on an unbalanced query.
Rational rt0_four_point(GenusZero& gw, int n, int d, int a, int b, int c, int e, const ExponentMultiset& mu);

/// Splitting law applied literally, including to fundamental-class slots.
Rational rt0_four_point_split(GenusZero& gw, int n, int d, int a, int b, int c, int e,
                              const ExponentMultiset& mu);

/// Genus-reducing law down to genus zero, then the three- or four-point
/// evaluation. Throws ValidationError on unbalanced or unsupported queries.
Rational rt_genus_reduce(GenusZero& gw, const RTQuery& q);

/// Genus-two invariant with only constraint insertions.
Rational rt2(GenusZero& gw, int n, int d, const ExponentMultiset& mu);

}  // namespace g2

#pragma once

#include "g2/cohomology.hpp"
#include "g2/genus_zero.hpp"

namespace g2 {

/// tau_2 for plane curves through 3d - 2 points: two rational components
/// with a chosen common node. Zero for d < 2.
BigInt tau2_p2(int d);

/// Configurations of k rational components (k = 2 or 3) of positive degrees
/// sharing one node, through the constraints mu, with the node class
/// h^decoration imposed (0 = unconstrained, 2 = node on a line). Ordered
/// over components and divided by k!.
Rational tau_common_node(GenusZero& gw, int n, int d, const ExponentMultiset& mu, int arity, int decoration);

/// tau_3: three components through one node in P^3.
Rational tau3(GenusZero& gw, const ConstraintProfile& profile);

/// tau_2^(2): two components whose node lies on a generic line in P^3.
Rational tau2_on_line(GenusZero& gw, const ConstraintProfile& profile);

/// Pairing of decorated classes against the two-component stratum with
/// degrees (d1, d2): sum over the diagonal of
/// gw0(d1; side1 + h^k) * gw0(d2; side2 + h^(n-k)).
Rational boundary_pairing(GenusZero& gw, int n, int d1, int d2, const ExponentMultiset& side1,
                          const ExponentMultiset& side2);

}  // namespace g2

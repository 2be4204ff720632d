#pragma once

#include <string>
#include <utility>
#include <vector>

#include "g2/chern.hpp"
#include "g2/cohomology.hpp"
#include "g2/genus_zero.hpp"

namespace g2 {

struct Genus2Report {
  ConstraintProfile profile;
  Rational rt;
  Rational cr;
  Rational n2;
  std::vector<std::pair<std::string, Rational>> intermediates;
  std::vector<std::string> warnings;

  const Rational* find(const std::string& name) const;
};

/// Closed formula for genus-two plane curves of degree d through 3d - 2 points.
BigInt n2_p2_closed(int d);

/// Closed formula for the plane correction term.
BigInt cr_p2_closed(int d);

/// Owns the genus-zero table and the intersection-number memo shared by all
/// queries. Results do not depend on the thread count.
class Genus2Engine {
 public:
  explicit Genus2Engine(int threads = 1) : pairings_(gw_), threads_(threads) {}

  GenusZero& genus_zero() { return gw_; }
  Pairings& pairings() { return pairings_; }
  void set_threads(int threads) { threads_ = threads; }

  /// Correction term for P^2 from Chern-class pairings; throws
  /// ConsistencyError if it disagrees with the closed formula.
  BigInt cr_p2(int d);

  /// RT and CR for P^2 with component cross-checks and the closed formula.
  Genus2Report n2_p2(int d);

  /// RT and CR for P^3 through p points and q lines, 2p + q = 4d - 3.
  Genus2Report n2_p3(const ConstraintProfile& profile);

 private:
  GenusZero gw_;
  Pairings pairings_;
  int threads_;
};

}  // namespace g2

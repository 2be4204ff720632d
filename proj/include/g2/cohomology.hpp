#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "g2/rational.hpp"

namespace g2 {

/// Projective spaces handled by the engine.
inline constexpr int kMinAmbient = 2;
inline constexpr int kMaxAmbient = 3;

void check_ambient(int ambient_dim);

/// Element of H*(P^n; Q) in the basis h^0, ..., h^n.
class CohClass {
 public:
  explicit CohClass(int ambient_dim);

  static CohClass basis(int ambient_dim, int exponent);

  int ambient_dim() const { return n_; }
  const Rational& coeff(int exponent) const { return coeffs_.at(exponent); }
  void set_coeff(int exponent, Rational value) { coeffs_.at(exponent) = std::move(value); }

  /// The exponent k when the class is exactly h^k.
  std::optional<int> pure_exponent() const;

  /// Coefficient of the point class h^n.
  const Rational& integral() const { return coeffs_.back(); }

  CohClass& operator+=(const CohClass& o);
  friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
  friend CohClass operator*(const Rational& s, CohClass c);
  friend bool operator==(const CohClass&, const CohClass&) = default;

 private:
  int n_;
  std::vector<Rational> coeffs_;
};

/// Cup product; h^i h^j = h^{i+j}, and zero past the top degree.
CohClass cup(const CohClass& x, const CohClass& y);

struct DiagonalTerm {
  std::vector<int> exponents;
  Rational coeff;
};

/// Kunneth expansion of the small diagonal of (P^n)^k.
struct DiagonalDecomposition {
  int ambient_dim = 0;
  int arity = 0;
  std::vector<DiagonalTerm> terms;
};

/// k = 2 is the ordinary diagonal; k = 3 is the product of the two pairwise
/// diagonals Delta_12 and Delta_23 in the triple ring.
DiagonalDecomposition diagonal(int ambient_dim, int arity);

/// A multiset of basis exponents stored as multiplicities.
class ExponentMultiset {
 public:
  static constexpr int kSlots = kMaxAmbient + 1;

  ExponentMultiset() = default;
  static ExponentMultiset from(std::span<const int> exponents);

  int count(int exponent) const { return counts_.at(exponent); }
  void add(int exponent, int times = 1) { counts_.at(exponent) += times; }
  void remove(int exponent);
  int size() const;
  /// Sum of (exponent - 1) over the elements.
  int excess_codim() const;
  std::vector<int> sorted() const;

  friend bool operator==(const ExponentMultiset&, const ExponentMultiset&) = default;

 private:
  std::array<int, kSlots> counts_{};
};

/// Calls visit(first, second, weight) for every way of splitting a set of
/// labelled points into two parts; weight counts the labelled splittings
/// that give the same pair of multisets.
void for_each_distribution(
    const ExponentMultiset& items,
    const std::function<void(const ExponentMultiset&, const ExponentMultiset&, const BigInt&)>& visit);

/// The tuple of constraints: p points and q lines in P^n of a degree-d
/// count. Lines only exist as constraints in P^3.
struct ConstraintProfile {
  int ambient = 2;
  int degree = 1;
  int points = 0;
  int lines = 0;

  ExponentMultiset insertions() const;
  /// Dimension condition for the genus-two counts: (n+1)d - 3 for the
  /// total excess codimension (3d - 2 points in P^2, 2p + q = 4d - 3 in P^3).
  bool genus2_balanced() const;
  /// Throws ValidationError with a user-facing explanation.
  void validate_genus2() const;

  friend bool operator==(const ConstraintProfile&, const ConstraintProfile&) = default;
};

/// The unique admissible profile for plane curves: 3d - 2 points.
ConstraintProfile plane_profile(int degree);

}  // namespace g2

#include "g2/cohomology.hpp"

#include <map>
#include <string>

#include "g2/errors.hpp"

namespace g2 {

void check_ambient(int ambient_dim) {
  if (ambient_dim < kMinAmbient || ambient_dim > kMaxAmbient) {
    throw ValidationError("unsupported ambient P^" + std::to_string(ambient_dim) +
                          " (only P^2 and P^3)");
  }
}

CohClass::CohClass(int ambient_dim) : n_(ambient_dim) {
  check_ambient(ambient_dim);
  coeffs_.assign(static_cast<std::size_t>(n_) + 1, Rational{});
}

CohClass CohClass::basis(int ambient_dim, int exponent) {
  CohClass c(ambient_dim);
  if (exponent < 0 || exponent > ambient_dim) {
    throw ValidationError("basis exponent " + std::to_string(exponent) + " out of range");
  }
  c.coeffs_[static_cast<std::size_t>(exponent)] = 1;
  return c;
}

std::optional<int> CohClass::pure_exponent() const {
  std::optional<int> found;
  for (int k = 0; k <= n_; ++k) {
    const auto& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (found || c != 1) return std::nullopt;
    found = k;
  }
  return found;
}

CohClass& CohClass::operator+=(const CohClass& o) {
  if (o.n_ != n_) throw ValidationError("ambient mismatch in class sum");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

CohClass operator*(const Rational& s, CohClass c) {
  for (auto& x : c.coeffs_) x *= s;
  return c;
}

CohClass cup(const CohClass& x, const CohClass& y) {
  if (x.ambient_dim() != y.ambient_dim()) throw ValidationError("ambient mismatch in cup product");
  const int n = x.ambient_dim();
  CohClass out(n);
  for (int i = 0; i <= n; ++i) {
    if (x.coeff(i).is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (y.coeff(j).is_zero()) continue;
      out.set_coeff(i + j, out.coeff(i + j) + x.coeff(i) * y.coeff(j));
    }
  }
  return out;
}

namespace {

// Elements of H*((P^n)^k) as exponent tuple -> coefficient.
using TensorClass = std::map<std::vector<int>, Rational>;

TensorClass pairwise_diagonal(int n, int arity, int first, int second) {
  TensorClass out;
  for (int i = 0; i <= n; ++i) {
    std::vector<int> e(static_cast<std::size_t>(arity), 0);
    e[static_cast<std::size_t>(first)] = i;
    e[static_cast<std::size_t>(second)] = n - i;
    out[e] += 1;
  }
  return out;
}

TensorClass cup(const TensorClass& x, const TensorClass& y, int n) {
  TensorClass out;
  for (const auto& [ex, cx] : x) {
    for (const auto& [ey, cy] : y) {
      std::vector<int> e(ex.size());
      bool vanishes = false;
      for (std::size_t s = 0; s < e.size(); ++s) {
        e[s] = ex[s] + ey[s];
        vanishes = vanishes || e[s] > n;
      }
      if (!vanishes) out[e] += cx * cy;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

}  // namespace

DiagonalDecomposition diagonal(int ambient_dim, int arity) {
  check_ambient(ambient_dim);
  TensorClass product;
  switch (arity) {
    case 2:
      product = pairwise_diagonal(ambient_dim, 2, 0, 1);
      break;
    case 3:
      product = cup(pairwise_diagonal(ambient_dim, 3, 0, 1), pairwise_diagonal(ambient_dim, 3, 1, 2),
                    ambient_dim);
      break;
    default:
      throw ValidationError("unsupported diagonal arity " + std::to_string(arity));
  }
  DiagonalDecomposition out{ambient_dim, arity, {}};
  for (auto& [e, c] : product) out.terms.push_back({e, c});
  return out;
}

ExponentMultiset ExponentMultiset::from(std::span<const int> exponents) {
  ExponentMultiset m;
  for (int e : exponents) {
    if (e < 0 || e >= kSlots) throw ValidationError("exponent " + std::to_string(e) + " out of range");
    m.add(e);
  }
  return m;
}

void ExponentMultiset::remove(int exponent) {
  if (counts_.at(exponent) == 0) throw std::logic_error("removing absent exponent");
  --counts_[exponent];
}

int ExponentMultiset::size() const {
  int s = 0;
  for (int c : counts_) s += c;
  return s;
}

int ExponentMultiset::excess_codim() const {
  int s = 0;
  for (int e = 0; e < kSlots; ++e) s += counts_[e] * (e - 1);
  return s;
}

std::vector<int> ExponentMultiset::sorted() const {
  std::vector<int> out;
  for (int e = 0; e < kSlots; ++e) out.insert(out.end(), counts_[e], e);
  return out;
}

void for_each_distribution(
    const ExponentMultiset& items,
    const std::function<void(const ExponentMultiset&, const ExponentMultiset&, const BigInt&)>& visit) {
  ExponentMultiset left;
  ExponentMultiset right;
  auto recurse = [&](auto&& self, int slot, const BigInt& weight) -> void {
    if (slot == ExponentMultiset::kSlots) {
      visit(left, right, weight);
      return;
    }
    const int total = items.count(slot);
    for (int k = 0; k <= total; ++k) {
      left.add(slot, k);
      right.add(slot, total - k);
      self(self, slot + 1, weight * binomial(total, k));
      left.add(slot, -k);
      right.add(slot, k - total);
    }
  };
  recurse(recurse, 0, BigInt(1));
}

ExponentMultiset ConstraintProfile::insertions() const {
  check_ambient(ambient);
  ExponentMultiset m;
  m.add(ambient, points);
  if (ambient == 3) m.add(2, lines);
  return m;
}

bool ConstraintProfile::genus2_balanced() const {
  if (degree < 1 || points < 0 || lines < 0) return false;
  if (ambient == 2) return lines == 0 && points == 3 * degree - 2;
  if (ambient == 3) return 2 * points + lines == 4 * degree - 3;
  return false;
}

void ConstraintProfile::validate_genus2() const {
  check_ambient(ambient);
  if (degree < 1) throw ValidationError("degree must be positive");
  if (points < 0 || lines < 0) throw ValidationError("constraint counts must be nonnegative");
  if (ambient == 2) {
    if (lines != 0) throw ValidationError("line constraints are not used in P^2");
    if (points != 3 * degree - 2) throw ValidationError("P^2 counts need exactly 3d-2 points");
  } else if (2 * points + lines != 4 * degree - 3) {
    throw ValidationError("2p+q must equal 4d-3");
  }
}

ConstraintProfile plane_profile(int degree) { return {2, degree, 3 * degree - 2, 0}; }

}  // namespace g2

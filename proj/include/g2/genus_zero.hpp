#pragma once

#include <atomic>
#include <cstdint>
#include <span>
#include <vector>

#include "g2/cohomology.hpp"
#include "g2/concurrent_memo.hpp"
#include "g2/rational.hpp"

namespace g2 {

/// Normalized genus-zero query: no h^0 or h^1 insertions, balanced, and at
/// least three insertions.
struct GWKey {
  int ambient = 3;
  int degree = 0;
  ExponentMultiset insertions;

  friend bool operator==(const GWKey&, const GWKey&) = default;
};

struct GWKeyHash {
  std::size_t operator()(const GWKey& k) const;
};

/// Sum of (c - 1) that a genus-zero invariant of P^n in degree d needs.
inline int gw_balance_target(int n, int d) { return (n + 1) * d + n - 3; }
bool gw_balanced(int n, int d, const ExponentMultiset& insertions);

struct GWEntry {
  Rational value;
  bool preloaded = false;
  // Only the value takes part in write-once conflict checks.
  friend bool operator==(const GWEntry& a, const GWEntry& b) { return a.value == b.value; }
};

using GWTable = WriteOnceMap<GWKey, GWEntry, GWKeyHash>;

struct GWStats {
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
  std::uint64_t preloaded_hits = 0;
  std::size_t entries = 0;
};

/// Which insertions a WDVV step uses besides the smallest-codimension one.
enum class Pivot {
  LargestPartners,   // the two largest remaining insertions
  SmallestPartners,  // the two smallest remaining insertions
};

/// Genus-zero Gromov-Witten invariants of P^2 and P^3 with point-class
/// insertions, reconstructed by WDVV from <pt, pt>_1 = 1. Thread-safe.
class GenusZero {
 public:
  explicit GenusZero(Pivot pivot = Pivot::LargestPartners) : pivot_(pivot) {}
  GenusZero(const GenusZero&) = delete;
  GenusZero& operator=(const GenusZero&) = delete;

  /// Checked entry point. Insertions may be unsorted and may contain h^0
  /// and h^1; exponents must lie in 0..n. Returns 0 on dimension imbalance.
  Rational invariant(int n, int d, std::span<const int> insertions);

  /// Lenient form used by the higher modules: exponents above n give 0.
  Rational value(int n, int d, const ExponentMultiset& insertions);

  GWStats stats() const;
  std::vector<std::pair<GWKey, Rational>> entries() const;
  /// Seeds the table; entries served from it count as preloaded hits.
  void preload(const std::vector<std::pair<GWKey, Rational>>& entries);

 private:
  Rational reconstruct(const GWKey& key);

  Pivot pivot_;
  GWTable table_;
  std::atomic<std::uint64_t> hits_{0};
  std::atomic<std::uint64_t> misses_{0};
  std::atomic<std::uint64_t> preloaded_hits_{0};
};

/// Adds h^e to m; returns false (leaving m untouched) when e exceeds n,
/// i.e. when the class vanishes.
bool add_class(ExponentMultiset& m, int e, int n);

/// Rational plane curves of degree d through 3d - 1 points (Kontsevich).
BigInt plane_count(int d);

/// Rational space curves of degree d through p points and q lines, 2p + q = 4d.
BigInt space_count(GenusZero& gw, int d, int p, int q);

}  // namespace g2

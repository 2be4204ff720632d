#pragma once

// Independent closed forms for plane curves, evaluated without the engine.

#include <gmpxx.h>

#include <vector>

namespace oracle {

inline mpz_class choose(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// Kontsevich numbers n_1..n_dmax (index 0 unused).
inline std::vector<mpz_class> plane_numbers(int dmax) {
  std::vector<mpz_class> n(static_cast<std::size_t>(dmax) + 1, 0);
  if (dmax >= 1) n[1] = 1;
  for (int d = 2; d <= dmax; ++d) {
    for (int a = 1; a < d; ++a) {
      const int b = d - a;
      n[d] += n[a] * n[b] *
              (mpz_class(a * a * b * b) * choose(3 * d - 4, 3 * a - 2) - mpz_class(a * a * a * b) * choose(3 * d - 4, 3 * a - 1));
    }
  }
  return n;
}

// Sum over d1 + d2 = d of d1^p d2^q binom(3d-2, 3d1-1) n_d1 n_d2.
inline mpz_class split_sum(int d, int p, int q) {
  const auto n = plane_numbers(d);
  mpz_class s = 0;
  for (int a = 1; a < d; ++a) {
    const int b = d - a;
    mpz_class w = choose(3 * d - 2, 3 * a - 1) * n[a] * n[b];
    for (int t = 0; t < p; ++t) w *= a;
    for (int t = 0; t < q; ++t) w *= b;
    s += w;
  }
  return s;
}

inline mpz_class n_d(int d) { return plane_numbers(d)[d]; }

// Genus-two RT invariant of P^2 through 3d - 2 points.
inline mpz_class rt2_p2(int d) { return 6 * d * d * n_d(d) + split_sum(d, 3, 3); }

// Four-point invariant with four line slots.
inline mpz_class rt0_four_lines(int d) { return 2 * d * d * n_d(d) + split_sum(d, 3, 3); }

// <a c1(L*), V1> and <c1(L*)^2, V1> for P^2.
inline mpq_class v1_ac(int d) {
  mpq_class half(split_sum(d, 2, 2), 2);
  half.canonicalize();
  mpq_class r = mpq_class(-n_d(d)) + half;
  r /= d;
  return r;
}
inline mpq_class v1_cc(int d) {
  mpq_class r(split_sum(d, 1, 1), 2);
  r.canonicalize();
  return -r;
}

inline mpz_class tau2(int d) { return split_sum(d, 1, 1) / 2; }

}  // namespace oracle

#include "g2/genus_two.hpp"

#include <functional>

#include "g2/errors.hpp"
#include "g2/node_counts.hpp"
#include "g2/parallel.hpp"
#include "g2/ruan_tian.hpp"

namespace g2 {

const Rational* Genus2Report::find(const std::string& name) const {
  for (const auto& [k, v] : intermediates) {
    if (k == name) return &v;
  }
  return nullptr;
}

BigInt n2_p2_closed(int d) {
  if (d < 1) throw ValidationError("degree must be positive");
  Rational sum;
  for (int d1 = 1; d1 < d; ++d1) {
    const int d2 = d - d1;
    const Rational inner =
        Rational(d1 * d1 * d2 * d2 + 28) - Rational(BigInt(16 * (9 * d1 * d2 - 1)), BigInt(3 * d - 2));
    sum += inner * Rational(binomial(3 * d - 2, 3 * d1 - 1) * d1 * d2 * plane_count(d1) * plane_count(d2));
  }
  const Rational total = Rational(BigInt(3 * (d * d - 1)) * plane_count(d)) + sum / 2;
  return total.to_integer();
}

BigInt cr_p2_closed(int d) {
  if (d < 1) throw ValidationError("degree must be positive");
  const BigInt nd = plane_count(d);
  BigInt quartic = 0;
  BigInt quadratic = 0;
  for (int d1 = 1; d1 < d; ++d1) {
    const int d2 = d - d1;
    const BigInt b = binomial(3 * d - 2, 3 * d1 - 1) * plane_count(d1) * plane_count(d2);
    quartic += b * (d1 * d1 * d2 * d2);
    quadratic += b * (d1 * d2);
  }
  const Rational total = Rational(78 * nd) + Rational(72) / d * (Rational(-nd) + Rational(quartic) / 2) -
                         Rational(20 * quadratic);
  return total.to_integer();
}

namespace {

void finalize(Genus2Report& r) {
  if (!r.rt.is_integer() || !r.cr.is_integer()) {
    throw ConsistencyError("RT = " + r.rt.to_string() + " or CR = " + r.cr.to_string() + " is not an integer");
  }
  r.n2 = (r.rt - r.cr) / 2;
  if (!r.n2.is_integer()) throw ConsistencyError("RT - CR is odd");
  if (r.n2.sign() < 0) throw ConsistencyError("negative genus-two count " + r.n2.to_string());
}

}  // namespace

BigInt Genus2Engine::cr_p2(int d) {
  const ConstraintProfile mu = plane_profile(d);
  const auto v = run_all({[&] { return pairings_.pair_v1(mu, 2, 0); },
                          [&] { return pairings_.pair_v1(mu, 1, 1); },
                          [&] { return pairings_.pair_v1(mu, 0, 2); },
                          [&] { return pairings_.pair_v2(mu, 0, 0, 0); }},
                         threads_);
  const Rational engine = Rational(78) * v[0] + Rational(72) * v[1] + Rational(22) * v[2] - Rational(18) * v[3];
  const BigInt closed = cr_p2_closed(d);
  if (engine != Rational(closed)) {
    throw ConsistencyError("P^2 correction: pairing route " + engine.to_string() + " vs closed form " +
                           closed.get_str());
  }
  return closed;
}

Genus2Report Genus2Engine::n2_p2(int d) {
  if (d < 1) throw ValidationError("degree must be positive");
  const ConstraintProfile mu = plane_profile(d);
  Genus2Report r{mu, {}, {}, {}, {}, {}};

  const auto v = run_all({[&] { return rt2(gw_, 2, d, mu.insertions()); },
                          [&] { return pairings_.pair_v1(mu, 2, 0); },
                          [&] { return pairings_.pair_v1(mu, 1, 1); },
                          [&] { return pairings_.pair_v1(mu, 0, 2); },
                          [&] { return pairings_.pair_v2(mu, 0, 0, 0); }},
                         threads_);
  const Rational& a2 = v[1];
  const Rational& ac = v[2];
  const Rational& c2 = v[3];
  const Rational& tau2 = v[4];
  r.rt = v[0];
  r.cr = Rational(cr_p2(d));

  const Rational s1 = Rational(3) * a2 + Rational(3) * ac + c2 - tau2;
  const Rational n11 = Rational(12) * a2 + Rational(6) * ac;
  const Rational n12 = Rational(2) * s1;
  const Rational n13 = s1;
  const Rational n21 = Rational(4) * tau2;
  const Rational assembled = n11 + Rational(2) * n12 + Rational(18) * n13 + n21;
  if (assembled != r.cr) {
    throw ConsistencyError("P^2 correction: component sum " + assembled.to_string() + " vs " + r.cr.to_string());
  }

  r.intermediates = {{"n_d", Rational(plane_count(d))},
                     {"tau2", tau2},
                     {"V1<a^2>", a2},
                     {"V1<a c>", ac},
                     {"V1<c^2>", c2},
                     {"|S1|", s1},
                     {"n1^(1)", n11},
                     {"n1^(2)", n12},
                     {"n1^(3)", n13},
                     {"n2^(1)", n21}};
  finalize(r);
  if (r.n2 != Rational(n2_p2_closed(d))) {
    throw ConsistencyError("P^2 genus-two count: pipeline " + r.n2.to_string() + " vs closed form");
  }
  return r;
}

Genus2Report Genus2Engine::n2_p3(const ConstraintProfile& mu) {
  if (mu.ambient != 3) throw ValidationError("expected a P^3 profile");
  mu.validate_genus2();
  Genus2Report r{mu, {}, {}, {}, {}, {}};
  Pairings& p = pairings_;

  const std::vector<std::function<Rational()>> tasks = {
      [&] { return rt2(gw_, 3, mu.degree, mu.insertions()); },
      [&] { return p.pair_v1(mu, 3, 1); },
      [&] { return p.pair_v1(mu, 2, 2); },
      [&] { return p.pair_v1(mu, 1, 3); },
      [&] { return p.pair_v1(mu, 0, 4); },
      [&] { return p.pair_v2(mu, 2, 0, 0); },
      [&] { return p.pair_v2(mu, 1, 1, 0); },
      [&] { return p.pair_v2(mu, 1, 0, 1); },
      [&] { return p.pair_v2(mu, 0, 2, 0); },
      [&] { return p.pair_v2(mu, 0, 0, 2); },
      [&] { return p.pair_v2(mu, 0, 1, 1); },
      [&] { return tau3(gw_, mu); },
      [&] { return tau2_on_line(gw_, mu); },
  };
  const auto v = run_all(tasks, threads_);
  const Rational &v31 = v[1], &v22 = v[2], &v13 = v[3], &v04 = v[4];
  const Rational &w200 = v[5], &w110 = v[6], &w101 = v[7], &w020 = v[8], &w002 = v[9], &w011 = v[10];
  const Rational &t3 = v[11], &t22 = v[12];
  if (w200 != t22) throw ConsistencyError("<a^2, V2> differs from tau_2^(2)");
  r.rt = v[0];

  const Rational half_cr = Rational(480) * v31 + Rational(476) * v22 + Rational(240) * v13 + Rational(49) * v04 -
                           (Rational(144) * (w110 + w101) + Rational(27) * (w020 + w002) + Rational(25) * w011) -
                           Rational(324) * t22 + Rational(36) * t3;
  r.cr = Rational(2) * half_cr;

  const Rational a_s1 = Rational(6) * v31 + Rational(4) * v22 + v13 - (Rational(4) * w200 + w110 + w101);
  const Rational c_s1 = Rational(4) * v31 + Rational(6) * v22 + Rational(4) * v13 + v04 - t3;
  const Rational s2 = Rational(6) * w200 + Rational(4) * (w110 + w101) + (w020 + w002) + w011 - Rational(3) * t3;
  const Rational n11 = Rational(4) * (Rational(10) * v31 + Rational(3) * v22) - Rational(12) * t22;
  const Rational n12 = Rational(4) * (Rational(2) * a_s1 + c_s1) - Rational(2) * s2;
  const Rational n13 = Rational(4) * a_s1 + Rational(5) * c_s1 - Rational(3) * s2;
  const Rational n21 = Rational(4) * (Rational(10) * w200 + Rational(4) * (w110 + w101) + w011);
  const Rational n22 = Rational(2) * s2;
  const Rational n31 = Rational(8) * t3;
  const Rational assembled =
      n11 + Rational(2) * n12 + Rational(18) * n13 + n21 + Rational(2) * n22 + n31;
  if (assembled != r.cr) {
    r.warnings.push_back("component sum " + assembled.to_string() + " differs from CR " + r.cr.to_string());
  }

  r.intermediates = {{"tau3", t3},
                     {"tau2^(2)", t22},
                     {"V1<a^3 c>", v31},
                     {"V1<a^2 c^2>", v22},
                     {"V1<a c^3>", v13},
                     {"V1<c^4>", v04},
                     {"V2<a c1>", w110},
                     {"V2<a c2>", w101},
                     {"V2<c1^2>", w020},
                     {"V2<c2^2>", w002},
                     {"V2<c1 c2>", w011},
                     {"S1<a>", a_s1},
                     {"S1<c>", c_s1},
                     {"|S2|", s2},
                     {"n1^(1)", n11},
                     {"n1^(2)", n12},
                     {"n1^(3)", n13},
                     {"n2^(1)", n21},
                     {"n2^(2)", n22},
                     {"n3^(1)", n31},
                     {"CR(components)", assembled}};
  finalize(r);
  return r;
}

}  // namespace g2

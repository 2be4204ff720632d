// Acceptance checks: one PASS/FAIL line per criterion, exact comparisons.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "g2/chern.hpp"
#include "g2/cohomology.hpp"
#include "g2/genus_two.hpp"
#include "g2/node_counts.hpp"
#include "g2/ruan_tian.hpp"
#include "oracles.hpp"

using namespace g2;

namespace {

struct Check {
  std::ostringstream notes;
  bool ok = true;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << " [" << what << "]";
    }
  }
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      ok = false;
      notes << " [" << what << ": got " << got << ", want " << want << "]";
    }
  }
};

Rational big(const char* digits) { return Rational(BigInt(digits)); }

int run_criterion(int id, const std::string& title, const std::function<void(Check&)>& body) {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.notes << " [exception: " << e.what() << "]";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (c.ok ? "PASS" : "FAIL") << "  " << id << ". " << title << "  (" << secs << " s)" << c.notes.str()
            << '\n';
  return c.ok ? 0 : 1;
}

struct SpaceRow {
  int d, p, q;
  const char* rt;
  const char* cr;
  const char* n2;
};

}  // namespace

int main() {
  Genus2Engine engine;
  int failures = 0;

  failures += run_criterion(1, "P^2 genus-two table d=1..7", [&](Check& c) {
    const char* want[] = {"0", "0", "0", "14400", "6350400", "3931128000", "3718909209600"};
    for (int d = 1; d <= 7; ++d) {
      c.equal(engine.n2_p2(d).n2, big(want[d - 1]), "n2 d=" + std::to_string(d));
      c.equal(Rational(n2_p2_closed(d)), big(want[d - 1]), "closed d=" + std::to_string(d));
    }
  });

  failures += run_criterion(2, "P^2 pipeline equals closed forms", [&](Check& c) {
    for (int d = 1; d <= 7; ++d) {
      const auto r = engine.n2_p2(d);
      const std::string tag = " d=" + std::to_string(d);
      c.equal(r.rt, Rational(BigInt(oracle::rt2_p2(d))), "RT vs closed form" + tag);
      c.equal((r.rt - r.cr) / 2, Rational(n2_p2_closed(d)), "(RT-CR)/2 vs closed n2" + tag);
      c.equal(r.cr, Rational(cr_p2_closed(d)), "CR vs closed form" + tag);
    }
  });

  const std::vector<SpaceRow> rows = {
      {4, 6, 1, "7872", "7872", "0"},
      {4, 5, 3, "64960", "64960", "0"},
      {4, 4, 5, "548608", "548608", "0"},
      {4, 3, 7, "4906304", "4877504", "14400"},
      {4, 0, 13, "5130826752", "4998465792", "66180480"},
      {5, 5, 7, "290439680", "258287360", "16076160"},
  };
  std::map<std::tuple<int, int, int>, Genus2Report> reports;
  auto report = [&](int d, int p, int q) -> const Genus2Report& {
    auto key = std::tuple(d, p, q);
    auto it = reports.find(key);
    if (it == reports.end()) it = reports.emplace(key, engine.n2_p3({3, d, p, q})).first;
    return it->second;
  };
  auto tag = [](const SpaceRow& r) {
    return "d=" + std::to_string(r.d) + " (" + std::to_string(r.p) + "," + std::to_string(r.q) + ")";
  };

  failures += run_criterion(3, "P^3 RT anchors", [&](Check& c) {
    for (const auto& r : rows) c.equal(report(r.d, r.p, r.q).rt, big(r.rt), "RT " + tag(r));
  });

  failures += run_criterion(4, "P^3 CR anchors", [&](Check& c) {
    for (const auto& r : rows) {
      const auto& rep = report(r.d, r.p, r.q);
      c.equal(rep.cr, big(r.cr), "CR " + tag(r));
      c.equal(*rep.find("CR(components)"), rep.cr, "component CR " + tag(r));
    }
  });

  failures += run_criterion(5, "P^3 genus-two counts", [&](Check& c) {
    const std::vector<SpaceRow> counts = {
        {4, 3, 7, "", "", "14400"},         {4, 0, 13, "", "", "66180480"},      {5, 5, 7, "", "", "16076160"},
        {4, 2, 9, "", "", "307200"},        {4, 1, 11, "", "", "4748160"},       {5, 8, 1, "", "", "9600"},
        {5, 0, 17, "", "", "7494574433280"}, {6, 10, 1, "", "", "1301760"},
    };
    for (const auto& r : counts) c.equal(report(r.d, r.p, r.q).n2, big(r.n2), "n2 " + tag(r));
  });

  failures += run_criterion(6, "vanishing for planar configurations", [&](Check& c) {
    for (int d = 1; d <= 3; ++d) {
      for (int p = 0; 2 * p <= 4 * d - 3; ++p) {
        const SpaceRow r{d, p, 4 * d - 3 - 2 * p, "", "", ""};
        c.equal(report(r.d, r.p, r.q).n2, Rational(0), "P^3 " + tag(r));
      }
      c.equal(engine.n2_p2(d).n2, Rational(0), "P^2 d=" + std::to_string(d));
    }
    for (const auto& [p, q] : std::vector<std::pair<int, int>>{{6, 1}, {5, 3}, {4, 5}}) {
      c.equal(report(4, p, q).n2, Rational(0), "P^3 d=4 (" + std::to_string(p) + "," + std::to_string(q) + ")");
    }
  });

  failures += run_criterion(7, "genus-zero oracles and WDVV consistency", [&](Check& c) {
    const long plane[] = {1, 1, 12, 620, 87304};
    for (int d = 1; d <= 5; ++d) {
      c.equal(plane_count(d), BigInt(plane[d - 1]), "n_plane(" + std::to_string(d) + ")");
      c.equal(plane_count(d), oracle::n_d(d), "independent recursion d=" + std::to_string(d));
    }
    c.equal(space_count(engine.genus_zero(), 1, 0, 4), BigInt(2), "N_p3(1,0,4)");
    GenusZero other(Pivot::SmallestPartners);
    std::mt19937 rng(99);
    int tested = 0;
    for (int t = 0; t < 120; ++t) {
      const int d = std::uniform_int_distribution<int>(1, 3)(rng);
      const int p = std::uniform_int_distribution<int>(0, 2 * d)(rng);
      std::vector<int> ins(static_cast<std::size_t>(p), 3);
      ins.insert(ins.end(), static_cast<std::size_t>(4 * d - 2 * p), 2);
      ins.insert(ins.end(), static_cast<std::size_t>(std::uniform_int_distribution<int>(0, 2)(rng)), 1);
      std::shuffle(ins.begin(), ins.end(), rng);
      const Rational a = engine.genus_zero().invariant(3, d, ins);
      std::shuffle(ins.begin(), ins.end(), rng);
      c.equal(other.invariant(3, d, ins), a, "WDVV pivot disagreement");
      ++tested;
    }
    c.expect(tested >= 100, "fewer than 100 WDVV keys");
  });

  failures += run_criterion(8, "classical corroborations", [&](Check& c) {
    c.equal(engine.pairings().s1_count(plane_profile(3)), Rational(24), "cuspidal cubics");
    c.equal(tau2_p2(2), BigInt(3), "tau2_p2(2)");
    for (int q = 5; q >= 1; q -= 2) {
      c.equal(engine.pairings().s2_count({3, 2, (5 - q) / 2, q}), Rational(0), "s2_count d=2 q=" + std::to_string(q));
    }
  });

  failures += run_criterion(9, "property suites", [&](Check& c) {
    for (const auto& [key, r] : reports) {
      c.expect(r.rt.is_integer() && r.cr.is_integer() && r.n2.is_integer() && r.n2.sign() >= 0,
               "report integrality");
      c.expect(r.warnings.empty(), "report warnings");
    }
    for (int d = 1; d <= 7; ++d) {
      const auto mu = plane_profile(d);
      const mpq_class ac = oracle::v1_ac(d);
      const mpq_class cc = oracle::v1_cc(d);
      c.equal(engine.pairings().pair_v1(mu, 1, 1), Rational(ac.get_num(), ac.get_den()), "<ac,V1> d=" + std::to_string(d));
      c.equal(engine.pairings().pair_v1(mu, 0, 2), Rational(cc.get_num(), cc.get_den()), "<cc,V1> d=" + std::to_string(d));
    }
    for (int n : {2, 3}) {
      std::map<std::vector<int>, Rational> terms;
      for (const auto& t : diagonal(n, 3).terms) terms[t.exponents] = t.coeff;
      for (const auto& [e, coeff] : terms) {
        std::vector<int> perm = e;
        std::sort(perm.begin(), perm.end());
        do {
          c.expect(terms.count(perm) == 1 && terms[perm] == coeff, "diagonal symmetry");
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
    }
    for (int d = 1; d <= 4; ++d) {
      for (int p = 0; 2 * p <= 4 * d; ++p) {
        std::vector<int> ins(static_cast<std::size_t>(p), 3);
        ins.insert(ins.end(), static_cast<std::size_t>(4 * d - 2 * p), 2);
        const Rational base = engine.genus_zero().invariant(3, d, ins);
        ins.push_back(1);
        c.equal(engine.genus_zero().invariant(3, d, ins), Rational(d) * base, "divisor axiom");
      }
    }
    const auto stats = engine.pairings().stats();
    c.expect(stats.evaluations > 0 && stats.max_depth <= 4, "reduction depth bound");
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}

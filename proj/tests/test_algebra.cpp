#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "g2/cohomology.hpp"
#include "g2/errors.hpp"
#include "g2/rational.hpp"

using namespace g2;

TEST_SUITE("algebra") {
  TEST_CASE("binomial values") {
    CHECK(binomial(10, 2) == 45);
    CHECK(binomial(10, 5) == 252);
    CHECK(binomial(7, 8) == 0);
    CHECK(binomial(7, -1) == 0);
    CHECK(binomial(0, 0) == 1);
  }

  TEST_CASE("rational canonical form and parsing") {
    const Rational r(BigInt(6), BigInt(-4));
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(r.to_string() == "-3/2");
    CHECK(Rational::parse("-3/2") == r);
    CHECK(Rational::parse(r.to_string()) == r);
    CHECK(Rational::parse("12").is_integer());
    CHECK_THROWS_AS(Rational::parse("1/0"), ValidationError);
    CHECK_THROWS_AS(Rational::parse("x"), ValidationError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), ValidationError);
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(2)).to_integer(), ConsistencyError);
    CHECK(group_digits(BigInt("3718909209600")) == "3,718,909,209,600");
    CHECK(group_digits(BigInt(-1000)) == "-1,000");
    CHECK(group_digits(BigInt(999)) == "999");
  }

  TEST_CASE("rational field axioms on random inputs") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> dist(-50, 50);
    auto draw = [&] {
      long den = 0;
      while (den == 0) den = dist(rng);
      return Rational(BigInt(dist(rng)), BigInt(den));
    };
    for (int t = 0; t < 500; ++t) {
      const Rational a = draw(), b = draw(), c = draw();
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + (-a) == Rational(0));
      CHECK(a * Rational(1) == a);
      if (!a.is_zero()) CHECK(a * (Rational(1) / a) == Rational(1));
      CHECK(Rational::parse(a.to_string()) == a);
    }
  }

  TEST_CASE("cup product") {
    CHECK(cup(CohClass::basis(2, 1), CohClass::basis(2, 1)) == CohClass::basis(2, 2));
    CHECK(cup(CohClass::basis(3, 2), CohClass::basis(3, 2)) == CohClass(3));
    CohClass x(3);
    x.set_coeff(1, 5);
    x.set_coeff(3, Rational(BigInt(-1), BigInt(2)));
    CHECK(cup(CohClass::basis(3, 0), x) == x);
    CHECK(cup(CohClass::basis(3, 1), x).coeff(2) == 5);
    CHECK_THROWS_AS(cup(CohClass::basis(2, 1), CohClass::basis(3, 1)), ValidationError);
    CHECK(CohClass::basis(3, 2).pure_exponent() == 2);
    CHECK_FALSE(x.pure_exponent().has_value());
    CHECK_THROWS_AS(CohClass(4), ValidationError);
  }

  TEST_CASE("two-point diagonal") {
    for (int n : {2, 3}) {
      const auto diag = diagonal(n, 2);
      REQUIRE(diag.terms.size() == static_cast<std::size_t>(n + 1));
      int pairings = 0;
      for (const auto& t : diag.terms) {
        CHECK(t.coeff == 1);
        CHECK(t.exponents[0] + t.exponents[1] == n);
        pairings += cup(CohClass::basis(n, t.exponents[0]), CohClass::basis(n, t.exponents[1])).integral() == 1;
      }
      CHECK(pairings == n + 1);
    }
  }

  TEST_CASE("three-point diagonal of P^2") {
    const auto diag = diagonal(2, 3);
    std::vector<std::vector<int>> got;
    for (const auto& t : diag.terms) {
      CHECK(t.coeff == 1);
      got.push_back(t.exponents);
    }
    std::vector<std::vector<int>> want = {{0, 2, 2}, {2, 0, 2}, {2, 2, 0}, {1, 1, 2}, {1, 2, 1}, {2, 1, 1}};
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
  }

  TEST_CASE("three-point diagonal is symmetric") {
    for (int n : {2, 3}) {
      const auto diag = diagonal(n, 3);
      std::map<std::vector<int>, Rational> terms;
      for (const auto& t : diag.terms) {
        int sum = 0;
        for (int e : t.exponents) {
          CHECK(e >= 0);
          CHECK(e <= n);
          sum += e;
        }
        CHECK(sum == 2 * n);
        terms[t.exponents] = t.coeff;
      }
      for (const auto& [e, c] : terms) {
        std::vector<int> perm = e;
        std::sort(perm.begin(), perm.end());
        do {
          REQUIRE(terms.count(perm) == 1);
          CHECK(terms[perm] == c);
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
    }
    CHECK_THROWS_AS(diagonal(3, 4), ValidationError);
  }

  TEST_CASE("labelled distributions") {
    ExponentMultiset m;
    m.add(3, 2);
    m.add(2, 3);
    BigInt total = 0;
    int visits = 0;
    for_each_distribution(m, [&](const ExponentMultiset& a, const ExponentMultiset& b, const BigInt& w) {
      CHECK(a.count(3) + b.count(3) == 2);
      CHECK(a.count(2) + b.count(2) == 3);
      CHECK(w == binomial(2, a.count(3)) * binomial(3, a.count(2)));
      total += w;
      ++visits;
    });
    CHECK(visits == 12);
    CHECK(total == 32);
  }

  TEST_CASE("constraint profiles") {
    CHECK(plane_profile(4).genus2_balanced());
    CHECK(ConstraintProfile{3, 4, 3, 7}.genus2_balanced());
    CHECK_FALSE(ConstraintProfile{3, 4, 3, 6}.genus2_balanced());
    CHECK_THROWS_WITH_AS(ConstraintProfile({3, 4, 3, 6}).validate_genus2(), "2p+q must equal 4d-3", ValidationError);
    CHECK_THROWS_AS(ConstraintProfile({2, 3, 7, 1}).validate_genus2(), ValidationError);
    const auto ins = ConstraintProfile{3, 4, 3, 7}.insertions();
    CHECK(ins.count(3) == 3);
    CHECK(ins.count(2) == 7);
    CHECK(ins.excess_codim() == 13);
  }
}

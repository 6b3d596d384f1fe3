#include <doctest.h>

#include <random>

#include "garside/abelian.hpp"
#include "garside/braid.hpp"
#include "garside/errors.hpp"
#include "garside/word.hpp"
#include "oracles.hpp"

using namespace garside;

namespace {

const auto B4 = make_braid_structure(4);

Element E(const char* w, const std::shared_ptr<const Structure>& S = B4) {
  return parse_element(w, S);
}

Rational R(long long p, long long q = 1) { return Rational(p, q); }

IntVector V(std::initializer_list<long long> xs) {
  IntVector v;
  for (long long x : xs) v.emplace_back(x);
  return v;
}

BigInt det2(const IntMatrix& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

AbelianPresentation P(std::vector<Element> gens,
                      const std::shared_ptr<const Structure>& S = B4) {
  return make_presentation(S, std::move(gens));
}

}  // namespace

TEST_SUITE("abelian") {
  TEST_CASE("dirichlet_approx examples") {
    DirichletApprox d = dirichlet_approx({R(1, 2)}, 2);
    CHECK(d.k == 2);
    CHECK(d.a == V({1}));
    d = dirichlet_approx({R(3), R(-2)}, 5);
    CHECK(d.k == 1);
    CHECK(d.a == V({3, -2}));
    d = dirichlet_approx({R(1, 3), R(2, 3)}, 3);
    CHECK(d.k == 3);
    CHECK(d.a == V({1, 2}));
    CHECK_THROWS_AS(dirichlet_approx({R(1, 2)}, 0), DomainError);
  }

  TEST_CASE("dirichlet_approx bounds on random input") {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<long long> num(-50, 50);
    std::uniform_int_distribution<long long> den(1, 30);
    std::uniform_int_distribution<int> dim(1, 3);
    std::uniform_int_distribution<int> mdist(1, 6);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Rational> x(static_cast<std::size_t>(dim(rng)));
      for (Rational& r : x) r = Rational(num(rng), den(rng));
      const BigInt M = mdist(rng);
      const DirichletApprox d = dirichlet_approx(x, M);
      CHECK(d.k >= 1);
      CHECK(d.k <= boost::multiprecision::pow(M, static_cast<unsigned>(x.size())));
      for (std::size_t i = 0; i < x.size(); ++i) {
        Rational err = Rational(d.k) * x[i] - Rational(d.a[i]);
        if (err < 0) err = -err;
        CHECK(err <= Rational(BigInt(1), M));
      }
    }
  }

  TEST_CASE("norm_constants") {
    NormConstants c = norm_constants(1, R(1), 6);
    CHECK(c.D1 == 144);
    CHECK(c.D2 == 1);
    c = norm_constants(2, R(1), 6);
    CHECK(c.D1 == 6912);
    CHECK(c.D2 == 2);
    c = norm_constants(1, R(1, 2), 6);
    CHECK(c.D1 == 72);
    CHECK(c.D2 == R(1, 2));
    CHECK_THROWS_AS(norm_constants(1, R(0), 6), DomainError);
    const ScanBounds b = scan_bounds(1, R(1, 2), 6);
    CHECK(b.M == 6);
    CHECK(b.D1 >= 72);
  }

  TEST_CASE("hnf_complement") {
    IntMatrix m = hnf_complement(V({1, -4}));
    CHECK(m[0] == V({1, -4}));
    CHECK(m[1] == V({0, 1}));
    CHECK(det2(m) == 1);
    m = hnf_complement(V({0, 1}));
    CHECK(m[0] == V({0, 1}));
    CHECK(m[1] == V({1, 0}));
    m = hnf_complement(V({3, -2}));
    CHECK(m[0] == V({3, -2}));
    CHECK((det2(m) == 1 || det2(m) == -1));
    m = hnf_complement(V({1}));
    CHECK(m == IntMatrix{V({1})});
    CHECK_THROWS_AS(hnf_complement(V({2, 4})), DomainError);
    CHECK_THROWS_AS(hnf_complement(V({0, 0})), DomainError);

    // Random primitive vectors: first row kept, integer inverse exists.
    std::mt19937_64 rng(30);
    std::uniform_int_distribution<long long> entry(-20, 20);
    for (int trial = 0; trial < 50; ++trial) {
      IntVector a = V({entry(rng), entry(rng), entry(rng)});
      BigInt g = 0;
      for (const BigInt& x : a) g = boost::multiprecision::gcd(g, x);
      if (g != 1) continue;
      m = hnf_complement(a);
      CHECK(m[0] == a);
      const BigInt det =
          m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
          m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
          m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
      CHECK((det == 1 || det == -1));
    }
  }

  TEST_CASE("integer_relation") {
    const Element g1 = E("s1 s2 s3");
    auto rel = integer_relation(P({delta_element(B4, 2), g1}));
    REQUIRE(rel);
    CHECK((*rel == V({1, -4}) || *rel == V({-1, 4})));
    CHECK_FALSE(integer_relation(P({E("s1")})));
    const auto Z = make_free_abelian_structure(2);
    rel = integer_relation(P({E("s1 s2", Z), E("s1", Z), E("s2", Z)}, Z));
    REQUIRE(rel);
    CHECK((*rel == V({1, -1, -1}) || *rel == V({-1, 1, 1})));
    rel = integer_relation(P({E("s1"), Element(B4)}));
    REQUIRE(rel);
    CHECK(*rel == V({0, 1}));
    CHECK_FALSE(integer_relation(P({E("s1"), E("s3")})));
    CHECK_THROWS_AS(P({E("s1"), E("s2")}), DomainError);
  }

  TEST_CASE("abelian_basis") {
    const Element g1 = E("s1 s2 s3");
    AbelianPresentation b = abelian_basis(P({delta_element(B4, 2), g1}));
    REQUIRE(b.generators.size() == 1);
    CHECK(b.generators[0] == g1);
    CHECK(b.expression == IntMatrix{V({0, 1})});
    CHECK(b.is_basis);

    b = abelian_basis(P({E("s1 s2^-1 s1")}));
    REQUIRE(b.generators.size() == 1);

    const auto Z = make_free_abelian_structure(2);
    b = abelian_basis(P({E("s1^2", Z), E("s1^3", Z)}, Z));
    REQUIRE(b.generators.size() == 1);
    CHECK(b.generators[0] == E("s1", Z));
    CHECK(evaluate(Z, {E("s1^2", Z), E("s1^3", Z)}, b.expression[0]) ==
          E("s1", Z));

    // Idempotence and equality of the generated subgroup.
    const AbelianPresentation p = P({E("s1^2"), E("s3^3"), E("s1^-1 s3")});
    b = abelian_basis(p);
    CHECK(b.generators.size() == 2);
    CHECK(abelian_basis(b).generators.size() == 2);
    CHECK(subgroups_equal(p, b));
    for (std::size_t i = 0; i < b.generators.size(); ++i) {
      CHECK(evaluate(B4, p.generators, b.expression[i]) == b.generators[i]);
    }
  }

  TEST_CASE("member") {
    const Element g1 = E("s1 s2 s3");
    auto m = member(delta_element(B4, 2), P({g1}));
    REQUIRE(m);
    CHECK(*m == V({4}));
    m = member(Element(B4), P({g1}));
    REQUIRE(m);
    CHECK(*m == V({0}));
    CHECK_FALSE(member(E("s1"), P({delta_element(B4, 2)})));
    // Exponents refer to the generators as given, even when redundant.
    m = member(multiply(g1, delta_element(B4, 2)), P({delta_element(B4, 2), g1}));
    REQUIRE(m);
    CHECK(evaluate(B4, {delta_element(B4, 2), g1}, *m) ==
          multiply(g1, delta_element(B4, 2)));
    // Random members of a rank-two subgroup re-verify.
    const std::vector<Element> gens{E("s1"), E("s3^-1")};
    std::mt19937_64 rng(33);
    std::uniform_int_distribution<long long> e(-4, 4);
    for (int trial = 0; trial < 10; ++trial) {
      const IntVector a = V({e(rng), e(rng)});
      const Element g = evaluate(B4, gens, a);
      m = member(g, P(gens));
      REQUIRE(m);
      CHECK(*m == a);
    }
    CHECK_FALSE(member(E("s2"), P(gens)));
  }

  TEST_CASE("conj_member") {
    const Element g1 = E("s1 s2 s3");
    const Element g2 = E("s3 s2 s1");
    auto c = conj_member(g2, P({g1}));
    REQUIRE(c);
    CHECK(c->exponents == V({1}));
    CHECK(conjugate(g2, c->conjugator) == g1);
    c = conj_member(Element(B4), P({g1}));
    REQUIRE(c);
    CHECK(c->exponents == V({0}));
    CHECK_FALSE(conj_member(E("s1"), P({delta_element(B4, 2)})));
    c = conj_member(E("s2^-2"), P({E("s1")}));
    REQUIRE(c);
    CHECK(c->exponents == V({-2}));
    CHECK(conjugate(E("s2^-2"), c->conjugator) == E("s1^-2"));
  }

  TEST_CASE("subgroups_equal") {
    const Element g1 = E("s1 s2 s3");
    CHECK(subgroups_equal(P({delta_element(B4, 2), g1}), P({g1})));
    CHECK(subgroups_equal(P({E("s1")}), P({E("s1")})));
    CHECK_FALSE(subgroups_equal(P({E("s1")}), P({E("s1^2")})));
    CHECK(subgroups_equal(P({E("s1"), E("s3")}), P({E("s1 s3"), E("s3")})));
  }

  TEST_CASE("subgroups_conjugate") {
    const Element g1 = E("s1 s2 s3");
    const Element g3 = E("s1 s3 s2");
    auto w = subgroups_conjugate(P({g1}), P({g3}));
    REQUIRE(w);
    CHECK(conjugate(g1, *w) == g3);
    CHECK_FALSE(subgroups_conjugate(P({E("s1")}), P({E("s1"), E("s3")})));
    CHECK_FALSE(subgroups_conjugate(P({E("s1")}), P({g1})));
    // ⟨σ₁⟩ and ⟨σ₂⁻¹⟩ are conjugate although σ₁ and σ₂⁻¹ are not.
    w = subgroups_conjugate(P({E("s1")}), P({E("s2^-1")}));
    REQUIRE(w);
    CHECK(conjugate(E("s1"), *w) == E("s2"));
    // Rank two in ℤ²: the same group under another basis.
    const auto Z = make_free_abelian_structure(2);
    w = subgroups_conjugate(P({E("s1", Z), E("s2", Z)}, Z),
                            P({E("s1 s2", Z), E("s2^-1", Z)}, Z));
    REQUIRE(w);
    CHECK(w->is_identity());
    // In B₄ the rank-two candidate scan is far beyond a small budget.
    SearchLimits tight;
    tight.max_steps = 100'000;
    CHECK_THROWS_AS(subgroups_conjugate(P({E("s1"), E("s3")}),
                                        P({E("s3"), E("s1 s3")}), tight),
                    BudgetExceeded);
  }
}

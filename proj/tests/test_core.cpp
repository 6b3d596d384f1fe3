#include <doctest.h>

#include <random>

#include "garside/braid.hpp"
#include "garside/errors.hpp"
#include "garside/word.hpp"
#include "oracles.hpp"

using namespace garside;

namespace {

const auto B4 = make_braid_structure(4);
const auto B3 = make_braid_structure(3);

Element E(const char* w, const std::shared_ptr<const Structure>& S = B4) {
  return parse_element(w, S);
}

}  // namespace

TEST_SUITE("core") {
  TEST_CASE("normalize: worked examples") {
    const Element d = E("s1 s2 s1 s3 s2 s1");
    CHECK(d.delta_power() == 1);
    CHECK(d.factors().empty());

    const Element one = E("");
    CHECK(one.is_identity());

    const Element x = E("s1 s1 s2 s1");
    CHECK(x.inf() == 0);
    CHECK(x.sup() == 2);
    REQUIRE(x.factors().size() == 2);
    CHECK(x.factors()[0] == E("s1 s2 s1").factors()[0]);
    CHECK(x.factors()[1] == E("s2").factors()[0]);
  }

  TEST_CASE("normalize: out-of-range atom") {
    const std::vector<int> w{1, 4};
    CHECK_THROWS_AS(normalize(B4, w), InputError);
  }

  TEST_CASE("normalize agrees with greedy prefix stripping on positive words") {
    const auto table = oracle::simple_table(4);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> atom(1, 3);
    std::uniform_int_distribution<int> len(0, 7);
    for (int trial = 0; trial < 150; ++trial) {
      oracle::Word w(static_cast<std::size_t>(len(rng)));
      for (int& a : w) a = atom(rng);
      const Element x = normalize(B4, w);
      std::vector<oracle::Word> expect = oracle::greedy_factors(table, w);
      // Leading Δ factors become the Δ-power.
      std::int64_t r = 0;
      while (!expect.empty() && expect.front().size() == 6) {
        expect.erase(expect.begin());
        ++r;
      }
      REQUIRE(x.delta_power() == r);
      REQUIRE(x.factors().size() == expect.size());
      for (std::size_t i = 0; i < expect.size(); ++i) {
        std::vector<int> got = B4->word(x.factors()[i]);
        for (int& a : got) ++a;
        CHECK(oracle::positive_equal(got, expect[i]));
      }
    }
  }

  TEST_CASE("multiply: worked examples") {
    const Element g1 = E("s1 s2 s3");
    const Element sq = multiply(g1, g1);
    CHECK(sq == E("s1 s2 s3 s1 s2 s3"));
    REQUIRE(sq.factors().size() == 2);
    CHECK(format_element(sq) == "s1 s2 s1 s3 s2 s3");
    CHECK(sq.factors()[0] == E("s1 s2 s3 s1 s2").factors()[0]);
    CHECK(sq.inf() == 0);

    const Element g3 = E("s1 s3 s2");
    CHECK(multiply(g3, g3) == delta_element(B4));
    CHECK(multiply(g1, inverse(g1)).is_identity());
  }

  TEST_CASE("inverse") {
    CHECK(inverse(delta_element(B4)) == delta_element(B4, -1));
    CHECK(inverse(Element(B4)).is_identity());
    const Element s1 = E("s1");
    const Element inv = inverse(s1);
    CHECK(inv.delta_power() == -1);
    CHECK(inv.factors().size() == 1);
    CHECK(multiply(s1, inv).is_identity());
    CHECK(multiply(inv, s1).is_identity());
  }

  TEST_CASE("equals") {
    CHECK(equals(E("s1 s3"), E("s3 s1")));
    const Element g1 = E("s1 s2 s3");
    CHECK(equals(power(g1, 4), delta_element(B4, 2)));
    CHECK_FALSE(equals(E("s1"), E("s2")));
    CHECK_THROWS_AS(equals(E("s1"), E("s1", B3)), StructureMismatch);
  }

  TEST_CASE("lattice: worked examples") {
    CHECK(left_meet(E("s1 s2"), E("s1 s3")) == E("s1"));
    CHECK(left_meet(E("s2 s1"), delta_element(B4)) == E("s2 s1"));
    CHECK(left_join(E("s1"), E("s2")) == E("s1 s2 s1"));
    CHECK(left_join(E("s1"), E("s3")) == E("s1 s3"));
    const Element x = E("s1 s2^-1 s3");
    CHECK(left_meet(x, x) == x);
    CHECK(left_join(x, x) == x);
  }

  TEST_CASE("lattice laws on random elements") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 120; ++trial) {
      const Element x = oracle::random_element(B4, rng, 3, 2);
      const Element y = oracle::random_element(B4, rng, 3, 2);
      const Element z = oracle::random_element(B4, rng, 2, 1);
      const Element m = left_meet(x, y);
      const Element j = left_join(x, y);
      CHECK(left_divides(m, x));
      CHECK(left_divides(m, y));
      CHECK(left_divides(x, j));
      CHECK(left_divides(y, j));
      CHECK(m == left_meet(y, x));
      CHECK(j == left_join(y, x));
      CHECK(left_meet(left_meet(x, y), z) == left_meet(x, left_meet(y, z)));
      CHECK(left_join(left_join(x, y), z) == left_join(x, left_join(y, z)));
      CHECK(left_meet(x, left_join(x, y)) == x);
      CHECK(left_join(x, left_meet(x, y)) == x);
      // Any common divisor of the form m·(simple) that still divides both
      // must be m itself.
      for (int a = 0; a < 3; ++a) {
        const Element up = multiply(m, from_simple(B4, B4->atom(a)));
        CHECK_FALSE((left_divides(up, x) && left_divides(up, y)));
      }
    }
  }

  TEST_CASE("tau") {
    CHECK(tau(E("s1"), 1) == E("s3"));
    CHECK(tau(delta_element(B4, 3), 1) == delta_element(B4, 3));
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
      const Element x = oracle::random_element(B4, rng, 4, 2);
      CHECK(tau(x, 2) == x);
      const Element d = delta_element(B4);
      CHECK(tau(x, 1) == multiply(multiply(inverse(d), x), d));
      CHECK(tau(x, -3) == tau(x, 1));
      const Invariants a = canonical_invariants(x);
      const Invariants b = canonical_invariants(tau(x, 1));
      CHECK(a.inf == b.inf);
      CHECK(a.sup == b.sup);
      CHECK(a.len == b.len);
    }
  }

  TEST_CASE("canonical_invariants") {
    const Element g1 = E("s1 s2 s3");
    Invariants i = canonical_invariants(multiply(g1, g1));
    CHECK(i.inf == 0);
    CHECK(i.sup == 2);
    CHECK(i.len == 2);
    i = canonical_invariants(delta_element(B4, 3));
    CHECK(i.inf == 3);
    CHECK(i.sup == 3);
    CHECK(i.len == 0);
    i = canonical_invariants(power(E("s1 s3 s2"), 2));
    CHECK(i.inf == 1);
    CHECK(i.sup == 1);
    CHECK(i.len == 0);
  }

  TEST_CASE("spell/normalize round trip and arithmetic keeps normal form") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
      const auto& S = trial % 2 ? B3 : B4;
      const std::vector<int> w =
          oracle::random_word(S->atom_count(), 1 + trial % 12, rng);
      const Element x = normalize(S, w);
      CHECK(satisfies_normal_form(x));
      CHECK(normalize(S, spell(x)) == x);
      const Element y = oracle::random_element(S, rng, 3, 2);
      CHECK(satisfies_normal_form(multiply(x, y)));
      CHECK(satisfies_normal_form(inverse(x)));
      CHECK(multiply(multiply(x, y), inverse(y)) == x);
      CHECK(normalize(S, spell(x)) == x);
      // Associativity with normalize: normalize(uv) = normalize(u)·normalize(v).
      const std::vector<int> v =
          oracle::random_word(S->atom_count(), 1 + trial % 5, rng);
      std::vector<int> uv = w;
      uv.insert(uv.end(), v.begin(), v.end());
      CHECK(normalize(S, uv) == multiply(x, normalize(S, v)));
      CHECK(reverse(reverse(x)) == x);
    }
  }

  TEST_CASE("word syntax") {
    CHECK(parse_word("s1 s2 s3", *B4) == std::vector<int>{1, 2, 3});
    CHECK(parse_word("s1^3", *B4) == std::vector<int>{1, 1, 1});
    const std::vector<int> dinv = parse_word("D^-1 s1", *B4);
    REQUIRE(dinv.size() == 7);
    CHECK(dinv.back() == 1);
    CHECK(normalize(B4, dinv) ==
          multiply(delta_element(B4, -1), E("s1")));
    CHECK(parse_word("", *B4).empty());

    try {
      parse_word("s1 x2", *B4);
      FAIL("expected an input error");
    } catch (const InputError& e) {
      CHECK(e.position() == 3);
    }
    try {
      parse_word("s1 s4", *B4);
      FAIL("expected an input error");
    } catch (const InputError& e) {
      CHECK(e.position() == 3);
    }
    CHECK_THROWS_AS(parse_word("s1^", *B4), InputError);
    CHECK_THROWS_AS(parse_word("s0", *B4), InputError);
    CHECK_THROWS_AS(parse_word("s1^99999999", *B4), InputError);

    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
      const Element x = oracle::random_element(B4, rng, 4, 3);
      CHECK(parse_element(format_element(x), B4) == x);
    }
  }

  TEST_CASE("canonical order is a strict total order") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 100; ++trial) {
      const Element x = oracle::random_element(B4, rng, 3, 1);
      const Element y = oracle::random_element(B4, rng, 3, 1);
      CHECK_FALSE(canonical_less(x, x));
      if (!(x == y)) CHECK(canonical_less(x, y) != canonical_less(y, x));
    }
  }
}

#include <doctest.h>

#include "garside/braid.hpp"
#include "garside/errors.hpp"
#include "garside/word.hpp"
#include "oracles.hpp"

using namespace garside;

namespace {

std::vector<int> one_based(std::vector<int> w) {
  for (int& a : w) ++a;
  return w;
}

}  // namespace

TEST_SUITE("braid") {
  TEST_CASE("is_simple") {
    const auto B4 = make_braid_structure(4);
    CHECK(is_simple(std::vector<int>{1, 2, 1}, *B4));
    CHECK_FALSE(is_simple(std::vector<int>{1, 1}, *B4));
    CHECK(is_simple(std::vector<int>{}, *B4));
    CHECK(is_simple(std::vector<int>{1, 2, 1, 3, 2, 1}, *B4));
    CHECK_FALSE(is_simple(std::vector<int>{1, 2, 1, 3, 2, 1, 1}, *B4));
    CHECK_THROWS_AS(is_simple(std::vector<int>{5}, *B4), InputError);
  }

  TEST_CASE("structure contract, exhaustively for n = 3, 4") {
    for (int n : {3, 4}) {
      CAPTURE(n);
      const auto S = make_braid_structure(n);
      const auto& B = static_cast<const BraidStructure&>(*S);
      const int L = n * (n - 1) / 2;
      CHECK(S->delta_length() == L);
      CHECK(static_cast<int>(S->delta_word().size()) == L);
      const auto table = oracle::simple_table(n);
      std::vector<Simple> all;
      for (const auto& p : table.perms) all.push_back(B.simple_from_permutation(p));

      for (std::size_t i = 0; i < all.size(); ++i) {
        const Simple& s = all[i];
        // Length is the inversion count and matches the independent word.
        CHECK(S->length(s) == static_cast<int>(table.words[i].size()));
        CHECK(S->length(s) + S->length(S->right_complement(s)) == L);
        CHECK(S->product(s, S->right_complement(s)) == S->delta());
        CHECK(S->product(S->left_complement(s), s) == S->delta());
        // Round trip through words.
        CHECK(S->simple_from_word(S->word(s)) == s);
        CHECK(oracle::positive_equal(one_based(S->word(s)), table.words[i]));
        CHECK(B.permutation_of_simple(s) == table.perms[i]);
        // τ is conjugation of the permutation by the reversal.
        std::vector<int> conj(n);
        for (int k = 0; k < n; ++k) conj[k] = n - 1 - table.perms[i][n - 1 - k];
        CHECK(B.permutation_of_simple(S->tau(s, 1)) == conj);
        CHECK(S->tau(S->tau(s, 1), 1) == s);
        CHECK(S->left_divides(S->identity(), s));
        CHECK(S->left_divides(s, S->delta()));
        // Atoms divide Δ, and their divisibility matches the word oracle.
        for (int a = 0; a < S->atom_count(); ++a) {
          CHECK(S->atom_left_divides(a, S->delta()));
          CHECK(oracle::prefix_divides(oracle::Word{a + 1},
                                       oracle::braid_class(table.words[i])) ==
                S->atom_left_divides(a, s));
        }
      }
    }
  }

  TEST_CASE("meet and join agree with exhaustive divisor search in B4") {
    const auto S = make_braid_structure(4);
    const auto& B = static_cast<const BraidStructure&>(*S);
    const auto table = oracle::simple_table(4);
    for (std::size_t i = 0; i < table.perms.size(); i += 1) {
      for (std::size_t j = 0; j < table.perms.size(); j += 3) {
        const Simple a = B.simple_from_permutation(table.perms[i]);
        const Simple b = B.simple_from_permutation(table.perms[j]);
        const oracle::Word m =
            oracle::simple_meet(table, table.words[i], table.words[j]);
        const oracle::Word u =
            oracle::simple_join(table, table.words[i], table.words[j]);
        CHECK(oracle::positive_equal(one_based(S->word(S->meet(a, b))), m));
        CHECK(oracle::positive_equal(one_based(S->word(S->join(a, b))), u));
      }
    }
  }

  TEST_CASE("simple examples") {
    const auto S = make_braid_structure(4);
    const auto& B = static_cast<const BraidStructure&>(*S);
    const Simple d = S->delta();
    const Simple s12 = *S->simple_from_word(std::vector<int>{0, 1});
    const Simple s13 = *S->simple_from_word(std::vector<int>{0, 2});
    CHECK(S->meet(d, s12) == s12);
    CHECK(S->meet(s12, s13) == S->atom(0));
    CHECK(S->right_complement(S->identity()) == d);
    CHECK(S->is_identity(S->right_complement(d)));
    const Simple c = S->right_complement(S->atom(0));
    CHECK(S->length(c) == 5);
    CHECK(S->product(S->atom(0), c) == d);
    CHECK(B.permutation_of_simple(d) == std::vector<int>{3, 2, 1, 0});
    CHECK(B.permutation_of_simple(S->atom(0)) == std::vector<int>{1, 0, 2, 3});
    CHECK(B.permutation_of_simple(S->identity()) ==
          std::vector<int>{0, 1, 2, 3});
    CHECK_THROWS_AS(B.simple_from_permutation({0, 1, 2}), InputError);
    CHECK_THROWS_AS(B.simple_from_permutation({0, 1, 1, 2}), InputError);
  }

  TEST_CASE("free abelian structure") {
    const auto Z = make_free_abelian_structure(3);
    const Simple a = Z->atom(0);
    const Simple ab = Z->product(Z->atom(0), Z->atom(1));
    CHECK(Z->meet(a, ab) == a);
    CHECK(Z->join(a, Z->atom(1)) == ab);
    CHECK(Z->right_complement(ab) == Z->atom(2));
    CHECK(Z->tau(ab, 1) == ab);
    CHECK(Z->delta_length() == 3);
    // Boolean lattice, exhaustively.
    std::vector<Simple> all;
    for (int mask = 0; mask < 8; ++mask) {
      std::vector<int> w;
      for (int k = 0; k < 3; ++k)
        if (mask >> k & 1) w.push_back(k);
      all.push_back(*Z->simple_from_word(w));
    }
    for (int x = 0; x < 8; ++x) {
      for (int y = 0; y < 8; ++y) {
        CHECK(Z->meet(all[x], all[y]) == all[x & y]);
        CHECK(Z->join(all[x], all[y]) == all[x | y]);
      }
    }
    const Element e = parse_element("s1 s2 s1^-1", Z);
    CHECK(e == parse_element("s2", Z));
  }

  TEST_CASE("selectors and limits") {
    CHECK(make_structure("braid:5")->atom_count() == 4);
    CHECK(make_structure("zn:2")->atom_count() == 2);
    CHECK_THROWS_AS(make_structure("braid:1"), InputError);
    CHECK_THROWS_AS(make_structure("braid:x"), InputError);
    CHECK_THROWS_AS(make_structure("free:3"), InputError);
    CHECK_THROWS_AS(make_structure("braid:17"), InputError);
    StructureOptions big;
    big.max_strands = 20;
    CHECK(make_structure("braid:17", big)->atom_count() == 16);
  }
}

#include <doctest.h>

#include <random>

#include "../support/oracles.hpp"
#include "clusterbench/coxeter.hpp"
#include "clusterbench/error.hpp"

using namespace clusterbench;

namespace {

oracle::Perm perm_of(const WeylGroupElement& w) {
  auto p = type_a_permutation(w);
  for (int& x : p) --x;
  return p;
}

}  // namespace

TEST_SUITE("coxeter") {
  TEST_CASE("diagrams") {
    auto a4 = DynkinDiagram::parse("A4");
    CHECK(a4.rank() == 4);
    CHECK(a4.label() == "A4");
    CHECK(a4.adjacent(2, 3));
    CHECK_FALSE(a4.adjacent(1, 3));
    CHECK(a4.edges().size() == 3);
    CHECK(a4.cartan(1, 1) == 2);
    CHECK(a4.cartan(1, 2) == -1);
    auto d4 = DynkinDiagram::parse("D4");
    CHECK(d4.neighbours(2).size() == 3);
    CHECK_THROWS_AS(DynkinDiagram::parse("D3"), DomainError);
    CHECK_THROWS_AS(DynkinDiagram::parse("E9"), DomainError);
    CHECK_THROWS_AS(DynkinDiagram::parse("B2"), DomainError);
    CHECK_THROWS_AS(DynkinDiagram::parse("A0"), DomainError);
  }

  TEST_CASE("positive roots and longest elements") {
    struct Case {
      const char* type;
      std::size_t roots;
    };
    for (auto c : {Case{"A1", 1}, Case{"A3", 6}, Case{"A4", 10}, Case{"D4", 12}, Case{"D5", 20}, Case{"E6", 36},
                   Case{"E7", 63}, Case{"E8", 120}}) {
      auto d = DynkinDiagram::parse(c.type);
      CHECK(d.positive_roots().size() == c.roots);
      CHECK(static_cast<std::size_t>(longest_element(d).length()) == c.roots);
    }
  }

  TEST_CASE("words") {
    CHECK(parse_word("").empty());
    CHECK(parse_word("1, 2,3") == ReducedWord{1, 2, 3});
    CHECK(format_word({1, 2, 1}) == "1,2,1");
    CHECK(format_word({}) == "");
    CHECK_THROWS_AS(parse_word("1,,2"), ParseError);
    CHECK_THROWS_AS(parse_word("a"), ParseError);
    auto a2 = DynkinDiagram::parse("A2");
    CHECK(is_reduced(a2, {1, 2, 1}));
    CHECK_FALSE(is_reduced(a2, {1, 1}));
    CHECK_FALSE(is_reduced(a2, {1, 2, 1, 2}));
    CHECK_THROWS_AS(weyl_element(a2, {3}), DomainError);
  }

  TEST_CASE("permutation model matches the symmetric group") {
    std::mt19937_64 rng(7);
    for (int n : {1, 2, 3, 4, 5}) {
      auto d = DynkinDiagram('A', n);
      std::uniform_int_distribution<int> letter(1, n);
      for (int trial = 0; trial < 60; ++trial) {
        ReducedWord word;
        for (int i = 0; i < trial % 12; ++i) word.push_back(letter(rng));
        auto w = weyl_element(d, word);
        auto p = oracle::word_perm(n + 1, word);
        CHECK(perm_of(w) == p);
        CHECK(w.length() == oracle::inversions(p));
        CHECK(perm_of(w.inverse()) == oracle::inverse(p));
        CHECK(weyl_element(d, w.reduced_word()) == w);
        CHECK(static_cast<int>(w.reduced_word().size()) == w.length());
        CHECK(is_reduced(d, word) == (static_cast<int>(word.size()) == oracle::inversions(p)));
      }
    }
  }

  TEST_CASE("products compose as linear maps") {
    auto d = DynkinDiagram('A', 3);
    auto u = weyl_element(d, {1, 2}), v = weyl_element(d, {3, 2, 1});
    CHECK(perm_of(u * v) == oracle::compose(perm_of(u), perm_of(v)));
    CHECK(u * u.inverse() == WeylGroupElement::identity(d));
  }

  TEST_CASE("Bruhat and weak order against permutation criteria") {
    for (int n : {2, 3}) {
      auto d = DynkinDiagram('A', n);
      auto all = all_elements(d);
      CHECK(all.size() == (n == 2 ? 6u : 24u));
      for (const auto& v : all)
        for (const auto& w : all) {
          CHECK(bruhat_leq(v, w) == oracle::bruhat_leq(perm_of(v), perm_of(w)));
          CHECK(weak_right_leq(v, w) == oracle::weak_right_leq(perm_of(v), perm_of(w)));
        }
    }
  }

  TEST_CASE("reduced words of the longest element") {
    for (int n : {2, 3}) {
      auto d = DynkinDiagram('A', n);
      auto w0 = longest_element(d);
      auto words = enumerate_reduced_words(w0);
      std::vector<std::vector<int>> expected;
      std::vector<int> prefix;
      oracle::reduced_words(perm_of(w0), prefix, expected);
      std::sort(expected.begin(), expected.end());
      CHECK(words == expected);
      CHECK(words.size() == (n == 2 ? 2u : 16u));
    }
  }

  TEST_CASE("Richardson dimensions") {
    auto a1 = DynkinDiagram::parse("A1");
    auto e = WeylGroupElement::identity(a1), s = WeylGroupElement::simple_reflection(a1, 1);
    CHECK(richardson_dim(e, e) == 0);
    CHECK(richardson_dim(e, s) == 1);
    CHECK(richardson_dim(s, s) == 0);
    CHECK_THROWS_WITH_AS(richardson_dim(s, e), doctest::Contains("empty Richardson variety"), DomainError);
    auto a3 = DynkinDiagram::parse("A3");
    CHECK(richardson_dim(weyl_element(a3, {2}), longest_element(a3)) == 5);
  }
}

// Acceptance suite: one PASS/FAIL line per criterion, each timed against
// its limit. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"
#include "clusterbench/error.hpp"
#include "clusterbench/expression.hpp"
#include "clusterbench/flag_minors.hpp"
#include "clusterbench/framed.hpp"
#include "clusterbench/seed.hpp"

using namespace clusterbench;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << "first failure: " << what << "; ";
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(const std::string& name, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail << "exception: " << e.what() << "; ";
  }
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool in_time = elapsed < limit_seconds;
  bool pass = o.ok && in_time;
  if (!pass) ++failures;
  std::cout << (pass ? "PASS " : "FAIL ") << name << " [" << std::fixed << std::setprecision(3) << elapsed
            << " s, limit " << std::setprecision(0) << limit_seconds << " s]";
  if (!in_time) std::cout << " time limit exceeded;";
  std::string d = o.detail.str();
  if (!d.empty()) std::cout << " " << d;
  std::cout << std::endl;
}

oracle::Matrix dense(const IceQuiver& q) {
  oracle::Matrix m(q.size(), std::vector<int>(q.size()));
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) m[i][j] = q.b(i, j);
  return m;
}

std::vector<Rational> test_point(std::size_t n) {
  // Unrelated primes, so distinct cluster variables take distinct values.
  static const long primes[] = {7, 11, 13, 5, 29, 17, 37, 19, 43, 31, 53, 47, 61, 59, 71, 67, 79, 73, 89, 83, 97, 101};
  std::vector<Rational> p;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t k = (2 * i) % 22;
    p.emplace_back(primes[k] + 101 * static_cast<long>(i / 11), primes[k + 1]);
    p.back().canonicalize();
  }
  return p;
}

IceQuiver a2() { return IceQuiver::from_arrows(2, {}, {{0, 1, 1}}); }
IceQuiver a3() { return IceQuiver::from_arrows(3, {}, {{0, 1, 1}, {1, 2, 1}}); }
IceQuiver a3_with_frozen_end() { return IceQuiver::from_arrows(4, {3}, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}}); }

std::vector<bool> negative_exponents_allowed(const IceQuiver& q) {
  std::vector<bool> allow(q.size());
  for (std::size_t v = 0; v < q.size(); ++v) allow[v] = !q.is_frozen(v);
  return allow;
}

}  // namespace

int main() {
  const auto a4 = DynkinDiagram::parse("A4");
  const ReducedWord richardson_word{1, 2, 3, 1, 2, 4, 3};
  const ReducedWord w0_word{1, 2, 3, 4, 1, 2, 3, 1, 2, 1};

  criterion("word quivers match both drawn A4 fixtures", 1, [&](Outcome& o) {
    auto q = gls_quiver(a4, richardson_word);
    o.require(q.size() == 7, "7 vertices");
    o.require(q.frozen_vertices() == std::vector<std::size_t>{3, 4, 5, 6}, "frozen {4,5,6,7}");
    o.require(q.arrow_count() == 11, "11 arrows");
    o.require(quiver_isomorphic(q, fixtures::drawn_richardson_quiver()).has_value(), "isomorphic to drawing");
    auto q0 = gls_quiver(a4, w0_word);
    o.require(q0.size() == 10, "10 vertices");
    o.require(q0.frozen_vertices().size() == 4, "4 frozen");
    o.require(q0.arrow_count() == 18, "18 arrows");
    o.require(quiver_isomorphic(q0, fixtures::drawn_w0_quiver()).has_value(), "isomorphic to drawing");
  });

  criterion("mutation involution and rank invariance on 1000 random ice quivers (n <= 8, |b| <= 3)", 10,
            [&](Outcome& o) {
              std::mt19937_64 rng(1000);
              std::size_t failed = 0, steps = 0, overflowed = 0;
              for (int trial = 0; trial < 1000; ++trial) {
                auto q = fixtures::random_ice_quiver(rng, 8, 3);
                int r = exchange_rank(q);
                if (r != oracle::rank(dense(q), q.mutable_vertices())) ++failed;
                for (std::size_t k : q.mutable_vertices()) {
                  auto m = mutate(q, k);
                  if (mutate(m, k) != q || dense(m) != oracle::mutate(dense(q), k)) ++failed;
                  if (exchange_rank(m) != r) ++failed;
                }
                // Wild quivers outgrow int entries quickly; a sequence stops
                // at the first step that would overflow.
                IceQuiver cur = q;
                for (std::size_t k : fixtures::random_sequence(rng, q, 15)) {
                  try {
                    cur = mutate(cur, k);
                  } catch (const DomainError&) {
                    ++overflowed;
                    break;
                  }
                  ++steps;
                  if (exchange_rank(cur) != r) ++failed;
                }
              }
              o.detail << failed << " failures; " << steps << " sequence steps checked; " << overflowed
                       << " sequences stopped at int overflow; ";
              o.require(failed == 0, "zero failures");
            });

  criterion("finite-type closure: A2 5 seeds / 5 variables, linear A3 14 seeds / 9 variables", 30, [&](Outcome& o) {
    struct Case {
      const char* name;
      IceQuiver q;
      std::size_t seeds, variables;
    };
    for (const auto& c : {Case{"A2", a2(), 5, 5}, Case{"A3", a3(), 14, 9}}) {
      auto r = closure(initial_seed(c.q), 10000);
      auto n = oracle::numeric_closure(dense(c.q), c.q.frozen_flags(), test_point(c.q.size()), 10000);
      o.detail << c.name << ": " << r.seeds.size() << "/" << r.variables.size() << " (brute force "
               << n.seeds << "/" << n.variables.size() << "); ";
      o.require(r.seeds.size() == c.seeds && r.variables.size() == c.variables, std::string(c.name) + " counts");
      o.require(n.seeds == c.seeds && n.variables.size() == c.variables, std::string(c.name) + " brute force");
      std::set<Rational> values;
      for (const auto& v : r.variables) values.insert(v.evaluate(test_point(c.q.size())));
      o.require(values == n.variables, std::string(c.name) + " variable sets agree");
    }
  });

  criterion("Laurent phenomenon on 500 random sequences (length <= 12, <= 4 mutable vertices)", 300,
            [&](Outcome& o) {
              std::mt19937_64 rng(500);
              std::size_t variables = 0, bad = 0;
              for (int trial = 0; trial < 500; ++trial) {
                auto q = fixtures::random_tame_quiver(rng, 4, 2);
                auto seq = fixtures::random_sequence(rng, q, 12);
                Seed s = initial_seed(q);
                oracle::NumericSeed ns{dense(q), test_point(q.size())};
                for (std::size_t k : seq) {
                  s = mutate_seed(s, k);
                  ns = oracle::numeric_mutate(ns, k);
                  ++variables;
                  if (!s.cluster[k].denominator().is_monomial() || !is_laurent(s.cluster[k])) ++bad;
                  if (s.cluster[k].evaluate(test_point(q.size())) != ns.x[k]) ++bad;
                }
              }
              o.detail << variables << " variables checked, " << bad << " failures; ";
              o.require(bad == 0, "every variable Laurent");
            });

  criterion("starfish membership of A2/A3 closure variables; 1/(1+x1) rejected with a named ring", 60,
            [&](Outcome& o) {
              // Linear A3 without coefficients has a rank-2 exchange matrix, so the
              // starfish test runs on A3 with one frozen vertex attached (full rank);
              // the coefficient-free variables are its specializations.
              for (const auto& q : {a2(), a3_with_frozen_end()}) {
                auto c = closure(initial_seed(q), 1000);
                std::size_t members = 0;
                for (const auto& v : c.variables)
                  if (starfish_membership(q, v, AlgebraFlavor::non_invertible).member) ++members;
                o.detail << q.size() << "-vertex quiver: " << members << "/" << c.variables.size() << " members; ";
                o.require(members == c.variables.size(), "all closure variables are members");
              }
              bool hypothesis_error = false;
              try {
                starfish_membership(a3(), parse_expression("x1", 3), AlgebraFlavor::invertible);
              } catch (const StarfishHypothesisError&) {
                hypothesis_error = true;
              }
              o.require(hypothesis_error, "coefficient-free A3 reports the violated rank hypothesis");
              auto c3 = closure(initial_seed(a3()), 1000);
              Seed t0 = initial_seed(a3());
              std::size_t star_laurent = 0;
              for (const auto& v : c3.variables) {
                bool all = in_laurent_ring(v, negative_exponents_allowed(a3()));
                for (std::size_t i = 0; i < 3; ++i) {
                  std::vector<RationalFunction> values = t0.cluster;
                  values[i] = exchange_binomial(t0, i) / t0.cluster[i];
                  all = all && in_laurent_ring(substitute(v, std::span<const RationalFunction>(values)),
                                               negative_exponents_allowed(a3()));
                }
                if (all) ++star_laurent;
              }
              o.detail << "coefficient-free A3: " << star_laurent << "/" << c3.variables.size()
                       << " Laurent in t0 and all neighbours; ";
              o.require(star_laurent == c3.variables.size(), "coefficient-free A3 star expansions Laurent");
              auto v = starfish_membership(a2(), parse_expression("1/(1+x1)", 2), AlgebraFlavor::invertible);
              o.require(!v.member && !v.failing_rings.empty() && v.failing_rings.front() == "L(t0)",
                        "1/(1+x1) fails in L(t0)");
              if (!v.failing_rings.empty()) o.detail << "1/(1+x1) fails in " << v.failing_rings.front() << "; ";
            });

  criterion("localization certificates on 1 -> 2 at k = 2", 1, [&](Outcome& o) {
    auto q = a2();
    auto f = parse_expression("(1+x2)/(x1*x2)", 2);
    auto d = localization_certificate(q, 1, f, 10);
    o.require(d == 1, "d = 1 for (1+x2)/(x1 x2)");
    o.require(starfish_membership(q, f * parse_expression("x2", 2), AlgebraFlavor::invertible).member,
              "f x2 is a member");
    o.require(!starfish_membership(q, f, AlgebraFlavor::invertible).member, "f itself is not (minimality)");
    auto c = closure(initial_seed(q), 100);
    for (const auto& v : c.variables) o.require(localization_certificate(q, 1, v, 10) == 0, "d = 0 for members");
    o.detail << "d = " << (d ? std::to_string(*d) : "none") << "; ";
  });

  criterion("specialization commutes with mutation on 200 random triples", 120, [&](Outcome& o) {
    std::mt19937_64 rng(200);
    std::size_t bad = 0;
    for (int trial = 0; trial < 200; ++trial) {
      auto q = fixtures::random_tame_quiver(rng, 4, 2, 1);
      auto frozen = q.frozen_vertices();
      std::size_t f = frozen[std::uniform_int_distribution<std::size_t>(0, frozen.size() - 1)(rng)];
      auto seq = fixtures::random_sequence(rng, q, 10);
      auto a = specialize_frozen(mutate_seed_sequence(initial_seed(q), seq), f);
      auto b = mutate_seed_sequence(specialize_frozen(initial_seed(q), f), a.provenance);
      if (a.cluster != b.cluster || a.quiver != b.quiver) ++bad;
    }
    o.detail << bad << " mismatches; ";
    o.require(bad == 0, "exact equality");
  });

  criterion("reddening sequences for both fixtures and all freeze+delete reductions (depth 20)", 300,
            [&](Outcome& o) {
              for (const auto* word : {&richardson_word, &w0_word}) {
                auto q = gls_quiver(a4, *word);
                auto seq = find_reddening(q, 20);
                o.require(seq && is_reddening_sequence(q, *seq), "fixture reddening " + format_word(*word));
                o.detail << "length " << (seq ? std::to_string(seq->size()) : "none") << "; ";
              }
              auto q = gls_quiver(a4, richardson_word);
              std::size_t reductions = 0, found = 0;
              for (std::size_t v : q.mutable_vertices()) {
                auto frozen = freeze(q, v);
                for (std::size_t f : frozen.frozen_vertices()) {
                  ReductionScript s;
                  s.freezes = {v};
                  s.deletions = {f};
                  auto r = apply_reduction(q, s);
                  ++reductions;
                  auto seq = find_reddening(r, 20);
                  if (seq && is_reddening_sequence(r, *seq)) ++found;
                }
              }
              o.detail << found << "/" << reductions << " reductions; ";
              o.require(found == reductions, "every reduction still has a reddening sequence");
            });

  criterion("full rank for every reduced word of w0 in A2 (2 words) and A3 (16 words)", 10, [&](Outcome& o) {
    for (int n : {2, 3}) {
      auto d = DynkinDiagram('A', n);
      auto words = enumerate_reduced_words(longest_element(d));
      std::size_t full = 0;
      for (const auto& w : words)
        if (has_full_rank(gls_quiver(d, w))) ++full;
      o.detail << "A" << n << ": " << full << "/" << words.size() << "; ";
      o.require(words.size() == (n == 2 ? 2u : 16u), "word count");
      o.require(full == words.size(), "all full rank");
    }
  });

  criterion("minor identities: A2 word 1,2,1 symbolically, A4 longest word at 100 random matrices", 60,
            [&](Outcome& o) {
              auto a2d = DynkinDiagram::parse("A2");
              auto r = cn_seed_realization(a2d, {1, 2, 1});
              auto a = symbolic_minor(3, r.minors[0]);
              auto middle = symbolic_minor(3, r.minors[1]);
              auto b = symbolic_minor(3, r.minors[2]);
              // g12 = x1 = a, g13 = x2 = b, g23 = x3 = c
              auto c = Polynomial::variable(3, 2);
              o.require(a.to_string() == "x1" && b.to_string() == "x2" && middle.to_string() == "x1*x3 - x2",
                        "A2 minors are a, ac - b, b");
              o.require(a * c == middle + b, "a c = (a c - b) + b");
              auto report = verify_exchange_identities(a4, w0_word, 100, 100);
              std::size_t zero = 0;
              for (const auto& ch : report.checks)
                if (ch.holds && ch.trials == 100) ++zero;
              o.detail << "A4: " << zero << "/" << report.checks.size() << " relations exact at 100 samples ("
                       << to_string(report.realization.convention) << "); ";
              o.require(zero == report.checks.size() && !report.checks.empty(), "all A4 relations vanish");
            });

  criterion("Richardson dimensions: SL2 table and 20 random (type, word) pairs", 10, [&](Outcome& o) {
    auto a1 = DynkinDiagram::parse("A1");
    auto e = WeylGroupElement::identity(a1), s = WeylGroupElement::simple_reflection(a1, 1);
    o.require(richardson_dim(e, e) == 0 && richardson_dim(e, s) == 1 && richardson_dim(s, s) == 0,
              "SL2 table (0, 1, 0)");
    bool empty = false;
    try {
      richardson_dim(s, e);
    } catch (const DomainError&) {
      empty = true;
    }
    o.require(empty, "R_{s,e} is empty");
    std::mt19937_64 rng(20);
    const char* types[] = {"A1", "A2", "A3", "A4", "A5", "A6", "D4", "D5", "D6", "E6", "E7"};
    std::uniform_int_distribution<std::size_t> pick(0, std::size(types) - 1);
    std::size_t agree = 0;
    for (int trial = 0; trial < 20; ++trial) {
      auto d = DynkinDiagram::parse(types[pick(rng)]);
      std::uniform_int_distribution<int> letter(1, d.rank());
      std::uniform_int_distribution<int> target(0, std::min(longest_element(d).length(), 16));
      int len = target(rng);
      ReducedWord word;
      WeylGroupElement w = WeylGroupElement::identity(d);
      while (static_cast<int>(word.size()) < len) {
        int a = letter(rng);
        auto next = w * WeylGroupElement::simple_reflection(d, a);
        if (next.length() > w.length()) {
          w = next;
          word.push_back(a);
        }
      }
      auto q = gls_quiver(d, word);
      if (q.size() == static_cast<std::size_t>(w.length()) &&
          richardson_dim(WeylGroupElement::identity(d), w) == w.length())
        ++agree;
    }
    o.detail << agree << "/20 pairs; ";
    o.require(agree == 20, "vertex count = length = dimension");
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}

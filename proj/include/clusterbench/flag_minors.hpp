#pragma once

// Type A minors on the unipotent group N of upper unitriangular matrices:
// exact matrices, random sampling, flag and generalized minors, the minor
// realization of the initial seed of a reduced word, and checks of its
// exchange relations.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "clusterbench/coxeter.hpp"
#include "clusterbench/exact_algebra.hpp"

namespace clusterbench {

class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(std::size_t n) : n_(n), a_(n * n) {}
  static ExactMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  /// 0-based access.
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  bool is_unitriangular() const;
  std::string to_string() const;
  bool operator==(const ExactMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> a_;
};

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);

/// Upper unitriangular with entries p/q, p uniform in [-bound, bound], q in
/// [1, bound].
ExactMatrix random_unitriangular(std::size_t n, std::mt19937_64& rng, int bound = 9);

/// Row and column sets of a minor, 1-based and increasing.
struct MinorSpec {
  std::vector<int> rows;
  std::vector<int> cols;

  std::string to_string() const;
  bool operator==(const MinorSpec&) const = default;
};

Rational determinant(ExactMatrix m);
Rational flag_minor(const ExactMatrix& g, const MinorSpec& spec);

/// Rows u({1..i}), columns v({1..i}) under the permutation model of type A.
MinorSpec generalized_minor_sets(const WeylGroupElement& u, const WeylGroupElement& v, int i);

/// Variable index of the generic entry g_{ij} (1-based i < j) in the ring of
/// polynomial functions on N; entries are ordered (1,2), (1,3), ..., (1,n),
/// (2,3), ... so that for n = 3 the variables are g12, g13, g23.
std::size_t unitriangular_variable(std::size_t n, int i, int j);
std::size_t unitriangular_dimension(std::size_t n);
/// The minor as a polynomial in the generic entries.
Polynomial symbolic_minor(std::size_t n, const MinorSpec& spec);

enum class MinorConvention {
  /// rows {1..i}, columns w_{<=k}({1..i})
  rows_initial,
  /// columns {1..i}, rows w_{<=k}({1..i})
  columns_initial,
};

std::string to_string(MinorConvention c);

struct SeedRealization {
  MinorConvention convention;
  /// One minor per position of the word, i.e. per vertex of its quiver.
  std::vector<MinorSpec> minors;
};

/// Minor assigned to each position under a fixed convention.
std::vector<MinorSpec> seed_minors(const DynkinDiagram& d, const ReducedWord& word, MinorConvention c);

/// Picks the first convention whose exchange binomials are all divisible by
/// the exchanged minor in the polynomial ring of N. Throws DomainError
/// ("convention mismatch") when neither works.
SeedRealization cn_seed_realization(const DynkinDiagram& d, const ReducedWord& word);

struct ExchangeCheck {
  /// 0-based vertex.
  std::size_t vertex = 0;
  /// The relation in seed variables, e.g. "x1*x1' = x2 + x3".
  std::string relation;
  /// The mutated variable x_k' as a polynomial on N.
  Polynomial mutated;
  std::size_t trials = 0;
  bool holds = true;
  std::optional<ExactMatrix> counterexample;
  Rational residual;
};

struct ExchangeReport {
  SeedRealization realization;
  std::vector<ExchangeCheck> checks;
  bool all_zero() const;
};

/// Evaluates x_k * x_k' - (M1 + M2) at `trials` random unitriangular
/// matrices for every mutable vertex k. Minors are evaluated numerically and
/// x_k' from its polynomial expression. Matrices are drawn from one stream
/// seeded with `seed` before evaluation, so the outcome does not depend on
/// `jobs`.
ExchangeReport verify_exchange_identities(const DynkinDiagram& d, const ReducedWord& word, std::size_t trials,
                                          std::uint64_t seed = 0, std::size_t jobs = 1);

/// prod_i Delta_{v^{-1}(w_i), w^{-1}(w_i)}(g) over the fundamental weights.
Rational richardson_denominator(const WeylGroupElement& v, const WeylGroupElement& w, const ExactMatrix& g);

}  // namespace clusterbench

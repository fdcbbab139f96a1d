#pragma once

// Seeds, exchange relations, finite-type closure, starfish membership in the
// upper cluster algebra, localization certificates and specialization of
// frozen variables.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clusterbench/exact_algebra.hpp"
#include "clusterbench/quiver.hpp"

namespace clusterbench {

/// An ice quiver with one cluster variable per vertex, expressed in the
/// initial variables x1..xn of the seed it was mutated from.
struct Seed {
  IceQuiver quiver;
  std::vector<RationalFunction> cluster;
  /// Mutation path from the initial seed.
  std::vector<std::size_t> provenance;

  std::size_t size() const { return quiver.size(); }
  bool operator==(const Seed&) const = default;
};

/// Coefficient convention: `non_invertible` is A+/U+ (frozen variables may
/// only appear with nonnegative exponents), `invertible` is A/U.
enum class AlgebraFlavor { non_invertible, invertible };

Seed initial_seed(const IceQuiver& q);

/// prod_i x_i^{[b_ik]+} + prod_i x_i^{[-b_ik]+} over all vertices.
RationalFunction exchange_binomial(const Seed& s, std::size_t k);
/// Throws FrozenVertexError at a frozen vertex.
Seed mutate_seed(const Seed& s, std::size_t k);
Seed mutate_seed_sequence(Seed s, const std::vector<std::size_t>& sequence);

/// Identifies seeds up to simultaneous relabeling of mutable vertices.
std::string seed_key(const Seed& s);

struct ClosureResult {
  std::vector<Seed> seeds;
  /// Distinct cluster variables seen at mutable positions, in discovery order.
  std::vector<RationalFunction> variables;
  std::vector<RationalFunction> frozen_variables;
  /// Undirected exchange-graph edges (i < j) between indices into `seeds`.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Breadth-first closure under mutation (lowest vertex first). Throws
/// DomainError when more than max_seeds seeds appear.
ClosureResult closure(const Seed& s, std::size_t max_seeds);

struct MembershipVerdict {
  bool member = false;
  /// Names of the checked Laurent rings: "L(t0)", "L(mu_2(t0))", ...
  std::vector<std::string> rings;
  /// f re-expressed in each checked cluster, aligned with `rings`.
  std::vector<RationalFunction> expansions;
  std::vector<std::string> failing_rings;
};

/// Name of the Laurent ring of t0 (k = nullopt) or of mu_k(t0).
std::string laurent_ring_name(std::optional<std::size_t> k);

/// True when f is a Laurent polynomial whose exponents are nonnegative at
/// every vertex v with allow_negative[v] false.
bool in_laurent_ring(const RationalFunction& f, const std::vector<bool>& allow_negative);

/// Tests f against L(t0) and L(mu_i(t0)) for every mutable i. Requires a
/// full-rank exchange matrix and throws StarfishHypothesisError otherwise.
/// `extra_invertible` marks additional frozen vertices whose variables may
/// appear with negative exponents.
MembershipVerdict starfish_membership(const IceQuiver& q, const RationalFunction& f, AlgebraFlavor flavor,
                                      const std::vector<std::size_t>& extra_invertible = {});

/// Smallest d <= d_max with f * x_k^d in U(q), given that f lies in the
/// upper cluster algebra of freeze(q, k) (checked; x_k counts as invertible
/// there). Throws DomainError naming the failing Laurent ring otherwise.
std::optional<int> localization_certificate(const IceQuiver& q, std::size_t k, const RationalFunction& f,
                                            int d_max, AlgebraFlavor flavor = AlgebraFlavor::invertible);

/// Sets the frozen variable x_f to 1 in every cluster entry and deletes f;
/// variables after f are renumbered down by one.
Seed specialize_frozen(const Seed& s, std::size_t f);

}  // namespace clusterbench

#pragma once

// Ice quivers as skew-symmetric integer matrices. Vertices are indexed from
// 0 in the C++ API; every textual interface (JSON, CLI, HTTP) numbers them
// from 1.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "clusterbench/coxeter.hpp"

namespace clusterbench {

struct Arrow {
  std::size_t source;
  std::size_t target;
  int multiplicity;

  bool operator==(const Arrow&) const = default;
};

class IceQuiver {
 public:
  IceQuiver() = default;
  /// n isolated mutable vertices.
  explicit IceQuiver(std::size_t n);
  /// b is row-major n*n and must be skew-symmetric.
  IceQuiver(std::vector<bool> frozen, std::vector<int> b);
  /// Accumulates arrows; opposite arrows between the same pair cancel.
  static IceQuiver from_arrows(std::size_t n, const std::vector<std::size_t>& frozen,
                               const std::vector<Arrow>& arrows);

  std::size_t size() const { return frozen_.size(); }
  bool is_frozen(std::size_t k) const { return frozen_.at(k); }
  const std::vector<bool>& frozen_flags() const { return frozen_; }
  std::vector<std::size_t> mutable_vertices() const;
  std::vector<std::size_t> frozen_vertices() const;
  /// Number of arrows i -> j minus number of arrows j -> i.
  int b(std::size_t i, std::size_t j) const { return b_[i * size() + j]; }
  const std::vector<int>& matrix() const { return b_; }
  /// Arrows with positive multiplicity, sorted by (source, target).
  std::vector<Arrow> arrows() const;
  std::size_t arrow_count() const;

  bool operator==(const IceQuiver&) const = default;

 private:
  friend IceQuiver mutate(const IceQuiver&, std::size_t);
  friend IceQuiver freeze(const IceQuiver&, std::size_t);

  std::vector<bool> frozen_;
  std::vector<int> b_;
};

/// Fomin-Zelevinsky matrix mutation. Frozen-frozen entries are carried along
/// by the same rule. Throws FrozenVertexError at a frozen vertex and
/// DomainError when an entry leaves the int range.
IceQuiver mutate(const IceQuiver& q, std::size_t k);
IceQuiver mutate_sequence(IceQuiver q, const std::vector<std::size_t>& sequence);

/// The quiver of a reduced word: one vertex per position, position k frozen
/// when its letter does not occur later, horizontal arrows k -> k+ to the next
/// occurrence of the same letter, and an arrow s -> t whenever the letters at
/// s and t are adjacent in the diagram and t is the last position before s
/// carrying its letter. Throws DomainError on non-reduced words.
IceQuiver gls_quiver(const DynkinDiagram& d, const ReducedWord& word);

IceQuiver freeze(const IceQuiver& q, std::size_t k);
/// Removes frozen vertex f and its arrows; later vertices shift down by one.
IceQuiver delete_frozen(const IceQuiver& q, std::size_t f);

/// Cluster reduction: mutate, then freeze, then delete frozen vertices.
/// Deletion labels refer to the quiver as it stands when deletion begins.
struct ReductionScript {
  std::vector<std::size_t> mutations;
  std::vector<std::size_t> freezes;
  std::vector<std::size_t> deletions;

  enum class Phase { mutate = 0, freeze = 1, remove = 2 };
  struct Step {
    Phase phase;
    std::size_t vertex;
  };
  /// Builds a script from an explicit step list; throws PhaseOrderError when
  /// a step belongs to an earlier phase than its predecessor.
  static ReductionScript from_steps(const std::vector<Step>& steps);
  /// Script equivalent to running `first` and then `second`; throws
  /// PhaseOrderError when the combined phases would be out of order.
  static ReductionScript concat(const ReductionScript& first, const ReductionScript& second,
                                std::size_t vertex_count);

  bool empty() const { return mutations.empty() && freezes.empty() && deletions.empty(); }
  bool operator==(const ReductionScript&) const = default;
};

IceQuiver apply_reduction(const IceQuiver& q, const ReductionScript& script);

/// Rank over Q of the n x (#mutable) exchange matrix.
int exchange_rank(const IceQuiver& q);
bool has_full_rank(const IceQuiver& q);

inline constexpr std::size_t kMaxIsomorphismSize = 12;
/// A frozen-flag-preserving bijection sigma (index in q1 -> index in q2) with
/// b2(sigma i, sigma j) = b1(i, j), or nullopt. Throws DomainError above
/// kMaxIsomorphismSize vertices.
std::optional<std::vector<std::size_t>> quiver_isomorphic(const IceQuiver& q1, const IceQuiver& q2);

/// Doubled quiver and mesh relations of the preprojective algebra. For an
/// edge i - j (i < j) named a, the arrows are a: i -> j and a*: j -> i; the
/// relation at vertex v is the sum of a a* over edges ending at v minus the
/// sum of a* a over edges starting at v (paths written right to left).
struct PreprojectivePresentation {
  struct NamedArrow {
    std::string name;
    int source;
    int target;
  };
  struct PathTerm {
    int sign;
    std::vector<std::string> path;
  };
  struct Relation {
    int vertex;
    std::vector<PathTerm> terms;
    std::string text() const;
  };

  DynkinDiagram diagram;
  std::vector<NamedArrow> arrows;
  std::vector<Relation> relations;
};

PreprojectivePresentation preprojective_presentation(const DynkinDiagram& d);

}  // namespace clusterbench

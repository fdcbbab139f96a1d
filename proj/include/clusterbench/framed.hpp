#pragma once

// Framed quivers, c-vectors and reddening sequences.

#include <cstddef>
#include <optional>
#include <vector>

#include "clusterbench/quiver.hpp"

namespace clusterbench {

enum class VertexColor { green, red, frozen };

/// A quiver extended by one frozen copy j' per mutable vertex j, with a
/// single arrow j -> j'. Copies occupy indices size()..size()+m-1 of the
/// extended quiver in the order of mutable_vertices(). The c-vector of a
/// mutable vertex j is (b(j, i'))_i over the copies.
class FramedState {
 public:
  explicit FramedState(const IceQuiver& base);

  /// Current quiver on the original vertices.
  IceQuiver base() const;
  const IceQuiver& extended() const { return extended_; }
  std::size_t base_size() const { return base_size_; }
  const std::vector<std::size_t>& mutable_vertices() const { return mutable_; }
  const std::vector<std::size_t>& history() const { return history_; }

  /// c-vector of mutable vertex v (original index), one entry per copy.
  std::vector<int> c_vector(std::size_t v) const;
  /// Column j is the c-vector of mutable_vertices()[j].
  std::vector<std::vector<int>> c_matrix() const;
  VertexColor color(std::size_t v) const;
  bool is_all_red() const;

  bool operator==(const FramedState&) const = default;

 private:
  friend FramedState mutate_framed(const FramedState&, std::size_t);

  IceQuiver extended_;
  std::size_t base_size_ = 0;
  std::vector<std::size_t> mutable_;
  std::vector<std::size_t> history_;
};

FramedState framed(const IceQuiver& q);
/// Mutates the extended quiver at k. Throws FrozenVertexError at frozen k and
/// std::logic_error if a c-vector loses sign coherence.
FramedState mutate_framed(const FramedState& s, std::size_t k);
bool is_all_red(const FramedState& s);
/// Replays `sequence` from framed(q) and reports whether it ends all red.
bool is_reddening_sequence(const IceQuiver& q, const std::vector<std::size_t>& sequence);

struct ReddeningSearch {
  std::size_t max_depth = 20;
  /// Worker threads used to expand each breadth-first level.
  std::size_t jobs = 1;
  /// Visited-state budget per phase; the search gives up beyond it.
  std::size_t max_states = 1'000'000;
};

/// Shortest reddening sequence found by a breadth-first search over framed
/// states, first restricted to green mutations and then unrestricted (green
/// before red, lower index first). States are deduplicated up to relabeling
/// of mutable vertices. nullopt means none was found within the bounds, not
/// that none exists.
std::optional<std::vector<std::size_t>> find_reddening(const IceQuiver& q, const ReddeningSearch& options);
std::optional<std::vector<std::size_t>> find_reddening(const IceQuiver& q, std::size_t max_depth);

/// Dedup key of a framed state: the extended matrix in a vertex order chosen
/// lexicographically minimal over relabelings of the mutable vertices that
/// respect an invariant signature. Falls back to the labeled matrix when the
/// signature classes admit too many relabelings; equal keys always mean
/// isomorphic states.
std::vector<int> framed_state_key(const FramedState& s);

}  // namespace clusterbench

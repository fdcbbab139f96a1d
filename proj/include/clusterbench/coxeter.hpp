#pragma once

// Simply-laced Dynkin diagrams and their Weyl groups acting on the root
// lattice. Diagram vertices and word letters are numbered from 1, matching
// the simple reflections s_1..s_n.

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace clusterbench {

/// Sequence of simple-reflection indices (1-based). Not necessarily reduced.
using ReducedWord = std::vector<int>;

class DynkinDiagram {
 public:
  /// type is 'A' (rank >= 1), 'D' (rank >= 4) or 'E' (rank 6, 7, 8),
  /// numbered as in Bourbaki.
  DynkinDiagram(char type, int rank);

  /// Parses labels such as "A4", "D5", "E6".
  static DynkinDiagram parse(std::string_view label);

  char type() const;
  int rank() const;
  std::string label() const;
  bool adjacent(int i, int j) const;
  /// Neighbours of vertex i in increasing order.
  const std::vector<int>& neighbours(int i) const;
  /// Edges (i, j) with i < j in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;
  int cartan(int i, int j) const;
  /// Positive roots in simple-root coordinates.
  const std::vector<std::vector<int>>& positive_roots() const;

  bool operator==(const DynkinDiagram& o) const;

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

/// Element of the Weyl group stored as its action on the root lattice:
/// column j of the matrix is the image of the simple root alpha_{j+1}.
class WeylGroupElement {
 public:
  static WeylGroupElement identity(const DynkinDiagram& d);
  static WeylGroupElement simple_reflection(const DynkinDiagram& d, int i);

  const DynkinDiagram& diagram() const { return diagram_; }
  int rank() const { return diagram_.rank(); }
  int length() const { return length_; }
  const std::vector<int>& matrix() const { return action_; }
  int entry(int row, int col) const { return action_[static_cast<std::size_t>(row * rank() + col)]; }

  std::vector<int> apply(const std::vector<int>& root) const;
  /// True when w(alpha_i) is a negative root, i.e. l(w s_i) < l(w).
  bool is_right_descent(int i) const;
  WeylGroupElement inverse() const;
  /// A reduced word, built by peeling the smallest right descent each step.
  ReducedWord reduced_word() const;

  friend WeylGroupElement operator*(const WeylGroupElement& a, const WeylGroupElement& b);
  bool operator==(const WeylGroupElement& o) const { return action_ == o.action_; }
  bool operator<(const WeylGroupElement& o) const { return action_ < o.action_; }

 private:
  WeylGroupElement(DynkinDiagram d, std::vector<int> action);

  DynkinDiagram diagram_;
  std::vector<int> action_;
  int length_ = 0;
};

/// s_{i1} s_{i2} ... s_{ik}, with s_{i1} applied last. Throws DomainError on
/// a letter outside 1..rank.
WeylGroupElement weyl_element(const DynkinDiagram& d, const ReducedWord& word);
bool is_reduced(const DynkinDiagram& d, const ReducedWord& word);
WeylGroupElement longest_element(const DynkinDiagram& d);

/// Bruhat order via the subword property on a reduced word of w.
bool bruhat_leq(const WeylGroupElement& v, const WeylGroupElement& w);
/// v <=_R w  iff  l(v) + l(v^{-1} w) = l(w).
bool weak_right_leq(const WeylGroupElement& v, const WeylGroupElement& w);
/// l(w) - l(v); throws DomainError("empty Richardson variety") unless v <= w.
int richardson_dim(const WeylGroupElement& v, const WeylGroupElement& w);

inline constexpr int kMaxEnumeratedLength = 12;
/// All reduced words of w in lexicographic order. Throws DomainError when
/// l(w) exceeds kMaxEnumeratedLength.
std::vector<ReducedWord> enumerate_reduced_words(const WeylGroupElement& w);

/// Every element of the group, by breadth-first search from the identity.
/// Throws DomainError above `limit` elements.
std::vector<WeylGroupElement> all_elements(const DynkinDiagram& d, std::size_t limit = 50000);

/// Type A only: one-line notation of w in S_{n+1}, values 1..n+1.
std::vector<int> type_a_permutation(const WeylGroupElement& w);

/// "1,2,3" -> {1,2,3}; "" -> {}.
ReducedWord parse_word(std::string_view text);
std::string format_word(const ReducedWord& word);

}  // namespace clusterbench

#pragma once

// Hand transcriptions of the two drawn A4 quivers and random quiver
// generators shared by the test binaries.

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "clusterbench/quiver.hpp"

namespace fixtures {

using clusterbench::Arrow;
using clusterbench::IceQuiver;

/// A node of a drawing on a grid: (row, column), square = frozen, and arrows
/// given as directions "rd" (row+1, col+1), "ru" (row-1, col+1), "ll" (same
/// row, col-2).
struct DrawnNode {
  int row;
  int col;
  bool square;
  std::vector<std::string> arrows;
};

inline IceQuiver from_drawing(const std::vector<DrawnNode>& nodes) {
  std::map<std::pair<int, int>, std::size_t> index;
  for (std::size_t i = 0; i < nodes.size(); ++i) index[{nodes[i].row, nodes[i].col}] = i;
  std::vector<std::size_t> frozen;
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& n = nodes[i];
    if (n.square) frozen.push_back(i);
    for (const auto& dir : n.arrows) {
      std::pair<int, int> t = dir == "rd" ? std::pair{n.row + 1, n.col + 1}
                              : dir == "ru" ? std::pair{n.row - 1, n.col + 1}
                                            : std::pair{n.row, n.col - 2};
      arrows.push_back({i, index.at(t), 1});
    }
  }
  return IceQuiver::from_arrows(nodes.size(), frozen, arrows);
}

/// Drawn quiver of the A4 word 1,2,3,1,2,4,3.
inline IceQuiver drawn_richardson_quiver() {
  return from_drawing({{1, 2, true, {"rd"}},
                       {2, 1, true, {"rd", "ru"}},
                       {2, 3, false, {"rd", "ll"}},
                       {3, 2, true, {"ru", "rd"}},
                       {3, 4, false, {"rd", "ll"}},
                       {4, 3, true, {"ru"}},
                       {4, 5, false, {"ll"}}});
}

/// Drawn quiver of the A4 word 1,2,3,4,1,2,3,1,2,1 for the longest element.
inline IceQuiver drawn_w0_quiver() {
  return from_drawing({{1, 4, true, {"rd"}},
                       {2, 3, true, {"ru", "rd"}},
                       {2, 5, false, {"ll", "rd"}},
                       {3, 2, true, {"ru", "rd"}},
                       {3, 4, false, {"ru", "ll", "rd"}},
                       {3, 6, false, {"ll", "rd"}},
                       {4, 1, true, {"ru"}},
                       {4, 3, false, {"ll", "ru"}},
                       {4, 5, false, {"ll", "ru"}},
                       {4, 7, false, {"ll"}}});
}

/// Uniform ice quiver: 1..max_n vertices, each entry above the diagonal in
/// [-max_entry, max_entry], each vertex frozen with probability 1/4.
inline IceQuiver random_ice_quiver(std::mt19937_64& rng, std::size_t max_n = 8, int max_entry = 3) {
  std::uniform_int_distribution<std::size_t> size(1, max_n);
  std::uniform_int_distribution<int> entry(-max_entry, max_entry);
  std::bernoulli_distribution frozen_coin(0.25);
  const std::size_t n = size(rng);
  std::vector<bool> frozen(n);
  for (std::size_t i = 0; i < n; ++i) frozen[i] = frozen_coin(rng);
  std::vector<int> b(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      int e = entry(rng);
      b[i * n + j] = e;
      b[j * n + i] = -e;
    }
  return IceQuiver(std::move(frozen), std::move(b));
}

/// Quiver whose mutable part is a randomly oriented tree on 1..max_mutable
/// vertices, or a single cycle through all of them, or a double arrow on two
/// vertices (so of finite or affine mutation type), with 0..max_frozen
/// frozen vertices attached by single arrows to random mutable vertices.
inline IceQuiver random_tame_quiver(std::mt19937_64& rng, std::size_t max_mutable = 4, std::size_t max_frozen = 2,
                                    std::size_t min_frozen = 0) {
  std::uniform_int_distribution<std::size_t> msize(1, max_mutable);
  std::uniform_int_distribution<std::size_t> fsize(min_frozen, max_frozen);
  std::bernoulli_distribution coin(0.5);
  const std::size_t m = msize(rng);
  const std::size_t f = fsize(rng);
  const std::size_t n = m + f;
  std::vector<Arrow> arrows;
  auto orient = [&](std::size_t a, std::size_t b, int mult) {
    if (coin(rng)) arrows.push_back({a, b, mult});
    else arrows.push_back({b, a, mult});
  };
  std::uniform_int_distribution<int> extra(0, 3);
  const int kind = extra(rng);
  const bool cycle = kind == 1 && m >= 3;
  for (std::size_t v = 1; v < m; ++v) {
    std::uniform_int_distribution<std::size_t> parent(0, v - 1);
    orient(cycle ? v - 1 : parent(rng), v, 1);
  }
  // A cycle through every mutable vertex; a cycle with a tail could be wild.
  if (cycle) orient(0, m - 1, 1);
  else if (kind == 2 && m == 2) arrows.front().multiplicity = 2;
  std::vector<std::size_t> frozen;
  std::uniform_int_distribution<std::size_t> anchor(0, m - 1);
  for (std::size_t i = m; i < n; ++i) {
    frozen.push_back(i);
    orient(i, anchor(rng), 1);
  }
  return IceQuiver::from_arrows(n, frozen, arrows);
}

inline std::vector<std::size_t> random_sequence(std::mt19937_64& rng, const IceQuiver& q, std::size_t max_len,
                                                std::size_t avoid = static_cast<std::size_t>(-1)) {
  std::vector<std::size_t> candidates;
  for (std::size_t v : q.mutable_vertices())
    if (v != avoid) candidates.push_back(v);
  std::vector<std::size_t> seq;
  if (candidates.empty()) return seq;
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
  std::size_t l = len(rng);
  // Immediate repeats cancel, so a single candidate gives at most one step.
  if (candidates.size() == 1) l = std::min<std::size_t>(l, 1);
  while (seq.size() < l) {
    std::size_t v = candidates[pick(rng)];
    if (!seq.empty() && seq.back() == v) continue;
    seq.push_back(v);
  }
  return seq;
}

}  // namespace fixtures

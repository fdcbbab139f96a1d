#include "clusterbench/quiver.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <set>

#include <gmpxx.h>

#include "clusterbench/error.hpp"

namespace clusterbench {

IceQuiver::IceQuiver(std::size_t n) : frozen_(n, false), b_(n * n, 0) {}

IceQuiver::IceQuiver(std::vector<bool> frozen, std::vector<int> b)
    : frozen_(std::move(frozen)), b_(std::move(b)) {
  const std::size_t n = frozen_.size();
  if (b_.size() != n * n) throw DomainError("exchange matrix has wrong size");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (b_[i * n + j] != -b_[j * n + i]) throw DomainError("exchange matrix is not skew-symmetric");
}

IceQuiver IceQuiver::from_arrows(std::size_t n, const std::vector<std::size_t>& frozen,
                                 const std::vector<Arrow>& arrows) {
  IceQuiver q(n);
  for (std::size_t f : frozen) {
    if (f >= n) throw DomainError("frozen vertex out of range");
    q.frozen_[f] = true;
  }
  for (const auto& a : arrows) {
    if (a.source >= n || a.target >= n) throw DomainError("arrow endpoint out of range");
    if (a.source == a.target) throw DomainError("loops are not allowed");
    if (a.multiplicity < 1) throw DomainError("arrow multiplicity must be positive");
    q.b_[a.source * n + a.target] += a.multiplicity;
    q.b_[a.target * n + a.source] -= a.multiplicity;
  }
  return q;
}

std::vector<std::size_t> IceQuiver::mutable_vertices() const {
  std::vector<std::size_t> v;
  for (std::size_t i = 0; i < size(); ++i)
    if (!frozen_[i]) v.push_back(i);
  return v;
}

std::vector<std::size_t> IceQuiver::frozen_vertices() const {
  std::vector<std::size_t> v;
  for (std::size_t i = 0; i < size(); ++i)
    if (frozen_[i]) v.push_back(i);
  return v;
}

std::vector<Arrow> IceQuiver::arrows() const {
  std::vector<Arrow> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (b(i, j) > 0) out.push_back({i, j, b(i, j)});
  return out;
}

std::size_t IceQuiver::arrow_count() const {
  std::size_t c = 0;
  for (int x : b_)
    if (x > 0) c += static_cast<std::size_t>(x);
  return c;
}

IceQuiver mutate(const IceQuiver& q, std::size_t k) {
  if (k >= q.size()) throw DomainError("vertex out of range");
  if (q.is_frozen(k)) throw FrozenVertexError("mutation at frozen vertex " + std::to_string(k + 1));
  const std::size_t n = q.size();
  IceQuiver r = q;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == k || j == k) {
        r.b_[i * n + j] = -q.b(i, j);
        continue;
      }
      int bik = q.b(i, k), bkj = q.b(k, j);
      int plus = 0, minus = 0, entry = 0;
      if (__builtin_mul_overflow(std::max(bik, 0), std::max(bkj, 0), &plus) ||
          __builtin_mul_overflow(std::max(-bik, 0), std::max(-bkj, 0), &minus) ||
          __builtin_add_overflow(q.b(i, j), plus - minus, &entry) || entry == INT_MIN)
        throw DomainError("arrow multiplicity overflow in mutation at vertex " + std::to_string(k + 1));
      r.b_[i * n + j] = entry;
    }
  }
  return r;
}

IceQuiver mutate_sequence(IceQuiver q, const std::vector<std::size_t>& sequence) {
  for (std::size_t k : sequence) q = mutate(q, k);
  return q;
}

IceQuiver gls_quiver(const DynkinDiagram& d, const ReducedWord& word) {
  if (!is_reduced(d, word)) throw DomainError("word " + format_word(word) + " is not reduced in " + d.label());
  const std::size_t len = word.size();
  auto next_same = [&](std::size_t k) -> std::optional<std::size_t> {
    for (std::size_t j = k + 1; j < len; ++j)
      if (word[j] == word[k]) return j;
    return std::nullopt;
  };
  std::vector<std::size_t> frozen;
  std::vector<Arrow> arrows;
  for (std::size_t k = 0; k < len; ++k) {
    auto plus = next_same(k);
    if (plus) arrows.push_back({k, *plus, 1});
    else frozen.push_back(k);
  }
  for (std::size_t s = 0; s < len; ++s) {
    for (int letter : d.neighbours(word[s])) {
      for (std::size_t t = s; t-- > 0;) {
        if (word[t] == letter) {
          arrows.push_back({s, t, 1});
          break;
        }
      }
    }
  }
  return IceQuiver::from_arrows(len, frozen, arrows);
}

IceQuiver freeze(const IceQuiver& q, std::size_t k) {
  if (k >= q.size()) throw DomainError("vertex out of range");
  if (q.is_frozen(k)) throw FrozenVertexError("vertex " + std::to_string(k + 1) + " is already frozen");
  IceQuiver r = q;
  r.frozen_[k] = true;
  return r;
}

IceQuiver delete_frozen(const IceQuiver& q, std::size_t f) {
  if (f >= q.size()) throw DomainError("vertex out of range");
  if (!q.is_frozen(f)) throw FrozenVertexError("cannot delete non-frozen vertex " + std::to_string(f + 1));
  const std::size_t n = q.size();
  std::vector<bool> frozen;
  std::vector<int> b;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == f) continue;
    frozen.push_back(q.is_frozen(i));
    for (std::size_t j = 0; j < n; ++j)
      if (j != f) b.push_back(q.b(i, j));
  }
  return IceQuiver(std::move(frozen), std::move(b));
}

ReductionScript ReductionScript::from_steps(const std::vector<Step>& steps) {
  ReductionScript s;
  Phase current = Phase::mutate;
  for (const auto& step : steps) {
    if (static_cast<int>(step.phase) < static_cast<int>(current))
      throw PhaseOrderError("reduction phases must run mutate -> freeze -> delete");
    current = step.phase;
    switch (step.phase) {
      case Phase::mutate: s.mutations.push_back(step.vertex); break;
      case Phase::freeze: s.freezes.push_back(step.vertex); break;
      case Phase::remove: s.deletions.push_back(step.vertex); break;
    }
  }
  return s;
}

ReductionScript ReductionScript::concat(const ReductionScript& first, const ReductionScript& second,
                                        std::size_t vertex_count) {
  if (!second.mutations.empty() && (!first.freezes.empty() || !first.deletions.empty()))
    throw PhaseOrderError("cannot mutate after freezing or deleting");
  if (!second.freezes.empty() && !first.deletions.empty())
    throw PhaseOrderError("cannot freeze after deleting");
  ReductionScript r = first;
  r.mutations.insert(r.mutations.end(), second.mutations.begin(), second.mutations.end());
  r.freezes.insert(r.freezes.end(), second.freezes.begin(), second.freezes.end());
  // Translate the second deletion set back to labels before the first one.
  std::set<std::size_t> removed(first.deletions.begin(), first.deletions.end());
  std::vector<std::size_t> survivors;
  for (std::size_t v = 0; v < vertex_count; ++v)
    if (!removed.count(v)) survivors.push_back(v);
  for (std::size_t x : second.deletions) {
    if (x >= survivors.size()) throw DomainError("deletion label out of range");
    r.deletions.push_back(survivors[x]);
  }
  return r;
}

IceQuiver apply_reduction(const IceQuiver& q, const ReductionScript& script) {
  IceQuiver r = mutate_sequence(q, script.mutations);
  for (std::size_t k : script.freezes) r = freeze(r, k);
  std::vector<std::size_t> del = script.deletions;
  std::sort(del.begin(), del.end());
  if (std::adjacent_find(del.begin(), del.end()) != del.end())
    throw DomainError("vertex deleted twice");
  for (std::size_t f : del) {
    if (f >= r.size()) throw DomainError("vertex out of range");
    if (!r.is_frozen(f)) throw FrozenVertexError("cannot delete non-frozen vertex " + std::to_string(f + 1));
  }
  for (auto it = del.rbegin(); it != del.rend(); ++it) r = delete_frozen(r, *it);
  return r;
}

int exchange_rank(const IceQuiver& q) {
  auto cols = q.mutable_vertices();
  const std::size_t n = q.size();
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(cols.size()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < cols.size(); ++c) m[i][c] = q.b(i, cols[c]);
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols.size() && row < n; ++c) {
    std::size_t pivot = row;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) continue;
    std::swap(m[pivot], m[row]);
    for (std::size_t i = row + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      mpq_class f = m[i][c] / m[row][c];
      for (std::size_t j = c; j < cols.size(); ++j) m[i][j] -= f * m[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

bool has_full_rank(const IceQuiver& q) {
  return exchange_rank(q) == static_cast<int>(q.mutable_vertices().size());
}

std::optional<std::vector<std::size_t>> quiver_isomorphic(const IceQuiver& q1, const IceQuiver& q2) {
  const std::size_t n = q1.size();
  if (n > kMaxIsomorphismSize || q2.size() > kMaxIsomorphismSize)
    throw DomainError("isomorphism search limited to " + std::to_string(kMaxIsomorphismSize) + " vertices");
  if (q2.size() != n) return std::nullopt;

  auto signature = [](const IceQuiver& q, std::size_t v) {
    std::vector<int> row;
    for (std::size_t j = 0; j < q.size(); ++j) row.push_back(q.b(v, j));
    std::sort(row.begin(), row.end());
    row.push_back(q.is_frozen(v) ? 1 : 0);
    return row;
  };
  std::vector<std::vector<int>> sig1(n), sig2(n);
  for (std::size_t v = 0; v < n; ++v) {
    sig1[v] = signature(q1, v);
    sig2[v] = signature(q2, v);
  }
  {
    auto a = sig1, b = sig2;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  // Assign high-degree vertices first; they constrain the rest the most.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  auto degree = [&](std::size_t v) {
    int d = 0;
    for (std::size_t j = 0; j < n; ++j) d += std::abs(q1.b(v, j));
    return d;
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return degree(a) > degree(b); });

  std::vector<std::size_t> map(n, n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> assign = [&](std::size_t depth) -> bool {
    if (depth == n) return true;
    std::size_t u = order[depth];
    for (std::size_t cand = 0; cand < n; ++cand) {
      if (used[cand] || sig1[u] != sig2[cand]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        std::size_t w = order[d];
        if (q1.b(u, w) != q2.b(cand, map[w])) ok = false;
      }
      if (!ok) continue;
      map[u] = cand;
      used[cand] = true;
      if (assign(depth + 1)) return true;
      used[cand] = false;
      map[u] = n;
    }
    return false;
  };
  if (!assign(0)) return std::nullopt;
  return map;
}

// ---------------------------------------------------------------------------

std::string PreprojectivePresentation::Relation::text() const {
  if (terms.empty()) return "0 = 0";
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    if (i == 0) {
      if (t.sign < 0) s += "-";
    } else {
      s += t.sign < 0 ? " - " : " + ";
    }
    for (const auto& a : t.path) s += a;
  }
  return s + " = 0";
}

namespace {

const char* const kGreek[] = {"α", "β", "γ", "δ", "ε", "ζ", "η", "θ", "ι", "κ", "λ", "μ",
                              "ν", "ξ", "ο", "π", "ρ", "σ", "τ", "υ", "φ", "χ", "ψ", "ω"};

std::string arrow_name(std::size_t k) {
  if (k < std::size(kGreek)) return kGreek[k];
  return "a" + std::to_string(k + 1);
}

}  // namespace

PreprojectivePresentation preprojective_presentation(const DynkinDiagram& d) {
  PreprojectivePresentation p{d, {}, {}};
  auto edges = d.edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    std::string a = arrow_name(k);
    p.arrows.push_back({a, edges[k].first, edges[k].second});
    p.arrows.push_back({a + "*", edges[k].second, edges[k].first});
  }
  for (int v = 1; v <= d.rank(); ++v) {
    PreprojectivePresentation::Relation rel{v, {}};
    for (std::size_t k = 0; k < edges.size(); ++k) {
      std::string a = arrow_name(k);
      if (edges[k].second == v) rel.terms.push_back({+1, {a, a + "*"}});
      if (edges[k].first == v) rel.terms.push_back({-1, {a + "*", a}});
    }
    p.relations.push_back(std::move(rel));
  }
  return p;
}

}  // namespace clusterbench

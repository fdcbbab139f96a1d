#include "clusterbench/seed.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

#include "clusterbench/error.hpp"

namespace clusterbench {

Seed initial_seed(const IceQuiver& q) {
  Seed s{q, {}, {}};
  for (std::size_t i = 0; i < q.size(); ++i) s.cluster.push_back(RationalFunction::variable(q.size(), i));
  return s;
}

RationalFunction exchange_binomial(const Seed& s, std::size_t k) {
  const std::size_t n = s.size();
  RationalFunction in = RationalFunction::constant(n, Integer(1));
  RationalFunction out = RationalFunction::constant(n, Integer(1));
  for (std::size_t i = 0; i < n; ++i) {
    int b = s.quiver.b(i, k);
    if (b > 0) in *= s.cluster[i].pow(b);
    if (b < 0) out *= s.cluster[i].pow(-b);
  }
  return in + out;
}

Seed mutate_seed(const Seed& s, std::size_t k) {
  if (k >= s.size()) throw DomainError("vertex out of range");
  if (s.quiver.is_frozen(k)) throw FrozenVertexError("mutation at frozen vertex " + std::to_string(k + 1));
  Seed r = s;
  r.cluster[k] = exchange_binomial(s, k) / s.cluster[k];
  r.quiver = mutate(s.quiver, k);
  r.provenance.push_back(k);
  return r;
}

Seed mutate_seed_sequence(Seed s, const std::vector<std::size_t>& sequence) {
  for (std::size_t k : sequence) s = mutate_seed(s, k);
  return s;
}

std::string seed_key(const Seed& s) {
  // Cluster variables of one seed are distinct, so sorting the mutable
  // vertices by their variable fixes the relabeling.
  std::vector<std::pair<std::string, std::size_t>> mut;
  std::vector<std::size_t> order;
  for (std::size_t v = 0; v < s.size(); ++v)
    if (!s.quiver.is_frozen(v)) mut.emplace_back(s.cluster[v].to_string(), v);
  std::sort(mut.begin(), mut.end());
  for (const auto& p : mut) order.push_back(p.second);
  for (std::size_t v = 0; v < s.size(); ++v)
    if (s.quiver.is_frozen(v)) order.push_back(v);
  std::string key;
  for (std::size_t v : order) key += s.cluster[v].to_string() + (s.quiver.is_frozen(v) ? "!" : "") + ";";
  key += "|";
  for (std::size_t a : order)
    for (std::size_t b : order) key += std::to_string(s.quiver.b(a, b)) + ",";
  return key;
}

ClosureResult closure(const Seed& start, std::size_t max_seeds) {
  ClosureResult result;
  std::unordered_map<std::string, std::size_t> index;
  std::map<std::string, std::size_t> variable_index;
  std::set<std::pair<std::size_t, std::size_t>> edges;

  auto record_variables = [&](const Seed& s) {
    for (std::size_t v = 0; v < s.size(); ++v) {
      if (s.quiver.is_frozen(v)) continue;
      auto str = s.cluster[v].to_string();
      if (variable_index.emplace(str, result.variables.size()).second) result.variables.push_back(s.cluster[v]);
    }
  };
  for (std::size_t v = 0; v < start.size(); ++v)
    if (start.quiver.is_frozen(v)) result.frozen_variables.push_back(start.cluster[v]);

  index.emplace(seed_key(start), 0);
  result.seeds.push_back(start);
  record_variables(start);
  for (std::size_t cur = 0; cur < result.seeds.size(); ++cur) {
    for (std::size_t k : result.seeds[cur].quiver.mutable_vertices()) {
      Seed next = mutate_seed(result.seeds[cur], k);
      auto key = seed_key(next);
      auto it = index.find(key);
      std::size_t target;
      if (it == index.end()) {
        if (result.seeds.size() >= max_seeds)
          throw DomainError("closure exceeded " + std::to_string(max_seeds) + " seeds (infinite type suspected)");
        target = result.seeds.size();
        index.emplace(std::move(key), target);
        record_variables(next);
        result.seeds.push_back(std::move(next));
      } else {
        target = it->second;
      }
      if (target != cur) edges.emplace(std::min(cur, target), std::max(cur, target));
    }
  }
  result.edges.assign(edges.begin(), edges.end());
  return result;
}

// ---------------------------------------------------------------------------

std::string laurent_ring_name(std::optional<std::size_t> k) {
  if (!k) return "L(t0)";
  return "L(mu_" + std::to_string(*k + 1) + "(t0))";
}

bool in_laurent_ring(const RationalFunction& f, const std::vector<bool>& allow_negative) {
  auto laurent = is_laurent(f);
  if (!laurent) return false;
  if (laurent->is_zero()) return true;
  for (std::size_t v = 0; v < allow_negative.size(); ++v)
    if (!allow_negative[v] && laurent->min_degree(v) < 0) return false;
  return true;
}

MembershipVerdict starfish_membership(const IceQuiver& q, const RationalFunction& f, AlgebraFlavor flavor,
                                      const std::vector<std::size_t>& extra_invertible) {
  const std::size_t n = q.size();
  if (f.nvars() != n) throw DomainError("expression uses a different number of variables than the quiver");
  int rank = exchange_rank(q);
  auto mut = q.mutable_vertices();
  if (rank != static_cast<int>(mut.size()))
    throw StarfishHypothesisError("starfish hypothesis violated: exchange matrix has rank " + std::to_string(rank) +
                                  " < " + std::to_string(mut.size()));
  std::vector<bool> allow(n, true);
  if (flavor == AlgebraFlavor::non_invertible)
    for (std::size_t v = 0; v < n; ++v) allow[v] = !q.is_frozen(v);
  for (std::size_t v : extra_invertible) {
    if (v >= n) throw DomainError("vertex out of range");
    allow[v] = true;
  }

  MembershipVerdict verdict;
  auto check = [&](std::optional<std::size_t> k, const RationalFunction& expansion) {
    verdict.rings.push_back(laurent_ring_name(k));
    verdict.expansions.push_back(expansion);
    if (!in_laurent_ring(expansion, allow)) verdict.failing_rings.push_back(verdict.rings.back());
  };
  check(std::nullopt, f);

  Seed t0 = initial_seed(q);
  for (std::size_t i : mut) {
    // In mu_i(t0) the variable at i is x_i' with x_i x_i' = M1 + M2, so
    // x_i = (M1 + M2) / x_i'. The new variable reuses index i.
    std::vector<RationalFunction> values = t0.cluster;
    values[i] = exchange_binomial(t0, i) / t0.cluster[i];
    check(i, substitute(f, std::span<const RationalFunction>(values)));
  }
  verdict.member = verdict.failing_rings.empty();
  return verdict;
}

std::optional<int> localization_certificate(const IceQuiver& q, std::size_t k, const RationalFunction& f,
                                            int d_max, AlgebraFlavor flavor) {
  if (k >= q.size()) throw DomainError("vertex out of range");
  IceQuiver frozen_q = freeze(q, k);
  auto pre = starfish_membership(frozen_q, f, flavor, {k});
  if (!pre.member) {
    std::string rings;
    for (const auto& r : pre.failing_rings) rings += (rings.empty() ? "" : ", ") + r;
    throw DomainError("f is not in the upper cluster algebra of the frozen quiver; fails in " + rings);
  }
  RationalFunction xk = RationalFunction::variable(q.size(), k);
  RationalFunction g = f;
  for (int d = 0; d <= d_max; ++d) {
    if (starfish_membership(q, g, flavor).member) return d;
    g *= xk;
  }
  return std::nullopt;
}

Seed specialize_frozen(const Seed& s, std::size_t f) {
  const std::size_t n = s.size();
  if (f >= n) throw DomainError("vertex out of range");
  if (!s.quiver.is_frozen(f)) throw FrozenVertexError("can only specialize a frozen vertex");
  std::vector<RationalFunction> values;
  for (std::size_t j = 0; j < n; ++j) {
    if (j < f) values.push_back(RationalFunction::variable(n - 1, j));
    else if (j == f) values.push_back(RationalFunction::constant(n - 1, Integer(1)));
    else values.push_back(RationalFunction::variable(n - 1, j - 1));
  }
  Seed r;
  r.quiver = delete_frozen(s.quiver, f);
  for (std::size_t j = 0; j < n; ++j)
    if (j != f) r.cluster.push_back(substitute(s.cluster[j], std::span<const RationalFunction>(values)));
  for (std::size_t k : s.provenance) r.provenance.push_back(k > f ? k - 1 : k);
  return r;
}

}  // namespace clusterbench

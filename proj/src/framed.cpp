#include "clusterbench/framed.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "clusterbench/error.hpp"

namespace clusterbench {

FramedState::FramedState(const IceQuiver& base) : base_size_(base.size()), mutable_(base.mutable_vertices()) {
  const std::size_t n = base.size();
  const std::size_t m = mutable_.size();
  std::vector<Arrow> arrows = base.arrows();
  for (std::size_t j = 0; j < m; ++j) arrows.push_back({mutable_[j], n + j, 1});
  std::vector<std::size_t> frozen = base.frozen_vertices();
  for (std::size_t j = 0; j < m; ++j) frozen.push_back(n + j);
  extended_ = IceQuiver::from_arrows(n + m, frozen, arrows);
}

IceQuiver FramedState::base() const {
  const std::size_t n = base_size_;
  std::vector<bool> frozen(extended_.frozen_flags().begin(), extended_.frozen_flags().begin() + static_cast<long>(n));
  std::vector<int> b;
  b.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b.push_back(extended_.b(i, j));
  return IceQuiver(std::move(frozen), std::move(b));
}

std::vector<int> FramedState::c_vector(std::size_t v) const {
  if (v >= base_size_ || extended_.is_frozen(v)) throw DomainError("c-vectors exist only at mutable vertices");
  std::vector<int> c;
  for (std::size_t i = 0; i < mutable_.size(); ++i) c.push_back(extended_.b(v, base_size_ + i));
  return c;
}

std::vector<std::vector<int>> FramedState::c_matrix() const {
  std::vector<std::vector<int>> cols;
  for (std::size_t v : mutable_) cols.push_back(c_vector(v));
  return cols;
}

VertexColor FramedState::color(std::size_t v) const {
  if (v >= base_size_) throw DomainError("vertex out of range");
  if (extended_.is_frozen(v)) return VertexColor::frozen;
  auto c = c_vector(v);
  bool nonneg = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
  return nonneg ? VertexColor::green : VertexColor::red;
}

bool FramedState::is_all_red() const {
  for (std::size_t v : mutable_)
    if (color(v) != VertexColor::red) return false;
  return true;
}

FramedState framed(const IceQuiver& q) { return FramedState(q); }

FramedState mutate_framed(const FramedState& s, std::size_t k) {
  if (k >= s.base_size_) throw DomainError("vertex out of range");
  FramedState r = s;
  r.extended_ = mutate(s.extended_, k);
  r.history_.push_back(k);
  for (std::size_t v : r.mutable_) {
    auto c = r.c_vector(v);
    bool nonneg = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
    bool nonpos = std::all_of(c.begin(), c.end(), [](int x) { return x <= 0; });
    if (!nonneg && !nonpos)
      throw std::logic_error("sign coherence violated at vertex " + std::to_string(v + 1));
  }
  return r;
}

bool is_all_red(const FramedState& s) { return s.is_all_red(); }

bool is_reddening_sequence(const IceQuiver& q, const std::vector<std::size_t>& sequence) {
  FramedState s(q);
  for (std::size_t k : sequence) s = mutate_framed(s, k);
  return s.is_all_red();
}

// ---------------------------------------------------------------------------

std::vector<int> framed_state_key(const FramedState& s) {
  const IceQuiver& q = s.extended();
  const std::size_t total = q.size();
  const auto& mut = s.mutable_vertices();
  const std::size_t m = mut.size();
  std::vector<std::size_t> fixed;
  for (std::size_t v = 0; v < total; ++v)
    if (q.is_frozen(v)) fixed.push_back(v);

  auto signature = [&](std::size_t v) {
    std::vector<int> sig;
    for (std::size_t u : mut) sig.push_back(q.b(v, u));
    std::sort(sig.begin(), sig.end());
    for (std::size_t f : fixed) sig.push_back(q.b(v, f));
    return sig;
  };
  std::vector<std::pair<std::vector<int>, std::size_t>> sigs;
  for (std::size_t v : mut) sigs.emplace_back(signature(v), v);
  std::sort(sigs.begin(), sigs.end());

  std::vector<std::size_t> order;
  std::vector<std::pair<std::size_t, std::size_t>> classes;  // [begin, end) in order
  for (std::size_t i = 0; i < m;) {
    std::size_t j = i;
    while (j < m && sigs[j].first == sigs[i].first) ++j;
    classes.emplace_back(i, j);
    i = j;
  }
  for (const auto& p : sigs) order.push_back(p.second);

  auto key_for = [&](const std::vector<std::size_t>& ord) {
    std::vector<int> key;
    key.reserve((m + fixed.size()) * (m + fixed.size()));
    std::vector<std::size_t> all = ord;
    all.insert(all.end(), fixed.begin(), fixed.end());
    for (std::size_t a : all)
      for (std::size_t b : all) key.push_back(q.b(a, b));
    return key;
  };

  std::size_t budget = 1;
  for (auto [b, e] : classes) {
    for (std::size_t k = 2; k <= e - b; ++k) budget *= k;
    if (budget > 720) break;
  }
  if (budget > 720) {
    std::vector<std::size_t> labeled = mut;
    return key_for(labeled);
  }

  // Odometer over within-class permutations.
  for (auto [b, e] : classes) std::sort(order.begin() + static_cast<long>(b), order.begin() + static_cast<long>(e));
  std::vector<int> best = key_for(order);
  while (true) {
    std::size_t c = 0;
    for (; c < classes.size(); ++c) {
      auto [b, e] = classes[c];
      if (std::next_permutation(order.begin() + static_cast<long>(b), order.begin() + static_cast<long>(e))) break;
    }
    if (c == classes.size()) break;
    best = std::min(best, key_for(order));
  }
  return best;
}

namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x + 0x9e3779b9);
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct Child {
  FramedState state;
  std::vector<int> key;
};

std::vector<Child> expand(const FramedState& s, bool green_only) {
  std::vector<Child> out;
  std::vector<std::size_t> green, red;
  for (std::size_t v : s.mutable_vertices()) (s.color(v) == VertexColor::green ? green : red).push_back(v);
  auto push = [&](std::size_t v) {
    if (!s.history().empty() && s.history().back() == v) return;  // immediate undo
    FramedState t = mutate_framed(s, v);
    auto key = framed_state_key(t);
    out.push_back({std::move(t), std::move(key)});
  };
  for (std::size_t v : green) push(v);
  if (!green_only)
    for (std::size_t v : red) push(v);
  return out;
}

std::optional<std::vector<std::size_t>> breadth_first(const IceQuiver& q, const ReddeningSearch& opt,
                                                      bool green_only) {
  FramedState start(q);
  if (start.is_all_red()) return std::vector<std::size_t>{};
  std::unordered_set<std::vector<int>, KeyHash> visited{framed_state_key(start)};
  std::vector<FramedState> frontier{start};
  const std::size_t jobs = std::max<std::size_t>(1, opt.jobs);
  for (std::size_t depth = 1; depth <= opt.max_depth && !frontier.empty(); ++depth) {
    std::vector<std::vector<Child>> children(frontier.size());
    if (jobs == 1 || frontier.size() < 2 * jobs) {
      for (std::size_t i = 0; i < frontier.size(); ++i) children[i] = expand(frontier[i], green_only);
    } else {
      std::vector<std::thread> workers;
      for (std::size_t w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
          for (std::size_t i = w; i < frontier.size(); i += jobs) children[i] = expand(frontier[i], green_only);
        });
      }
      for (auto& t : workers) t.join();
    }
    // Merge in frontier order so results do not depend on scheduling.
    std::vector<FramedState> next;
    for (auto& group : children) {
      for (auto& c : group) {
        if (!visited.insert(c.key).second) continue;
        if (c.state.is_all_red()) return c.state.history();
        if (visited.size() > opt.max_states) return std::nullopt;
        next.push_back(std::move(c.state));
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_reddening(const IceQuiver& q, const ReddeningSearch& options) {
  if (options.max_depth < 1) throw DomainError("max_depth must be at least 1");
  if (auto seq = breadth_first(q, options, true)) return seq;
  return breadth_first(q, options, false);
}

std::optional<std::vector<std::size_t>> find_reddening(const IceQuiver& q, std::size_t max_depth) {
  ReddeningSearch opt;
  opt.max_depth = max_depth;
  return find_reddening(q, opt);
}

}  // namespace clusterbench

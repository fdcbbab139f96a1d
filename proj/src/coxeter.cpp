#include "clusterbench/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <set>

#include "clusterbench/error.hpp"

namespace clusterbench {

struct DynkinDiagram::Data {
  char type;
  int rank;
  std::vector<std::vector<int>> neighbours;  // 1-based, index 0 unused
  std::vector<int> cartan;                   // rank*rank, 0-based
  std::vector<std::vector<int>> positive_roots;
};

namespace {

std::vector<std::vector<int>> compute_positive_roots(int rank, const std::vector<int>& cartan) {
  std::vector<std::vector<int>> roots;
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  for (int i = 0; i < rank; ++i) {
    std::vector<int> r(static_cast<std::size_t>(rank), 0);
    r[static_cast<std::size_t>(i)] = 1;
    seen.insert(r);
    queue.push_back(r);
  }
  while (!queue.empty()) {
    std::vector<int> beta = queue.front();
    queue.pop_front();
    roots.push_back(beta);
    for (int i = 0; i < rank; ++i) {
      int pairing = 0;
      for (int j = 0; j < rank; ++j) pairing += beta[static_cast<std::size_t>(j)] * cartan[static_cast<std::size_t>(j * rank + i)];
      if (pairing == 0) continue;
      std::vector<int> img = beta;
      img[static_cast<std::size_t>(i)] -= pairing;
      bool positive = std::all_of(img.begin(), img.end(), [](int c) { return c >= 0; });
      if (positive && seen.insert(img).second) queue.push_back(img);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace

DynkinDiagram::DynkinDiagram(char type, int rank) {
  type = static_cast<char>(std::toupper(static_cast<unsigned char>(type)));
  std::vector<std::pair<int, int>> edges;
  switch (type) {
    case 'A':
      if (rank < 1) throw DomainError("type A needs rank >= 1");
      for (int i = 1; i < rank; ++i) edges.emplace_back(i, i + 1);
      break;
    case 'D':
      if (rank < 4) throw DomainError("type D needs rank >= 4");
      for (int i = 1; i < rank - 1; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(rank - 2, rank);
      break;
    case 'E':
      if (rank < 6 || rank > 8) throw DomainError("type E needs rank 6, 7 or 8");
      edges.emplace_back(1, 3);
      edges.emplace_back(2, 4);
      for (int i = 3; i < rank; ++i) edges.emplace_back(i, i + 1);
      break;
    default:
      throw DomainError(std::string("unsupported Dynkin type '") + type + "' (simply laced A, D, E only)");
  }
  auto data = std::make_shared<Data>();
  data->type = type;
  data->rank = rank;
  data->neighbours.assign(static_cast<std::size_t>(rank) + 1, {});
  data->cartan.assign(static_cast<std::size_t>(rank * rank), 0);
  for (int i = 0; i < rank; ++i) data->cartan[static_cast<std::size_t>(i * rank + i)] = 2;
  for (auto [i, j] : edges) {
    data->neighbours[static_cast<std::size_t>(i)].push_back(j);
    data->neighbours[static_cast<std::size_t>(j)].push_back(i);
    data->cartan[static_cast<std::size_t>((i - 1) * rank + (j - 1))] = -1;
    data->cartan[static_cast<std::size_t>((j - 1) * rank + (i - 1))] = -1;
  }
  for (auto& n : data->neighbours) std::sort(n.begin(), n.end());
  data->positive_roots = compute_positive_roots(rank, data->cartan);
  data_ = std::move(data);
}

DynkinDiagram DynkinDiagram::parse(std::string_view label) {
  if (label.size() < 2) throw ParseError("Dynkin type must look like A4, D5 or E6");
  std::string digits(label.substr(1));
  if (!std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
      digits.size() > 3)
    throw ParseError("Dynkin type must look like A4, D5 or E6");
  return DynkinDiagram(label[0], std::stoi(digits));
}

char DynkinDiagram::type() const { return data_->type; }
int DynkinDiagram::rank() const { return data_->rank; }
std::string DynkinDiagram::label() const { return std::string(1, type()) + std::to_string(rank()); }

bool DynkinDiagram::adjacent(int i, int j) const {
  if (i < 1 || j < 1 || i > rank() || j > rank()) return false;
  return data_->cartan[static_cast<std::size_t>((i - 1) * rank() + (j - 1))] == -1;
}

const std::vector<int>& DynkinDiagram::neighbours(int i) const {
  return data_->neighbours.at(static_cast<std::size_t>(i));
}

std::vector<std::pair<int, int>> DynkinDiagram::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= rank(); ++i)
    for (int j : neighbours(i))
      if (i < j) out.emplace_back(i, j);
  return out;
}

int DynkinDiagram::cartan(int i, int j) const {
  return data_->cartan.at(static_cast<std::size_t>((i - 1) * rank() + (j - 1)));
}

const std::vector<std::vector<int>>& DynkinDiagram::positive_roots() const { return data_->positive_roots; }

bool DynkinDiagram::operator==(const DynkinDiagram& o) const {
  return type() == o.type() && rank() == o.rank();
}

// ---------------------------------------------------------------------------

WeylGroupElement::WeylGroupElement(DynkinDiagram d, std::vector<int> action)
    : diagram_(std::move(d)), action_(std::move(action)) {
  for (const auto& beta : diagram_.positive_roots()) {
    auto img = apply(beta);
    if (std::all_of(img.begin(), img.end(), [](int c) { return c <= 0; })) ++length_;
  }
}

WeylGroupElement WeylGroupElement::identity(const DynkinDiagram& d) {
  const int n = d.rank();
  std::vector<int> m(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i * n + i)] = 1;
  return WeylGroupElement(d, std::move(m));
}

WeylGroupElement WeylGroupElement::simple_reflection(const DynkinDiagram& d, int i) {
  const int n = d.rank();
  if (i < 1 || i > n)
    throw DomainError("letter " + std::to_string(i) + " outside 1.." + std::to_string(n));
  std::vector<int> m(static_cast<std::size_t>(n * n), 0);
  for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(j * n + j)] = 1;
  // s_i(alpha_j) = alpha_j - a_{ij} alpha_i
  for (int j = 1; j <= n; ++j) m[static_cast<std::size_t>((i - 1) * n + (j - 1))] -= d.cartan(i, j);
  return WeylGroupElement(d, std::move(m));
}

std::vector<int> WeylGroupElement::apply(const std::vector<int>& root) const {
  const int n = rank();
  std::vector<int> out(static_cast<std::size_t>(n), 0);
  for (int r = 0; r < n; ++r) {
    int s = 0;
    for (int c = 0; c < n; ++c) s += entry(r, c) * root[static_cast<std::size_t>(c)];
    out[static_cast<std::size_t>(r)] = s;
  }
  return out;
}

bool WeylGroupElement::is_right_descent(int i) const {
  for (int r = 0; r < rank(); ++r)
    if (entry(r, i - 1) > 0) return false;
  return true;
}

WeylGroupElement operator*(const WeylGroupElement& a, const WeylGroupElement& b) {
  if (!(a.diagram_ == b.diagram_)) throw DomainError("Weyl group elements of different diagrams");
  const int n = a.rank();
  std::vector<int> m(static_cast<std::size_t>(n * n), 0);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) {
      int x = a.entry(r, k);
      if (x == 0) continue;
      for (int c = 0; c < n; ++c) m[static_cast<std::size_t>(r * n + c)] += x * b.entry(k, c);
    }
  return WeylGroupElement(a.diagram_, std::move(m));
}

ReducedWord WeylGroupElement::reduced_word() const {
  ReducedWord reversed;
  WeylGroupElement w = *this;
  while (w.length() > 0) {
    for (int i = 1; i <= rank(); ++i) {
      if (w.is_right_descent(i)) {
        reversed.push_back(i);
        w = w * simple_reflection(diagram_, i);
        break;
      }
    }
  }
  return ReducedWord(reversed.rbegin(), reversed.rend());
}

WeylGroupElement WeylGroupElement::inverse() const {
  ReducedWord word = reduced_word();
  std::reverse(word.begin(), word.end());
  return weyl_element(diagram_, word);
}

// ---------------------------------------------------------------------------

WeylGroupElement weyl_element(const DynkinDiagram& d, const ReducedWord& word) {
  WeylGroupElement w = WeylGroupElement::identity(d);
  for (int letter : word) w = w * WeylGroupElement::simple_reflection(d, letter);
  return w;
}

bool is_reduced(const DynkinDiagram& d, const ReducedWord& word) {
  for (int letter : word)
    if (letter < 1 || letter > d.rank()) return false;
  return weyl_element(d, word).length() == static_cast<int>(word.size());
}

WeylGroupElement longest_element(const DynkinDiagram& d) {
  WeylGroupElement w = WeylGroupElement::identity(d);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i = 1; i <= d.rank(); ++i) {
      if (!w.is_right_descent(i)) {
        w = w * WeylGroupElement::simple_reflection(d, i);
        grew = true;
        break;
      }
    }
  }
  return w;
}

bool bruhat_leq(const WeylGroupElement& v, const WeylGroupElement& w) {
  if (!(v.diagram() == w.diagram())) throw DomainError("Weyl group elements of different diagrams");
  if (v.length() > w.length()) return false;
  if (v.length() == w.length()) return v == w;
  // Products of subwords of a reduced word of w; the set is the memo.
  std::set<WeylGroupElement> reachable{WeylGroupElement::identity(w.diagram())};
  for (int letter : w.reduced_word()) {
    auto s = WeylGroupElement::simple_reflection(w.diagram(), letter);
    std::vector<WeylGroupElement> extended;
    for (const auto& x : reachable) extended.push_back(x * s);
    reachable.insert(extended.begin(), extended.end());
  }
  return reachable.count(v) > 0;
}

bool weak_right_leq(const WeylGroupElement& v, const WeylGroupElement& w) {
  return v.length() + (v.inverse() * w).length() == w.length();
}

int richardson_dim(const WeylGroupElement& v, const WeylGroupElement& w) {
  if (!bruhat_leq(v, w)) throw DomainError("empty Richardson variety: v is not below w in Bruhat order");
  return w.length() - v.length();
}

std::vector<ReducedWord> enumerate_reduced_words(const WeylGroupElement& w) {
  if (w.length() > kMaxEnumeratedLength)
    throw DomainError("reduced-word enumeration limited to length " + std::to_string(kMaxEnumeratedLength));
  std::vector<ReducedWord> out;
  ReducedWord suffix;
  std::function<void(const WeylGroupElement&)> descend = [&](const WeylGroupElement& x) {
    if (x.length() == 0) {
      out.emplace_back(suffix.rbegin(), suffix.rend());
      return;
    }
    for (int i = 1; i <= x.rank(); ++i) {
      if (!x.is_right_descent(i)) continue;
      suffix.push_back(i);
      descend(x * WeylGroupElement::simple_reflection(x.diagram(), i));
      suffix.pop_back();
    }
  };
  descend(w);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<WeylGroupElement> all_elements(const DynkinDiagram& d, std::size_t limit) {
  std::set<WeylGroupElement> seen{WeylGroupElement::identity(d)};
  std::vector<WeylGroupElement> order{WeylGroupElement::identity(d)};
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (int i = 1; i <= d.rank(); ++i) {
      auto next = order[k] * WeylGroupElement::simple_reflection(d, i);
      if (seen.insert(next).second) {
        if (order.size() >= limit) throw DomainError("Weyl group larger than enumeration limit");
        order.push_back(next);
      }
    }
  }
  return order;
}

std::vector<int> type_a_permutation(const WeylGroupElement& w) {
  if (w.diagram().type() != 'A') throw DomainError("permutation model requires type A");
  const int n = w.rank();
  std::vector<int> perm(static_cast<std::size_t>(n) + 1, 0);
  // Column i holds w(alpha_{i+1}) = e_{w(i+1)} - e_{w(i+2)} in root coordinates;
  // the e-coordinate t of sum_j c_j alpha_j is c_t - c_{t-1}.
  for (int i = 0; i < n; ++i) {
    for (int t = 0; t <= n; ++t) {
      int ct = t < n ? w.entry(t, i) : 0;
      int cprev = t > 0 ? w.entry(t - 1, i) : 0;
      int e = ct - cprev;
      if (e == 1 && i == 0) perm[0] = t + 1;
      if (e == -1) perm[static_cast<std::size_t>(i) + 1] = t + 1;
    }
  }
  return perm;
}

ReducedWord parse_word(std::string_view text) {
  ReducedWord word;
  std::string token;
  auto flush = [&](bool require) {
    auto b = token.find_first_not_of(" \t");
    auto e = token.find_last_not_of(" \t");
    std::string t = b == std::string::npos ? "" : token.substr(b, e - b + 1);
    if (t.empty()) {
      if (require) throw ParseError("empty letter in word");
      return;
    }
    if (!std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
        t.size() > 4)
      throw ParseError("word letters must be positive integers: '" + t + "'");
    word.push_back(std::stoi(t));
    token.clear();
  };
  bool any_comma = false;
  for (char c : text) {
    if (c == ',') {
      flush(true);
      any_comma = true;
    } else {
      token += c;
    }
  }
  flush(any_comma);
  return word;
}

std::string format_word(const ReducedWord& word) {
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(word[i]);
  }
  return s;
}

}  // namespace clusterbench

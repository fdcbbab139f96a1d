#pragma once

// Reference implementations used only by tests. None of these call into the
// library's algorithms; they work on plain matrices, permutations and
// numbers.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<int>>;

/// Fomin-Zelevinsky mutation of an integer matrix at k.
inline Matrix mutate(const Matrix& b, std::size_t k) {
  Matrix r = b;
  const std::size_t n = b.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == k || j == k) {
        r[i][j] = -b[i][j];
      } else {
        int bik = b[i][k], bkj = b[k][j];
        r[i][j] = b[i][j] + (std::abs(bik) * bkj + bik * std::abs(bkj)) / 2;
      }
    }
  return r;
}

/// Rank over Q of the columns `cols` of b.
inline int rank(const Matrix& b, const std::vector<std::size_t>& cols) {
  std::vector<std::vector<mpq_class>> m;
  for (const auto& row : b) {
    std::vector<mpq_class> r;
    for (std::size_t c : cols) r.emplace_back(row[c]);
    m.push_back(r);
  }
  int rk = 0;
  const std::size_t rows = m.size();
  for (std::size_t c = 0; c < cols.size() && static_cast<std::size_t>(rk) < rows; ++c) {
    std::size_t p = static_cast<std::size_t>(rk);
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[static_cast<std::size_t>(rk)]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == static_cast<std::size_t>(rk) || m[r][c] == 0) continue;
      mpq_class f = m[r][c] / m[static_cast<std::size_t>(rk)][c];
      for (std::size_t j = c; j < cols.size(); ++j) m[r][j] -= f * m[static_cast<std::size_t>(rk)][j];
    }
    ++rk;
  }
  return rk;
}

// ---------------------------------------------------------------------------
// Symmetric group S_{n+1} as the Weyl group of A_n. Permutations are 0-based
// one-line vectors p with p[j] = w(j).

using Perm = std::vector<int>;

inline Perm identity_perm(int size) {
  Perm p(static_cast<std::size_t>(size));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

/// w = s_{a1} s_{a2} ... s_{ak} acting on the left: w(j) = s_{a1}(...(s_{ak}(j))).
inline Perm word_perm(int size, const std::vector<int>& word) {
  Perm p = identity_perm(size);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int a = *it - 1;
    for (int& x : p)
      if (x == a) x = a + 1;
      else if (x == a + 1) x = a;
  }
  return p;
}

inline int inversions(const Perm& p) {
  int c = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++c;
  return c;
}

inline Perm inverse(const Perm& p) {
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return q;
}

inline Perm compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[static_cast<std::size_t>(b[i])];
  return c;
}

/// Tableau criterion: v <= w iff for all i, the sorted prefixes v[0..i] are
/// entrywise <= those of w.
inline bool bruhat_leq(const Perm& v, const Perm& w) {
  for (std::size_t i = 1; i <= v.size(); ++i) {
    std::vector<int> a(v.begin(), v.begin() + static_cast<long>(i));
    std::vector<int> b(w.begin(), w.begin() + static_cast<long>(i));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t j = 0; j < i; ++j)
      if (a[j] > b[j]) return false;
  }
  return true;
}

/// Left inversion set {(p(i), p(j)) : i < j, p(i) > p(j)}.
inline std::set<std::pair<int, int>> left_inversions(const Perm& p) {
  std::set<std::pair<int, int>> s;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s.emplace(p[j], p[i]);
  return s;
}

/// v <=_R w iff Inv_L(v) is contained in Inv_L(w).
inline bool weak_right_leq(const Perm& v, const Perm& w) {
  auto a = left_inversions(v), b = left_inversions(w);
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Every reduced word of p, by peeling left descents.
inline void reduced_words(const Perm& p, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (inversions(p) == 0) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t a = 0; a + 1 < p.size(); ++a) {
    // s_{a+1} is a left descent iff a+1 appears before a in p.
    auto ia = std::find(p.begin(), p.end(), static_cast<int>(a)) - p.begin();
    auto ib = std::find(p.begin(), p.end(), static_cast<int>(a) + 1) - p.begin();
    if (ib < ia) {
      Perm q = p;
      for (int& x : q)
        if (x == static_cast<int>(a)) x = static_cast<int>(a) + 1;
        else if (x == static_cast<int>(a) + 1) x = static_cast<int>(a);
      prefix.push_back(static_cast<int>(a) + 1);
      reduced_words(q, prefix, out);
      prefix.pop_back();
    }
  }
}

// ---------------------------------------------------------------------------

/// Leibniz expansion of a k x k determinant.
inline mpq_class leibniz(const std::vector<std::vector<mpq_class>>& m) {
  const std::size_t k = m.size();
  std::vector<std::size_t> p(k);
  std::iota(p.begin(), p.end(), 0);
  mpq_class sum = 0;
  do {
    mpq_class term = 1;
    int inv = 0;
    for (std::size_t i = 0; i < k; ++i) {
      term *= m[i][p[i]];
      for (std::size_t j = i + 1; j < k; ++j)
        if (p[i] > p[j]) ++inv;
    }
    sum += (inv % 2 ? -term : term);
  } while (std::next_permutation(p.begin(), p.end()));
  return sum;
}

// ---------------------------------------------------------------------------
// Exchange graph by numeric evaluation: cluster variables are represented by
// their values at one rational point.

struct NumericSeed {
  Matrix b;
  std::vector<mpq_class> x;
};

inline NumericSeed numeric_mutate(const NumericSeed& s, std::size_t k) {
  mpq_class in = 1, out = 1;
  for (std::size_t i = 0; i < s.b.size(); ++i) {
    int e = s.b[i][k];
    for (int t = 0; t < std::abs(e); ++t) (e > 0 ? in : out) *= s.x[i];
  }
  NumericSeed r{mutate(s.b, k), s.x};
  r.x[k] = (in + out) / s.x[k];
  return r;
}

struct NumericClosure {
  std::size_t seeds = 0;
  std::set<mpq_class> variables;
};

/// Brute-force orbit enumeration; seeds are compared as unordered clusters,
/// which determine the seed in finite type.
inline NumericClosure numeric_closure(const Matrix& b, const std::vector<bool>& frozen,
                                      const std::vector<mpq_class>& point, std::size_t limit) {
  NumericClosure result;
  std::set<std::vector<mpq_class>> seen;
  std::vector<NumericSeed> stack{{b, point}};
  auto key = [&](const NumericSeed& s) {
    std::vector<mpq_class> k;
    for (std::size_t i = 0; i < s.x.size(); ++i)
      if (!frozen[i]) k.push_back(s.x[i]);
    std::sort(k.begin(), k.end());
    return k;
  };
  seen.insert(key(stack.back()));
  while (!stack.empty() && seen.size() <= limit) {
    NumericSeed s = stack.back();
    stack.pop_back();
    for (std::size_t i = 0; i < s.x.size(); ++i)
      if (!frozen[i]) result.variables.insert(s.x[i]);
    for (std::size_t k = 0; k < s.x.size(); ++k) {
      if (frozen[k]) continue;
      NumericSeed t = numeric_mutate(s, k);
      if (seen.insert(key(t)).second) stack.push_back(std::move(t));
    }
  }
  result.seeds = seen.size();
  return result;
}

}  // namespace oracle

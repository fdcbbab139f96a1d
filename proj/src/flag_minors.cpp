#include "clusterbench/flag_minors.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <thread>

#include "clusterbench/error.hpp"
#include "clusterbench/quiver.hpp"

namespace clusterbench {

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool ExactMatrix::is_unitriangular() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

std::string ExactMatrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < n_; ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < n_; ++j) out << (j ? ", " : "") << (*this)(i, j).get_str();
    out << "]";
  }
  out << "]";
  return out.str();
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.size() != b.size()) throw DomainError("matrix size mismatch");
  const std::size_t n = a.size();
  ExactMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

ExactMatrix random_unitriangular(std::size_t n, std::mt19937_64& rng, int bound) {
  if (bound < 1) throw DomainError("sampling bound must be positive");
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  ExactMatrix m = ExactMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      int p = num(rng);
      int q = den(rng);
      m(i, j) = Rational(p, q);
      m(i, j).canonicalize();
    }
  return m;
}

std::string MinorSpec::to_string() const {
  auto set = [](const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
  };
  return "D" + set(rows) + set(cols);
}

Rational determinant(ExactMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m(pivot, c) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      Rational f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

namespace {

void check_spec(std::size_t n, const MinorSpec& spec) {
  if (spec.rows.size() != spec.cols.size()) throw DomainError("minor needs as many rows as columns");
  for (const auto* s : {&spec.rows, &spec.cols})
    for (std::size_t i = 0; i < s->size(); ++i) {
      int v = (*s)[i];
      if (v < 1 || static_cast<std::size_t>(v) > n || (i && (*s)[i - 1] >= v))
        throw DomainError("minor index sets must be increasing subsets of 1.." + std::to_string(n));
    }
}

std::vector<int> image_of_initial(const WeylGroupElement& w, int i) {
  auto perm = type_a_permutation(w);
  std::vector<int> out(perm.begin(), perm.begin() + i);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> initial_segment(int i) {
  std::vector<int> out;
  for (int k = 1; k <= i; ++k) out.push_back(k);
  return out;
}

}  // namespace

Rational flag_minor(const ExactMatrix& g, const MinorSpec& spec) {
  check_spec(g.size(), spec);
  const std::size_t k = spec.rows.size();
  ExactMatrix sub(k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      sub(a, b) = g(static_cast<std::size_t>(spec.rows[a] - 1), static_cast<std::size_t>(spec.cols[b] - 1));
  return determinant(std::move(sub));
}

MinorSpec generalized_minor_sets(const WeylGroupElement& u, const WeylGroupElement& v, int i) {
  if (!(u.diagram() == v.diagram())) throw DomainError("elements of different Weyl groups");
  if (u.diagram().type() != 'A') throw DomainError("generalized minors are implemented for type A only");
  if (i < 1 || i > u.rank()) throw DomainError("fundamental weight index out of range");
  return {image_of_initial(u, i), image_of_initial(v, i)};
}

std::size_t unitriangular_dimension(std::size_t n) { return n * (n - 1) / 2; }

std::size_t unitriangular_variable(std::size_t n, int i, int j) {
  if (i < 1 || j <= i || static_cast<std::size_t>(j) > n) throw DomainError("not an entry above the diagonal");
  std::size_t r = static_cast<std::size_t>(i - 1);
  // Entries in rows 1..i-1 come first.
  std::size_t before = r * n - r * (r + 1) / 2;
  return before + static_cast<std::size_t>(j - i - 1);
}

Polynomial symbolic_minor(std::size_t n, const MinorSpec& spec) {
  check_spec(n, spec);
  const std::size_t nv = unitriangular_dimension(n);
  const std::size_t k = spec.rows.size();
  auto entry = [&](int r, int c) {
    if (r == c) return Polynomial::constant(nv, Integer(1));
    if (r > c) return Polynomial(nv);
    return Polynomial::variable(nv, unitriangular_variable(n, r, c));
  };
  std::map<unsigned, Polynomial> memo;
  // Expansion along the rows in order; `mask` marks used columns.
  auto rec = [&](auto&& self, std::size_t depth, unsigned mask) -> Polynomial {
    if (depth == k) return Polynomial::constant(nv, Integer(1));
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    Polynomial sum(nv);
    int sign = 1;
    for (std::size_t c = 0; c < k; ++c) {
      if (mask & (1u << c)) continue;
      Polynomial e = entry(spec.rows[depth], spec.cols[c]);
      if (!e.is_zero()) {
        Polynomial term = e * self(self, depth + 1, mask | (1u << c));
        if (sign > 0) sum += term;
        else sum -= term;
      }
      sign = -sign;
    }
    memo.emplace(mask, sum);
    return sum;
  };
  return rec(rec, 0, 0);
}

std::string to_string(MinorConvention c) {
  return c == MinorConvention::rows_initial ? "rows_initial" : "columns_initial";
}

std::vector<MinorSpec> seed_minors(const DynkinDiagram& d, const ReducedWord& word, MinorConvention c) {
  if (d.type() != 'A') throw DomainError("minor realization is implemented for type A only");
  if (!is_reduced(d, word)) throw DomainError("word is not reduced");
  std::vector<MinorSpec> out;
  WeylGroupElement prefix = WeylGroupElement::identity(d);
  for (int letter : word) {
    prefix = prefix * WeylGroupElement::simple_reflection(d, letter);
    auto fixed = initial_segment(letter);
    auto moved = image_of_initial(prefix, letter);
    if (c == MinorConvention::rows_initial) out.push_back({fixed, moved});
    else out.push_back({moved, fixed});
  }
  return out;
}

namespace {

struct SymbolicSeed {
  IceQuiver quiver;
  std::vector<Polynomial> minors;
  /// x_k' per mutable vertex, nullopt where the binomial is not divisible.
  std::vector<std::optional<Polynomial>> mutated;
  std::vector<Polynomial> binomials;
};

SymbolicSeed symbolic_seed(const DynkinDiagram& d, const ReducedWord& word, MinorConvention c) {
  SymbolicSeed s;
  s.quiver = gls_quiver(d, word);
  const std::size_t n = static_cast<std::size_t>(d.rank()) + 1;
  const std::size_t nv = unitriangular_dimension(n);
  for (const auto& spec : seed_minors(d, word, c)) s.minors.push_back(symbolic_minor(n, spec));
  s.mutated.resize(s.quiver.size());
  s.binomials.resize(s.quiver.size(), Polynomial(nv));
  for (std::size_t k : s.quiver.mutable_vertices()) {
    Polynomial in = Polynomial::constant(nv, Integer(1));
    Polynomial out = in;
    for (std::size_t i = 0; i < s.quiver.size(); ++i) {
      int b = s.quiver.b(i, k);
      if (b > 0) in *= s.minors[i].pow(static_cast<unsigned>(b));
      if (b < 0) out *= s.minors[i].pow(static_cast<unsigned>(-b));
    }
    s.binomials[k] = in + out;
    if (!s.minors[k].is_zero()) s.mutated[k] = divide_exact(s.binomials[k], s.minors[k]);
  }
  return s;
}

bool consistent(const SymbolicSeed& s) {
  for (std::size_t k : s.quiver.mutable_vertices())
    if (!s.mutated[k]) return false;
  return true;
}

std::string relation_text(const IceQuiver& q, std::size_t k) {
  const std::size_t n = q.size();
  Polynomial in = Polynomial::constant(n, Integer(1));
  Polynomial out = in;
  for (std::size_t i = 0; i < n; ++i) {
    int b = q.b(i, k);
    if (b > 0) in *= Polynomial::variable(n, i, b);
    if (b < 0) out *= Polynomial::variable(n, i, -b);
  }
  std::string x = "x" + std::to_string(k + 1);
  return x + "*" + x + "' = " + in.to_string() + " + " + out.to_string();
}

}  // namespace

SeedRealization cn_seed_realization(const DynkinDiagram& d, const ReducedWord& word) {
  for (auto c : {MinorConvention::rows_initial, MinorConvention::columns_initial})
    if (consistent(symbolic_seed(d, word, c))) return {c, seed_minors(d, word, c)};
  throw DomainError("convention mismatch: exchange binomials are not divisible under either row/column convention");
}

bool ExchangeReport::all_zero() const {
  return std::all_of(checks.begin(), checks.end(), [](const ExchangeCheck& c) { return c.holds; });
}

ExchangeReport verify_exchange_identities(const DynkinDiagram& d, const ReducedWord& word, std::size_t trials,
                                          std::uint64_t seed, std::size_t jobs) {
  ExchangeReport report;
  report.realization = cn_seed_realization(d, word);
  SymbolicSeed sym = symbolic_seed(d, word, report.realization.convention);
  const std::size_t n = static_cast<std::size_t>(d.rank()) + 1;
  const auto& minors = report.realization.minors;

  std::mt19937_64 rng(seed);
  std::vector<ExactMatrix> samples;
  for (std::size_t t = 0; t < trials; ++t) samples.push_back(random_unitriangular(n, rng));

  auto mut = sym.quiver.mutable_vertices();
  for (std::size_t k : mut) {
    ExchangeCheck c;
    c.vertex = k;
    c.relation = relation_text(sym.quiver, k);
    c.mutated = *sym.mutated[k];
    c.trials = trials;
    report.checks.push_back(std::move(c));
  }

  // residual[t][j] for sample t and check j.
  std::vector<std::vector<Rational>> residual(trials, std::vector<Rational>(mut.size()));
  auto evaluate = [&](std::size_t t) {
    const ExactMatrix& g = samples[t];
    std::vector<Rational> point;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) point.push_back(g(i, j));
    std::vector<Rational> values;
    for (const auto& spec : minors) values.push_back(flag_minor(g, spec));
    for (std::size_t j = 0; j < mut.size(); ++j) {
      std::size_t k = mut[j];
      Rational in = 1, out = 1;
      for (std::size_t i = 0; i < sym.quiver.size(); ++i) {
        int b = sym.quiver.b(i, k);
        for (int e = 0; e < std::abs(b); ++e) (b > 0 ? in : out) *= values[i];
      }
      Rational xk_prime = report.checks[j].mutated.evaluate(point);
      residual[t][j] = values[k] * xk_prime - (in + out);
    }
  };
  jobs = std::max<std::size_t>(1, jobs);
  if (jobs == 1) {
    for (std::size_t t = 0; t < trials; ++t) evaluate(t);
  } else {
    std::vector<std::thread> workers;
    for (std::size_t w = 0; w < jobs; ++w)
      workers.emplace_back([&, w] {
        for (std::size_t t = w; t < trials; t += jobs) evaluate(t);
      });
    for (auto& th : workers) th.join();
  }
  for (std::size_t j = 0; j < mut.size(); ++j)
    for (std::size_t t = 0; t < trials; ++t)
      if (residual[t][j] != 0) {
        report.checks[j].holds = false;
        report.checks[j].counterexample = samples[t];
        report.checks[j].residual = residual[t][j];
        break;
      }
  return report;
}

Rational richardson_denominator(const WeylGroupElement& v, const WeylGroupElement& w, const ExactMatrix& g) {
  if (static_cast<std::size_t>(v.rank()) + 1 != g.size()) throw DomainError("matrix size does not match the rank");
  Rational product = 1;
  WeylGroupElement vi = v.inverse(), wi = w.inverse();
  for (int i = 1; i <= v.rank(); ++i) product *= flag_minor(g, generalized_minor_sets(vi, wi, i));
  return product;
}

}  // namespace clusterbench

#include "clusterbench/exact_algebra.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

#include "clusterbench/error.hpp"

namespace clusterbench {

int grlex_compare(const Exponents& a, const Exponents& b) {
  long da = std::accumulate(a.begin(), a.end(), 0L);
  long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(std::size_t nvars, const Integer& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_.push_back({Exponents(nvars, 0), c});
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index, int power) {
  if (index >= nvars) throw DomainError("variable index out of range");
  Exponents e(nvars, 0);
  e[index] = power;
  return monomial(std::move(e), 1);
}

Polynomial Polynomial::monomial(Exponents exponents, const Integer& c) {
  Polynomial p(exponents.size());
  if (c != 0) p.terms_.push_back({std::move(exponents), c});
  return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
  std::map<Exponents, Integer, GrlexGreater> acc;
  for (auto& t : terms) {
    if (t.exponents.size() != nvars) throw DomainError("exponent vector length mismatch");
    acc[std::move(t.exponents)] += t.coefficient;
  }
  Polynomial p(nvars);
  p.terms_.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (c != 0) p.terms_.push_back({e, c});
  }
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  return std::all_of(terms_[0].exponents.begin(), terms_[0].exponents.end(),
                     [](int e) { return e == 0; });
}

bool Polynomial::is_one() const {
  return is_constant() && !terms_.empty() && terms_[0].coefficient == 1;
}

bool Polynomial::is_polynomial() const {
  for (const auto& t : terms_)
    for (int e : t.exponents)
      if (e < 0) return false;
  return true;
}

int Polynomial::degree(std::size_t var) const {
  int d = 0;
  bool first = true;
  for (const auto& t : terms_) {
    if (first || t.exponents[var] > d) d = t.exponents[var];
    first = false;
  }
  return d;
}

int Polynomial::min_degree(std::size_t var) const {
  int d = 0;
  bool first = true;
  for (const auto& t : terms_) {
    if (first || t.exponents[var] < d) d = t.exponents[var];
    first = false;
  }
  return d;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return 0;
  return std::accumulate(terms_[0].exponents.begin(), terms_[0].exponents.end(), 0);
}

Exponents Polynomial::min_exponents() const {
  Exponents m(nvars_, 0);
  if (terms_.empty()) return m;
  m = terms_[0].exponents;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < nvars_; ++i) m[i] = std::min(m[i], t.exponents[i]);
  return m;
}

Polynomial Polynomial::shifted(const Exponents& shift) const {
  Polynomial r = *this;
  for (auto& t : r.terms_)
    for (std::size_t i = 0; i < nvars_; ++i) t.exponents[i] += shift[i];
  return r;
}

Integer Polynomial::content() const {
  Integer g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coefficient.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw DomainError("polynomials have different variable counts");
}

Polynomial Polynomial::merge(const Polynomial& a, const Polynomial& b, bool subtract) {
  Polynomial r(a.nvars_);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    int c;
    if (i == a.terms_.end()) c = -1;
    else if (j == b.terms_.end()) c = 1;
    else c = grlex_compare(i->exponents, j->exponents);
    if (c > 0) {
      r.terms_.push_back(*i++);
    } else if (c < 0) {
      r.terms_.push_back(*j++);
      if (subtract) r.terms_.back().coefficient = -r.terms_.back().coefficient;
    } else {
      Integer s = subtract ? Integer(i->coefficient - j->coefficient)
                           : Integer(i->coefficient + j->coefficient);
      if (s != 0) r.terms_.push_back({i->exponents, std::move(s)});
      ++i;
      ++j;
    }
  }
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_compatible(o);
  *this = merge(*this, o, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_compatible(o);
  *this = merge(*this, o, true);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial r(a.nvars_);
  if (a.is_zero() || b.is_zero()) return r;
  if (b.terms_.size() == 1 || a.terms_.size() == 1) {
    // Multiplying by a single term preserves the order.
    const Polynomial& many = b.terms_.size() == 1 ? a : b;
    const Polynomial::Term& t = b.terms_.size() == 1 ? b.terms_[0] : a.terms_[0];
    r.terms_.reserve(many.terms_.size());
    for (const auto& s : many.terms_) {
      Exponents e = s.exponents;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += t.exponents[i];
      r.terms_.push_back({std::move(e), s.coefficient * t.coefficient});
    }
    return r;
  }
  std::map<Exponents, Integer, GrlexGreater> acc;
  Exponents e(a.nvars_);
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = s.exponents[i] + t.exponents[i];
      auto [it, inserted] = acc.try_emplace(e);
      mpz_addmul(it->second.get_mpz_t(), s.coefficient.get_mpz_t(), t.coefficient.get_mpz_t());
    }
  }
  r.terms_.reserve(acc.size());
  for (auto& [ex, c] : acc)
    if (c != 0) r.terms_.push_back({ex, c});
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial Polynomial::scaled(const Integer& c) const {
  if (c == 0) return Polynomial(nvars_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient *= c;
  return r;
}

Polynomial Polynomial::divided_by_integer(const Integer& c) const {
  Polynomial r = *this;
  for (auto& t : r.terms_) mpz_divexact(t.coefficient.get_mpz_t(), t.coefficient.get_mpz_t(), c.get_mpz_t());
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw DomainError("evaluation point has wrong dimension");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational term = t.coefficient;
    for (std::size_t i = 0; i < nvars_; ++i) {
      int e = t.exponents[i];
      if (e == 0) continue;
      if (e < 0 && point[i] == 0) throw DomainError("negative power of zero in evaluation");
      Rational base = e > 0 ? point[i] : Rational(1 / point[i]);
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(std::abs(e)));
      mpz_pow_ui(p.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(std::abs(e)));
      p.canonicalize();
      term *= p;
    }
    sum += term;
  }
  return sum;
}

namespace {

std::string monomial_string(const Exponents& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (e[i] != 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    bool neg = t.coefficient < 0;
    Integer mag = abs(t.coefficient);
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string mono = monomial_string(t.exponents);
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Division and gcd

Polynomial normalized(const Polynomial& p) {
  if (p.is_zero()) return p;
  Integer c = p.content();
  if (p.leading_coefficient() < 0) c = -c;
  return c == 1 ? p : p.divided_by_integer(c);
}

namespace {

void require_ordinary(const Polynomial& p) {
  if (!p.is_polynomial()) throw DomainError("operation requires an ordinary polynomial");
}

bool divides_monomial(const Exponents& d, const Exponents& e) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > e[i]) return false;
  return true;
}

// r -= t * q where t is a single term; q sorted, so t*q is sorted as well.
Polynomial subtract_term_multiple(const Polynomial& r, const Exponents& shift,
                                  const Integer& c, const Polynomial& q) {
  Polynomial tq = q.shifted(shift).scaled(c);
  return r - tq;
}

}  // namespace

std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw DomainError("division by zero polynomial");
  if (p.nvars() != q.nvars()) throw DomainError("polynomials have different variable counts");
  require_ordinary(p);
  require_ordinary(q);
  if (p.is_zero()) return Polynomial(p.nvars());
  const std::size_t n = p.nvars();
  if (q.total_degree() > p.total_degree()) return std::nullopt;
  for (std::size_t v = 0; v < n; ++v) {
    if (q.degree(v) > p.degree(v) || q.min_degree(v) > p.min_degree(v)) return std::nullopt;
  }
  const auto& lt = q.leading_term();
  if (q.is_monomial()) {
    std::vector<Polynomial::Term> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
      if (!mpz_divisible_p(t.coefficient.get_mpz_t(), lt.coefficient.get_mpz_t())) return std::nullopt;
      Exponents e = t.exponents;
      for (std::size_t i = 0; i < n; ++i) e[i] -= lt.exponents[i];
      Integer c;
      mpz_divexact(c.get_mpz_t(), t.coefficient.get_mpz_t(), lt.coefficient.get_mpz_t());
      out.push_back({std::move(e), std::move(c)});
    }
    return Polynomial::from_terms(n, std::move(out));
  }
  std::vector<Polynomial::Term> quotient;
  Polynomial r = p;
  Exponents shift(n);
  while (!r.is_zero()) {
    const auto& rt = r.leading_term();
    if (!divides_monomial(lt.exponents, rt.exponents)) return std::nullopt;
    if (!mpz_divisible_p(rt.coefficient.get_mpz_t(), lt.coefficient.get_mpz_t())) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) shift[i] = rt.exponents[i] - lt.exponents[i];
    Integer c;
    mpz_divexact(c.get_mpz_t(), rt.coefficient.get_mpz_t(), lt.coefficient.get_mpz_t());
    quotient.push_back({shift, c});
    r = subtract_term_multiple(r, shift, c, q);
  }
  return Polynomial::from_terms(n, std::move(quotient));
}

std::pair<Polynomial, Polynomial> divide_with_remainder(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw DomainError("division by zero polynomial");
  if (p.nvars() != q.nvars()) throw DomainError("polynomials have different variable counts");
  require_ordinary(p);
  require_ordinary(q);
  const std::size_t n = p.nvars();
  const auto& lt = q.leading_term();
  std::vector<Polynomial::Term> quotient;
  std::vector<Polynomial::Term> remainder;
  Polynomial r = p;
  Exponents shift(n);
  while (!r.is_zero()) {
    const auto& rt = r.leading_term();
    if (divides_monomial(lt.exponents, rt.exponents) &&
        mpz_divisible_p(rt.coefficient.get_mpz_t(), lt.coefficient.get_mpz_t())) {
      for (std::size_t i = 0; i < n; ++i) shift[i] = rt.exponents[i] - lt.exponents[i];
      Integer c;
      mpz_divexact(c.get_mpz_t(), rt.coefficient.get_mpz_t(), lt.coefficient.get_mpz_t());
      quotient.push_back({shift, c});
      r = subtract_term_multiple(r, shift, c, q);
    } else {
      remainder.push_back(rt);
      r = r - Polynomial::monomial(rt.exponents, rt.coefficient);
    }
  }
  return {Polynomial::from_terms(n, std::move(quotient)),
          Polynomial::from_terms(n, std::move(remainder))};
}

namespace {

// Dense univariate view: coefficient polynomials indexed by degree in `var`,
// each with the `var` exponent cleared. The back entry is nonzero.
using Univariate = std::vector<Polynomial>;

Univariate to_univariate(const Polynomial& p, std::size_t var) {
  const std::size_t n = p.nvars();
  std::vector<std::vector<Polynomial::Term>> buckets(static_cast<std::size_t>(p.degree(var)) + 1);
  for (const auto& t : p.terms()) {
    Polynomial::Term s = t;
    int d = s.exponents[var];
    s.exponents[var] = 0;
    buckets[static_cast<std::size_t>(d)].push_back(std::move(s));
  }
  Univariate u;
  u.reserve(buckets.size());
  for (auto& b : buckets) u.push_back(Polynomial::from_terms(n, std::move(b)));
  return u;
}

Polynomial from_univariate(const Univariate& u, std::size_t var, std::size_t nvars) {
  std::vector<Polynomial::Term> terms;
  for (std::size_t d = 0; d < u.size(); ++d)
    for (const auto& t : u[d].terms()) {
      Polynomial::Term s = t;
      s.exponents[var] = static_cast<int>(d);
      terms.push_back(std::move(s));
    }
  return Polynomial::from_terms(nvars, std::move(terms));
}

void trim(Univariate& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

Polynomial univariate_content(const Univariate& u) {
  Polynomial g(u.front().nvars());
  for (const auto& c : u) {
    g = poly_gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

// Primitive part, with the integer content removed as well.
Univariate univariate_primitive(const Univariate& u) {
  Polynomial c = univariate_content(u);
  Univariate r;
  r.reserve(u.size());
  Integer ic = 0;
  for (const auto& x : u) {
    r.push_back(c.is_one() ? x : *divide_exact(x, c));
    ic = gcd(ic, r.back().content());
  }
  if (ic > 1)
    for (auto& x : r) x = x.divided_by_integer(ic);
  return r;
}

// Pseudo-remainder of a by b in the main variable.
Univariate pseudo_remainder(Univariate a, const Univariate& b) {
  const std::size_t db = b.size() - 1;
  const Polynomial& lcb = b.back();
  trim(a);
  while (!a.empty() && a.size() - 1 >= db) {
    Polynomial lca = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c = c * lcb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= lca * b[i];
    trim(a);
  }
  return a;
}

std::vector<bool> occurring_variables(const Polynomial& p) {
  std::vector<bool> occ(p.nvars(), false);
  for (const auto& t : p.terms())
    for (std::size_t i = 0; i < p.nvars(); ++i)
      if (t.exponents[i] != 0) occ[i] = true;
  return occ;
}

// gcd of primitive polynomials without monomial content.
Polynomial gcd_primitive(const Polynomial& a, const Polynomial& b) {
  const std::size_t n = a.nvars();
  if (a.is_constant() || b.is_constant()) return Polynomial::constant(n, 1);
  if (a == b || a == -b) return normalized(a);
  if (a.size() <= b.size()) {
    if (divide_exact(b, a)) return normalized(a);
    if (divide_exact(a, b)) return normalized(b);
  } else {
    if (divide_exact(a, b)) return normalized(b);
    if (divide_exact(b, a)) return normalized(a);
  }
  auto occ_a = occurring_variables(a);
  auto occ_b = occurring_variables(b);

  // A variable present in only one argument: the gcd divides every
  // coefficient of that argument with respect to it.
  for (std::size_t v = 0; v < n; ++v) {
    if (occ_a[v] == occ_b[v]) continue;
    const Polynomial& with = occ_a[v] ? a : b;
    Polynomial g = occ_a[v] ? b : a;
    for (const auto& c : to_univariate(with, v)) {
      g = poly_gcd(g, c);
      if (g.is_constant()) break;
    }
    return normalized(g);
  }

  std::size_t var = n;
  int best = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (!occ_a[v]) continue;
    int d = std::max(a.degree(v), b.degree(v));
    if (var == n || d < best) {
      var = v;
      best = d;
    }
  }
  assert(var < n);

  Univariate ua = to_univariate(a, var);
  Univariate ub = to_univariate(b, var);
  Polynomial ca = univariate_content(ua);
  Polynomial cb = univariate_content(ub);
  Polynomial content_gcd = poly_gcd(ca, cb);
  ua = univariate_primitive(ua);
  ub = univariate_primitive(ub);
  if (ua.size() < ub.size()) std::swap(ua, ub);
  while (true) {
    Univariate r = pseudo_remainder(ua, ub);
    if (r.empty()) break;
    if (r.size() == 1) {
      ub = Univariate{Polynomial::constant(n, 1)};
      break;
    }
    ua = std::move(ub);
    ub = univariate_primitive(r);
  }
  ub = univariate_primitive(ub);
  return normalized(content_gcd * from_univariate(ub, var, n));
}

}  // namespace

Polynomial poly_gcd(const Polynomial& p, const Polynomial& q) {
  if (p.nvars() != q.nvars()) throw DomainError("polynomials have different variable counts");
  require_ordinary(p);
  require_ordinary(q);
  if (p.is_zero()) return normalized(q);
  if (q.is_zero()) return normalized(p);
  const std::size_t n = p.nvars();
  Exponents mp = p.min_exponents();
  Exponents mq = q.min_exponents();
  Exponents common(n), neg_p(n), neg_q(n);
  for (std::size_t i = 0; i < n; ++i) {
    common[i] = std::min(mp[i], mq[i]);
    neg_p[i] = -mp[i];
    neg_q[i] = -mq[i];
  }
  Polynomial monomial_part = Polynomial::monomial(common, 1);
  if (p.is_monomial() || q.is_monomial()) return monomial_part;
  Polynomial a = normalized(p.shifted(neg_p));
  Polynomial b = normalized(q.shifted(neg_q));
  return gcd_primitive(a, b) * monomial_part;
}

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(std::size_t nvars)
    : num_(nvars), den_(Polynomial::constant(nvars, 1)) {}

RationalFunction::RationalFunction(const Polynomial& p) {
  Exponents m = p.min_exponents();
  Exponents shift(p.nvars()), den(p.nvars());
  for (std::size_t i = 0; i < m.size(); ++i) {
    shift[i] = m[i] < 0 ? -m[i] : 0;
    den[i] = shift[i];
  }
  num_ = p.shifted(shift);
  den_ = Polynomial::monomial(den, 1);
  normalize();
}

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den)
    : num_(num), den_(den) {
  if (num.nvars() != den.nvars()) throw DomainError("numerator and denominator variable counts differ");
  if (den.is_zero()) throw DomainError("division by zero");
  if (!num.is_polynomial() || !den.is_polynomial()) {
    *this = RationalFunction(num) / RationalFunction(den);
    return;
  }
  normalize();
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den, Reduced)
    : num_(std::move(num)), den_(std::move(den)) {
  fix_sign();
}

RationalFunction RationalFunction::constant(std::size_t nvars, const Integer& c) {
  return RationalFunction(Polynomial::constant(nvars, c), Polynomial::constant(nvars, 1), Reduced{});
}

RationalFunction RationalFunction::constant(std::size_t nvars, const Rational& c) {
  return RationalFunction(Polynomial::constant(nvars, c.get_num()),
                          Polynomial::constant(nvars, c.get_den()), Reduced{});
}

RationalFunction RationalFunction::variable(std::size_t nvars, std::size_t index) {
  return RationalFunction(Polynomial::variable(nvars, index), Polynomial::constant(nvars, 1), Reduced{});
}

void RationalFunction::fix_sign() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(num_.nvars(), 1);
    return;
  }
  if (den_.leading_coefficient() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(num_.nvars(), 1);
    return;
  }
  Polynomial g = poly_gcd(num_, den_);
  if (!g.is_one()) {
    num_ = *divide_exact(num_, g);
    den_ = *divide_exact(den_, g);
  }
  Integer c = gcd(num_.content(), den_.content());
  if (c != 1) {
    num_ = num_.divided_by_integer(c);
    den_ = den_.divided_by_integer(c);
  }
  fix_sign();
}

RationalFunction RationalFunction::operator-() const {
  return RationalFunction(-num_, den_, Reduced{});
}

namespace {

void check_same_nvars(const RationalFunction& a, const RationalFunction& b) {
  if (a.nvars() != b.nvars()) throw DomainError("rational functions have different variable counts");
}

// Cancels the common factor of x and y, returning (x/g, y/g).
std::pair<Polynomial, Polynomial> cancel(const Polynomial& x, const Polynomial& y) {
  if (x.is_one() || y.is_one()) return {x, y};
  Polynomial g = poly_gcd(x, y);
  if (g.is_one()) return {x, y};
  return {*divide_exact(x, g), *divide_exact(y, g)};
}

}  // namespace

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  check_same_nvars(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  auto [da, db] = cancel(a.den_, b.den_);  // da = a.den/g, db = b.den/g
  Polynomial num = a.num_ * db + b.num_ * da;
  Polynomial den = a.den_ * db;
  return RationalFunction(num, den);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  check_same_nvars(a, b);
  if (a.is_zero() || b.is_zero()) return RationalFunction(a.nvars());
  auto [an, bd] = cancel(a.num_, b.den_);
  auto [bn, ad] = cancel(b.num_, a.den_);
  Polynomial num = an * bn;
  Polynomial den = ad * bd;
  // Integer contents may still share factors across the cross products.
  Integer c = gcd(num.content(), den.content());
  if (c != 1) {
    num = num.divided_by_integer(c);
    den = den.divided_by_integer(c);
  }
  return RationalFunction(std::move(num), std::move(den), RationalFunction::Reduced{});
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  check_same_nvars(a, b);
  if (b.is_zero()) throw DomainError("division by zero");
  return a * RationalFunction(b.den_, b.num_, RationalFunction::Reduced{});
}

RationalFunction RationalFunction::pow(int e) const {
  if (e == 0) return constant(nvars(), Integer(1));
  if (e < 0) {
    if (is_zero()) throw DomainError("division by zero");
    return RationalFunction(den_.pow(static_cast<unsigned>(-e)), num_.pow(static_cast<unsigned>(-e)),
                            Reduced{});
  }
  return RationalFunction(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), Reduced{});
}

Rational RationalFunction::evaluate(std::span<const Rational> point) const {
  Rational d = den_.evaluate(point);
  if (d == 0) throw DomainError("denominator vanishes at evaluation point");
  return num_.evaluate(point) / d;
}

namespace {

bool needs_parens_as_divisor(const Polynomial& p) {
  if (p.size() != 1) return true;
  const auto& t = p.leading_term();
  if (p.is_constant()) return false;
  if (t.coefficient != 1) return true;
  int nonzero = 0;
  for (int e : t.exponents)
    if (e != 0) ++nonzero;
  return nonzero > 1;
}

}  // namespace

std::string RationalFunction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::string n = num_.to_string();
  if (num_.size() > 1) n = "(" + n + ")";
  std::string d = den_.to_string();
  if (needs_parens_as_divisor(den_)) d = "(" + d + ")";
  return n + "/" + d;
}

RationalFunction arith(const RationalFunction& f, const RationalFunction& g, ArithOp op) {
  if (f.nvars() != g.nvars()) throw DomainError("rational functions have different variable counts");
  switch (op) {
    case ArithOp::add: return f + g;
    case ArithOp::sub: return f - g;
    case ArithOp::mul: return f * g;
    case ArithOp::div: return f / g;
  }
  throw DomainError("unknown arithmetic operation");
}

// ---------------------------------------------------------------------------
// Substitution and Laurent tests

RationalFunction substitute(const RationalFunction& f, std::span<const RationalFunction> values) {
  const std::size_t n = f.nvars();
  if (values.size() != n) throw DomainError("substitution must assign every variable");
  std::size_t m = n == 0 ? 0 : values[0].nvars();
  for (const auto& v : values)
    if (v.nvars() != m) throw DomainError("substituted values have different variable counts");
  if (n == 0) {
    // Constant function: re-embed in the target ring.
    Rational c(f.numerator().is_zero() ? Integer(0) : f.numerator().leading_coefficient(),
               f.denominator().leading_coefficient());
    c.canonicalize();
    return RationalFunction::constant(m, c);
  }

  // Write each value as P_i/Q_i. With D_i the largest exponent of x_i in num
  // or den, both become polynomials after multiplying by prod Q_i^{D_i}, and
  // that common factor cancels in the quotient.
  std::vector<int> max_deg(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    max_deg[i] = std::max(f.numerator().degree(i), f.denominator().degree(i));

  std::vector<std::vector<Polynomial>> num_pow(n), den_pow(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (max_deg[i] == 0) continue;
    num_pow[i].push_back(Polynomial::constant(m, 1));
    den_pow[i].push_back(Polynomial::constant(m, 1));
    for (int d = 1; d <= max_deg[i]; ++d) {
      num_pow[i].push_back(num_pow[i].back() * values[i].numerator());
      den_pow[i].push_back(den_pow[i].back() * values[i].denominator());
    }
  }

  auto image = [&](const Polynomial& p) {
    Polynomial acc(m);
    for (const auto& t : p.terms()) {
      Polynomial term = Polynomial::constant(m, t.coefficient);
      for (std::size_t i = 0; i < n; ++i) {
        if (max_deg[i] == 0) continue;
        int e = t.exponents[i];
        term = term * num_pow[i][static_cast<std::size_t>(e)];
        term = term * den_pow[i][static_cast<std::size_t>(max_deg[i] - e)];
      }
      acc += term;
    }
    return acc;
  };

  Polynomial num = image(f.numerator());
  Polynomial den = image(f.denominator());
  if (den.is_zero()) throw DomainError("substitution makes the denominator identically zero");
  return RationalFunction(num, den);
}

RationalFunction substitute(const RationalFunction& f,
                            const std::map<std::size_t, RationalFunction>& assignment) {
  const std::size_t n = f.nvars();
  std::vector<RationalFunction> values;
  values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto it = assignment.find(i);
    if (it != assignment.end()) {
      if (it->second.nvars() != n) throw DomainError("partial substitution must preserve the variable count");
      values.push_back(it->second);
    } else {
      values.push_back(RationalFunction::variable(n, i));
    }
  }
  for (const auto& [k, v] : assignment)
    if (k >= n) throw DomainError("substitution assigns an unknown variable");
  return substitute(f, std::span<const RationalFunction>(values));
}

std::optional<LaurentPolynomial> is_laurent(const RationalFunction& f) {
  const Polynomial& den = f.denominator();
  if (!den.is_monomial() || den.leading_coefficient() != 1) return std::nullopt;
  Exponents shift = den.leading_term().exponents;
  for (auto& e : shift) e = -e;
  return f.numerator().shifted(shift);
}

}  // namespace clusterbench

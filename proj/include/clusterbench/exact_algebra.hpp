#pragma once

// Sparse multivariate Laurent polynomials and rational functions over the
// integers, with exact gcd-based normalization.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace clusterbench {

using Integer = mpz_class;
using Rational = mpq_class;
using Exponents = std::vector<int>;

/// Graded lexicographic order: total degree first, then the exponent of x1,
/// then x2, and so on. Returns <0, 0, >0.
int grlex_compare(const Exponents& a, const Exponents& b);

struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    return grlex_compare(a, b) > 0;
  }
};

/// Sparse Laurent polynomial in a fixed number of variables. Exponents may be
/// negative; an ordinary polynomial is one whose exponents are all >= 0.
/// Terms are kept in strictly decreasing grlex order with nonzero
/// coefficients, so structural equality is value equality.
class Polynomial {
 public:
  struct Term {
    Exponents exponents;
    Integer coefficient;

    bool operator==(const Term&) const = default;
  };

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Integer& c);
  static Polynomial variable(std::size_t nvars, std::size_t index, int power = 1);
  static Polynomial monomial(Exponents exponents, const Integer& c);
  /// Combines like terms and drops zeros; input order is irrelevant.
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// True when no exponent is negative.
  bool is_polynomial() const;

  const Term& leading_term() const { return terms_.front(); }
  const Integer& leading_coefficient() const { return terms_.front().coefficient; }
  int degree(std::size_t var) const;
  int min_degree(std::size_t var) const;
  int total_degree() const;
  /// Componentwise minimum of all exponent vectors (zero vector for 0).
  Exponents min_exponents() const;
  /// Multiplies by the monomial x^shift.
  Polynomial shifted(const Exponents& shift) const;
  /// Nonnegative gcd of all coefficients; 0 for the zero polynomial.
  Integer content() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Integer& c) const;
  /// Divides every coefficient by c, which must divide them exactly.
  Polynomial divided_by_integer(const Integer& c) const;
  Polynomial pow(unsigned e) const;

  /// Evaluates at a rational point; negative exponents invert the value.
  Rational evaluate(std::span<const Rational> point) const;

  bool operator==(const Polynomial& o) const = default;

  /// Expression-grammar rendering, e.g. "x1^2*x2 - 3*x3 + 1".
  std::string to_string() const;

 private:
  void check_compatible(const Polynomial& o) const;
  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract);

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

using LaurentPolynomial = Polynomial;

/// Primitive part with positive leading coefficient; zero stays zero.
Polynomial normalized(const Polynomial& p);

/// Greatest common divisor of two ordinary polynomials over Q, returned as a
/// primitive integer polynomial with positive leading coefficient.
/// gcd(0, q) = normalized(q).
Polynomial poly_gcd(const Polynomial& p, const Polynomial& q);

/// p / q when q divides p in Z[x]; nullopt otherwise. Both must be ordinary
/// polynomials.
std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& q);

/// Multivariate division of ordinary polynomials: returns (quotient,
/// remainder) with p = quotient * q + remainder. A term of p moves to the
/// remainder when the leading term of q does not divide it over Z.
std::pair<Polynomial, Polynomial> divide_with_remainder(const Polynomial& p,
                                                        const Polynomial& q);

/// Element of Q(x1..xn) stored as a reduced fraction of integer polynomials.
/// Canonical form: gcd(num, den) = 1 over Q, the integer contents of num and
/// den are coprime, and the grlex-leading coefficient of den is positive.
class RationalFunction {
 public:
  RationalFunction() : RationalFunction(0) {}
  explicit RationalFunction(std::size_t nvars);
  /// Embeds a Laurent polynomial (negative exponents move to the denominator).
  explicit RationalFunction(const Polynomial& p);
  RationalFunction(const Polynomial& num, const Polynomial& den);

  static RationalFunction constant(std::size_t nvars, const Integer& c);
  static RationalFunction constant(std::size_t nvars, const Rational& c);
  static RationalFunction variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return num_.nvars(); }
  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  std::size_t term_count() const { return num_.size() + den_.size(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
  RationalFunction pow(int e) const;

  Rational evaluate(std::span<const Rational> point) const;

  bool operator==(const RationalFunction& o) const = default;

  std::string to_string() const;

 private:
  struct Reduced {};
  RationalFunction(Polynomial num, Polynomial den, Reduced);
  void normalize();
  void fix_sign();

  Polynomial num_;
  Polynomial den_;
};

enum class ArithOp { add, sub, mul, div };

/// Binary arithmetic entry point; throws DomainError on nvars mismatch or
/// division by zero.
RationalFunction arith(const RationalFunction& f, const RationalFunction& g, ArithOp op);

/// Replaces every variable x_i of f by values[i]. All values must share one
/// variable count, which becomes the result's. Throws DomainError if the
/// denominator becomes identically zero.
RationalFunction substitute(const RationalFunction& f,
                            std::span<const RationalFunction> values);

/// Partial substitution: unassigned variables stay themselves.
RationalFunction substitute(const RationalFunction& f,
                            const std::map<std::size_t, RationalFunction>& assignment);

/// The Laurent form of f when its reduced denominator is a unit monomial;
/// nullopt otherwise.
std::optional<LaurentPolynomial> is_laurent(const RationalFunction& f);

}  // namespace clusterbench

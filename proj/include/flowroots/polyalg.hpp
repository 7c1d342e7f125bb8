#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace flowroots {

using Integer = mpz_class;
using Rational = mpq_class;

/// num / den in lowest terms; gmpxx leaves two-argument construction
/// uncanonicalised.
inline Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Dense univariate polynomial over the integers, constant term first.
/// Always canonical: no trailing zero coefficients, the zero polynomial has
/// no coefficients at all.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, int degree);
  /// x - root
  static IntPoly linear_factor(const Integer& root);
  /// x (x - 1) ... (x - k + 1)
  static IntPoly falling_factorial(int k);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  Integer coeff(int i) const;
  const Integer& leading() const;

  IntPoly derivative() const;
  Integer content() const;
  IntPoly primitive() const;  // content removed, leading coefficient positive

  Integer evaluate(const Integer& x) const;
  /// Sign of p(x) for rational x, computed exactly.
  int sign_at(const Rational& x) const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  IntPoly operator-() const;
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form in the variable `var`, highest degree first.
  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

IntPoly power(const IntPoly& p, int e);

enum class ArithOp { add, sub, mul };
IntPoly poly_arith(const IntPoly& p, const IntPoly& q, ArithOp op);

/// Raised when a division the caller expected to be exact leaves a remainder
/// or a non-integral quotient.
class InexactDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

IntPoly exact_divide(const IntPoly& p, const IntPoly& q);

/// Pseudo-remainder scaled by a positive factor, so its sign pattern matches
/// the true remainder.
IntPoly positive_pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Primitive part of p / gcd(p, p').
IntPoly squarefree_part(const IntPoly& p);

/// Yun decomposition of the primitive part: pairs (f_i, i) with f_i
/// squarefree, pairwise coprime and non-constant, prod f_i^i = primitive(p).
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);

std::vector<IntPoly> sturm_chain(const IntPoly& p);

/// Number of distinct real roots in the half-open interval (a, b].
int sturm_count(const IntPoly& p, const Rational& a, const Rational& b);
/// Number of distinct real roots.
int sturm_count_all(const IntPoly& p);

/// Integer bound B with every real root strictly inside (-B, B).
Integer root_bound(const IntPoly& p);

/// Closed rational interval. Isolating intervals with lo < hi hold their
/// root strictly inside; lo == hi marks an exactly known rational root.
struct Interval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool is_point() const { return lo == hi; }
};

/// Isolates every real root of a squarefree polynomial, in increasing order.
std::vector<Interval> isolate_real_roots(const IntPoly& squarefree);

/// Shrinks an isolating interval of a squarefree polynomial by bisection
/// until its width is at most tol.
Interval refine_root(const IntPoly& squarefree, Interval iv, const Rational& tol);

/// Integer roots with multiplicities, in increasing order.
std::vector<std::pair<Integer, int>> integer_roots(const IntPoly& p);

struct RootInterval {
  Interval interval;
  int multiplicity = 1;
};

struct RootProfile {
  int degree = 0;
  std::vector<std::pair<Integer, int>> integer_roots;
  std::vector<RootInterval> isolating_intervals;  // distinct non-integer real roots, width <= tol
  int count_in_1_2 = 0;      // with multiplicity, open interval
  int count_above_2 = 0;     // with multiplicity, open ray (2, inf)
  int real_root_count = 0;   // with multiplicity
  bool real_rooted = false;
  Interval omega;            // encloses the sum of (2 - u) over roots u in (1, 2)

  int multiplicity_of(const Integer& value) const;
  int integer_root_total() const;
  bool integral_roots() const { return integer_root_total() == degree; }
};

RootProfile root_profile(const IntPoly& p, const Rational& tol);

/// Interval of width <= tol around the unique root of p in the open
/// interval (lo, hi). Throws std::invalid_argument if there is not exactly
/// one such root.
Interval isolate_unique_root(const IntPoly& p, const Rational& lo, const Rational& hi,
                             const Rational& tol);

inline Interval isolate_root_of_cubic(const IntPoly& c, const Rational& lo, const Rational& hi,
                                      const Rational& tol) {
  return isolate_unique_root(c, lo, hi, tol);
}

/// Newton's inequalities on the normalised coefficients; necessary for
/// real-rootedness.
bool newton_check(const IntPoly& p);

Rational parse_rational(const std::string& text);
std::string format_decimal(const Rational& x, int digits);

}  // namespace flowroots

#pragma once

#include <span>
#include <string>
#include <vector>

#include "hspecht/monomial.hpp"
#include "hspecht/rational.hpp"

namespace hspecht {

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse polynomial in Q[x_1..x_n].
///
/// Terms are kept sorted in descending global monomial order with no zero
/// coefficients, so two equal polynomials have identical term lists.
class Poly {
 public:
  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) { check_nvars(nvars); }
  Poly(int nvars, const Rational& constant);
  static Poly monomial(int nvars, Monomial m, Rational c = Rational(1));
  static Poly variable(int nvars, int i);
  /// Sorts and merges an arbitrary term list.
  static Poly from_terms(int nvars, std::vector<Term> terms);

  int nvars() const { return nvars_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  /// Total degree of the leading term; -1 for the zero polynomial.
  int degree() const;
  /// Coefficient of m (zero if absent).
  Rational coefficient(Monomial m) const;
  Monomial leading_monomial() const { return terms_.front().mono; }
  int max_variable_exponent() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& p);
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly pow(int e) const;
  Poly times_monomial(Monomial m) const;
  /// Same polynomial viewed in a ring with more variables.
  Poly embedded(int nvars) const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Human-readable rendering, e.g. "-5/4*x1^2*x3 + x2".
  std::string str() const;

 private:
  static void check_nvars(int n);
  int nvars_ = 1;
  std::vector<Term> terms_;
};

/// sigma . p with x_i -> x_{sigma(i)}. perm is 1-based (perm[0] unused) and
/// must be a bijection on 1..n.
Poly permute_variables(std::span<const int> perm, const Poly& p);

/// Elementary symmetric polynomial e_d in the given (1-based) variables.
Poly elementary(int nvars, int d, std::span<const int> vars);
/// e_d(x_1..x_n).
Poly elementary(int nvars, int d);

/// Positive gcd of the coefficients (numerator gcd over denominator lcm).
Rational coefficient_content(const Poly& p);
/// p divided by its coefficient content.
Poly primitive_part(const Poly& p);

/// prod_{i<j} (x_i - x_j).
Poly vandermonde(int n);

}  // namespace hspecht

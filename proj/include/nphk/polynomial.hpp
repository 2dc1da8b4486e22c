#pragma once

#include "nphk/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nphk {

struct Exponent {
  int i = 0;  // power of x
  int j = 0;  // power of y
  int total() const { return i + j; }
  friend bool operator==(const Exponent&, const Exponent&) = default;
};

// Graded order: total degree first, then higher x power first.
struct GradedLex {
  bool operator()(const Exponent& a, const Exponent& b) const {
    if (a.total() != b.total()) return a.total() < b.total();
    return a.i > b.i;
  }
};

class UnivariatePolynomial {
 public:
  using Terms = std::map<int, Rational>;

  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::optional<int> truncation) : truncation_(truncation) {}
  static UnivariatePolynomial monomial(int k, const Rational& c = 1);
  static UnivariatePolynomial from_coefficients(const std::vector<Rational>& c);

  const Terms& terms() const { return terms_; }
  std::optional<int> truncation() const { return truncation_; }
  bool is_exact() const { return !truncation_; }
  bool is_zero() const { return terms_.empty(); }
  // -1 for the zero polynomial.
  int degree() const;
  Rational coefficient(int k) const;
  void set(int k, const Rational& c);

  UnivariatePolynomial truncated(int n) const;
  UnivariatePolynomial exact() const;  // drops the truncation marker
  UnivariatePolynomial derivative() const;
  Rational evaluate(const Rational& t) const;
  double evaluate(double t) const;

  UnivariatePolynomial& operator+=(const UnivariatePolynomial& o);
  UnivariatePolynomial& operator-=(const UnivariatePolynomial& o);
  UnivariatePolynomial operator-() const;
  friend UnivariatePolynomial operator+(UnivariatePolynomial a, const UnivariatePolynomial& b) { return a += b; }
  friend UnivariatePolynomial operator-(UnivariatePolynomial a, const UnivariatePolynomial& b) { return a -= b; }
  friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
  friend UnivariatePolynomial operator*(const Rational& c, const UnivariatePolynomial& a);
  friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

  std::string to_string(char var = 'x') const;

 private:
  void clip();
  Terms terms_;
  std::optional<int> truncation_;
};

// Smallest degree with a nonzero coefficient; infinite for zero.
Order univariate_order(const UnivariatePolynomial& q);

class BivariatePolynomial {
 public:
  using Terms = std::map<Exponent, Rational, GradedLex>;

  BivariatePolynomial() = default;
  explicit BivariatePolynomial(std::optional<int> truncation) : truncation_(truncation) {}
  static BivariatePolynomial constant(const Rational& c);
  static BivariatePolynomial monomial(int i, int j, const Rational& c = 1);
  static BivariatePolynomial x() { return monomial(1, 0); }
  static BivariatePolynomial y() { return monomial(0, 1); }

  const Terms& terms() const { return terms_; }
  std::optional<int> truncation() const { return truncation_; }
  bool is_exact() const { return !truncation_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;  // -1 for zero
  int degree_in_y() const;
  Rational coefficient(int i, int j) const;
  void set(int i, int j, const Rational& c);

  BivariatePolynomial truncated(int n) const;
  BivariatePolynomial exact() const;
  BivariatePolynomial partial_x() const;
  BivariatePolynomial partial_y() const;
  Rational evaluate(const Rational& x, const Rational& y) const;
  double evaluate(double x, double y) const;
  BivariatePolynomial pow(unsigned k) const;
  bool is_homogeneous() const;

  // Coefficient of y^j as a polynomial in x, for j = 0..degree_in_y().
  std::vector<UnivariatePolynomial> y_coefficients() const;

  BivariatePolynomial& operator+=(const BivariatePolynomial& o);
  BivariatePolynomial& operator-=(const BivariatePolynomial& o);
  BivariatePolynomial operator-() const;
  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
  friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) { return a -= b; }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
  friend BivariatePolynomial operator*(const Rational& c, const BivariatePolynomial& a);
  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

  std::string to_string() const;

 private:
  void clip();
  Terms terms_;
  std::optional<int> truncation_;
};

// (x, y) -> (a x + b y, c x + d y).
struct LinearMap2 {
  Rational a = 1, b = 0, c = 0, d = 1;

  static LinearMap2 identity() { return {}; }
  static LinearMap2 swap() { return {0, 1, 1, 0}; }
  Rational determinant() const { return a * d - b * c; }
  LinearMap2 inverse() const;
  // (A * B)(v) = A(B(v)).
  friend LinearMap2 operator*(const LinearMap2& A, const LinearMap2& B);
  friend bool operator==(const LinearMap2&, const LinearMap2&) = default;
  std::string to_string() const;
};

// p(M x). Throws SingularMap for a degenerate M.
BivariatePolynomial apply_linear(const BivariatePolynomial& p, const LinearMap2& M);
// p(x, y + psi(x)).
BivariatePolynomial apply_shear(const BivariatePolynomial& p, const UnivariatePolynomial& psi);
BivariatePolynomial homogeneous_part(const BivariatePolynomial& p, int k);
// p(x, s(x)) modulo x^(n+1).
UnivariatePolynomial substitute_branch(const BivariatePolynomial& p, const UnivariatePolynomial& s, int n);
// p(x, s(x)) with no truncation; s must be exact.
UnivariatePolynomial substitute_branch_exact(const BivariatePolynomial& p, const UnivariatePolynomial& s);

}  // namespace nphk

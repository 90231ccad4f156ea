#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace afpoly {

using BigInt = boost::multiprecision::cpp_int;

// Exact sparse univariate polynomial with arbitrary-precision integer
// coefficients; zero coefficients are never stored, so representation is
// canonical and operator== is structural equality.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<std::pair<int, BigInt>> terms);

  static Polynomial zero() { return {}; }
  static Polynomial one() { return monomial(1, 0); }
  static Polynomial monomial(BigInt c, int degree);

  bool is_zero() const { return coeffs_.empty(); }
  const BigInt& coeff(int degree) const;
  const std::map<int, BigInt>& terms() const { return coeffs_; }

  int min_degree() const;  // throws on zero polynomial
  int max_degree() const;
  std::vector<int> support() const;
  BigInt eval_at_one() const;
  bool all_coefficients_positive() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  // Shift every degree by k and scale every coefficient by c.
  Polynomial mono_mul(const BigInt& c, int k) const;

  // "x^4 + 7x^3 + x^2" with descending degrees; "0" for the zero polynomial.
  std::string to_text() const;

  // Degree -> coefficient, both as decimal strings, descending degrees.
  std::vector<std::pair<std::string, std::string>> to_string_pairs() const;
  static Polynomial from_string_pairs(const std::vector<std::pair<std::string, std::string>>& kv);

 private:
  void add_term(int degree, const BigInt& c);
  std::map<int, BigInt> coeffs_;
};

}  // namespace afpoly

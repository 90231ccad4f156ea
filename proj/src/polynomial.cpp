#include "afpoly/polynomial.hpp"

#include <stdexcept>

namespace afpoly {

Polynomial::Polynomial(std::initializer_list<std::pair<int, BigInt>> terms) {
  for (const auto& [d, c] : terms) add_term(d, c);
}

Polynomial Polynomial::monomial(BigInt c, int degree) {
  Polynomial p;
  p.add_term(degree, c);
  return p;
}

void Polynomial::add_term(int degree, const BigInt& c) {
  if (c == 0) return;
  if (degree < 0) throw std::invalid_argument("negative degree");
  auto [it, inserted] = coeffs_.emplace(degree, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

const BigInt& Polynomial::coeff(int degree) const {
  static const BigInt kZero = 0;
  auto it = coeffs_.find(degree);
  return it == coeffs_.end() ? kZero : it->second;
}

int Polynomial::min_degree() const {
  if (coeffs_.empty()) throw std::domain_error("zero polynomial has no degree");
  return coeffs_.begin()->first;
}

int Polynomial::max_degree() const {
  if (coeffs_.empty()) throw std::domain_error("zero polynomial has no degree");
  return coeffs_.rbegin()->first;
}

std::vector<int> Polynomial::support() const {
  std::vector<int> out;
  out.reserve(coeffs_.size());
  for (const auto& [d, c] : coeffs_) out.push_back(d);
  return out;
}

BigInt Polynomial::eval_at_one() const {
  BigInt s = 0;
  for (const auto& [d, c] : coeffs_) s += c;
  return s;
}

bool Polynomial::all_coefficients_positive() const {
  for (const auto& [d, c] : coeffs_)
    if (c <= 0) return false;
  return true;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [d, c] : o.coeffs_) add_term(d, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [d, c] : o.coeffs_) add_term(d, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [da, ca] : a.coeffs_)
    for (const auto& [db, cb] : b.coeffs_) out.add_term(da + db, ca * cb);
  return out;
}

Polynomial Polynomial::mono_mul(const BigInt& c, int k) const {
  Polynomial out;
  if (c == 0) return out;
  for (const auto& [d, v] : coeffs_) out.add_term(d + k, v * c);
  return out;
}

std::string Polynomial::to_text() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [d, c] = *it;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || d == 0) out += mag.str();
    if (d >= 1) out += "x";
    if (d >= 2) out += "^" + std::to_string(d);
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> Polynomial::to_string_pairs() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    out.emplace_back(std::to_string(it->first), it->second.str());
  return out;
}

Polynomial Polynomial::from_string_pairs(
    const std::vector<std::pair<std::string, std::string>>& kv) {
  Polynomial p;
  for (const auto& [d, c] : kv) p.add_term(std::stoi(d), BigInt(c));
  return p;
}

}  // namespace afpoly

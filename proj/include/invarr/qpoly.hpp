#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace invarr {

// Polynomial in q with nonnegative integer coefficients; index d holds the
// coefficient of q^d. Trailing zeros are trimmed; the zero polynomial is {0}.
// Arithmetic is overflow-checked.
class QPolynomial {
 public:
  QPolynomial() : coeffs_{0} {}
  explicit QPolynomial(std::vector<std::uint64_t> coeffs);

  static QPolynomial one() { return QPolynomial({1}); }
  // [k] = 1 + q + ... + q^(k-1); [0] = 0.
  static QPolynomial q_integer(int k);

  std::span<const std::uint64_t> coefficients() const { return coeffs_; }
  // -1 for the zero polynomial.
  int degree() const;
  std::uint64_t operator[](int d) const;
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }

  std::uint64_t at_one() const;

  // Adds c q^d in place.
  void add_term(int d, std::uint64_t c);

  QPolynomial operator+(const QPolynomial& other) const;
  QPolynomial operator*(const QPolynomial& other) const;

  // "1 + 2q + 2q^2 + q^3"
  std::string to_string() const;

  bool operator==(const QPolynomial&) const = default;

 private:
  void trim();

  std::vector<std::uint64_t> coeffs_;
};

}  // namespace invarr

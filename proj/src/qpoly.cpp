#include "invarr/qpoly.hpp"

#include <stdexcept>

#include "invarr/checked.hpp"

namespace invarr {

QPolynomial::QPolynomial(std::vector<std::uint64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPolynomial QPolynomial::q_integer(int k) {
  if (k < 0) throw std::invalid_argument("q-integer of a negative number");
  if (k == 0) return QPolynomial();
  return QPolynomial(std::vector<std::uint64_t>(static_cast<std::size_t>(k), 1));
}

void QPolynomial::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(0);
}

int QPolynomial::degree() const { return is_zero() ? -1 : static_cast<int>(coeffs_.size()) - 1; }

std::uint64_t QPolynomial::operator[](int d) const {
  if (d < 0 || d >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[d];
}

std::uint64_t QPolynomial::at_one() const {
  std::uint64_t s = 0;
  for (auto c : coeffs_) s = checked_add(s, c, "polynomial evaluation");
  return s;
}

void QPolynomial::add_term(int d, std::uint64_t c) {
  if (d < 0) throw std::invalid_argument("negative degree");
  if (d >= static_cast<int>(coeffs_.size())) coeffs_.resize(d + 1, 0);
  coeffs_[d] = checked_add(coeffs_[d], c, "polynomial coefficient");
  trim();
}

QPolynomial QPolynomial::operator+(const QPolynomial& other) const {
  std::vector<std::uint64_t> out(std::max(coeffs_.size(), other.coeffs_.size()), 0);
  for (std::size_t d = 0; d < out.size(); ++d) {
    out[d] = checked_add((*this)[static_cast<int>(d)], other[static_cast<int>(d)], "polynomial sum");
  }
  return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::operator*(const QPolynomial& other) const {
  if (is_zero() || other.is_zero()) return QPolynomial();
  std::vector<std::uint64_t> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t a = 0; a < coeffs_.size(); ++a) {
    for (std::size_t b = 0; b < other.coeffs_.size(); ++b) {
      out[a + b] = checked_add(out[a + b], checked_mul(coeffs_[a], other.coeffs_[b], "polynomial product"),
                               "polynomial product");
    }
  }
  return QPolynomial(std::move(out));
}

std::string QPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    const std::uint64_t c = coeffs_[d];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (d == 0 || c != 1) out += std::to_string(c);
    if (d >= 1) out += 'q';
    if (d >= 2) out += '^' + std::to_string(d);
  }
  return out;
}

}  // namespace invarr

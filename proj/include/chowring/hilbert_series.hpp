#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace chowring {

using Integer = boost::multiprecision::cpp_int;

/// Polynomial in one formal variable t with integer coefficients.
class HilbertSeries {
 public:
  HilbertSeries() = default;
  explicit HilbertSeries(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

  static HilbertSeries one() { return HilbertSeries({Integer(1)}); }

  /// t + t^2 + ... + t^{d-1}; zero for d <= 1.
  static HilbertSeries step(std::size_t d) {
    HilbertSeries h;
    for (std::size_t m = 1; m < d; ++m) h.add(m, 1);
    return h;
  }

  const std::vector<Integer>& coefficients() const { return coeffs_; }
  Integer coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

  void add(std::size_t k, const Integer& c) {
    if (coeffs_.size() <= k) coeffs_.resize(k + 1, 0);
    coeffs_[k] += c;
    trim();
  }

  HilbertSeries& operator+=(const HilbertSeries& o) {
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) add(k, o.coeffs_[k]);
    return *this;
  }
  friend HilbertSeries operator+(HilbertSeries a, const HilbertSeries& b) { return a += b; }
  friend HilbertSeries operator*(const HilbertSeries& a, const HilbertSeries& b) {
    HilbertSeries out;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out.add(i + j, a.coeffs_[i] * b.coeffs_[j]);
    return out;
  }
  friend HilbertSeries operator*(const Integer& s, const HilbertSeries& h) {
    HilbertSeries out;
    for (std::size_t k = 0; k < h.coeffs_.size(); ++k) out.add(k, s * h.coeffs_[k]);
    return out;
  }
  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;

  /// "1 + 5t + t^2"
  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      const Integer& c = coeffs_[k];
      if (c == 0) continue;
      Integer mag = c < 0 ? Integer(-c) : c;
      if (out.empty())
        out += c < 0 ? "-" : "";
      else
        out += c < 0 ? " - " : " + ";
      if (k == 0 || mag != 1) out += mag.str();
      if (k >= 1) out += "t";
      if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Integer> coeffs_;
};

}  // namespace chowring

#pragma once

// Linear systems and intersection theory on rational scrolls
// Proj(O(d_1) + ... + O(d_k)) over the projective line.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dpfib {

using BigInt = boost::multiprecision::cpp_int;

/// Raised when a query needs a general member of |aM + bL| but the
/// system has no sections.
class EmptySystemError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A rank-k scroll in normal form: d_1 >= ... >= d_k = 0, k >= 2.
class Scroll {
 public:
  /// Throws std::invalid_argument unless `degrees` is already normalized.
  explicit Scroll(std::vector<std::int64_t> degrees);

  /// Sorts non-increasingly and shifts so the last degree is 0.
  static Scroll normalize(std::vector<std::int64_t> degrees);

  std::size_t rank() const { return degrees_.size(); }
  /// 1-based, matching the coordinate names x_1, ..., x_k.
  std::int64_t degree(std::size_t i) const { return degrees_.at(i - 1); }
  std::span<const std::int64_t> degrees() const { return degrees_; }
  std::int64_t degree_sum() const;

  std::string to_string() const;

  friend bool operator==(const Scroll&, const Scroll&) = default;

 private:
  std::vector<std::int64_t> degrees_;
};

/// The class aM + bL in Pic = ZM + ZL.
struct DivisorClass {
  std::int64_t a = 0;
  std::int64_t b = 0;

  static constexpr DivisorClass tautological() { return {1, 0}; }
  static constexpr DivisorClass fibre() { return {0, 1}; }

  friend constexpr DivisorClass operator+(DivisorClass x, DivisorClass y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend constexpr DivisorClass operator-(DivisorClass x, DivisorClass y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend constexpr DivisorClass operator*(std::int64_t s, DivisorClass x) {
    return {s * x.a, s * x.b};
  }
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/// "aM + bL" or "aM - bL".
std::string to_string(DivisorClass c);

/// c(t_1, t_2) x_1^{i_1} ... x_k^{i_k}, where c is a binary form of
/// degree coeff_degree = b + sum_j i_j d_j.
struct Monomial {
  std::vector<std::int64_t> exponents;
  std::int64_t coeff_degree = 0;

  bool admissible() const { return coeff_degree >= 0; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Y_j = {x_1 = ... = x_{j-1} = 0}, 2 <= j <= k.
struct SubscrollIndex {
  std::size_t j = 2;
  friend bool operator==(const SubscrollIndex&, const SubscrollIndex&) = default;
};

/// Admissible monomials of |cls|, ascending lexicographic in the exponent
/// vector. Empty when cls.a < 0.
std::vector<Monomial> monomials(const Scroll& scroll, DivisorClass cls);

/// Dimension of H^0(aM + bL): the sum of (coeff_degree + 1) over
/// admissible monomials.
BigInt h0(const Scroll& scroll, DivisorClass cls);

/// Multiplicity along Y_j of a general member of |cls|, from the Reid
/// criterion: mult >= q iff a d_j + b + (d_1 - d_j)(q - 1) < 0.
/// Throws EmptySystemError when |cls| is empty and std::invalid_argument
/// when j is out of range.
std::int64_t mult_subscroll(const Scroll& scroll, DivisorClass cls, SubscrollIndex j);

/// Brute-force reference for mult_subscroll: the minimum of
/// i_1 + ... + i_{j-1} over all admissible monomials.
std::int64_t mult_subscroll_oracle(const Scroll& scroll, DivisorClass cls, SubscrollIndex j);

/// The right-hand side of the Reid criterion for a single q.
bool reid_criterion(const Scroll& scroll, DivisorClass cls, SubscrollIndex j, std::int64_t q);

/// Largest coordinate subscroll contained in Bs|cls|, i.e. the smallest j
/// with a d_j + b < 0; nullopt when no coordinate stratum is a base
/// component.
std::optional<SubscrollIndex> base_locus(const Scroll& scroll, DivisorClass cls);

/// Degree of a product of k divisor classes, using M^k = sum d_i,
/// M^{k-1} L = 1 and L^2 = 0.
BigInt intersection_number(const Scroll& scroll, std::span<const DivisorClass> classes);

/// K_V = -kM + (sum d_i - 2) L.
DivisorClass canonical_class(const Scroll& scroll);

}  // namespace dpfib

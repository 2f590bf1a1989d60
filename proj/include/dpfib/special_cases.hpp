#pragma once

// Two self-contained checks:
//  * the degree-2 del Pezzo double cover over Proj(O(2) + O(2) + O):
//    reducible fibres of the conic bundle over the section are the roots
//    of a discriminant b^2 - 4ac of binary forms of degrees (4; 2, 6);
//  * the Galois-orbit combinatorics on the ten components of the
//    reducible fibres of a cubic surface projected from a line.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "dpfib/ruled_surface.hpp"

namespace dpfib {

/// Z/pZ for an odd prime p < 2^32. Elements are canonical residues.
class PrimeField {
 public:
  static constexpr std::uint64_t kDefaultPrime = 2147483647;  // 2^31 - 1

  explicit PrimeField(std::uint64_t p = kDefaultPrime);

  std::uint64_t modulus() const { return p_; }
  std::uint64_t reduce(std::int64_t v) const;
  std::uint64_t add(std::uint64_t x, std::uint64_t y) const { return (x + y) % p_; }
  std::uint64_t sub(std::uint64_t x, std::uint64_t y) const { return (x + p_ - y) % p_; }
  std::uint64_t mul(std::uint64_t x, std::uint64_t y) const { return (x * y) % p_; }
  std::uint64_t inv(std::uint64_t x) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

/// sum_i c_i t0^i t1^(degree - i). The declared degree is kept even when
/// leading coefficients vanish; the missing top powers are roots at
/// t1 = 0.
class BinaryForm {
 public:
  BinaryForm(PrimeField field, std::vector<std::uint64_t> coefficients);
  static BinaryForm zero(PrimeField field, int degree);
  static BinaryForm constant(PrimeField field, std::int64_t value);

  const PrimeField& field() const { return field_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<std::uint64_t>& coefficients() const { return coeffs_; }
  bool is_zero() const;
  /// Degree after trimming vanishing leading coefficients (the affine
  /// degree in t0 at t1 = 1); -1 for the zero form.
  int trimmed_degree() const;

  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

 private:
  PrimeField field_;
  std::vector<std::uint64_t> coeffs_;
};

BinaryForm multiply(const BinaryForm& f, const BinaryForm& g);

/// b^2 - 4ac, declared degree max(2 deg b, deg a + deg c).
BinaryForm discriminant(const BinaryForm& b, const BinaryForm& a, const BinaryForm& c);

struct RootCount {
  int total = 0;     // roots on P^1 with multiplicity
  int distinct = 0;  // over the algebraic closure
  friend bool operator==(const RootCount&, const RootCount&) = default;
};

/// Throws std::domain_error for the zero form and std::invalid_argument
/// when the characteristic does not exceed the degree.
RootCount root_count(const BinaryForm& f);

/// Number of singular fibres of a standard conic bundle over P^1 on a
/// surface with K^2 = k_squared, i.e. 8 - k_squared. Throws
/// std::out_of_range when k_squared > 8.
int singular_fiber_count(std::int64_t k_squared);

/// The discriminant vanished identically; the draw is not general.
class DegenerateSeedError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Seeded generator for random binary forms. Coefficients are
/// uniform residues taken directly from mt19937_64 so the stream is
/// identical on every standard library.
class FormSampler {
 public:
  FormSampler(std::uint64_t seed, PrimeField field) : field_(field), rng_(seed) {}
  BinaryForm draw(int degree);

 private:
  PrimeField field_;
  std::mt19937_64 rng_;
};

struct Dp2Report {
  std::int64_t lambda = 0;
  std::int64_t mu = 0;
  int mu_distinct = 0;
  int discriminant_degree = 0;  // trimmed
  RuledClass xi;                // lambda sigma + mu f on F_0
  RuledClass two_k_plus_xi;
  bool two_k_plus_xi_effective = false;
  bool nonruled = false;
  bool generic = false;  // distinct == total and no degree drop

  friend bool operator==(const Dp2Report&, const Dp2Report&) = default;
};

/// K^2 of a general fibre of the double cover.
inline constexpr std::int64_t kDp2FibreKSquared = 2;

/// Runs the check on explicit forms a, b, c for a x^2 + b x y + c y^2.
/// Throws DegenerateSeedError when b^2 - 4ac vanishes identically.
Dp2Report dp2_report_from_forms(const BinaryForm& a, const BinaryForm& b, const BinaryForm& c);

/// Draws a, b, c of degrees 2, 4, 6 from `seed` and runs the check.
Dp2Report dp2_report(std::uint64_t seed, PrimeField field = PrimeField());

/// Curves 0..size-1, a partition into Galois orbits, and the symmetric
/// "meets" relation.
class CurveSystem {
 public:
  CurveSystem(int size, std::vector<std::vector<int>> orbits,
              std::vector<std::pair<int, int>> meets, std::vector<std::string> labels = {});

  int size() const { return size_; }
  const std::vector<std::vector<int>>& orbits() const { return orbits_; }
  bool meets(int i, int j) const { return adjacency_[i * size_ + j]; }
  std::vector<std::pair<int, int>> edges() const;
  const std::string& label(int i) const { return labels_[i]; }

  /// Same system with the pair (i, j) no longer meeting.
  CurveSystem without_edge(int i, int j) const;

 private:
  int size_;
  std::vector<std::vector<int>> orbits_;
  std::vector<bool> adjacency_;
  std::vector<std::string> labels_;
};

/// The ten components F~i, F-i (i = 1..5) of five reducible conics.
/// Orbits: {F~1..3, F-1..3}, {F~4, F-4}, {F~5, F-5}. The two components
/// of one degenerate conic meet; components of distinct fibres do not.
CurveSystem reducible_fibre_system();

/// Every nonempty proper union of orbits whose members are pairwise
/// disjoint, ordered by the bitmask of chosen orbits. Members sorted.
std::vector<std::vector<int>> invariant_disjoint_subsets(const CurveSystem& sys);

/// True when reducible_fibre_system() admits no invariant disjoint subset.
bool picard_rank_two_witness();

}  // namespace dpfib

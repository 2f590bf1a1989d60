#pragma once

// Bulk kernels over families, scrolls and seeds. Each kernel has a plain
// serial version, kept as the reference, and an OpenMP version that must
// produce identical output.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dpfib/dp3.hpp"
#include "dpfib/scroll.hpp"
#include "dpfib/special_cases.hpp"

namespace dpfib {

/// Families with 0 <= d3 <= d2 <= d1 <= max_d1 and n_min <= n <= n_max.
struct EnumerationRange {
  std::int64_t max_d1 = 0;
  std::int64_t n_min = 0;
  std::int64_t n_max = 0;

  /// Throws std::invalid_argument for max_d1 < 0 or n_min > n_max.
  void validate() const;
  /// C(max_d1 + 3, 3) sorted triples times the number of n values.
  std::uint64_t family_count() const;
};

/// Lexicographic in (d1, d2, d3, n).
std::vector<DP3Family> families(const EnumerationRange& range);

/// Streams classify() over the range in lexicographic order.
void for_each_report(const EnumerationRange& range,
                     const std::function<void(const ClassificationReport&)>& sink);

std::vector<ClassificationReport> enumerate_serial(const EnumerationRange& range);
std::vector<ClassificationReport> enumerate_parallel(const EnumerationRange& range);

/// Failure counts for the exact identities that tie the closed forms to
/// the Chow-ring and Hirzebruch computations.
struct IdentityTally {
  std::uint64_t families = 0;
  std::uint64_t smooth = 0;
  std::uint64_t mu_plus_ks2 = 0;         // mu + K_S^2 != 8
  std::uint64_t euler_vs_k3 = 0;         // chi != -4 K^3 - 54
  std::uint64_t k3_vs_adjunction = 0;    // closed form != (K_V + X)^3 X
  std::uint64_t odp_vs_cz = 0;           // node count != C.Z on F_{d3}
  std::uint64_t shokurov_vs_closed = 0;  // cone test != 3d1+6d2-2d3+3n >= 4
  std::uint64_t odp_nonpositive = 0;     // odp <= 0 on a smooth family
  std::uint64_t not_necessary = 0;       // smooth but fails the necessary test

  std::uint64_t failures() const;
  friend bool operator==(const IdentityTally&, const IdentityTally&) = default;
};

IdentityTally check_identities_serial(const EnumerationRange& range);
IdentityTally check_identities_parallel(const EnumerationRange& range);

struct OracleSweepConfig {
  std::size_t max_rank = 5;
  std::int64_t max_d1 = 6;
  std::int64_t max_a = 6;
  std::int64_t max_abs_b = 20;
};

struct OracleSweepTally {
  std::uint64_t cases = 0;  // (scroll, a, b, j) tuples
  std::uint64_t empty = 0;  // tuples whose system is empty
  std::uint64_t mult_mismatch = 0;
  std::uint64_t closed_form_violations = 0;
  std::uint64_t base_locus_mismatch = 0;
  std::uint64_t empty_disagreement = 0;  // only one side reported an empty system

  std::uint64_t failures() const;
  friend bool operator==(const OracleSweepTally&, const OracleSweepTally&) = default;
};

/// All normalized scrolls of rank 2..max_rank with d_1 <= max_d1.
std::vector<Scroll> scrolls_up_to(std::size_t max_rank, std::int64_t max_d1);

OracleSweepTally oracle_sweep_serial(const OracleSweepConfig& cfg);
OracleSweepTally oracle_sweep_parallel(const OracleSweepConfig& cfg);

struct Dp2Outcome {
  std::uint64_t seed = 0;
  std::optional<Dp2Report> report;  // empty for a degenerate draw
  std::string error;

  friend bool operator==(const Dp2Outcome&, const Dp2Outcome&) = default;
};

std::vector<Dp2Outcome> dp2_sweep_serial(const std::vector<std::uint64_t>& seeds,
                                         PrimeField field = PrimeField());
std::vector<Dp2Outcome> dp2_sweep_parallel(const std::vector<std::uint64_t>& seeds,
                                           PrimeField field = PrimeField());

}  // namespace dpfib

#pragma once

// Cubic surface fibrations X in |3M + nL| on the rank-4 scroll
// Proj(O(d1) + O(d2) + O(d3) + O): smoothness and Picard-rank predicates,
// numerical invariants, the conic-bundle degeneration attached to the
// subscroll x1 = x2 = 0, and the rationality verdict.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dpfib/ruled_surface.hpp"
#include "dpfib/scroll.hpp"

namespace dpfib {

/// A required predicate did not hold on entry.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The quadruple (d1, d2, d3, n) with d1 >= d2 >= d3 >= 0; d4 = 0 is implicit.
struct DP3Family {
  std::int64_t d1 = 0;
  std::int64_t d2 = 0;
  std::int64_t d3 = 0;
  std::int64_t n = 0;

  /// Throws std::invalid_argument naming the violated ordering.
  static DP3Family make(std::int64_t d1, std::int64_t d2, std::int64_t d3, std::int64_t n);

  bool is_sorted() const { return d1 >= d2 && d2 >= d3 && d3 >= 0; }
  std::int64_t degree_sum() const { return d1 + d2 + d3; }
  Scroll scroll() const;
  /// The class 3M + nL of X.
  DivisorClass divisor() const { return {3, n}; }
  std::string to_string() const;

  friend auto operator<=>(const DP3Family&, const DP3Family&) = default;
};

enum class ConePosition { Inside, Outside, Undetermined };
enum class Verdict { Rational, Nonrational, NotGeneralSmoothPic2 };
enum class Route { MainTheoremRational, ShokurovConicBundle, CubicThreefold, None };

std::string_view to_string(ConePosition c);
std::string_view to_string(Verdict v);
std::string_view to_string(Route r);

/// Conic bundle data over F_r, r = d1 - d2.
struct DegenerationData {
  std::int64_t r = 0;
  RuledClass delta;             // 5 s_inf + mu l
  std::int64_t mu = 0;          // s_0 . delta
  std::int64_t ks2 = 0;         // K_S^2 = 8 - mu
  RuledClass two_k_plus_delta;  // 2 K_{F_r} + delta
  bool shokurov = false;        // |2K + delta| nonempty
  std::int64_t odp = 0;         // nodes of the degeneration x1 F + x2 G = 0

  friend bool operator==(const DegenerationData&, const DegenerationData&) = default;
};

struct ClassificationReport {
  DP3Family family;
  bool smooth_pic2 = false;
  std::int64_t k3 = 0;
  std::int64_t euler = 0;
  ConePosition cone = ConePosition::Undetermined;
  std::optional<DegenerationData> degeneration;
  Verdict verdict = Verdict::NotGeneralSmoothPic2;
  Route route = Route::None;

  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

/// Conditions every smooth X with rk Pic = 2 must satisfy:
/// d1 >= -n, 3 d3 >= -n; d1 = -n or d2 >= -n; and 3 d3 != -n when
/// d2 = d3 and n < 0.
bool necessary_smooth_pic2(const DP3Family& f);

/// Sufficient conditions for a general X to be smooth with rk Pic = 2:
///  (1) n > 0 when d1 = 0;
///  (2) d1 = -n and 3 d3 >= -n, or d1 > -n, d2 >= -n and 3 d3 >= -n;
///  (3) 3 d3 > -n when d2 = d3 and n < 0.
bool smooth_pic2(const DP3Family& f);

/// K_X^3 = 6(d1 + d2 + d3) + 8n - 18.
std::int64_t k_cubed(const DP3Family& f);

/// K_X^3 recomputed by adjunction, (K_V + X)^3 . X in the Chow ring of V.
BigInt k_cubed_adjunction(const DP3Family& f);

/// chi(X) = 18 - 24(d1 + d2 + d3) - 32n.
std::int64_t euler_characteristic(const DP3Family& f);

/// Position of K_X^2 relative to the interior of the Mori cone. Only
/// 5n < 12 - 3(d1+d2+d3) (forces Inside) and, for n < 0, its negation
/// (forces Outside) are decisive.
ConePosition cone_position(const DP3Family& f);

/// Throws PreconditionError unless smooth_pic2(f).
DegenerationData degeneration(const DP3Family& f);

/// |2K_{F_r} + delta| != 0, i.e. 3d1 + 6d2 - 2d3 + 3n >= 4.
/// Throws PreconditionError unless smooth_pic2(f).
bool shokurov_nonruled(const DP3Family& f);

ClassificationReport classify(const DP3Family& f);

/// K_S^2 of the surface S ~ 2T + (d1 + n)F on Proj(O(d1) + O(d3) + O),
/// by adjunction: -5d1 - 2d3 - 3n + 8. Diagnostic only.
std::int64_t ks2_scroll_adjunction(const DP3Family& f);

struct Ks2Discrepancy {
  std::int64_t printed = 0;     // 8 - mu, used by DegenerationData
  std::int64_t adjunction = 0;  // ks2_scroll_adjunction
  bool agree() const { return printed == adjunction; }
};

/// Both K_S^2 values side by side; they agree exactly when d2 = d3.
Ks2Discrepancy ks2_discrepancy(const DP3Family& f);

/// Rationality of a degree-4 del Pezzo fibration (normal fibres, smooth,
/// Picard rank 2) from its topological Euler characteristic.
bool dp4_rational(std::int64_t euler);

}  // namespace dpfib

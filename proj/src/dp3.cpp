#include "dpfib/dp3.hpp"

#include <array>

namespace dpfib {

namespace {

void require_smooth_pic2(const DP3Family& f, const char* op) {
  if (!smooth_pic2(f)) {
    throw PreconditionError(std::string(op) + " requires a smooth Picard-rank-2 family, got " +
                            f.to_string());
  }
}

std::int64_t shokurov_coefficient(const DP3Family& f) {
  return 3 * f.d1 + 6 * f.d2 - 2 * f.d3 + 3 * f.n - 4;
}

}  // namespace

DP3Family DP3Family::make(std::int64_t d1, std::int64_t d2, std::int64_t d3, std::int64_t n) {
  DP3Family f{d1, d2, d3, n};
  if (!f.is_sorted()) {
    throw std::invalid_argument("degrees must satisfy d1 >= d2 >= d3 >= 0, got " + f.to_string());
  }
  return f;
}

Scroll DP3Family::scroll() const { return Scroll({d1, d2, d3, 0}); }

std::string DP3Family::to_string() const {
  return "(" + std::to_string(d1) + "," + std::to_string(d2) + "," + std::to_string(d3) + "," +
         std::to_string(n) + ")";
}

std::string_view to_string(ConePosition c) {
  switch (c) {
    case ConePosition::Inside: return "Inside";
    case ConePosition::Outside: return "Outside";
    case ConePosition::Undetermined: return "Undetermined";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Rational: return "Rational";
    case Verdict::Nonrational: return "Nonrational";
    case Verdict::NotGeneralSmoothPic2: return "NotGeneralSmoothPic2";
  }
  return "?";
}

std::string_view to_string(Route r) {
  switch (r) {
    case Route::MainTheoremRational: return "MainTheoremRational";
    case Route::ShokurovConicBundle: return "ShokurovConicBundle";
    case Route::CubicThreefold: return "CubicThreefold";
    case Route::None: return "None";
  }
  return "?";
}

bool necessary_smooth_pic2(const DP3Family& f) {
  const std::int64_t m = -f.n;
  const bool base = f.d1 >= m && 3 * f.d3 >= m;
  const bool extra = f.d1 == m || f.d2 >= m;
  const bool no_three_subscrolls = !(f.d2 == f.d3 && f.n < 0 && 3 * f.d3 == m);
  return base && extra && no_three_subscrolls;
}

bool smooth_pic2(const DP3Family& f) {
  const std::int64_t m = -f.n;
  const bool cond1 = f.d1 != 0 || f.n > 0;
  const bool cond2 = (f.d1 == m && 3 * f.d3 >= m) || (f.d1 > m && f.d2 >= m && 3 * f.d3 >= m);
  const bool cond3 = !(f.d2 == f.d3 && f.n < 0) || 3 * f.d3 > m;
  return cond1 && cond2 && cond3;
}

std::int64_t k_cubed(const DP3Family& f) { return 6 * f.degree_sum() + 8 * f.n - 18; }

BigInt k_cubed_adjunction(const DP3Family& f) {
  const Scroll v = f.scroll();
  const DivisorClass x = f.divisor();
  const DivisorClass kx = canonical_class(v) + x;
  const std::array<DivisorClass, 4> classes{kx, kx, kx, x};
  return intersection_number(v, classes);
}

std::int64_t euler_characteristic(const DP3Family& f) {
  return 18 - 24 * f.degree_sum() - 32 * f.n;
}

ConePosition cone_position(const DP3Family& f) {
  const bool bound_holds = 5 * f.n >= 12 - 3 * f.degree_sum();
  if (!bound_holds) return ConePosition::Inside;
  if (f.n < 0) return ConePosition::Outside;
  return ConePosition::Undetermined;
}

DegenerationData degeneration(const DP3Family& f) {
  require_smooth_pic2(f, "degeneration");

  DegenerationData d;
  d.r = f.d1 - f.d2;
  const Hirzebruch base(d.r);
  d.mu = 5 * f.d1 - 2 * f.d3 + 4 * f.d2 + 3 * f.n;
  d.delta = {5, d.mu};
  d.ks2 = 8 - d.mu;
  d.two_k_plus_delta = 2 * canonical(base) + d.delta;
  d.shokurov = is_effective(d.two_k_plus_delta);
  d.odp = 2 * f.d1 + 2 * f.d2 + 4 * f.d3 + 4 * f.n;

  if (intersect(base, positive_section(base), d.delta) != d.mu) {
    throw std::logic_error("s_0 . delta != mu for " + f.to_string());
  }
  if (d.two_k_plus_delta != RuledClass{1, shokurov_coefficient(f)}) {
    throw std::logic_error("2K + delta = " + to_string(d.two_k_plus_delta) +
                           " disagrees with the closed form for " + f.to_string());
  }
  // C in |2M + (n+d1)L| and Z in |2M + (n+d2)L| restricted to Y_3 = F_{d3}.
  const Hirzebruch y3(f.d3);
  const std::int64_t cz = intersect(y3, from_tautological(y3, 2, f.n + f.d1),
                                    from_tautological(y3, 2, f.n + f.d2));
  if (cz != d.odp) {
    throw std::logic_error("C.Z = " + std::to_string(cz) + " disagrees with the node count for " +
                           f.to_string());
  }
  return d;
}

bool shokurov_nonruled(const DP3Family& f) {
  require_smooth_pic2(f, "shokurov_nonruled");
  const Hirzebruch base(f.d1 - f.d2);
  const RuledClass delta{5, 5 * f.d1 - 2 * f.d3 + 4 * f.d2 + 3 * f.n};
  return is_effective(2 * canonical(base) + delta);
}

ClassificationReport classify(const DP3Family& f) {
  ClassificationReport rep;
  rep.family = f;
  rep.smooth_pic2 = smooth_pic2(f);
  rep.k3 = k_cubed(f);
  rep.euler = euler_characteristic(f);
  rep.cone = cone_position(f);
  if (!rep.smooth_pic2) {
    rep.verdict = Verdict::NotGeneralSmoothPic2;
    rep.route = Route::None;
    return rep;
  }

  rep.degeneration = degeneration(f);
  if (f == DP3Family{0, 0, 0, 1}) {
    rep.verdict = Verdict::Rational;
    rep.route = Route::MainTheoremRational;
  } else if (f == DP3Family{1, 0, 0, 0}) {
    rep.verdict = Verdict::Nonrational;
    rep.route = Route::CubicThreefold;
  } else {
    if (!rep.degeneration->shokurov) {
      throw std::logic_error("case analysis failed: " + f.to_string() +
                             " is smooth with rk Pic = 2 but |2K + delta| is empty");
    }
    rep.verdict = Verdict::Nonrational;
    rep.route = Route::ShokurovConicBundle;
  }
  return rep;
}

std::int64_t ks2_scroll_adjunction(const DP3Family& f) {
  const Scroll b({f.d1, f.d3, 0});
  const DivisorClass s{2, f.d1 + f.n};
  const DivisorClass ks = canonical_class(b) + s;
  const std::array<DivisorClass, 3> classes{ks, ks, s};
  return static_cast<std::int64_t>(intersection_number(b, classes));
}

Ks2Discrepancy ks2_discrepancy(const DP3Family& f) {
  const std::int64_t mu = 5 * f.d1 - 2 * f.d3 + 4 * f.d2 + 3 * f.n;
  return {8 - mu, ks2_scroll_adjunction(f)};
}

bool dp4_rational(std::int64_t euler) { return euler == 0 || euler == -8 || euler == -4; }

}  // namespace dpfib

#pragma once

// Divisor classes on Hirzebruch surfaces F_e, stored in the basis
// (s_inf, l) where s_inf^2 = -e, s_inf.l = 1, l^2 = 0.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dpfib {

class Hirzebruch {
 public:
  explicit Hirzebruch(std::int64_t e) : e_(e) {
    if (e < 0) throw std::invalid_argument("Hirzebruch invariant must be >= 0");
  }
  std::int64_t e() const { return e_; }
  friend bool operator==(const Hirzebruch&, const Hirzebruch&) = default;

 private:
  std::int64_t e_;
};

/// a s_inf + b l.
struct RuledClass {
  std::int64_t a = 0;
  std::int64_t b = 0;

  static constexpr RuledClass negative_section() { return {1, 0}; }
  static constexpr RuledClass fibre() { return {0, 1}; }

  friend constexpr RuledClass operator+(RuledClass x, RuledClass y) { return {x.a + y.a, x.b + y.b}; }
  friend constexpr RuledClass operator-(RuledClass x, RuledClass y) { return {x.a - y.a, x.b - y.b}; }
  friend constexpr RuledClass operator*(std::int64_t s, RuledClass x) { return {s * x.a, s * x.b}; }
  friend bool operator==(const RuledClass&, const RuledClass&) = default;
};

std::string to_string(RuledClass c);

std::int64_t intersect(const Hirzebruch& surface, RuledClass c1, RuledClass c2);

/// K = -2 s_inf - (e + 2) l.
RuledClass canonical(const Hirzebruch& surface);

/// Membership in the effective cone, generated by s_inf and l.
bool is_effective(RuledClass cls);

/// Nonnegative on both s_inf and l. On F_e this is also base-point-freeness.
bool is_nef(const Hirzebruch& surface, RuledClass cls);

/// The positive section s_0 = s_inf + e l, with s_0^2 = e.
RuledClass positive_section(const Hirzebruch& surface);

/// Converts a s_0 + b l to the (s_inf, l) basis.
RuledClass from_tautological(const Hirzebruch& surface, std::int64_t a, std::int64_t b);

struct TautologicalCoords {
  std::int64_t a = 0;
  std::int64_t b = 0;
  friend bool operator==(const TautologicalCoords&, const TautologicalCoords&) = default;
};

TautologicalCoords to_tautological(const Hirzebruch& surface, RuledClass cls);

}  // namespace dpfib

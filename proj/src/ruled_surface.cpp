#include "dpfib/ruled_surface.hpp"

namespace dpfib {

std::string to_string(RuledClass c) {
  return "(" + std::to_string(c.a) + "," + std::to_string(c.b) + ")";
}

std::int64_t intersect(const Hirzebruch& surface, RuledClass c1, RuledClass c2) {
  return -surface.e() * c1.a * c2.a + c1.a * c2.b + c2.a * c1.b;
}

RuledClass canonical(const Hirzebruch& surface) { return {-2, -(surface.e() + 2)}; }

bool is_effective(RuledClass cls) { return cls.a >= 0 && cls.b >= 0; }

bool is_nef(const Hirzebruch& surface, RuledClass cls) {
  return intersect(surface, cls, RuledClass::fibre()) >= 0 &&
         intersect(surface, cls, RuledClass::negative_section()) >= 0;
}

RuledClass positive_section(const Hirzebruch& surface) { return {1, surface.e()}; }

RuledClass from_tautological(const Hirzebruch& surface, std::int64_t a, std::int64_t b) {
  return {a, b + surface.e() * a};
}

TautologicalCoords to_tautological(const Hirzebruch& surface, RuledClass cls) {
  return {cls.a, cls.b - surface.e() * cls.a};
}

}  // namespace dpfib

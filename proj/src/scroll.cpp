#include "dpfib/scroll.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace dpfib {

std::string to_string(DivisorClass c) {
  return std::to_string(c.a) + "M" + (c.b < 0 ? " - " : " + ") + std::to_string(c.b < 0 ? -c.b : c.b) + "L";
}

namespace {

void check_index(const Scroll& scroll, SubscrollIndex j) {
  if (j.j < 2 || j.j > scroll.rank()) {
    throw std::invalid_argument("subscroll index j=" + std::to_string(j.j) +
                                " outside [2, " + std::to_string(scroll.rank()) + "]");
  }
}

// x_1^a has the largest coefficient degree, so |aM+bL| is nonempty iff
// a >= 0 and a d_1 + b >= 0.
bool has_sections(const Scroll& scroll, DivisorClass cls) {
  if (cls.a < 0) return false;
  const __int128 top = static_cast<__int128>(cls.a) * scroll.degree(1) + cls.b;
  return top >= 0;
}

void require_sections(const Scroll& scroll, DivisorClass cls) {
  if (!has_sections(scroll, cls)) {
    throw EmptySystemError("|" + to_string(cls) + "| is empty on " + scroll.to_string());
  }
}

}  // namespace

Scroll::Scroll(std::vector<std::int64_t> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.size() < 2) {
    throw std::invalid_argument("a scroll needs rank k >= 2");
  }
  if (!std::is_sorted(degrees_.begin(), degrees_.end(), std::greater<>())) {
    throw std::invalid_argument("scroll degrees must be non-increasing: " + to_string());
  }
  if (degrees_.back() != 0) {
    throw std::invalid_argument("scroll degrees must end in 0: " + to_string());
  }
}

Scroll Scroll::normalize(std::vector<std::int64_t> degrees) {
  if (degrees.size() < 2) {
    throw std::invalid_argument("a scroll needs rank k >= 2");
  }
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  const std::int64_t shift = degrees.back();
  for (auto& d : degrees) d -= shift;
  return Scroll(std::move(degrees));
}

std::int64_t Scroll::degree_sum() const {
  return std::accumulate(degrees_.begin(), degrees_.end(), std::int64_t{0});
}

std::string Scroll::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (i) os << ',';
    os << degrees_[i];
  }
  os << ')';
  return os.str();
}

std::vector<Monomial> monomials(const Scroll& scroll, DivisorClass cls) {
  std::vector<Monomial> out;
  if (cls.a < 0) return out;

  const std::size_t k = scroll.rank();
  std::vector<std::int64_t> exps(k, 0);

  // Exponents are chosen left to right in increasing order, which yields
  // ascending lexicographic output.
  std::function<void(std::size_t, std::int64_t, std::int64_t)> place =
      [&](std::size_t pos, std::int64_t remaining, std::int64_t degree) {
        if (pos + 1 == k) {
          exps[pos] = remaining;
          const std::int64_t coeff = degree + remaining * scroll.degree(pos + 1);
          if (coeff >= 0) out.push_back({exps, coeff});
          return;
        }
        for (std::int64_t e = 0; e <= remaining; ++e) {
          exps[pos] = e;
          place(pos + 1, remaining - e, degree + e * scroll.degree(pos + 1));
        }
      };
  place(0, cls.a, cls.b);
  return out;
}

BigInt h0(const Scroll& scroll, DivisorClass cls) {
  BigInt total = 0;
  for (const auto& m : monomials(scroll, cls)) {
    total += BigInt(m.coeff_degree) + 1;
  }
  return total;
}

bool reid_criterion(const Scroll& scroll, DivisorClass cls, SubscrollIndex j, std::int64_t q) {
  check_index(scroll, j);
  const std::int64_t dj = scroll.degree(j.j);
  const std::int64_t d1 = scroll.degree(1);
  const __int128 lhs = static_cast<__int128>(cls.a) * dj + cls.b +
                       static_cast<__int128>(d1 - dj) * (q - 1);
  return lhs < 0;
}

std::int64_t mult_subscroll(const Scroll& scroll, DivisorClass cls, SubscrollIndex j) {
  check_index(scroll, j);
  require_sections(scroll, cls);

  const std::int64_t dj = scroll.degree(j.j);
  const std::int64_t gap = scroll.degree(1) - dj;
  const __int128 deficit = -(static_cast<__int128>(cls.a) * dj + cls.b);
  if (deficit <= 0) return 0;
  // deficit > 0 with a nonempty system forces gap > 0. The criterion
  // holds exactly for q - 1 < deficit / gap, so mult = ceil(deficit / gap).
  return static_cast<std::int64_t>((deficit + gap - 1) / gap);
}

std::int64_t mult_subscroll_oracle(const Scroll& scroll, DivisorClass cls, SubscrollIndex j) {
  check_index(scroll, j);
  const auto ms = monomials(scroll, cls);
  if (ms.empty()) {
    throw EmptySystemError("|" + to_string(cls) + "| is empty on " + scroll.to_string());
  }
  std::int64_t best = cls.a;
  for (const auto& m : ms) {
    const std::int64_t s =
        std::accumulate(m.exponents.begin(), m.exponents.begin() + (j.j - 1), std::int64_t{0});
    best = std::min(best, s);
  }
  return best;
}

std::optional<SubscrollIndex> base_locus(const Scroll& scroll, DivisorClass cls) {
  require_sections(scroll, cls);
  for (std::size_t j = 2; j <= scroll.rank(); ++j) {
    const __int128 v = static_cast<__int128>(cls.a) * scroll.degree(j) + cls.b;
    if (v < 0) return SubscrollIndex{j};
  }
  return std::nullopt;
}

BigInt intersection_number(const Scroll& scroll, std::span<const DivisorClass> classes) {
  if (classes.size() != scroll.rank()) {
    throw std::invalid_argument("intersection on a rank-" + std::to_string(scroll.rank()) +
                                " scroll needs exactly " + std::to_string(scroll.rank()) +
                                " classes, got " + std::to_string(classes.size()));
  }
  // Expand prod (a_i M + b_i L): only terms with at most one L survive.
  BigInt all_m = 1;
  for (const auto& c : classes) all_m *= c.a;
  BigInt result = all_m * scroll.degree_sum();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    BigInt term = classes[i].b;
    for (std::size_t t = 0; t < classes.size(); ++t) {
      if (t != i) term *= classes[t].a;
    }
    result += term;
  }
  return result;
}

DivisorClass canonical_class(const Scroll& scroll) {
  return {-static_cast<std::int64_t>(scroll.rank()), scroll.degree_sum() - 2};
}

}  // namespace dpfib

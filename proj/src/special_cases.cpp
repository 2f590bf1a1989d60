#include "dpfib/special_cases.hpp"

#include <algorithm>

namespace dpfib {

namespace {

using Poly = std::vector<std::uint64_t>;  // affine in t0, index = power

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly derivative(const PrimeField& k, const Poly& f) {
  Poly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(k.mul(k.reduce(static_cast<std::int64_t>(i)), f[i]));
  trim(d);
  return d;
}

// Remainder of f modulo a nonzero g.
Poly remainder(const PrimeField& k, Poly f, const Poly& g) {
  const std::uint64_t lead_inv = k.inv(g.back());
  while (f.size() >= g.size()) {
    const std::uint64_t factor = k.mul(f.back(), lead_inv);
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) {
      f[shift + i] = k.sub(f[shift + i], k.mul(factor, g[i]));
    }
    trim(f);
  }
  return f;
}

Poly gcd(const PrimeField& k, Poly f, Poly g) {
  trim(f);
  trim(g);
  while (!g.empty()) {
    Poly r = remainder(k, f, g);
    f = std::move(g);
    g = std::move(r);
  }
  return f;
}

}  // namespace

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p <= 2 || p >= (std::uint64_t{1} << 32) || !is_prime(p)) {
    throw std::invalid_argument("field modulus must be an odd prime below 2^32, got " +
                                std::to_string(p));
  }
}

std::uint64_t PrimeField::reduce(std::int64_t v) const {
  const auto p = static_cast<std::int64_t>(p_);
  return static_cast<std::uint64_t>(((v % p) + p) % p);
}

std::uint64_t PrimeField::inv(std::uint64_t x) const {
  if (x % p_ == 0) throw std::domain_error("inverse of zero in Z/pZ");
  std::uint64_t result = 1;
  std::uint64_t base = x % p_;
  for (std::uint64_t e = p_ - 2; e; e >>= 1) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

BinaryForm::BinaryForm(PrimeField field, std::vector<std::uint64_t> coefficients)
    : field_(field), coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw std::invalid_argument("a binary form needs degree >= 0");
  for (auto& c : coeffs_) c %= field_.modulus();
}

BinaryForm BinaryForm::zero(PrimeField field, int degree) {
  if (degree < 0) throw std::invalid_argument("a binary form needs degree >= 0");
  return BinaryForm(field, std::vector<std::uint64_t>(degree + 1, 0));
}

BinaryForm BinaryForm::constant(PrimeField field, std::int64_t value) {
  return BinaryForm(field, {field.reduce(value)});
}

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::uint64_t c) { return c == 0; });
}

int BinaryForm::trimmed_degree() const {
  for (int i = degree(); i >= 0; --i) {
    if (coeffs_[i] != 0) return i;
  }
  return -1;
}

BinaryForm multiply(const BinaryForm& f, const BinaryForm& g) {
  if (!(f.field() == g.field())) throw std::invalid_argument("forms over different fields");
  const PrimeField& k = f.field();
  std::vector<std::uint64_t> out(f.degree() + g.degree() + 1, 0);
  for (int i = 0; i <= f.degree(); ++i) {
    for (int j = 0; j <= g.degree(); ++j) {
      out[i + j] = k.add(out[i + j], k.mul(f.coefficients()[i], g.coefficients()[j]));
    }
  }
  return BinaryForm(k, std::move(out));
}

BinaryForm discriminant(const BinaryForm& b, const BinaryForm& a, const BinaryForm& c) {
  const PrimeField& k = b.field();
  if (!(a.field() == k) || !(c.field() == k)) throw std::invalid_argument("forms over different fields");
  const BinaryForm bb = multiply(b, b);
  const BinaryForm ac = multiply(a, c);
  const int degree = std::max(bb.degree(), ac.degree());
  std::vector<std::uint64_t> out(degree + 1, 0);
  const std::uint64_t four = k.reduce(4);
  for (int i = 0; i <= bb.degree(); ++i) out[i] = bb.coefficients()[i];
  for (int i = 0; i <= ac.degree(); ++i) out[i] = k.sub(out[i], k.mul(four, ac.coefficients()[i]));
  return BinaryForm(k, std::move(out));
}

RootCount root_count(const BinaryForm& f) {
  if (f.is_zero()) throw std::domain_error("root count of the zero form");
  const PrimeField& k = f.field();
  if (k.modulus() <= static_cast<std::uint64_t>(f.degree())) {
    throw std::invalid_argument("characteristic must exceed the form degree");
  }
  Poly g(f.coefficients().begin(), f.coefficients().end());
  trim(g);
  const int affine_degree = static_cast<int>(g.size()) - 1;
  const bool root_at_infinity = affine_degree < f.degree();

  int affine_distinct = 0;
  if (affine_degree > 0) {
    const Poly common = gcd(k, g, derivative(k, g));
    affine_distinct = affine_degree - (static_cast<int>(common.size()) - 1);
  }
  return {f.degree(), affine_distinct + (root_at_infinity ? 1 : 0)};
}

int singular_fiber_count(std::int64_t k_squared) {
  if (k_squared > 8) {
    throw std::out_of_range("K^2 = " + std::to_string(k_squared) + " exceeds 8");
  }
  return static_cast<int>(8 - k_squared);
}

BinaryForm FormSampler::draw(int degree) {
  std::vector<std::uint64_t> coeffs(degree + 1);
  for (auto& c : coeffs) c = rng_() % field_.modulus();
  return BinaryForm(field_, std::move(coeffs));
}

Dp2Report dp2_report_from_forms(const BinaryForm& a, const BinaryForm& b, const BinaryForm& c) {
  const BinaryForm disc = discriminant(b, a, c);
  if (disc.is_zero()) {
    throw DegenerateSeedError("discriminant b^2 - 4ac vanishes identically");
  }
  const RootCount roots = root_count(disc);

  Dp2Report rep;
  rep.lambda = singular_fiber_count(kDp2FibreKSquared);
  rep.mu = roots.total;
  rep.mu_distinct = roots.distinct;
  rep.discriminant_degree = disc.trimmed_degree();
  rep.xi = {rep.lambda, rep.mu};
  const Hirzebruch quadric(0);
  rep.two_k_plus_xi = 2 * canonical(quadric) + rep.xi;
  rep.two_k_plus_xi_effective = is_effective(rep.two_k_plus_xi);
  rep.nonruled = rep.two_k_plus_xi_effective;
  rep.generic = roots.distinct == roots.total && rep.discriminant_degree == disc.degree();
  return rep;
}

Dp2Report dp2_report(std::uint64_t seed, PrimeField field) {
  FormSampler sampler(seed, field);
  const BinaryForm a = sampler.draw(2);
  const BinaryForm b = sampler.draw(4);
  const BinaryForm c = sampler.draw(6);
  try {
    return dp2_report_from_forms(a, b, c);
  } catch (const DegenerateSeedError& e) {
    throw DegenerateSeedError("seed " + std::to_string(seed) + ": " + e.what());
  }
}

CurveSystem::CurveSystem(int size, std::vector<std::vector<int>> orbits,
                         std::vector<std::pair<int, int>> meets, std::vector<std::string> labels)
    : size_(size), orbits_(std::move(orbits)), adjacency_(static_cast<std::size_t>(size) * size, false),
      labels_(std::move(labels)) {
  if (size <= 0) throw std::invalid_argument("a curve system needs at least one curve");
  std::vector<int> seen(size, 0);
  for (const auto& orbit : orbits_) {
    if (orbit.empty()) throw std::invalid_argument("empty orbit");
    for (int i : orbit) {
      if (i < 0 || i >= size) throw std::invalid_argument("orbit member out of range");
      if (seen[i]++) throw std::invalid_argument("orbits overlap at curve " + std::to_string(i));
    }
  }
  if (std::count(seen.begin(), seen.end(), 0) != 0) {
    throw std::invalid_argument("orbits do not cover every curve");
  }
  for (auto [i, j] : meets) {
    if (i < 0 || j < 0 || i >= size || j >= size) throw std::invalid_argument("edge out of range");
    if (i == j) throw std::invalid_argument("a curve cannot meet itself in this relation");
    adjacency_[i * size + j] = true;
    adjacency_[j * size + i] = true;
  }
  if (labels_.empty()) {
    for (int i = 0; i < size; ++i) labels_.push_back("C" + std::to_string(i + 1));
  } else if (static_cast<int>(labels_.size()) != size) {
    throw std::invalid_argument("label count does not match curve count");
  }
}

std::vector<std::pair<int, int>> CurveSystem::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size_; ++i) {
    for (int j = i + 1; j < size_; ++j) {
      if (meets(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

CurveSystem CurveSystem::without_edge(int i, int j) const {
  auto e = edges();
  std::erase_if(e, [&](const auto& p) {
    return (p.first == i && p.second == j) || (p.first == j && p.second == i);
  });
  return CurveSystem(size_, orbits_, std::move(e), labels_);
}

CurveSystem reducible_fibre_system() {
  // F~i -> i-1, F-i -> i+4.
  std::vector<std::string> labels;
  for (int i = 1; i <= 5; ++i) labels.push_back("F~" + std::to_string(i));
  for (int i = 1; i <= 5; ++i) labels.push_back("F-" + std::to_string(i));
  std::vector<std::pair<int, int>> meets;
  for (int i = 0; i < 5; ++i) meets.emplace_back(i, i + 5);
  return CurveSystem(10, {{0, 1, 2, 5, 6, 7}, {3, 8}, {4, 9}}, std::move(meets), std::move(labels));
}

std::vector<std::vector<int>> invariant_disjoint_subsets(const CurveSystem& sys) {
  const auto& orbits = sys.orbits();
  const std::size_t m = orbits.size();
  if (m > 24) throw std::invalid_argument("too many orbits for exhaustive search");
  std::vector<std::vector<int>> out;
  const std::uint64_t full = (std::uint64_t{1} << m) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    std::vector<int> members;
    for (std::size_t o = 0; o < m; ++o) {
      if (mask >> o & 1) members.insert(members.end(), orbits[o].begin(), orbits[o].end());
    }
    bool disjoint = true;
    for (std::size_t x = 0; x < members.size() && disjoint; ++x) {
      for (std::size_t y = x + 1; y < members.size(); ++y) {
        if (sys.meets(members[x], members[y])) {
          disjoint = false;
          break;
        }
      }
    }
    if (disjoint) {
      std::sort(members.begin(), members.end());
      out.push_back(std::move(members));
    }
  }
  return out;
}

bool picard_rank_two_witness() { return invariant_disjoint_subsets(reducible_fibre_system()).empty(); }

}  // namespace dpfib

#include "dpfib/sweep.hpp"

#include <exception>

#include <omp.h>

namespace dpfib {

namespace {

struct Triple {
  std::int64_t d1, d2, d3;
};

std::vector<Triple> sorted_triples(std::int64_t max_d1) {
  std::vector<Triple> out;
  for (std::int64_t d1 = 0; d1 <= max_d1; ++d1)
    for (std::int64_t d2 = 0; d2 <= d1; ++d2)
      for (std::int64_t d3 = 0; d3 <= d2; ++d3) out.push_back({d1, d2, d3});
  return out;
}

DP3Family family_at(const std::vector<Triple>& triples, const EnumerationRange& range,
                    std::size_t index) {
  const auto width = static_cast<std::size_t>(range.n_max - range.n_min + 1);
  const Triple& t = triples[index / width];
  return {t.d1, t.d2, t.d3, range.n_min + static_cast<std::int64_t>(index % width)};
}

// Exceptions may not cross an OpenMP region boundary; the first one is
// parked here and rethrown after the loop.
class FirstError {
 public:
  void capture() {
#pragma omp critical(dpfib_first_error)
    if (!error_) error_ = std::current_exception();
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::exception_ptr error_;
};

void tally_family(const DP3Family& f, IdentityTally& t) {
  ++t.families;
  const std::int64_t k3 = k_cubed(f);
  if (euler_characteristic(f) != -4 * k3 - 54) ++t.euler_vs_k3;
  if (k_cubed_adjunction(f) != k3) ++t.k3_vs_adjunction;
  if (!smooth_pic2(f)) return;

  ++t.smooth;
  if (!necessary_smooth_pic2(f)) ++t.not_necessary;
  const DegenerationData d = degeneration(f);
  if (d.mu + d.ks2 != 8) ++t.mu_plus_ks2;
  const Hirzebruch y3(f.d3);
  const std::int64_t cz =
      intersect(y3, from_tautological(y3, 2, f.n + f.d1), from_tautological(y3, 2, f.n + f.d2));
  if (cz != d.odp) ++t.odp_vs_cz;
  if (d.odp <= 0) ++t.odp_nonpositive;
  const bool closed = 3 * f.d1 + 6 * f.d2 - 2 * f.d3 + 3 * f.n >= 4;
  if (shokurov_nonruled(f) != closed || d.shokurov != closed) ++t.shokurov_vs_closed;
}

void merge(IdentityTally& into, const IdentityTally& t) {
  into.families += t.families;
  into.smooth += t.smooth;
  into.mu_plus_ks2 += t.mu_plus_ks2;
  into.euler_vs_k3 += t.euler_vs_k3;
  into.k3_vs_adjunction += t.k3_vs_adjunction;
  into.odp_vs_cz += t.odp_vs_cz;
  into.shokurov_vs_closed += t.shokurov_vs_closed;
  into.odp_nonpositive += t.odp_nonpositive;
  into.not_necessary += t.not_necessary;
}

void merge(OracleSweepTally& into, const OracleSweepTally& t) {
  into.cases += t.cases;
  into.empty += t.empty;
  into.mult_mismatch += t.mult_mismatch;
  into.closed_form_violations += t.closed_form_violations;
  into.base_locus_mismatch += t.base_locus_mismatch;
  into.empty_disagreement += t.empty_disagreement;
}

// Every check for one (scroll, a, b), across all j.
void tally_linear_system(const Scroll& scroll, DivisorClass cls, OracleSweepTally& t) {
  const std::size_t k = scroll.rank();
  std::optional<std::optional<SubscrollIndex>> locus;
  try {
    locus = base_locus(scroll, cls);
  } catch (const EmptySystemError&) {
  }

  for (std::size_t j = 2; j <= k; ++j) {
    ++t.cases;
    const SubscrollIndex idx{j};
    std::optional<std::int64_t> fast, slow;
    try {
      fast = mult_subscroll(scroll, cls, idx);
    } catch (const EmptySystemError&) {
    }
    try {
      slow = mult_subscroll_oracle(scroll, cls, idx);
    } catch (const EmptySystemError&) {
    }
    if (fast.has_value() != slow.has_value() || fast.has_value() != locus.has_value()) {
      ++t.empty_disagreement;
      continue;
    }
    if (!slow) {
      ++t.empty;
      continue;
    }
    if (*fast != *slow) ++t.mult_mismatch;
    for (std::int64_t q = 1; q <= cls.a + 1; ++q) {
      if ((*slow >= q) != reid_criterion(scroll, cls, idx, q)) {
        ++t.closed_form_violations;
        break;
      }
    }
    const bool in_base = locus->has_value() && j >= (*locus)->j;
    if (in_base != (*slow >= 1)) ++t.base_locus_mismatch;
  }
}

}  // namespace

void EnumerationRange::validate() const {
  if (max_d1 < 0) throw std::invalid_argument("max_d1 must be >= 0");
  if (n_min > n_max) throw std::invalid_argument("n_min must not exceed n_max");
}

std::uint64_t EnumerationRange::family_count() const {
  validate();
  const auto m = static_cast<std::uint64_t>(max_d1);
  const std::uint64_t triples = (m + 3) * (m + 2) * (m + 1) / 6;
  return triples * static_cast<std::uint64_t>(n_max - n_min + 1);
}

std::vector<DP3Family> families(const EnumerationRange& range) {
  range.validate();
  std::vector<DP3Family> out;
  for (const Triple& t : sorted_triples(range.max_d1))
    for (std::int64_t n = range.n_min; n <= range.n_max; ++n) out.push_back({t.d1, t.d2, t.d3, n});
  return out;
}

void for_each_report(const EnumerationRange& range,
                     const std::function<void(const ClassificationReport&)>& sink) {
  range.validate();
  for (const Triple& t : sorted_triples(range.max_d1))
    for (std::int64_t n = range.n_min; n <= range.n_max; ++n) sink(classify({t.d1, t.d2, t.d3, n}));
}

std::vector<ClassificationReport> enumerate_serial(const EnumerationRange& range) {
  std::vector<ClassificationReport> out;
  for_each_report(range, [&](const ClassificationReport& r) { out.push_back(r); });
  return out;
}

std::vector<ClassificationReport> enumerate_parallel(const EnumerationRange& range) {
  range.validate();
  const auto triples = sorted_triples(range.max_d1);
  const auto total = static_cast<std::int64_t>(range.family_count());
  std::vector<ClassificationReport> out(total);
  FirstError error;
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < total; ++i) {
    try {
      out[i] = classify(family_at(triples, range, static_cast<std::size_t>(i)));
    } catch (...) {
      error.capture();
    }
  }
  error.rethrow();
  return out;
}

std::uint64_t IdentityTally::failures() const {
  return mu_plus_ks2 + euler_vs_k3 + k3_vs_adjunction + odp_vs_cz + shokurov_vs_closed +
         odp_nonpositive + not_necessary;
}

IdentityTally check_identities_serial(const EnumerationRange& range) {
  IdentityTally t;
  for (const DP3Family& f : families(range)) tally_family(f, t);
  return t;
}

IdentityTally check_identities_parallel(const EnumerationRange& range) {
  range.validate();
  const auto triples = sorted_triples(range.max_d1);
  const auto total = static_cast<std::int64_t>(range.family_count());
  IdentityTally result;
  FirstError error;
#pragma omp parallel
  {
    IdentityTally local;
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < total; ++i) {
      try {
        tally_family(family_at(triples, range, static_cast<std::size_t>(i)), local);
      } catch (...) {
        error.capture();
      }
    }
#pragma omp critical(dpfib_identity_merge)
    merge(result, local);
  }
  error.rethrow();
  return result;
}

std::uint64_t OracleSweepTally::failures() const {
  return mult_mismatch + closed_form_violations + base_locus_mismatch + empty_disagreement;
}

std::vector<Scroll> scrolls_up_to(std::size_t max_rank, std::int64_t max_d1) {
  std::vector<Scroll> out;
  for (std::size_t k = 2; k <= max_rank; ++k) {
    // Non-increasing d_1..d_{k-1} in [0, max_d1], then d_k = 0.
    std::vector<std::int64_t> degs(k, 0);
    std::function<void(std::size_t, std::int64_t)> fill = [&](std::size_t pos, std::int64_t cap) {
      if (pos + 1 == k) {
        out.emplace_back(degs);
        return;
      }
      for (std::int64_t d = 0; d <= cap; ++d) {
        degs[pos] = d;
        fill(pos + 1, d);
      }
    };
    fill(0, max_d1);
  }
  return out;
}

OracleSweepTally oracle_sweep_serial(const OracleSweepConfig& cfg) {
  OracleSweepTally t;
  for (const Scroll& s : scrolls_up_to(cfg.max_rank, cfg.max_d1))
    for (std::int64_t a = 0; a <= cfg.max_a; ++a)
      for (std::int64_t b = -cfg.max_abs_b; b <= cfg.max_abs_b; ++b) tally_linear_system(s, {a, b}, t);
  return t;
}

OracleSweepTally oracle_sweep_parallel(const OracleSweepConfig& cfg) {
  const auto scrolls = scrolls_up_to(cfg.max_rank, cfg.max_d1);
  const auto width = cfg.max_a + 1;
  const auto total = static_cast<std::int64_t>(scrolls.size()) * width;
  OracleSweepTally result;
  FirstError error;
#pragma omp parallel
  {
    OracleSweepTally local;
#pragma omp for schedule(dynamic, 4) nowait
    for (std::int64_t i = 0; i < total; ++i) {
      try {
        const Scroll& s = scrolls[i / width];
        const std::int64_t a = i % width;
        for (std::int64_t b = -cfg.max_abs_b; b <= cfg.max_abs_b; ++b) tally_linear_system(s, {a, b}, local);
      } catch (...) {
        error.capture();
      }
    }
#pragma omp critical(dpfib_oracle_merge)
    merge(result, local);
  }
  error.rethrow();
  return result;
}

namespace {

Dp2Outcome run_seed(std::uint64_t seed, const PrimeField& field) {
  Dp2Outcome o;
  o.seed = seed;
  try {
    o.report = dp2_report(seed, field);
  } catch (const DegenerateSeedError& e) {
    o.error = e.what();
  }
  return o;
}

}  // namespace

std::vector<Dp2Outcome> dp2_sweep_serial(const std::vector<std::uint64_t>& seeds, PrimeField field) {
  std::vector<Dp2Outcome> out;
  for (std::uint64_t s : seeds) out.push_back(run_seed(s, field));
  return out;
}

std::vector<Dp2Outcome> dp2_sweep_parallel(const std::vector<std::uint64_t>& seeds, PrimeField field) {
  std::vector<Dp2Outcome> out(seeds.size());
  const auto total = static_cast<std::int64_t>(seeds.size());
  FirstError error;
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < total; ++i) {
    try {
      out[i] = run_seed(seeds[i], field);
    } catch (...) {
      error.capture();
    }
  }
  error.rethrow();
  return out;
}

}  // namespace dpfib

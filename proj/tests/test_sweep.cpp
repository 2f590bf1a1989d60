#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <omp.h>

#include "dpfib/sweep.hpp"

using namespace dpfib;

// The OpenMP kernels must reproduce the serial reference exactly, for any
// thread count.

TEST_CASE("enumerate: parallel matches serial") {
  for (int threads : {1, 2, 4}) {
    omp_set_num_threads(threads);
    for (const EnumerationRange r : {EnumerationRange{0, 1, 1}, EnumerationRange{3, -4, 4},
                                     EnumerationRange{9, -20, 13}}) {
      CHECK(enumerate_parallel(r) == enumerate_serial(r));
    }
  }
}

TEST_CASE("for_each_report streams the same sequence") {
  const EnumerationRange r{4, -3, 5};
  std::vector<ClassificationReport> streamed;
  for_each_report(r, [&](const ClassificationReport& rep) { streamed.push_back(rep); });
  CHECK(streamed == enumerate_serial(r));
}

TEST_CASE("identities: parallel matches serial and nothing fails") {
  const EnumerationRange r{10, -25, 25};
  const auto serial = check_identities_serial(r);
  for (int threads : {1, 3}) {
    omp_set_num_threads(threads);
    CHECK(check_identities_parallel(r) == serial);
  }
  CHECK(serial.families == r.family_count());
  CHECK(serial.smooth > 0);
  CHECK(serial.failures() == 0);
}

TEST_CASE("oracle sweep: parallel matches serial on a reduced grid") {
  const OracleSweepConfig cfg{4, 4, 4, 10};
  const auto serial = oracle_sweep_serial(cfg);
  for (int threads : {1, 4}) {
    omp_set_num_threads(threads);
    CHECK(oracle_sweep_parallel(cfg) == serial);
  }
  CHECK(serial.cases > 0);
  CHECK(serial.empty > 0);
  CHECK(serial.failures() == 0);
}

TEST_CASE("scrolls_up_to counts non-increasing degree vectors") {
  // rank k contributes C(max_d1 + k - 1, k - 1) vectors.
  CHECK(scrolls_up_to(2, 6).size() == 7);
  CHECK(scrolls_up_to(3, 6).size() == 7 + 28);
  CHECK(scrolls_up_to(5, 6).size() == 7 + 28 + 84 + 210);
}

TEST_CASE("dp2 sweep: parallel matches serial") {
  std::vector<std::uint64_t> seeds;
  for (std::uint64_t s = 0; s < 64; ++s) seeds.push_back(s);
  const auto serial = dp2_sweep_serial(seeds);
  omp_set_num_threads(4);
  CHECK(dp2_sweep_parallel(seeds) == serial);
  for (const auto& o : serial) {
    REQUIRE(o.report.has_value());
    CHECK(o.report->mu == 8);
  }
}

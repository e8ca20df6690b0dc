#include <doctest.h>

#include <cstdlib>

#include "explab/energy.hpp"
#include "explab/reference.hpp"
#include "explab/verify.hpp"
#include "test_util.hpp"

using namespace explab;
using testutil::ap;
using testutil::mk;
using testutil::random_set;

namespace {

const VerificationReport& find(const std::vector<VerificationReport>& rs, const std::string& id) {
  for (const VerificationReport& r : rs)
    if (r.statement_id == id) return r;
  static VerificationReport missing;
  REQUIRE(false);
  return missing;
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("exact suite examples") {
    auto rs = verify_exact(mk({0, 1, 2}));
    CHECK(rs.size() == 2);
    const auto& ungar = find(rs, "diff_quotient_lb");
    CHECK(ungar.pass == TriState::Pass);
    CHECK(ungar.lhs == "7");
    CHECK(ungar.rhs == "7");
    const auto& balog = find(rs, "sum_quotient_lb");
    CHECK(!balog.pass);
    CHECK(balog.notes.find("nonpositive") != std::string::npos);

    rs = verify_exact(mk({1, 2}));
    CHECK(find(rs, "diff_quotient_lb").pass == TriState::Pass);
    CHECK(find(rs, "sum_quotient_lb").pass == TriState::Pass);
    CHECK(find(rs, "sum_quotient_lb").lhs == "7");

    rs = verify_exact(mk({1, 2, 4, 8}));
    for (const auto& r : rs) CHECK(r.pass == TriState::Pass);
  }

  TEST_CASE("exact suite never fails across the corpus") {
    for (std::uint64_t seed = 300; seed < 340; ++seed) {
      RSet a = random_set(2 + static_cast<long>(seed % 9), 20, seed);
      for (const auto& r : verify_exact(a))
        if (r.pass) CHECK(*r.pass == TriState::Pass);
    }
  }

  TEST_CASE("ratio suite shape and spot values") {
    auto rs = verify_ratio_suite(mk({1, 2}));
    CHECK(rs.size() == 17);
    for (std::size_t i = 1; i < rs.size(); ++i)
      CHECK(rs[i - 1].statement_id < rs[i].statement_id);
    for (const auto& r : rs) CHECK(!r.pass);  // ratios carry no verdict

    // |(A+A)(A+A)| = 6 on {1,2}: ratio = 6 * log2(2) / 4.
    CHECK(find(rs, "sum_times_sum_ratio").ratio == "1.5");

    // d_*-dependent rows say they use the upper bound.
    CHECK(find(rs, "tail_decay_ratio").notes.find("upper bound") != std::string::npos);
  }

  TEST_CASE("five-variable ratio matches the enumeration oracle") {
    auto rs = verify_ratio_suite(ap(8));
    double expected = static_cast<double>(ref::five_var_image(ap(8)).size()) * 3.0 / 64.0;
    CHECK(std::abs(std::atof(find(rs, "five_var_ratio").ratio.c_str()) - expected) < 1e-12);
  }

  TEST_CASE("ratio suite skips and guards") {
    auto rs = verify_ratio_suite(mk({1}));
    CHECK(rs.size() == 17);
    for (const auto& r : rs) CHECK(r.notes.find("skipped") != std::string::npos);

    rs = verify_ratio_suite(mk({-1, 0, 2}));
    CHECK(find(rs, "five_var_ratio").notes.find("skipped") != std::string::npos);
    CHECK(find(rs, "solymosi_energy_ratio").notes.find("skipped") != std::string::npos);
    CHECK(!find(rs, "jones_ratio").ratio.empty());
  }

  TEST_CASE("ratio suite is deterministic") {
    RSet a = random_set(9, 30, 12345);
    CHECK(reports_to_csv(verify_ratio_suite(a)) == reports_to_csv(verify_ratio_suite(a)));
    CHECK(reports_to_json(verify_ratio_suite(a)) == reports_to_json(verify_ratio_suite(a)));
  }

  TEST_CASE("interval suite examples") {
    auto rs = verify_interval_suite(mk({0, 1, 2}), mk({0, 1, 2}), 64);
    CHECK(rs.size() == 4);
    for (const auto& r : rs) CHECK(r.pass == TriState::Pass);

    // Hoelder on {0,1}: 64 <= (2 sqrt 2 + 2)^2 * 3.
    rs = verify_interval_suite(mk({0, 1}), mk({0, 1}), 64);
    const auto& holder = find(rs, "holder_cube_ineq");
    CHECK(holder.pass == TriState::Pass);
    CHECK(holder.lhs == "64");
    const auto& lower = find(rs, "shift_square_cs_lower");
    CHECK(lower.pass == TriState::Pass);
    CHECK(lower.lhs == "64/5");
    CHECK(lower.rhs == "16");
    const auto& upper = find(rs, "shift_square_cs_upper");
    CHECK(upper.lhs == "256");
    CHECK(upper.rhs == "324");
  }

  TEST_CASE("refinement honors the precision cap") {
    // The verdict never exceeds the requested cap; notes record what was used.
    auto rs = verify_interval_suite(mk({1, 2}), mk({1, 2}), 1);
    const auto& li = find(rs, "li_energy_ineq");
    CHECK(li.notes.find("certified at 1 bits") != std::string::npos);
    CHECK((li.pass == TriState::Pass || li.pass == TriState::Indeterminate));
    auto fine = verify_interval_suite(mk({1, 2}), mk({1, 2}), 64);
    CHECK(find(fine, "li_energy_ineq").pass == TriState::Pass);
    CHECK(find(fine, "li_energy_ineq").notes.find("certified at 64 bits") != std::string::npos);
  }

  TEST_CASE("interval suite never fails or stalls on random pairs") {
    for (std::uint64_t seed = 500; seed < 525; ++seed) {
      RSet a = random_set(2 + static_cast<long>(seed % 7), 18, seed);
      RSet b = random_set(2 + static_cast<long>((seed * 5) % 7), 18, seed + 1);
      for (const auto& r : verify_interval_suite(a, b, 64))
        CHECK(r.pass == TriState::Pass);
    }
  }

  TEST_CASE("case split trace") {
    VerificationReport r = case_split_trace(mk({1, 2, 4, 8}));
    // E* = 44, K = 64/44 = 16/11; both K-thresholds are tiny at this scale.
    CHECK(r.lhs == "44");
    CHECK(r.rhs == "64");
    CHECK(r.notes.find("K = 16/11") != std::string::npos);
    CHECK(r.notes.find("diff route: case 1") != std::string::npos);
    CHECK(r.notes.find("sum route: case 1") != std::string::npos);
    CHECK(r.notes.find("measured") != std::string::npos);

    VerificationReport fib = case_split_trace(mk({1, 2, 3, 5, 8, 13}));
    mpz_class estar = mult_energy(mk({1, 2, 3, 5, 8, 13}));
    CHECK(fib.lhs == estar.get_str());
    Rational k = Rational(216) / Rational(estar);
    bool case1 = k.pow(17) >= Rational(6);
    CHECK(fib.notes.find(std::string("diff route: case ") + (case1 ? "1" : "2")) !=
          std::string::npos);

    CHECK(case_split_trace(mk({1})).notes.find("skipped") != std::string::npos);
    CHECK(case_split_trace(mk({0, 1, 2})).notes.find("skipped") != std::string::npos);
  }

  TEST_CASE("K always lies in [1, |A|]") {
    for (std::uint64_t seed = 600; seed < 625; ++seed) {
      RSet a = testutil::nonzero_variant(random_set(2 + static_cast<long>(seed % 9), 25, seed));
      mpz_class estar = mult_energy(a);
      Rational k = Rational(static_cast<long>(a.size())).pow(3) / Rational(estar);
      CHECK(k >= Rational(1));
      CHECK(k <= Rational(static_cast<long>(a.size())));
    }
  }

  TEST_CASE("report serialization") {
    auto rs = verify_exact(mk({1, 2}));
    std::string csv = reports_to_csv(rs);
    CHECK(csv.find("statement_id,kind,pass,lhs,rhs,ratio,notes\n") == 0);
    CHECK(csv.find("diff_quotient_lb,exact,pass,3,2,,") != std::string::npos);
    std::string json = reports_to_json(rs);
    CHECK(json.find("\"statement_id\":\"diff_quotient_lb\"") != std::string::npos);
    // Skipped rows omit the verdict in JSON.
    std::string skipped = reports_to_json(verify_exact(mk({-1, 1})));
    CHECK(skipped.find("\"sum_quotient_lb\",\"kind\":\"exact\",\"lhs\"") != std::string::npos);
  }

  TEST_CASE("precision cap env override") {
    unsetenv("EXPANDER_LAB_PRECISION_BITS");
    CHECK(precision_cap_from_env() == 64);
    setenv("EXPANDER_LAB_PRECISION_BITS", "128", 1);
    CHECK(precision_cap_from_env() == 128);
    setenv("EXPANDER_LAB_PRECISION_BITS", "999999", 1);
    CHECK(precision_cap_from_env() == 4096);
    setenv("EXPANDER_LAB_PRECISION_BITS", "junk", 1);
    CHECK(precision_cap_from_env() == 64);
    unsetenv("EXPANDER_LAB_PRECISION_BITS");
  }
}

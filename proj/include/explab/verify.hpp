#pragma once

#include <optional>
#include <string>
#include <vector>

#include "explab/rset.hpp"

namespace explab {

enum class ReportKind { Exact, Ratio, Interval };
enum class TriState { Pass, Fail, Indeterminate };

/// One row per checked statement. Exact and interval statements carry a
/// verdict; asymptotic statements carry only the normalized quotient, since
/// their absolute constants are not specified anywhere. Skipped statements
/// (unmet hypotheses) keep their row, with the reason in notes.
struct VerificationReport {
  std::string statement_id;
  ReportKind kind = ReportKind::Exact;
  std::optional<TriState> pass;
  std::string lhs;
  std::string rhs;
  std::string ratio;  // decimal string, ratio rows only
  std::string notes;
};

// The two inequalities with explicit constants: |(A-A)/(A-A)| >= |A|^2 - 2
// and |(A+A)/(A+A)| >= 2|A|^2 - 1 (the latter only for all-positive A).
std::vector<VerificationReport> verify_exact(const RSet& a);

// Normalized quotients LHS / (RHS with constant 1) for every growth-rate
// statement. Rows are ordered by statement_id and deterministic for a given
// input. d_*-dependent rows use the certified upper bound and say so.
std::vector<VerificationReport> verify_ratio_suite(const RSet& a);

// Constant-free inequalities checked through certified rational intervals,
// refined up to max_bits before reporting indeterminate.
std::vector<VerificationReport> verify_interval_suite(const RSet& a, const RSet& b,
                                                      unsigned max_bits);

// Writes E*(A) = |A|^3/K, decides the K-threshold branch of both growth
// theorems exactly, and reports the instantiated bounds next to the measured
// image sizes.
VerificationReport case_split_trace(const RSet& a);

std::string reports_to_json(const std::vector<VerificationReport>& reports);
std::string reports_to_csv(const std::vector<VerificationReport>& reports);

// Interval refinement cap: EXPANDER_LAB_PRECISION_BITS, default 64, max 4096.
unsigned precision_cap_from_env();

}  // namespace explab

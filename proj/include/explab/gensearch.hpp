#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "explab/rset.hpp"

namespace explab {

enum class GenKind { Ap, Gp, RandomInt, Convex, PerturbedAp };

struct GenSpec {
  GenKind kind = GenKind::Ap;
  long n = 1;
  Rational start{1};
  Rational step{1};
  Rational base{2};
  long range = 0;          // random_int draws from [-range, range]
  Rational width{0};       // perturbed_ap jitter half-width
  std::uint64_t seed = 0;
};

// Deterministic for a fixed spec (including seed). Always returns exactly n
// distinct elements or throws DomainError.
RSet generate(const GenSpec& spec);

enum class Objective { FiveVarRatio, ProdDiffRatio, ProdSumRatio, UngarRatio };

double objective_value(Objective obj, const RSet& a);

struct SearchResult {
  RSet best_set;
  double objective = 0.0;
  std::uint64_t seed = 0;
  // (iteration, objective) at the start and at every accepted move;
  // values are nonincreasing.
  std::vector<std::pair<long, double>> trace;
};

// Hill climbing over n-element integer sets in the window [1, 16n], started
// from {1..n}: single-element replacement proposals, strict improvements
// accepted. Deterministic per seed.
SearchResult search_minimize(Objective obj, long n, long iters, std::uint64_t seed);

std::string search_result_to_json(const SearchResult& r);
std::string search_trace_to_csv(const SearchResult& r);

}  // namespace explab

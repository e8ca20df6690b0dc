#include "explab/gensearch.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>

#include <json.hpp>

#include "explab/errors.hpp"
#include "explab/io.hpp"
#include "explab/setops.hpp"

namespace explab {

namespace {

// Unbiased draw from [0, m); plain rejection on the raw engine output keeps
// results identical across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t m) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % m;
  for (;;) {
    std::uint64_t x = rng();
    if (x < limit) return x % m;
  }
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

RSet generate(const GenSpec& spec) {
  if (spec.n < 1) throw DomainError("generator needs n >= 1");
  std::vector<Rational> elems;
  elems.reserve(static_cast<std::size_t>(spec.n));
  switch (spec.kind) {
    case GenKind::Ap: {
      if (spec.step.is_zero()) throw DomainError("arithmetic progression with zero step");
      Rational v = spec.start;
      for (long i = 0; i < spec.n; ++i, v += spec.step) elems.push_back(v);
      break;
    }
    case GenKind::Gp: {
      if (!spec.base.is_positive() || spec.base == Rational(1))
        throw DomainError("geometric progression base must be positive and != 1");
      Rational v{1};
      for (long i = 0; i < spec.n; ++i, v *= spec.base) elems.push_back(v);
      break;
    }
    case GenKind::Convex: {
      for (long i = 1; i <= spec.n; ++i) elems.push_back(Rational(i * i));
      break;
    }
    case GenKind::RandomInt: {
      if (2 * spec.range + 1 < spec.n)
        throw DomainError("range too small for " + std::to_string(spec.n) + " distinct integers");
      std::mt19937_64 rng(spec.seed);
      std::set<long> chosen;
      const std::uint64_t span = static_cast<std::uint64_t>(2 * spec.range + 1);
      while (static_cast<long>(chosen.size()) < spec.n)
        chosen.insert(static_cast<long>(uniform_below(rng, span)) - spec.range);
      for (long v : chosen) elems.push_back(Rational(v));
      break;
    }
    case GenKind::PerturbedAp: {
      if (spec.step.is_zero()) throw DomainError("arithmetic progression with zero step");
      std::mt19937_64 rng(spec.seed);
      const long denom = 1L << 20;
      Rational v = spec.start;
      for (long i = 0; i < spec.n; ++i, v += spec.step) {
        long jitter = static_cast<long>(uniform_below(rng, 2 * denom + 1)) - denom;
        elems.push_back(v + spec.width * Rational(jitter) / Rational(denom));
      }
      break;
    }
  }
  RSet out{std::move(elems)};
  if (static_cast<long>(out.size()) != spec.n)
    throw DomainError("generated elements collide; shrink the jitter width");
  return out;
}

double objective_value(Objective obj, const RSet& a) {
  const double n = static_cast<double>(a.size());
  switch (obj) {
    case Objective::FiveVarRatio:
      return static_cast<double>(five_var_image(a).size()) * std::log2(n) / (n * n);
    case Objective::ProdDiffRatio:
      return static_cast<double>(composite_image(a, CompositeKind::ProdDiff).size()) /
             std::pow(n, 1.5 + 1.0 / 34);
    case Objective::ProdSumRatio:
      return static_cast<double>(composite_image(a, CompositeKind::ProdSum).size()) /
             std::pow(n, 1.5 + 5.0 / 242);
    case Objective::UngarRatio:
      return static_cast<double>(ungar_image(a).size()) / (n * n - 2);
  }
  throw DomainError("unknown objective");
}

SearchResult search_minimize(Objective obj, long n, long iters, std::uint64_t seed) {
  if (n < 2) throw DomainError("search needs n >= 2");
  if (iters < 0) throw DomainError("negative iteration count");
  const long window = 16 * n;

  std::set<long> current;
  for (long i = 1; i <= n; ++i) current.insert(i);
  auto to_set = [](const std::set<long>& s) {
    std::vector<Rational> v;
    v.reserve(s.size());
    for (long x : s) v.push_back(Rational(x));
    return RSet::from_sorted_unique(std::move(v));
  };

  SearchResult result;
  result.seed = seed;
  result.best_set = to_set(current);
  result.objective = objective_value(obj, result.best_set);
  result.trace.push_back({0, result.objective});

  std::mt19937_64 rng(seed);
  for (long it = 1; it <= iters; ++it) {
    // Replace one element with a fresh value from the window.
    std::uint64_t idx = uniform_below(rng, static_cast<std::uint64_t>(n));
    long replacement = 1 + static_cast<long>(uniform_below(rng, static_cast<std::uint64_t>(window)));
    auto iter = current.begin();
    std::advance(iter, static_cast<long>(idx));
    long old = *iter;
    if (replacement == old || current.count(replacement)) continue;
    current.erase(iter);
    current.insert(replacement);
    RSet candidate = to_set(current);
    double val = objective_value(obj, candidate);
    if (val < result.objective) {
      result.objective = val;
      result.best_set = std::move(candidate);
      result.trace.push_back({it, val});
    } else {
      current.erase(replacement);
      current.insert(old);
    }
  }
  return result;
}

std::string search_result_to_json(const SearchResult& r) {
  nlohmann::ordered_json obj;
  obj["best_set"] = nlohmann::ordered_json::parse(set_to_json(r.best_set));
  obj["objective_value"] = fmt_double(r.objective);
  obj["seed"] = r.seed;
  nlohmann::ordered_json trace = nlohmann::ordered_json::array();
  for (const auto& [it, val] : r.trace) trace.push_back({it, fmt_double(val)});
  obj["trace"] = std::move(trace);
  return obj.dump();
}

std::string search_trace_to_csv(const SearchResult& r) {
  std::string out = "iteration,value\n";
  for (const auto& [it, val] : r.trace)
    out += std::to_string(it) + "," + fmt_double(val) + "\n";
  return out;
}

}  // namespace explab

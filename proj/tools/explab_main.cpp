// Command-line surface: gen, image, energy, count, witness, verify, search,
// bench. Set files are JSON arrays of rational strings. Exit codes: 0 ok,
// 1 domain/validation/input error, 2 usage error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>
#include <json.hpp>

#include "explab/energy.hpp"
#include "explab/errors.hpp"
#include "explab/gensearch.hpp"
#include "explab/io.hpp"
#include "explab/reference.hpp"
#include "explab/setops.hpp"
#include "explab/structure.hpp"
#include "explab/verify.hpp"

namespace {

using namespace explab;

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    if (content.empty() || content.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DomainError("cannot write output file '" + path + "'");
  out << content;
  if (content.empty() || content.back() != '\n') out << '\n';
}

void set_threads(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

struct GenArgs {
  std::string kind, start = "1", step = "1", base = "2", width = "0", out = "-";
  long n = 1, range = 0;
  std::uint64_t seed = 0;
};

struct ImageArgs {
  std::string kind, in, in2, out = "-";
  int threads = 0;
};

struct EnergyArgs {
  std::string kind = "additive", k = "2", in, in2, out = "-";
  bool emit_table = false;
  unsigned bits = 0;
  int threads = 0;
};

struct CountArgs {
  std::string kind, in, in2, tau = "2", out = "-";
  int threads = 0;
};

struct WitnessArgs {
  std::string in, q, r, t = "1", out = "-";
  std::vector<std::string> candidates;
  bool check = false, dupper = false;
  int threads = 0;
};

struct VerifyArgs {
  std::string suite, in, in2, format = "csv", out = "-";
  unsigned bits = 0;
  int threads = 0;
};

struct SearchArgs {
  std::string objective, out = "-", trace;
  long n = 4, iters = 100;
  std::uint64_t seed = 0;
};

struct BenchArgs {
  std::string op = "all", ns = "256,512,1024", out = "-";
  bool reference = false;
  int threads = 0;
};

int run_gen(const GenArgs& a) {
  GenSpec spec;
  static const std::map<std::string, GenKind> kinds = {{"ap", GenKind::Ap},
                                                       {"gp", GenKind::Gp},
                                                       {"random_int", GenKind::RandomInt},
                                                       {"convex", GenKind::Convex},
                                                       {"perturbed_ap", GenKind::PerturbedAp}};
  spec.kind = kinds.at(a.kind);
  spec.n = a.n;
  spec.start = Rational::parse(a.start);
  spec.step = Rational::parse(a.step);
  spec.base = Rational::parse(a.base);
  spec.width = Rational::parse(a.width);
  spec.range = a.range;
  spec.seed = a.seed;
  write_output(a.out, set_to_json(generate(spec)));
  return 0;
}

int run_image(const ImageArgs& a) {
  set_threads(a.threads);
  RSet A = load_set_file(a.in);
  RSet B = a.in2.empty() ? A : load_set_file(a.in2);
  const std::string& k = a.kind;
  if (k == "five_var") {
    write_output(a.out, keyset_to_json(five_var_image(A)));
    return 0;
  }
  RSet img;
  if (k == "sum") img = binary_image(A, B, BinaryOp::Sum);
  else if (k == "difference") img = binary_image(A, B, BinaryOp::Difference);
  else if (k == "product") img = binary_image(A, B, BinaryOp::Product);
  else if (k == "ratio") img = binary_image(A, B, BinaryOp::Ratio);
  else if (k == "a_times_adiff") img = composite_image(A, CompositeKind::ProdDiff);
  else if (k == "a_times_asum") img = composite_image(A, CompositeKind::ProdSum);
  else if (k == "asum_times_asum") img = composite_image(A, CompositeKind::SumTimesSum);
  else if (k == "a_times_4a") img = composite_image(A, CompositeKind::ProdFourSum);
  else if (k == "ungar") img = ungar_image(A);
  else if (k == "balog") img = balog_image(A);
  else if (k == "jones") img = jones_image(A);
  else if (k == "shift_square") img = shift_square_image(A, B);
  write_output(a.out, set_to_json(img));
  return 0;
}

int run_energy(const EnergyArgs& a) {
  set_threads(a.threads);
  RSet A = load_set_file(a.in);
  BinaryOp op = a.kind == "multiplicative" ? BinaryOp::Ratio : BinaryOp::Difference;
  unsigned bits = a.bits ? a.bits : precision_cap_from_env();

  nlohmann::ordered_json obj;
  obj["kind"] = a.kind;
  obj["k"] = a.k;
  if (a.emit_table) {
    RSet B = a.in2.empty() ? A : load_set_file(a.in2);
    write_output(a.out, table_to_json(rep_table(A, B, op)));
    return 0;
  }
  if (a.kind == "multiplicative" && a.k != "2")
    throw DomainError("multiplicative energy supports only k = 2");
  if (!a.in2.empty()) {
    if (a.k != "2") throw DomainError("cross energy supports only k = 2");
    RSet B = load_set_file(a.in2);
    obj["value"] = energy(A, B, op).get_str();
    write_output(a.out, obj.dump());
    return 0;
  }
  if (a.k == "2") {
    obj["value"] = energy(A, A, op).get_str();
  } else if (a.k == "3") {
    EnergyValue v = energy_k(A, Moment::Three);
    obj["value"] = v.exact.str();
  } else if (a.k == "1.5" || a.k == "3/2") {
    EnergyValue v = energy_k(A, Moment::ThreeHalves, bits);
    obj["lo"] = v.interval.lo.str();
    obj["hi"] = v.interval.hi.str();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v.interval.lo.to_double());
    obj["approx"] = buf;
  } else {
    throw DomainError("unsupported moment k = " + a.k);
  }
  write_output(a.out, obj.dump());
  return 0;
}

int run_count(const CountArgs& a) {
  set_threads(a.threads);
  RSet A = load_set_file(a.in);
  nlohmann::ordered_json obj;
  obj["kind"] = a.kind;
  if (a.kind == "squares") {
    obj["count"] = quartic_count_squares(A).get_str();
  } else if (a.kind == "products") {
    obj["count"] = quartic_count_products(A).get_str();
  } else if (a.kind == "shiftsquare") {
    RSet B = a.in2.empty() ? A : load_set_file(a.in2);
    ShiftSquareCount s = shift_square_solutions(A, B);
    obj["solutions"] = s.solutions.get_str();
    obj["cs_lower"] = s.cs_lower.str();
    obj["cs_upper"] = s.cs_upper.get_str();
  } else if (a.kind == "tail") {
    RSet B = a.in2.empty() ? A : load_set_file(a.in2);
    Rational tau = Rational::parse(a.tau);
    obj["tau"] = tau.str();
    obj["count"] = tail_count(A, B, tau).get_str();
  }
  write_output(a.out, obj.dump());
  return 0;
}

int run_witness(const WitnessArgs& a) {
  set_threads(a.threads);
  RSet A = load_set_file(a.in);
  if (a.dupper) {
    std::vector<RSet> cands;
    for (const std::string& p : a.candidates) cands.push_back(load_set_file(p));
    DUpperResult r = d_upper(A, cands);
    nlohmann::ordered_json obj;
    obj["bound"] = r.bound.str();
    obj["best"] = nlohmann::ordered_json::parse(set_to_json(r.best));
    write_output(a.out, obj.dump());
    return 0;
  }
  if (a.check) {
    RSet Q = load_set_file(a.q);
    RSet R = load_set_file(a.r);
    Rational bound = dstar_witness_check(A, Q, R, Rational::parse(a.t));
    nlohmann::ordered_json obj;
    obj["bound"] = bound.str();
    write_output(a.out, obj.dump());
    return 0;
  }
  DyadicWitness w = dyadic_pigeonhole(A);
  // Re-validate the emitted witness through the checker it feeds.
  Rational check = dstar_witness_check(w.a_prime, A, inverses(w.s_tau), w.t);
  nlohmann::ordered_json obj = nlohmann::ordered_json::parse(witness_to_json(w));
  obj["validated"] = check == w.dstar_bound;
  write_output(a.out, obj.dump());
  return 0;
}

int run_verify(const VerifyArgs& a) {
  set_threads(a.threads);
  RSet A = load_set_file(a.in);
  unsigned bits = a.bits ? a.bits : precision_cap_from_env();
  std::vector<VerificationReport> reports;
  if (a.suite == "exact") {
    reports = verify_exact(A);
  } else if (a.suite == "ratio") {
    reports = verify_ratio_suite(A);
  } else if (a.suite == "interval") {
    RSet B = a.in2.empty() ? A : load_set_file(a.in2);
    reports = verify_interval_suite(A, B, bits);
  } else if (a.suite == "casesplit") {
    reports.push_back(case_split_trace(A));
  }
  write_output(a.out, a.format == "json" ? reports_to_json(reports) : reports_to_csv(reports));
  // Exit 1 when an asserted statement failed or stayed undecided.
  for (const VerificationReport& r : reports)
    if (r.pass && *r.pass != TriState::Pass) return 1;
  return 0;
}

int run_search(const SearchArgs& a) {
  static const std::map<std::string, Objective> objectives = {
      {"five_var_ratio", Objective::FiveVarRatio},
      {"a_adiff_ratio", Objective::ProdDiffRatio},
      {"a_asum_ratio", Objective::ProdSumRatio},
      {"ungar_ratio", Objective::UngarRatio}};
  SearchResult r = search_minimize(objectives.at(a.objective), a.n, a.iters, a.seed);
  write_output(a.out, search_result_to_json(r));
  if (!a.trace.empty()) write_output(a.trace, search_trace_to_csv(r));
  return 0;
}

// Times the production kernel serially and with the configured thread count,
// checks both agree, and optionally times the straight-line reference.
int run_bench(const BenchArgs& a) {
  using Clock = std::chrono::steady_clock;
  std::vector<long> sizes;
  {
    std::string tok;
    for (char c : a.ns + ",") {
      if (c == ',') {
        if (!tok.empty()) sizes.push_back(std::stol(tok));
        tok.clear();
      } else {
        tok += c;
      }
    }
  }
  const std::vector<std::string> all_ops = {"energy_add",      "energy_mult", "image_sum",
                                            "image_product",   "quartic_squares",
                                            "quartic_products", "five_var"};
  std::vector<std::string> ops;
  if (a.op == "all") ops = all_ops;
  else ops.push_back(a.op);

  int max_threads = 1;
#ifdef _OPENMP
  max_threads = a.threads > 0 ? a.threads : omp_get_max_threads();
#endif

  std::string csv = "op,n,impl,threads,millis,result\n";
  for (const std::string& op : ops) {
    for (long n : sizes) {
      GenSpec spec;
      spec.kind = GenKind::Ap;
      spec.n = n;
      RSet A = generate(spec);
      auto run_once = [&](const RSet& s) -> std::string {
        if (op == "energy_add") return additive_energy(s).get_str();
        if (op == "energy_mult") return mult_energy(s).get_str();
        if (op == "image_sum") return std::to_string(binary_image(s, s, BinaryOp::Sum).size());
        if (op == "image_product")
          return std::to_string(binary_image(s, s, BinaryOp::Product).size());
        if (op == "quartic_squares") return quartic_count_squares(s).get_str();
        if (op == "quartic_products") return quartic_count_products(s).get_str();
        return std::to_string(five_var_image(s).size());
      };
      auto timed = [&](int threads) {
        set_threads(threads);
        auto t0 = Clock::now();
        std::string result = run_once(A);
        double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        return std::pair<double, std::string>(ms, result);
      };
      auto [serial_ms, serial_res] = timed(1);
      auto [par_ms, par_res] = timed(max_threads);
      if (serial_res != par_res) throw DomainError("serial and parallel results disagree");
      char row[160];
      std::snprintf(row, sizeof row, "%s,%ld,serial,1,%.3f,", op.c_str(), n, serial_ms);
      csv += row + serial_res + "\n";
      std::snprintf(row, sizeof row, "%s,%ld,parallel,%d,%.3f,", op.c_str(), n, max_threads,
                    par_ms);
      csv += row + par_res + "\n";

      if (a.reference && n <= 32) {
        auto t0 = Clock::now();
        std::string ref_res;
        if (op == "energy_add") ref_res = ref::energy(A, A, BinaryOp::Difference).get_str();
        else if (op == "energy_mult") ref_res = ref::energy(A, A, BinaryOp::Ratio).get_str();
        else if (op == "image_sum")
          ref_res = std::to_string(ref::binary_image(A, A, BinaryOp::Sum).size());
        else if (op == "image_product")
          ref_res = std::to_string(ref::binary_image(A, A, BinaryOp::Product).size());
        else if (op == "five_var") ref_res = std::to_string(ref::five_var_image(A).size());
        else continue;  // 8-tuple enumerations are too slow even at n = 32
        double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        if (ref_res != serial_res) throw DomainError("reference and kernel results disagree");
        std::snprintf(row, sizeof row, "%s,%ld,reference,1,%.3f,", op.c_str(), n, ms);
        csv += row + ref_res + "\n";
      }
    }
  }
  write_output(a.out, csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"expander-lab: exact verification of sum-product expander bounds"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* cgen = app.add_subcommand("gen", "generate a structured or random set");
  cgen->add_option("--kind", gen.kind, "ap | gp | random_int | convex | perturbed_ap")
      ->required()
      ->check(CLI::IsMember({"ap", "gp", "random_int", "convex", "perturbed_ap"}));
  cgen->add_option("--n", gen.n, "number of elements")->required();
  cgen->add_option("--start", gen.start, "first element (ap, perturbed_ap)");
  cgen->add_option("--step", gen.step, "common difference (ap, perturbed_ap)");
  cgen->add_option("--base", gen.base, "common ratio (gp)");
  cgen->add_option("--range", gen.range, "random_int draws from [-range, range]");
  cgen->add_option("--width", gen.width, "perturbed_ap jitter half-width");
  cgen->add_option("--seed", gen.seed, "RNG seed");
  cgen->add_option("--out", gen.out, "output path ('-' = stdout)");

  ImageArgs image;
  auto* cimg = app.add_subcommand("image", "compute a set image");
  cimg->add_option("--kind", image.kind, "image kind")
      ->required()
      ->check(CLI::IsMember({"sum", "difference", "product", "ratio", "a_times_adiff",
                             "a_times_asum", "asum_times_asum", "a_times_4a", "ungar", "balog",
                             "jones", "shift_square", "five_var"}));
  cimg->add_option("--in", image.in, "set file for A")->required();
  cimg->add_option("--in2", image.in2, "set file for B (defaults to A)");
  cimg->add_option("--out", image.out, "output path");
  cimg->add_option("--threads", image.threads, "worker threads (0 = auto)");

  EnergyArgs energy;
  auto* cen = app.add_subcommand("energy", "additive/multiplicative energy and moments");
  cen->add_option("--kind", energy.kind, "additive | multiplicative")
      ->check(CLI::IsMember({"additive", "multiplicative"}));
  cen->add_option("--k", energy.k, "moment: 1.5, 2 or 3");
  cen->add_option("--in", energy.in, "set file for A")->required();
  cen->add_option("--in2", energy.in2, "set file for B (cross energy)");
  cen->add_flag("--emit-table", energy.emit_table, "write the representation table instead");
  cen->add_option("--precision-bits", energy.bits, "interval width cap for k = 1.5");
  cen->add_option("--out", energy.out, "output path");
  cen->add_option("--threads", energy.threads, "worker threads (0 = auto)");

  CountArgs count;
  auto* ccnt = app.add_subcommand("count", "exact solution counts");
  ccnt->add_option("--kind", count.kind, "squares | products | shiftsquare | tail")
      ->required()
      ->check(CLI::IsMember({"squares", "products", "shiftsquare", "tail"}));
  ccnt->add_option("--in", count.in, "set file for A")->required();
  ccnt->add_option("--in2", count.in2, "set file for B (defaults to A)");
  ccnt->add_option("--tau", count.tau, "tail threshold (kind = tail)");
  ccnt->add_option("--out", count.out, "output path");
  ccnt->add_option("--threads", count.threads, "worker threads (0 = auto)");

  WitnessArgs witness;
  auto* cwit = app.add_subcommand("witness", "dyadic pigeonholing and d_* bounds");
  cwit->add_option("--in", witness.in, "set file for A")->required();
  cwit->add_flag("--check", witness.check, "validate a supplied (Q, R, t) witness");
  cwit->add_option("--q", witness.q, "set file for Q (with --check)");
  cwit->add_option("--r", witness.r, "set file for R (with --check)");
  cwit->add_option("--t", witness.t, "threshold t (with --check)");
  cwit->add_flag("--d-upper", witness.dupper, "minimize |AC|^2/(|A||C|) over candidates");
  cwit->add_option("--candidate", witness.candidates, "candidate set file (repeatable)");
  cwit->add_option("--out", witness.out, "output path");
  cwit->add_option("--threads", witness.threads, "worker threads (0 = auto)");

  VerifyArgs verify;
  auto* cver = app.add_subcommand("verify", "per-statement verification reports");
  cver->add_option("--suite", verify.suite, "exact | ratio | interval | casesplit")
      ->required()
      ->check(CLI::IsMember({"exact", "ratio", "interval", "casesplit"}));
  cver->add_option("--in", verify.in, "set file for A")->required();
  cver->add_option("--in2", verify.in2, "set file for B (interval suite)");
  cver->add_option("--format", verify.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  cver->add_option("--precision-bits", verify.bits, "interval refinement cap");
  cver->add_option("--out", verify.out, "output path");
  cver->add_option("--threads", verify.threads, "worker threads (0 = auto)");

  SearchArgs search;
  auto* csearch = app.add_subcommand("search", "hill-climb toward small normalized images");
  csearch
      ->add_option("--objective", search.objective,
                   "five_var_ratio | a_adiff_ratio | a_asum_ratio | ungar_ratio")
      ->required()
      ->check(CLI::IsMember({"five_var_ratio", "a_adiff_ratio", "a_asum_ratio", "ungar_ratio"}));
  csearch->add_option("--n", search.n, "set size")->required();
  csearch->add_option("--iters", search.iters, "proposal count");
  csearch->add_option("--seed", search.seed, "RNG seed");
  csearch->add_option("--out", search.out, "result JSON path");
  csearch->add_option("--trace", search.trace, "trace CSV path");

  BenchArgs bench;
  auto* cbench = app.add_subcommand("bench", "size-vs-time CSV over {1..n} progressions");
  cbench->add_option("--op", bench.op,
                     "all | energy_add | energy_mult | image_sum | image_product | "
                     "quartic_squares | quartic_products | five_var")
      ->check(CLI::IsMember({"all", "energy_add", "energy_mult", "image_sum", "image_product",
                             "quartic_squares", "quartic_products", "five_var"}));
  cbench->add_option("--ns", bench.ns, "comma-separated sizes");
  cbench->add_flag("--reference", bench.reference,
                   "also time the straight-line reference (n <= 32)");
  cbench->add_option("--threads", bench.threads, "parallel thread count (0 = auto)");
  cbench->add_option("--out", bench.out, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cgen->parsed()) return run_gen(gen);
    if (cimg->parsed()) return run_image(image);
    if (cen->parsed()) return run_energy(energy);
    if (ccnt->parsed()) return run_count(count);
    if (cwit->parsed()) return run_witness(witness);
    if (cver->parsed()) return run_verify(verify);
    if (csearch->parsed()) return run_search(search);
    if (cbench->parsed()) return run_bench(bench);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "report.hpp"
#include "scan.hpp"
#include "socs/document.hpp"
#include "socs/errors.hpp"
#include "socs/generators.hpp"
#include "socs/render.hpp"

namespace {

using socs::Axis;
using socs::Rat;
using socs::Society;

constexpr std::uint64_t kDefaultBudget = 2'000'000;

std::uint64_t budget_from_env() {
  if (const char* env = std::getenv("SOCS_BUDGET")) {
    char* end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && value > 0) {
      return value;
    }
    throw socs::ValidationError("SOCS_BUDGET must be a positive integer");
  }
  return kDefaultBudget;
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw socs::ValidationError("cannot read " + path);
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw socs::ValidationError("cannot write " + path);
  }
  file << content;
}

Society load_society(const std::string& path) { return socs::parse_society(read_file(path)); }

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  ~Timer() {
    auto elapsed = std::chrono::steady_clock::now() - start;
    std::cerr << "elapsed: "
              << std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()
              << " ms\n";
  }
};

std::vector<Axis> spectrum_for(const std::string& kind, const Rat& circumference) {
  if (kind == "linear") return {Axis::linear()};
  if (kind == "circular") return {Axis::circular(circumference)};
  if (kind == "2box") return {Axis::linear(), Axis::linear()};
  if (kind == "cylindrical") return {Axis::linear(), Axis::circular(circumference)};
  if (kind == "toroidal") {
    return {Axis::circular(circumference), Axis::circular(circumference)};
  }
  throw socs::ValidationError("unknown spectrum kind '" + kind + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"socs: exact analysis of approval-voting societies on lines, circles,"
               " cylinders, and tori"};
  app.require_subcommand(1);

  // ---- analyze ----
  auto* analyze = app.add_subcommand("analyze", "Agreement, clique, agreeability, and bounds");
  std::string analyze_file;
  std::optional<int> opt_k;
  std::optional<int> opt_m;
  std::optional<std::uint64_t> opt_budget;
  bool analyze_json = false;
  bool analyze_force = false;
  analyze->add_option("file", analyze_file, "society document (.society.json)")->required();
  auto* k_opt = analyze->add_option("--k", opt_k, "agreeability parameter k");
  auto* m_opt = analyze->add_option("--m", opt_m, "agreeability parameter m");
  k_opt->needs(m_opt);
  m_opt->needs(k_opt);
  analyze->add_option("--budget", opt_budget, "subset enumeration budget");
  analyze->add_flag("--force", analyze_force, "enumerate past the budget");
  analyze->add_flag("--json", analyze_json, "machine-readable output");
  analyze->callback([&] {
    Timer timer;
    socs::SubsetBudget budget{opt_budget.value_or(budget_from_env()), analyze_force};
    Society society = load_society(analyze_file);
    socs::cli::AnalysisReport report = socs::cli::build_report(society, opt_k, opt_m, budget);
    std::cout << (analyze_json ? socs::cli::to_json(report) : socs::cli::to_table(report));
  });

  // ---- bounds ----
  auto* bounds = app.add_subcommand("bounds", "Check every matching theorem's lower bound");
  std::string bounds_file;
  int bounds_k = 0;
  int bounds_m = 0;
  bool bounds_json = false;
  bool bounds_force = false;
  bool bounds_assume = false;
  std::optional<std::uint64_t> bounds_budget;
  bounds->add_option("file", bounds_file, "society document")->required();
  bounds->add_option("--k", bounds_k, "agreeability parameter k")->required();
  bounds->add_option("--m", bounds_m, "agreeability parameter m")->required();
  bounds->add_option("--budget", bounds_budget, "subset enumeration budget");
  bounds->add_flag("--force", bounds_force, "enumerate past the budget");
  bounds->add_flag("--assume-agreeable", bounds_assume, "skip the agreeability check");
  bounds->add_flag("--json", bounds_json, "machine-readable output");
  bounds->callback([&] {
    Timer timer;
    socs::SubsetBudget budget{bounds_budget.value_or(budget_from_env()), bounds_force};
    Society society = load_society(bounds_file);
    auto reports = socs::verify_all(society, bounds_k, bounds_m, bounds_assume, budget);
    std::cout << (bounds_json ? socs::cli::bounds_to_json(reports)
                              : socs::cli::bounds_to_table(reports));
  });

  // ---- gen ----
  auto* gen = app.add_subcommand("gen", "Write a society document");
  gen->require_subcommand(1);
  std::string gen_output;

  auto* gen_fixture = gen->add_subcommand("fixture", "One of the built-in societies");
  std::string fixture_id;
  gen_fixture->add_option("--id", fixture_id, "fig1|fig2|fig3|fig5|cyl-ex")->required();
  gen_fixture->add_option("-o,--output", gen_output, "output path (stdout by default)");
  gen_fixture->callback(
      [&] { write_output(gen_output, socs::serialize_society(socs::fixture(fixture_id))); });

  auto* gen_torus = gen->add_subcommand("uniform-torus", "The uniform toroidal family");
  int torus_n = 0;
  gen_torus->add_option("--n", torus_n, "number of voters")->required();
  gen_torus->add_option("-o,--output", gen_output, "output path (stdout by default)");
  gen_torus->callback(
      [&] { write_output(gen_output, socs::serialize_society(socs::uniform_toroidal(torus_n))); });

  auto* gen_strat = gen->add_subcommand("stratified", "Disjoint strata of rotated arcs");
  std::string strat_kind = "cylindrical";
  int strat_count = 4;
  int strat_per = 5;
  std::string strat_fraction = "5/9";
  gen_strat->add_option("--kind", strat_kind, "cylindrical|toroidal");
  gen_strat->add_option("--strata", strat_count, "number of strata")->required();
  gen_strat->add_option("--per-stratum", strat_per, "voters per stratum")->required();
  gen_strat->add_option("--fraction", strat_fraction, "arc length as a fraction of the circle");
  gen_strat->add_option("-o,--output", gen_output, "output path (stdout by default)");
  gen_strat->callback([&] {
    socs::SocietyKind kind;
    if (strat_kind == "cylindrical") {
      kind = socs::SocietyKind::Cylindrical;
    } else if (strat_kind == "toroidal") {
      kind = socs::SocietyKind::Toroidal;
    } else {
      throw socs::ValidationError("--kind must be cylindrical or toroidal");
    }
    Society society = socs::stratified(kind, strat_count, strat_per, Rat::parse(strat_fraction));
    write_output(gen_output, socs::serialize_society(society));
  });

  auto* gen_random = gen->add_subcommand("random", "Seeded random society");
  std::string random_kind = "linear";
  int random_n = 0;
  std::uint64_t random_seed = 0;
  std::string random_circumference = "1";
  std::string random_min;
  std::string random_max;
  gen_random->add_option("--kind", random_kind, "linear|circular|2box|cylindrical|toroidal")
      ->required();
  gen_random->add_option("--n", random_n, "number of voters")->required();
  gen_random->add_option("--seed", random_seed, "PRNG seed")->required();
  gen_random->add_option("--circumference", random_circumference,
                         "circumference of every circular axis (default 1)");
  gen_random->add_option("--min-len", random_min,
                         "minimum set size (default: quarter of the axis scale)");
  gen_random->add_option("--max-len", random_max,
                         "maximum set size (default: half of the axis scale)");
  gen_random->add_option("-o,--output", gen_output, "output path (stdout by default)");
  gen_random->callback([&] {
    socs::RandomSpec spec;
    spec.spectrum = spectrum_for(random_kind, Rat::parse(random_circumference));
    spec.n = random_n;
    spec.seed = random_seed;
    for (const Axis& axis : spec.spectrum) {
      Rat scale = axis.is_circular() ? axis.circumference() : Rat(1);
      Rat lo = random_min.empty() ? scale / Rat(4) : Rat::parse(random_min);
      Rat hi = random_max.empty() ? scale / Rat(2) : Rat::parse(random_max);
      spec.size_range.emplace_back(std::move(lo), std::move(hi));
    }
    write_output(gen_output, socs::serialize_society(socs::random_society(spec)));
  });

  // ---- render ----
  auto* render = app.add_subcommand("render", "Render a society document as SVG");
  std::string render_file;
  std::string render_output;
  socs::RenderOptions render_options;
  render->add_option("file", render_file, "society document")->required();
  render->add_option("-o,--output", render_output, "output SVG path (stdout by default)");
  render->add_flag("--witness", render_options.show_witness, "mark a maximal-agreement platform");
  render->add_option("--width", render_options.width, "canvas width");
  render->add_option("--height", render_options.height, "canvas height");
  render->callback([&] {
    Society society = load_society(render_file);
    write_output(render_output, socs::render_svg(society, render_options));
  });

  // ---- scan ----
  auto* scan = app.add_subcommand("scan",
                                  "Search for low-agreement (2,2)-agreeable toroidal societies");
  socs::cli::ScanOptions scan_options;
  std::optional<int> scan_target;
  scan->add_option("--n", scan_options.n, "society size")->required();
  scan->add_option("--iters", scan_options.iterations, "candidate societies to generate");
  scan->add_option("--seed", scan_options.seed, "PRNG seed");
  scan->add_option("--target-a", scan_target,
                   "report societies with agreement <= this (default floor(n/4)+1)");
  scan->add_option("-o,--output", scan_options.output_path, "path for the best society found");
  scan->callback([&] {
    Timer timer;
    scan_options.target_a = scan_target;
    socs::cli::run_scan(scan_options, std::cout);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const socs::BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

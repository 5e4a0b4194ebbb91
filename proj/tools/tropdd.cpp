// tropdd: extreme rays and points of tropical polyhedra.
//
// Exit status: 0 success, 1 parse or validation error, 2 internal failure.

#include "tropdd/dd.hpp"
#include "tropdd/extremality.hpp"
#include "tropdd/io.hpp"
#include "tropdd/oracle.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace tropdd;

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write '" + path + "'");
  out << text;
}

unsigned threads_from_env() {
  const char* env = std::getenv("TROPDD_THREADS");
  if (!env || !*env) return 1;
  char* end = nullptr;
  unsigned long n = std::strtoul(env, &end, 10);
  if (*end) throw ValidationError("TROPDD_THREADS must be a non-negative integer");
  return static_cast<unsigned>(n);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tropical double description: extreme rays and points of tropical polyhedra"};
  app.require_subcommand(1);

  std::string input, output;
  std::string order = "dynamic", filter = "hypergraph";
  bool show_stats = false;
  auto* compute = app.add_subcommand("compute", "Compute the extreme generators of a problem file");
  compute->add_option("file", input, "Problem file")->required();
  compute->add_option("-o,--output", output, "Output file (default: stdout)");
  compute->add_option("--order", order, "Row ordering")->check(CLI::IsMember({"dynamic", "fixed"}));
  compute->add_option("--filter", filter, "Extremality filter")->check(CLI::IsMember({"hypergraph", "residuation"}));
  compute->add_flag("--stats", show_stats, "Print per-step statistics to stderr");

  auto* check = app.add_subcommand("check", "Membership, extremality and types of a vector");
  check->add_option("file", input, "Problem file")->required();
  check->allow_extras();
  check->footer("Vector entries follow the file name, e.g. `check cone.txt -oo 0 2.5`.");

  RandomSpec rspec;
  auto* rand = app.add_subcommand("rand", "Write a random tropical cone");
  rand->add_option("-d", rspec.dim, "Dimension")->required()->check(CLI::PositiveNumber);
  rand->add_option("-n", rspec.rows, "Number of inequalities")->required()->check(CLI::PositiveNumber);
  rand->add_option("--seed", rspec.seed, "Seed")->required();
  rand->add_option("--density", rspec.density, "Probability that an entry is finite")->check(CLI::Range(0.0, 1.0));
  rand->add_option("--lo", rspec.lo, "Smallest coefficient");
  rand->add_option("--hi", rspec.hi, "Largest coefficient");
  rand->add_option("-o,--output", output, "Output file (default: stdout)");

  std::size_t bound_n = 0, bound_d = 0;
  bool bound_cone = false;
  auto* bound = app.add_subcommand("bound", "Print U(n, d)");
  bound->add_option("n", bound_n)->required();
  bound->add_option("d", bound_d)->required();
  bound->add_flag("--cone", bound_cone, "Print U(n + d, d - 1), the bound on extreme rays of n halfspaces in dim d");

  auto* bench = app.add_subcommand("bench", "Compare the hypergraph and residuation filters");
  bench->add_option("specfile", input, "Lines '<label> <d> <n> <seed> [density]'")->required();
  bench->add_option("-o,--output", output, "CSV output (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    unsigned threads = threads_from_env();

    if (*compute) {
      ProblemFile problem = parse_problem(read_file(input));
      DdOptions options;
      options.order = order == "fixed" ? RowOrder::fixed : RowOrder::dynamic;
      options.filter = filter == "residuation" ? Filter::residuation : Filter::hypergraph;
      options.threads = threads;
      DdStats stats;
      GeneratorSet gens = compute_extreme(problem.homogeneous(), options, &stats);
      if (problem.kind == ProblemKind::cone)
        write_output(output, emit_generators(gens));
      else
        write_output(output, emit_generators(dehomogenize(gens)));
      if (show_stats) {
        for (const auto& s : stats.steps)
          std::cerr << "row " << s.row + 1 << ": |G<=| " << s.satisfied << " |G>| " << s.violated << " candidates "
                    << s.candidates << " -> " << s.size_after << '\n';
        std::cerr << "mean intermediate " << stats.mean_intermediate() << ", filter " << stats.filter_seconds()
                  << " s\n";
      }
    } else if (*check) {
      ProblemFile problem = parse_problem(read_file(input));
      std::vector<Scalar> entries;
      for (const auto& token : check->remaining()) entries.push_back(parse_scalar(token));
      if (entries.size() != problem.dim)
        throw ValidationError("expected " + std::to_string(problem.dim) + " vector entries, got " +
                              std::to_string(entries.size()));
      if (problem.kind == ProblemKind::polyhedron) entries.push_back(Scalar::one());
      TVector x(std::move(entries));
      IneqSystem sys = problem.homogeneous();
      bool member = !x.is_zero() && sys.contains(x);
      std::cout << "member " << yes_no(member) << '\n';
      if (member) {
        IndexSet types = extreme_types(sys, x);
        std::cout << "extreme " << yes_no(!types.empty()) << '\n';
        std::cout << "types";
        for (auto t : types) std::cout << ' ' << t + 1;
        std::cout << '\n';
      }
    } else if (*rand) {
      ProblemFile p;
      p.dim = rspec.dim;
      p.cone = random_system(rspec);
      write_output(output, emit_problem(p));
    } else if (*bound) {
      oracle::BigInt u = bound_cone ? oracle::max_extreme_rays(bound_n, bound_d) : oracle::upper_bound(bound_n, bound_d);
      std::cout << u << '\n';
    } else if (*bench) {
      auto instances = parse_bench_spec(read_file(input));
      auto records = run_bench(instances, threads);
      write_output(output, to_csv(records));
      for (const auto& r : records)
        if (!r.ok) {
          std::cerr << "bench: instance '" << r.label << "' FAILED\n";
          return 2;
        }
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

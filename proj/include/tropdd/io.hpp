#pragma once

// Problem files, generator output, random instances and the benchmark harness.
//
// Problem file:
//
//   tropical-cone            | tropical-polyhedron
//   dim <d>
//   ineqs <n>
//   <A row> ; <B row>        | <A row> ; <c> ; <B row> ; <e>
//
// Tokens are "-oo", decimals or "p/q"; '#' starts a comment.

#include "tropdd/dd.hpp"
#include "tropdd/semiring.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tropdd {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

enum class ProblemKind { cone, polyhedron };

struct ProblemFile {
  ProblemKind kind = ProblemKind::cone;
  std::size_t dim = 0;
  IneqSystem cone{0};        // kind == cone
  AffineSystem affine{0};    // kind == polyhedron

  std::size_t rows() const { return kind == ProblemKind::cone ? cone.rows() : affine.rows(); }
  /// The cone whose extreme rays answer the problem (homogenized if affine).
  IneqSystem homogeneous() const { return kind == ProblemKind::cone ? cone : homogenize(affine); }

  friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

ProblemFile parse_problem(std::string_view text);
std::string emit_problem(const ProblemFile& problem);

/// extreme-rays / dim / count header, one ray per line, lexicographic order
/// with -oo lowest.
std::string emit_generators(const GeneratorSet& gens);
/// extreme-generators / dim header, then a points block and a rays block.
std::string emit_generators(const AffineGenerators& gens);

struct RandomSpec {
  std::size_t dim = 3;
  std::size_t rows = 3;
  std::uint64_t seed = 0;
  double density = 0.7;
  long lo = -10;
  long hi = 10;
};

/// Entries are -oo with probability 1 - density, otherwise uniform integers
/// in [lo, hi]. Sides are swapped when (0,...,0) violates the row, so the
/// cone is never trivial. Rows whose left side is then all -oo are redrawn;
/// throws std::invalid_argument after 1000 failed draws of one row.
IneqSystem random_system(const RandomSpec& spec);

struct BenchInstance {
  std::string label;
  RandomSpec spec;
};

struct BenchRecord {
  std::string label;
  std::size_t dim = 0;
  std::size_t rows = 0;
  std::uint64_t seed = 0;
  std::size_t final_count = 0;
  double mean_intermediate = 0;
  double seconds_hypergraph = 0;
  double seconds_residuation = 0;
  bool ok = true;  // both filters produced the same set
};

/// Lines "<label> <d> <n> <seed> [density]"; '#' comments.
std::vector<BenchInstance> parse_bench_spec(std::string_view text);

/// Runs each instance with both filters. Records keep the input order.
std::vector<BenchRecord> run_bench(std::span<const BenchInstance> instances, unsigned threads = 1);
std::string to_csv(std::span<const BenchRecord> records);

}  // namespace tropdd

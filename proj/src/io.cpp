#include "tropdd/io.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

namespace tropdd {

namespace {

// Meaningful lines: (line number, tokens) with comments stripped and ';'
// split into its own token.
std::vector<std::pair<std::size_t, std::vector<std::string>>> tokenize(std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string spaced;
    for (char ch : line) {
      if (ch == ';')
        spaced += " ; ";
      else
        spaced += ch;
    }
    std::istringstream words(spaced);
    std::vector<std::string> tokens;
    for (std::string w; words >> w;) tokens.push_back(w);
    if (!tokens.empty()) lines.emplace_back(lineno, std::move(tokens));
  }
  return lines;
}

std::size_t parse_count(const std::vector<std::string>& tokens, std::size_t lineno, const char* key) {
  if (tokens.size() != 2 || tokens[0] != key) throw ParseError(lineno, std::string("expected '") + key + " <count>'");
  const auto& t = tokens[1];
  if (t.empty() || !std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw ParseError(lineno, std::string("invalid ") + key + " count '" + t + "'");
  return std::stoul(t);
}

// Splits a data line at ';' into groups of the expected sizes.
std::vector<std::vector<Scalar>> parse_groups(const std::vector<std::string>& tokens, std::size_t lineno,
                                              const std::vector<std::size_t>& sizes) {
  std::vector<std::vector<Scalar>> groups(1);
  for (const auto& t : tokens) {
    if (t == ";") {
      groups.emplace_back();
      continue;
    }
    try {
      groups.back().push_back(parse_scalar(t));
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    }
  }
  bool shape_ok = groups.size() == sizes.size();
  for (std::size_t i = 0; shape_ok && i < sizes.size(); ++i) shape_ok = groups[i].size() == sizes[i];
  if (!shape_ok) {
    std::string want;
    for (std::size_t i = 0; i < sizes.size(); ++i) want += (i ? " ; " : "") + std::to_string(sizes[i]);
    std::string got;
    for (std::size_t i = 0; i < groups.size(); ++i) got += (i ? " ; " : "") + std::to_string(groups[i].size());
    throw ParseError(lineno, "arity error: expected token groups " + want + ", got " + got);
  }
  return groups;
}

void emit_vectors(std::ostringstream& out, const std::vector<TVector>& vs) {
  for (const auto& v : vs) out << to_string(v) << '\n';
}

// Drawn straight from mt19937_64 so instances do not depend on the standard
// library's distribution implementations.
double unit_interval(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

long uniform_int(std::mt19937_64& rng, long lo, long hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(rng() % span);
}

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  auto lines = tokenize(text);
  std::size_t last_line = lines.empty() ? 1 : lines.back().first;
  if (lines.size() < 3) throw ParseError(last_line, "truncated header (expected kind, dim and ineqs lines)");

  ProblemFile p;
  const auto& [kind_line, kind_tokens] = lines[0];
  if (kind_tokens.size() == 1 && kind_tokens[0] == "tropical-cone")
    p.kind = ProblemKind::cone;
  else if (kind_tokens.size() == 1 && kind_tokens[0] == "tropical-polyhedron")
    p.kind = ProblemKind::polyhedron;
  else
    throw ParseError(kind_line, "expected 'tropical-cone' or 'tropical-polyhedron'");

  p.dim = parse_count(lines[1].second, lines[1].first, "dim");
  if (p.dim == 0) throw ParseError(lines[1].first, "dimension must be positive");
  std::size_t n = parse_count(lines[2].second, lines[2].first, "ineqs");
  if (lines.size() - 3 != n)
    throw ParseError(lines.size() - 3 < n ? last_line : lines[3 + n].first,
                     "expected " + std::to_string(n) + " inequality lines, found " + std::to_string(lines.size() - 3));

  p.cone = IneqSystem(p.kind == ProblemKind::cone ? p.dim : 0);
  p.affine = AffineSystem(p.kind == ProblemKind::polyhedron ? p.dim : 0);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& [lineno, tokens] = lines[3 + k];
    if (p.kind == ProblemKind::cone) {
      auto g = parse_groups(tokens, lineno, {p.dim, p.dim});
      p.cone.add_row(TVector(std::move(g[0])), TVector(std::move(g[1])));
    } else {
      auto g = parse_groups(tokens, lineno, {p.dim, 1, p.dim, 1});
      p.affine.add_row(TVector(std::move(g[0])), g[1][0], TVector(std::move(g[2])), g[3][0]);
    }
  }
  return p;
}

std::string emit_problem(const ProblemFile& p) {
  std::ostringstream out;
  out << (p.kind == ProblemKind::cone ? "tropical-cone" : "tropical-polyhedron") << '\n';
  out << "dim " << p.dim << '\n';
  out << "ineqs " << p.rows() << '\n';
  for (std::size_t k = 0; k < p.rows(); ++k) {
    if (p.kind == ProblemKind::cone)
      out << to_string(p.cone.a(k)) << " ; " << to_string(p.cone.b(k)) << '\n';
    else
      out << to_string(p.affine.a(k)) << " ; " << to_string(p.affine.c(k)) << " ; " << to_string(p.affine.b(k))
          << " ; " << to_string(p.affine.e(k)) << '\n';
  }
  return out.str();
}

std::string emit_generators(const GeneratorSet& gens) {
  std::ostringstream out;
  out << "extreme-rays\n";
  out << "dim " << gens.dim() << '\n';
  out << "count " << gens.size() << '\n';
  emit_vectors(out, gens.rays());
  return out.str();
}

std::string emit_generators(const AffineGenerators& gens) {
  std::ostringstream out;
  out << "extreme-generators\n";
  out << "dim " << gens.dim << '\n';
  out << "points " << gens.points.size() << '\n';
  emit_vectors(out, gens.points);
  out << "rays " << gens.rays.size() << '\n';
  emit_vectors(out, gens.rays);
  return out.str();
}

IneqSystem random_system(const RandomSpec& spec) {
  if (spec.dim == 0 || spec.rows == 0) throw std::invalid_argument("random_system: dim and rows must be positive");
  if (spec.lo > spec.hi) throw std::invalid_argument("random_system: empty coefficient range");
  std::mt19937_64 rng(spec.seed);
  auto entry = [&] {
    if (unit_interval(rng) >= spec.density) return Scalar::zero();
    return Scalar(uniform_int(rng, spec.lo, spec.hi));
  };

  IneqSystem sys(spec.dim);
  for (std::size_t k = 0; k < spec.rows; ++k) {
    for (int attempt = 0;; ++attempt) {
      if (attempt == 1000) throw std::invalid_argument("random_system: could not draw a non-vacuous row (density too low)");
      TVector a(spec.dim), b(spec.dim);
      for (std::size_t i = 0; i < spec.dim; ++i) a[i] = entry();
      for (std::size_t i = 0; i < spec.dim; ++i) b[i] = entry();
      // Orient the row so the all-zero vector (tropical ones) satisfies it.
      TVector ones(spec.dim);
      for (std::size_t i = 0; i < spec.dim; ++i) ones[i] = Scalar::one();
      if (dot(a, ones) > dot(b, ones)) std::swap(a, b);
      if (a.is_zero()) continue;
      sys.add_row(std::move(a), std::move(b));
      break;
    }
  }
  return sys;
}

std::vector<BenchInstance> parse_bench_spec(std::string_view text) {
  std::vector<BenchInstance> out;
  for (const auto& [lineno, tokens] : tokenize(text)) {
    if (tokens.size() != 4 && tokens.size() != 5)
      throw ParseError(lineno, "expected '<label> <d> <n> <seed> [density]'");
    BenchInstance inst;
    inst.label = tokens[0];
    try {
      std::size_t used = 0;
      auto whole = [&](const std::string& t) {
        if (used != t.size()) throw std::invalid_argument(t);
      };
      inst.spec.dim = std::stoul(tokens[1], &used);
      whole(tokens[1]);
      inst.spec.rows = std::stoul(tokens[2], &used);
      whole(tokens[2]);
      inst.spec.seed = std::stoull(tokens[3], &used);
      whole(tokens[3]);
      if (tokens.size() == 5) {
        inst.spec.density = std::stod(tokens[4], &used);
        whole(tokens[4]);
      }
    } catch (const std::exception&) {
      throw ParseError(lineno, "invalid number in bench spec");
    }
    if (inst.spec.dim == 0 || inst.spec.rows == 0) throw ParseError(lineno, "d and n must be positive");
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<BenchRecord> run_bench(std::span<const BenchInstance> instances, unsigned threads) {
  std::vector<BenchRecord> records;
  for (const auto& inst : instances) {
    BenchRecord r;
    r.label = inst.label;
    r.dim = inst.spec.dim;
    r.rows = inst.spec.rows;
    r.seed = inst.spec.seed;
    try {
      IneqSystem sys = random_system(inst.spec);
      auto timed = [&](Filter filter, DdStats& stats) {
        DdOptions options;
        options.filter = filter;
        options.threads = threads;
        auto t0 = std::chrono::steady_clock::now();
        GeneratorSet g = compute_extreme(sys, options, &stats);
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return std::pair{std::move(g), s};
      };
      DdStats hyper_stats, res_stats;
      auto [hyper, t_hyper] = timed(Filter::hypergraph, hyper_stats);
      auto [res, t_res] = timed(Filter::residuation, res_stats);
      r.final_count = hyper.size();
      r.mean_intermediate = hyper_stats.mean_intermediate();
      r.seconds_hypergraph = t_hyper;
      r.seconds_residuation = t_res;
      r.ok = hyper == res;
    } catch (const std::exception&) {
      r.ok = false;
    }
    records.push_back(std::move(r));
  }
  return records;
}

std::string to_csv(std::span<const BenchRecord> records) {
  std::ostringstream out;
  out << "label,d,n,seed,final,inter_mean,t_hypergraph_s,t_residuation_s,ratio,status\n";
  char buf[64];
  for (const auto& r : records) {
    std::string label = r.label;
    if (label.find_first_of(",\"\n") != std::string::npos) {
      std::string quoted = "\"";
      for (char ch : label) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      label = quoted + "\"";
    }
    out << label << ',' << r.dim << ',' << r.rows << ',' << r.seed << ',' << r.final_count << ',';
    std::snprintf(buf, sizeof buf, "%.2f", r.mean_intermediate);
    out << buf << ',';
    std::snprintf(buf, sizeof buf, "%.6f,%.6f,", r.seconds_hypergraph, r.seconds_residuation);
    out << buf;
    if (r.seconds_residuation > 0)
      std::snprintf(buf, sizeof buf, "%.4g", r.seconds_hypergraph / r.seconds_residuation);
    else
      std::snprintf(buf, sizeof buf, "nan");
    out << buf << ',' << (r.ok ? "OK" : "FAILED") << '\n';
  }
  return out.str();
}

}  // namespace tropdd

#include "tropdd/dd.hpp"

#include "tropdd/extremality.hpp"
#include "tropdd/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace tropdd {

namespace {

void sort_unique(std::vector<TVector>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

unsigned worker_count(unsigned requested, std::size_t jobs) {
  unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

// Runs fn(i) for i in [0, count). Each index is written by exactly one worker.
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn fn) {
  unsigned workers = worker_count(threads, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([=, &fn] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
}

}  // namespace

GeneratorSet::GeneratorSet(std::size_t dim, std::vector<TVector> rays) : dim_(dim) {
  for (auto& r : rays) {
    if (r.dim() != dim) throw std::invalid_argument("GeneratorSet: dimension mismatch");
    r = normalize(r);
  }
  sort_unique(rays);
  rays_ = std::move(rays);
}

GeneratorSet GeneratorSet::canonical_basis(std::size_t dim) {
  std::vector<TVector> basis;
  for (std::size_t i = 0; i < dim; ++i) basis.push_back(TVector::unit(dim, i));
  return GeneratorSet(dim, std::move(basis));
}

double DdStats::filter_seconds() const {
  double total = 0;
  for (const auto& s : steps) total += s.filter_seconds;
  return total;
}

std::size_t DdStats::candidates() const {
  std::size_t total = 0;
  for (const auto& s : steps) total += s.candidates;
  return total;
}

std::size_t DdStats::kept_rejected() const {
  std::size_t total = 0;
  for (const auto& s : steps) total += s.kept_rejected;
  return total;
}

double DdStats::mean_intermediate() const {
  if (steps.empty()) return 0;
  double total = 0;
  for (const auto& s : steps) total += static_cast<double>(s.size_after);
  return total / static_cast<double>(steps.size());
}

GeneratorSet halfspace_candidates(const GeneratorSet& gens, const TVector& a, const TVector& b) {
  const std::size_t d = gens.dim();
  if (a.dim() != d || b.dim() != d) throw std::invalid_argument("halfspace_candidates: dimension mismatch");

  struct Split {
    const TVector* ray;
    Scalar lhs, rhs;
  };
  std::vector<Split> satisfied, violated;
  for (const auto& g : gens) {
    Split s{&g, dot(a, g), dot(b, g)};
    (s.lhs <= s.rhs ? satisfied : violated).push_back(std::move(s));
  }

  std::vector<TVector> candidates;
  candidates.reserve(satisfied.size() * (violated.size() + 1));
  for (const auto& s : satisfied) candidates.push_back(*s.ray);
  for (const auto& gi : satisfied)
    for (const auto& gj : violated) candidates.push_back(combine(gj.lhs, *gi.ray, gi.rhs, *gj.ray));
  return GeneratorSet(d, std::move(candidates));
}

GeneratorSet intersect_halfspace(const GeneratorSet& gens, const TVector& a, const TVector& b,
                                 const IneqSystem& accumulated, const DdOptions& options, StepStats* stats) {
  const std::size_t d = gens.dim();
  if (a.dim() != d || b.dim() != d || accumulated.dim() != d)
    throw std::invalid_argument("intersect_halfspace: dimension mismatch");

  std::size_t satisfied = 0;
  for (const auto& g : gens) satisfied += dot(a, g) <= dot(b, g);
  const GeneratorSet all = halfspace_candidates(gens, a, b);
  const std::vector<TVector>& candidates = all.rays();

  auto started = std::chrono::steady_clock::now();
  std::vector<char> keep(candidates.size(), 0);
  if (options.filter == Filter::hypergraph) {
    parallel_for(candidates.size(), options.threads,
                 [&](std::size_t i) { keep[i] = is_extreme(accumulated, candidates[i]); });
  } else {
    parallel_for(candidates.size(), options.threads,
                 [&](std::size_t i) { keep[i] = oracle::is_extreme_residuation(candidates, candidates[i]); });
  }
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  std::vector<TVector> out;
  std::size_t kept_rejected = 0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (keep[i])
      out.push_back(candidates[i]);
    else if (std::binary_search(gens.begin(), gens.end(), candidates[i]))
      ++kept_rejected;
  }

  if (stats) {
    stats->satisfied = satisfied;
    stats->violated = gens.size() - satisfied;
    stats->candidates = candidates.size();
    stats->kept_rejected = kept_rejected;
    stats->size_after = out.size();
    stats->filter_seconds = elapsed;
  }
  return GeneratorSet(d, std::move(out));
}

std::size_t select_next(const IneqSystem& sys, std::span<const std::size_t> remaining, const GeneratorSet& current) {
  if (remaining.empty()) throw std::invalid_argument("select_next: no remaining rows");
  std::size_t best = remaining.front();
  std::size_t best_cost = std::numeric_limits<std::size_t>::max();
  for (std::size_t k : remaining) {
    std::size_t le = 0, gt = 0;
    for (const auto& g : current) (dot(sys.a(k), g) <= dot(sys.b(k), g) ? le : gt)++;
    std::size_t cost = le * gt;
    if (cost < best_cost || (cost == best_cost && k < best)) {
      best = k;
      best_cost = cost;
    }
  }
  return best;
}

GeneratorSet compute_extreme(const IneqSystem& sys, const DdOptions& options, DdStats* stats) {
  GeneratorSet gens = GeneratorSet::canonical_basis(sys.dim());
  std::vector<std::size_t> remaining(sys.rows());
  std::iota(remaining.begin(), remaining.end(), std::size_t{0});
  std::vector<std::size_t> processed;

  while (!remaining.empty()) {
    std::size_t k = options.order == RowOrder::dynamic ? select_next(sys, remaining, gens) : remaining.front();
    remaining.erase(std::find(remaining.begin(), remaining.end(), k));
    processed.push_back(k);

    StepStats step;
    step.row = k;
    gens = intersect_halfspace(gens, sys.a(k), sys.b(k), sys.select(processed), options, &step);
    if (stats) stats->steps.push_back(step);
  }
  return gens;
}

void AffineSystem::add_row(TVector a, Scalar c, TVector b, Scalar e) {
  if (a.dim() != dim_ || b.dim() != dim_)
    throw std::invalid_argument("AffineSystem::add_row: row dimension does not match system dimension");
  a_.push_back(std::move(a));
  b_.push_back(std::move(b));
  c_.push_back(std::move(c));
  e_.push_back(std::move(e));
}

bool AffineSystem::contains(const TVector& x) const {
  for (std::size_t k = 0; k < rows(); ++k)
    if (tadd(dot(a_[k], x), c_[k]) > tadd(dot(b_[k], x), e_[k])) return false;
  return true;
}

IneqSystem homogenize(const AffineSystem& sys) {
  const std::size_t d = sys.dim();
  IneqSystem cone(d + 1);
  auto extend = [d](const TVector& row, const Scalar& constant) {
    TVector out(d + 1);
    for (std::size_t i = 0; i < d; ++i) out[i] = row[i];
    out[d] = constant;
    return out;
  };
  for (std::size_t k = 0; k < sys.rows(); ++k) cone.add_row(extend(sys.a(k), sys.c(k)), extend(sys.b(k), sys.e(k)));
  return cone;
}

AffineGenerators dehomogenize(const GeneratorSet& gens) {
  if (gens.dim() == 0) throw std::invalid_argument("dehomogenize: dimension 0");
  const std::size_t d = gens.dim() - 1;
  AffineGenerators out;
  out.dim = d;
  for (const auto& g : gens) {
    const Scalar& unit = g[d];
    TVector v(d);
    if (unit.is_finite()) {
      Scalar shift = tinv(unit);
      for (std::size_t i = 0; i < d; ++i) v[i] = tmul(shift, g[i]);
      out.points.push_back(std::move(v));
    } else {
      for (std::size_t i = 0; i < d; ++i) v[i] = g[i];
      if (v.is_zero()) throw std::logic_error("dehomogenize: ray vanishes after dropping the unit coordinate");
      out.rays.push_back(normalize(v));
    }
  }
  std::sort(out.points.begin(), out.points.end());
  std::sort(out.rays.begin(), out.rays.end());
  return out;
}

}  // namespace tropdd

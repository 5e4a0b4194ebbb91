#pragma once

// Tropical double description: successive intersection with halfspaces,
// keeping only the extreme candidates at every step.

#include "tropdd/semiring.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace tropdd {

/// Normalized, duplicate-free, lexicographically sorted set of rays.
class GeneratorSet {
 public:
  explicit GeneratorSet(std::size_t dim) : dim_(dim) {}
  /// Normalizes and deduplicates. Throws std::invalid_argument on zero
  /// vectors or dimension mismatch.
  GeneratorSet(std::size_t dim, std::vector<TVector> rays);

  static GeneratorSet canonical_basis(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return rays_.size(); }
  bool empty() const { return rays_.empty(); }
  const std::vector<TVector>& rays() const { return rays_; }
  const TVector& operator[](std::size_t i) const { return rays_[i]; }
  auto begin() const { return rays_.begin(); }
  auto end() const { return rays_.end(); }

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  std::size_t dim_;
  std::vector<TVector> rays_;
};

enum class Filter { hypergraph, residuation };
enum class RowOrder { dynamic, fixed };

struct DdOptions {
  Filter filter = Filter::hypergraph;
  RowOrder order = RowOrder::dynamic;
  unsigned threads = 1;  // 0 = hardware concurrency
};

struct StepStats {
  std::size_t row = 0;         // original index of the processed row
  std::size_t satisfied = 0;   // |G<=|
  std::size_t violated = 0;    // |G>|
  std::size_t candidates = 0;  // distinct rays tested after normalization
  std::size_t kept_rejected = 0;  // members of G<= rejected by the filter
  std::size_t size_after = 0;
  double filter_seconds = 0;
};

struct DdStats {
  std::vector<StepStats> steps;

  double filter_seconds() const;
  std::size_t candidates() const;
  std::size_t kept_rejected() const;
  /// Mean of |G_k| over k = 1..n (0 when no row was processed).
  double mean_intermediate() const;
};

/// Generating set of K ∩ {x | a x <= b x} before filtering: the members of
/// gens satisfying the row, and (a g^j) g^i ⊕ (b g^i) g^j for every satisfying
/// g^i and violating g^j.
GeneratorSet halfspace_candidates(const GeneratorSet& gens, const TVector& a, const TVector& b);

/// One step: generators of K ∩ {x | a x <= b x} from generators of K.
/// `accumulated` holds every row processed so far, including (a, b).
GeneratorSet intersect_halfspace(const GeneratorSet& gens, const TVector& a, const TVector& b,
                                 const IneqSystem& accumulated, const DdOptions& options = {},
                                 StepStats* stats = nullptr);

/// Remaining row minimizing |G<=| * |G>|; ties go to the lowest index.
std::size_t select_next(const IneqSystem& sys, std::span<const std::size_t> remaining, const GeneratorSet& current);

/// One normalized ray per extreme ray of { x | A x <= B x }.
GeneratorSet compute_extreme(const IneqSystem& sys, const DdOptions& options = {}, DdStats* stats = nullptr);

/// Rows of the form A_k x ⊕ c_k <= B_k x ⊕ e_k.
class AffineSystem {
 public:
  explicit AffineSystem(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rows() const { return a_.size(); }

  void add_row(TVector a, Scalar c, TVector b, Scalar e);
  const TVector& a(std::size_t k) const { return a_[k]; }
  const Scalar& c(std::size_t k) const { return c_[k]; }
  const TVector& b(std::size_t k) const { return b_[k]; }
  const Scalar& e(std::size_t k) const { return e_[k]; }

  bool contains(const TVector& x) const;

  friend bool operator==(const AffineSystem&, const AffineSystem&) = default;

 private:
  std::size_t dim_;
  std::vector<TVector> a_, b_;
  std::vector<Scalar> c_, e_;
};

struct AffineGenerators {
  std::size_t dim = 0;
  std::vector<TVector> points;  // sorted
  std::vector<TVector> rays;    // normalized, sorted

  friend bool operator==(const AffineGenerators&, const AffineGenerators&) = default;
};

/// Cone in dimension d + 1; the last coordinate carries the constants.
IneqSystem homogenize(const AffineSystem& sys);
AffineGenerators dehomogenize(const GeneratorSet& gens);

}  // namespace tropdd

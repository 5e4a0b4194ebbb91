#pragma once

// Slow reference implementations. Used as ground truth by the test suites and
// as the baseline filter in benchmarks.

#include "tropdd/hypergraph.hpp"
#include "tropdd/semiring.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace tropdd::oracle {

struct Membership {
  bool member = false;
  /// Greatest coefficients lambda with (+)_i lambda_i g^i <= x.
  std::vector<Scalar> coefficients;
};

/// x is a combination of gens iff the greatest subsolution reproduces x.
Membership residuation_membership(std::span<const TVector> gens, const TVector& x);

/// x is extreme in the cone spanned by gens iff it is not a combination of
/// the members of gens that are not proportional to it.
bool is_extreme_residuation(std::span<const TVector> gens, const TVector& x);

/// Patterns over supp(g) (bit i <-> support[i]) of the {0,-oo}-vectors of
/// the tangent cone at g. Throws std::length_error when |supp(g)| > 24.
std::vector<std::uint32_t> tangent_cube_members(const IneqSystem& sys, const TVector& g);

/// Extremality by enumeration of the tangent cone's {0,-oo}-vectors. With a
/// type t (0-based, original coordinates) tests "extreme of type t" only.
bool is_extreme_enum(const IneqSystem& sys, const TVector& g, std::optional<std::size_t> type = std::nullopt);

/// Reachability by plain fixpoint iteration.
IndexSet naive_reachable(const Hypergraph& h, Node u);

/// Components, order and minimal components by definition chasing.
SccPartition naive_minimal_sccs(const Hypergraph& h);

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(std::size_t n, std::size_t k);

/// U(n, d) = C(n - floor((d+1)/2), n - d) + C(n - floor((d+2)/2), n - d).
/// Requires n >= d >= 1; throws std::domain_error otherwise.
BigInt upper_bound(std::size_t n, std::size_t d);

/// Bound on the number of extreme rays of a cone cut out by n tropical
/// halfspaces in dimension d: U(n + d, d - 1), and 1 when d = 1.
BigInt max_extreme_rays(std::size_t n, std::size_t d);

}  // namespace tropdd::oracle

#include "tropdd/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace tropdd::oracle {

Membership residuation_membership(std::span<const TVector> gens, const TVector& x) {
  Membership m;
  TVector sum(x.dim());
  for (const auto& g : gens) {
    if (g.dim() != x.dim()) throw std::invalid_argument("residuation_membership: dimension mismatch");
    Scalar lambda;
    bool first = true;
    for (std::size_t j = 0; j < g.dim(); ++j) {
      if (g[j].is_zero()) continue;
      if (x[j].is_zero()) {
        lambda = Scalar::zero();
        first = false;
        break;
      }
      Scalar diff(Rational(x[j].value() - g[j].value()));
      if (first || diff < lambda) lambda = std::move(diff);
      first = false;
    }
    if (first) lambda = Scalar::zero();  // zero generator contributes nothing
    for (std::size_t j = 0; j < g.dim(); ++j) sum[j] = tadd(sum[j], tmul(lambda, g[j]));
    m.coefficients.push_back(std::move(lambda));
  }
  m.member = sum == x;
  return m;
}

bool is_extreme_residuation(std::span<const TVector> gens, const TVector& x) {
  std::vector<TVector> others;
  for (const auto& g : gens)
    if (!g.is_zero() && !is_proportional(g, x)) others.push_back(g);
  return !residuation_membership(others, x).member;
}

namespace {

// Bitmask of the argmax of row . g over supp(g), and the max itself.
std::pair<Scalar, std::uint32_t> row_argmax(const TVector& row, const TVector& g, const IndexSet& supp) {
  Scalar best;
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < supp.size(); ++i) {
    Scalar term = tmul(row[supp[i]], g[supp[i]]);
    if (term.is_zero()) continue;
    if (best < term) {
      best = term;
      mask = 1u << i;
    } else if (term == best) {
      mask |= 1u << i;
    }
  }
  return {best, mask};
}

}  // namespace

std::vector<std::uint32_t> tangent_cube_members(const IneqSystem& sys, const TVector& g) {
  if (!sys.contains(g)) throw std::invalid_argument("tangent_cube_members: not a member");
  const IndexSet supp = support(g);
  if (supp.size() > 24) throw std::length_error("enumeration guard: support larger than 24");

  std::vector<std::pair<std::uint32_t, std::uint32_t>> constraints;  // (lhs argmax, rhs argmax)
  for (std::size_t k = 0; k < sys.rows(); ++k) {
    auto [lv, lm] = row_argmax(sys.a(k), g, supp);
    auto [rv, rm] = row_argmax(sys.b(k), g, supp);
    if (lv == rv) constraints.emplace_back(lm, rm);
  }

  std::vector<std::uint32_t> members;
  const std::uint32_t count = 1u << supp.size();
  for (std::uint32_t x = 0; x < count; ++x) {
    bool ok = std::all_of(constraints.begin(), constraints.end(),
                          [x](auto c) { return (x & c.first) == 0 || (x & c.second) != 0; });
    if (ok) members.push_back(x);
  }
  return members;
}

bool is_extreme_enum(const IneqSystem& sys, const TVector& g, std::optional<std::size_t> type) {
  if (g.is_zero()) throw std::invalid_argument("is_extreme_enum: zero vector");
  const IndexSet supp = support(g);
  const auto members = tangent_cube_members(sys, g);
  const std::uint32_t full = (1u << supp.size()) - 1;

  auto extreme_of_type = [&](std::size_t local) {
    std::uint32_t bit = 1u << local;
    return std::none_of(members.begin(), members.end(), [&](std::uint32_t x) { return (x & bit) && x != full; });
  };

  if (type) {
    auto it = std::find(supp.begin(), supp.end(), *type);
    return it != supp.end() && extreme_of_type(it - supp.begin());
  }
  for (std::size_t t = 0; t < supp.size(); ++t)
    if (extreme_of_type(t)) return true;
  return false;
}

IndexSet naive_reachable(const Hypergraph& h, Node u) {
  std::vector<bool> in(h.node_count(), false);
  in.at(u) = true;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& e : h.edges()) {
      if (!std::all_of(e.tail.begin(), e.tail.end(), [&](Node v) { return in[v]; })) continue;
      for (Node v : e.head) {
        if (!in[v]) changed = in[v] = true;
      }
    }
  }
  IndexSet out;
  for (Node v = 0; v < h.node_count(); ++v)
    if (in[v]) out.push_back(v);
  return out;
}

SccPartition naive_minimal_sccs(const Hypergraph& h) {
  const std::size_t n = h.node_count();
  std::vector<IndexSet> reach(n);
  for (Node u = 0; u < n; ++u) reach[u] = naive_reachable(h, u);
  auto reaches = [&](Node u, Node v) { return std::binary_search(reach[u].begin(), reach[u].end(), v); };

  SccPartition p;
  p.component_of.assign(n, n);
  for (Node u = 0; u < n; ++u) {
    if (p.component_of[u] != n) continue;
    IndexSet comp;
    for (Node v = 0; v < n; ++v)
      if (reaches(u, v) && reaches(v, u)) comp.push_back(v);
    for (Node v : comp) p.component_of[v] = p.components.size();
    p.components.push_back(std::move(comp));
  }
  const std::size_t m = p.components.size();
  p.below.assign(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (Node u : p.components[i])
        for (Node v : p.components[j])
          if (reaches(v, u)) p.below[i][j] = true;
  for (std::size_t i = 0; i < m; ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < m; ++j)
      if (j != i && p.below[j][i] && !p.below[i][j]) minimal = false;
    if (minimal) p.minimal.push_back(i);
  }
  return p;
}

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt upper_bound(std::size_t n, std::size_t d) {
  if (d < 1 || n < d) throw std::domain_error("upper_bound: requires n >= d >= 1");
  return binomial(n - (d + 1) / 2, n - d) + binomial(n - (d + 2) / 2, n - d);
}

BigInt max_extreme_rays(std::size_t n, std::size_t d) {
  if (d == 0) throw std::domain_error("max_extreme_rays: requires d >= 1");
  if (d == 1) return 1;
  return upper_bound(n + d, d - 1);
}

}  // namespace tropdd::oracle

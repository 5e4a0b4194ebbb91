#pragma once

#include "tropdd/hypergraph.hpp"
#include "tropdd/oracle.hpp"
#include "tropdd/semiring.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace fixtures {

using namespace tropdd;

/// "-oo 0 2.5" -> vector.
inline TVector vec(const std::string& text) {
  std::istringstream in(text);
  std::vector<Scalar> entries;
  for (std::string t; in >> t;) entries.push_back(parse_scalar(t));
  return TVector(std::move(entries));
}

inline Scalar sc(const std::string& text) { return parse_scalar(text); }

/// The four-inequality cone in dimension 3:
///   x3 <= x1 + 2,  x1 <= max(x2, x3),  x1 <= x3 + 2,  x3 <= max(x1, x2 - 1)
inline IneqSystem running_example() {
  IneqSystem sys(3);
  sys.add_row(vec("-oo -oo 0"), vec("2 -oo -oo"));
  sys.add_row(vec("0 -oo -oo"), vec("-oo 0 0"));
  sys.add_row(vec("0 -oo -oo"), vec("-oo -oo 2"));
  sys.add_row(vec("-oo -oo 0"), vec("0 -1 -oo"));
  return sys;
}

inline const TVector g0 = vec("-oo 0 -oo");
inline const TVector g1 = vec("-2 1 0");
inline const TVector g2 = vec("2 2 0");
inline const TVector g3 = vec("0 -oo 0");

/// Nodes u v w x y t = 0..5; e1..e5 = u->v, v->w, w->u, {v,w}->{x,y}, {w,y}->{t}.
inline Hypergraph six_node_hypergraph() {
  Hypergraph h(6);
  h.add_edge({0}, {1});
  h.add_edge({1}, {2});
  h.add_edge({2}, {0});
  h.add_edge({1, 2}, {3, 4});
  h.add_edge({2, 4}, {5});
  return h;
}

inline Hypergraph random_hypergraph(std::mt19937_64& rng, std::size_t nodes, std::size_t edges,
                                    std::size_t max_tail = 3, std::size_t max_head = 3) {
  Hypergraph h(nodes);
  std::uniform_int_distribution<std::size_t> node(0, nodes - 1);
  std::uniform_int_distribution<std::size_t> tail_size(1, max_tail), head_size(1, max_head);
  for (std::size_t e = 0; e < edges; ++e) {
    std::vector<Node> tail, head;
    for (std::size_t i = tail_size(rng); i > 0; --i) tail.push_back(node(rng));
    for (std::size_t i = head_size(rng); i > 0; --i) head.push_back(node(rng));
    h.add_edge(tail, head);
  }
  return h;
}

/// Random tropical combination of a subset of `gens` with coefficients in
/// {-oo} ∪ [-5, 5].
inline TVector random_combination(std::mt19937_64& rng, const std::vector<TVector>& gens, std::size_t dim) {
  TVector x(dim);
  std::uniform_int_distribution<int> coef(-6, 5);
  for (const auto& g : gens) {
    int c = coef(rng);
    if (c < -5) continue;
    x = combine(Scalar::one(), x, Scalar(c), g);
  }
  return x;
}

/// Brute force: members of sys on the grid {-oo, -k..k}^d whose first finite
/// entry is 0, filtered down to those not generated by the other grid members.
inline std::vector<TVector> grid_extreme_rays(const IneqSystem& sys, int k) {
  const std::size_t d = sys.dim();
  std::vector<TVector> members;
  std::vector<int> digits(d, 0);  // 0 = -oo, otherwise value digit - k - 1
  const int base = 2 * k + 2;
  for (;;) {
    TVector x(d);
    for (std::size_t i = 0; i < d; ++i)
      if (digits[i] != 0) x[i] = Scalar(digits[i] - k - 1);
    if (!x.is_zero() && normalize(x) == x && sys.contains(x)) members.push_back(x);
    std::size_t i = 0;
    while (i < d && ++digits[i] == base) digits[i++] = 0;
    if (i == d) break;
  }
  std::vector<TVector> extreme;
  for (const auto& x : members)
    if (oracle::is_extreme_residuation(members, x)) extreme.push_back(x);
  std::sort(extreme.begin(), extreme.end());
  return extreme;
}

// Smallest positive slack at g: gaps of non-saturated rows, and gaps between
// the largest and second largest terms on each side of the saturated rows.
inline std::optional<Rational> min_positive_slack(const IneqSystem& sys, const TVector& g) {
  std::optional<Rational> best;
  auto offer = [&](const Rational& r) {
    if (r > 0 && (!best || r < *best)) best = r;
  };
  auto side_gap = [&](const TVector& row) {
    std::vector<Rational> terms;
    for (std::size_t i = 0; i < g.dim(); ++i) {
      Scalar t = tmul(row[i], g[i]);
      if (t.is_finite()) terms.push_back(t.value());
    }
    std::sort(terms.begin(), terms.end(), std::greater<>());
    terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
    if (terms.size() >= 2) offer(terms[0] - terms[1]);
  };
  for (std::size_t k = 0; k < sys.rows(); ++k) {
    Scalar lhs = dot(sys.a(k), g), rhs = dot(sys.b(k), g);
    if (lhs == rhs) {
      side_gap(sys.a(k));
      side_gap(sys.b(k));
    } else if (lhs.is_finite() && rhs.is_finite()) {
      offer(rhs.value() - lhs.value());
    }
  }
  return best;
}

// Every {0,-oo} pattern y of the tangent cone gives a member g - delta (1 - y).
inline bool locality_holds(const IneqSystem& sys, const TVector& g) {
  auto slack = min_positive_slack(sys, g);
  Rational eps = slack ? *slack / 2 : Rational(1);
  Rational delta = eps / 2;
  const IndexSet supp = support(g);
  for (std::uint32_t y : oracle::tangent_cube_members(sys, g)) {
    TVector x = g;
    for (std::size_t i = 0; i < supp.size(); ++i)
      if (!(y & (1u << i))) x[supp[i]] = Scalar(Rational(g[supp[i]].value() - delta));
    if (!sys.contains(x)) return false;
  }
  return true;
}

}  // namespace fixtures

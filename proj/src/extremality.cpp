#include "tropdd/extremality.hpp"

#include <algorithm>
#include <stdexcept>

namespace tropdd {

TangentData tangent_data(const IneqSystem& sys, const TVector& g) {
  if (g.dim() != sys.dim()) throw std::invalid_argument("tangent_data: dimension mismatch");
  if (g.is_zero()) throw std::invalid_argument("tangent_data: zero vector is not a ray");

  TangentData data;
  data.support = support(g);
  for (std::size_t k = 0; k < sys.rows(); ++k) {
    auto lhs = dot_argmax(sys.a(k), g);
    auto rhs = dot_argmax(sys.b(k), g);
    if (rhs.value < lhs.value) throw std::invalid_argument("tangent_data: not a member (row " + std::to_string(k + 1) + ")");
    // Rows with both sides -oo are vacuous on supp(g).
    if (lhs.value != rhs.value || lhs.value.is_zero()) continue;
    data.saturated_rows.push_back(k);
    data.edges.push_back({std::move(rhs.argmax), std::move(lhs.argmax)});
  }
  return data;
}

Hypergraph tangent_hypergraph(const TangentData& data) {
  const auto& supp = data.support;
  auto local = [&](const std::vector<Node>& nodes) {
    std::vector<Node> out;
    out.reserve(nodes.size());
    for (Node v : nodes) out.push_back(std::lower_bound(supp.begin(), supp.end(), v) - supp.begin());
    return out;
  };
  Hypergraph h(supp.size());
  for (const auto& e : data.edges) h.add_edge(local(e.tail), local(e.head));
  return h;
}

Hypergraph tangent_hypergraph(const IneqSystem& sys, const TVector& g) {
  return tangent_hypergraph(tangent_data(sys, g));
}

bool is_extreme(const IneqSystem& sys, const TVector& g) { return has_least_scc(tangent_hypergraph(sys, g)); }

IndexSet extreme_types(const IneqSystem& sys, const TVector& g) {
  auto data = tangent_data(sys, g);
  auto least = least_scc(tangent_hypergraph(data));
  if (!least) return {};
  IndexSet types;
  for (Node v : *least) types.push_back(data.support[v]);
  return types;
}

}  // namespace tropdd

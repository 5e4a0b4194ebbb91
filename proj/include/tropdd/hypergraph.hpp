#pragma once

// Directed hypergraphs: reachability and strongly connected components.
//
// A hyperedge (T, H) fires once every node of its tail T is reached, and then
// reaches every node of its head H. Components are ordered by
//
//   C1 <= C2   iff   some node of C2 reaches some node of C1,
//
// so the minimal components are the terminal ones (they reach nothing else).

#include "tropdd/semiring.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tropdd {

using Node = std::size_t;

struct Hyperedge {
  std::vector<Node> tail;  // sorted, unique, nonempty
  std::vector<Node> head;  // sorted, unique, nonempty
};

class Hypergraph {
 public:
  explicit Hypergraph(std::size_t node_count);

  /// Throws std::invalid_argument on empty sides or out-of-range nodes.
  void add_edge(std::vector<Node> tail, std::vector<Node> head);

  std::size_t node_count() const { return node_count_; }
  const std::vector<Hyperedge>& edges() const { return edges_; }
  const Hyperedge& edge(std::size_t e) const { return edges_[e]; }

  /// Indices of the edges whose tail contains u.
  const std::vector<std::size_t>& edges_leaving(Node u) const { return leaving_[u]; }

  /// |N| + sum over edges of |T(e)| + |H(e)|.
  std::size_t size() const { return size_; }

 private:
  std::size_t node_count_;
  std::size_t size_;
  std::vector<Hyperedge> edges_;
  std::vector<std::vector<std::size_t>> leaving_;
};

/// Nodes reachable from u, sorted. Linear in size(h).
IndexSet reachable_from(const Hypergraph& h, Node u);

struct SccPartition {
  std::vector<IndexSet> components;      // sorted by smallest member
  std::vector<std::size_t> component_of;  // node -> component index
  /// below[i][j] is true iff components[i] <= components[j].
  std::vector<std::vector<bool>> below;
  std::vector<std::size_t> minimal;  // indices into components, ascending
};

/// Full partition and order, from one reachability search per node.
SccPartition scc_partition(const Hypergraph& h);

/// Terminal (minimal) components, sorted by smallest member.
/// O(size(h) * alpha(node_count)) via a Tarjan-style search with union-find.
std::vector<IndexSet> minimal_sccs(const Hypergraph& h);

/// The least component, if the order has one.
std::optional<IndexSet> least_scc(const Hypergraph& h);
inline bool has_least_scc(const Hypergraph& h) { return least_scc(h).has_value(); }

/// Debug text format, 1-based nodes:
///
///   nodes 3
///   tail 2 -> head 1
///   tail 1 3 -> head 2 3
///
/// Blank lines and '#' comments are ignored.
Hypergraph parse_hypergraph(std::string_view text);
std::string to_string(const Hypergraph& h);

}  // namespace tropdd

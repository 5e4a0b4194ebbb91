#include "tropdd/hypergraph.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tropdd {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
// The search stores node and edge ids in 32 bits to stay cache friendly.
constexpr std::uint32_t kNil = std::numeric_limits<std::uint32_t>::max();

void canonicalize(std::vector<Node>& nodes, std::size_t node_count, const char* side) {
  if (nodes.empty()) throw std::invalid_argument(std::string("hyperedge ") + side + " is empty");
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  if (nodes.back() >= node_count)
    throw std::invalid_argument(std::string("hyperedge ") + side + " node " + std::to_string(nodes.back()) +
                                " out of range");
}

// Singly linked edge lists with O(1) concatenation, one per class root.
class EdgeQueues {
 public:
  EdgeQueues(std::size_t roots, std::size_t capacity) : first_(roots, kNil), last_(roots, kNil) {
    edge_.reserve(capacity);
    next_.reserve(capacity);
  }

  bool empty(std::size_t r) const { return first_[r] == kNil; }

  void push(std::size_t r, std::uint32_t e) {
    edge_.push_back(e);
    next_.push_back(kNil);
    auto cell = static_cast<std::uint32_t>(edge_.size() - 1);
    if (first_[r] == kNil)
      first_[r] = cell;
    else
      next_[last_[r]] = cell;
    last_[r] = cell;
  }

  std::uint32_t pop(std::size_t r) {
    std::uint32_t cell = first_[r];
    first_[r] = next_[cell];
    if (first_[r] == kNil) last_[r] = kNil;
    return edge_[cell];
  }

  /// Moves every entry of `from` to the back of `to`.
  void splice(std::size_t to, std::size_t from) {
    if (first_[from] == kNil) return;
    if (first_[to] == kNil)
      first_[to] = first_[from];
    else
      next_[last_[to]] = first_[from];
    last_[to] = last_[from];
    first_[from] = last_[from] = kNil;
  }

 private:
  std::vector<std::uint32_t> first_, last_;
  std::vector<std::uint32_t> edge_, next_;
};

// Terminal SCC search. Classes of nodes found to be mutually reachable are
// collapsed with union-find while they sit on the Tarjan stack. A hyperedge
// with k > 1 tail nodes counts the tail nodes visited while the class of its
// first visited tail node r_e is still open; when the count reaches k the
// edge behaves as a plain edge leaving the class of r_e. The counting may
// over-approximate for classes that turn out non-terminal, which is harmless
// because those are discarded.
class TerminalSearch {
 public:
  explicit TerminalSearch(const Hypergraph& h)
      : n_(h.node_count()), nodes_(n_), edges_(h.edges().size()), queues_(n_, h.edges().size()) {
    if (n_ >= kNil || h.edges().size() >= kNil || h.size() >= kNil)
      throw std::length_error("minimal_sccs: hypergraph too large");
    // Flat copies of the adjacency; the search jumps around the graph.
    leave_begin_.assign(n_ + 1, 0);
    for (Node u = 0; u < n_; ++u) leave_begin_[u + 1] = leave_begin_[u] + h.edges_leaving(u).size();
    leaving_.reserve(leave_begin_[n_]);
    for (Node u = 0; u < n_; ++u) leaving_.insert(leaving_.end(), h.edges_leaving(u).begin(), h.edges_leaving(u).end());
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const auto& edge = h.edge(e);
      edges_[e].tail_size = edge.tail.size();
      edges_[e].head_begin = heads_.size();
      heads_.insert(heads_.end(), edge.head.begin(), edge.head.end());
      edges_[e].head_end = heads_.size();
    }
    for (Node u = 0; u < n_; ++u) nodes_[u].parent = u;
  }

  std::vector<IndexSet> run() {
    for (Node s = 0; s < n_; ++s) {
      if (nodes_[s].visited) continue;
      start(static_cast<std::uint32_t>(s));
      drive();
    }
    // Numbering classes by their smallest node keeps the output sorted.
    std::vector<std::size_t> slot(n_, kNone);
    std::vector<IndexSet> out;
    for (Node v = 0; v < n_; ++v) {
      std::uint32_t r = find(static_cast<std::uint32_t>(v));
      if (!nodes_[r].terminal) continue;
      if (slot[r] == kNone) {
        slot[r] = out.size();
        out.emplace_back();
      }
      out[slot[r]].push_back(v);
    }
    return out;
  }

 private:
  struct NodeState {
    std::uint32_t parent = 0;  // union-find
    std::uint32_t index = 0, low = 0;
    unsigned char rank = 0;
    bool visited = false, is_term = false, on_stack = false, finished = false, terminal = false;
  };

  struct EdgeState {
    std::uint32_t tail_size = 0, head_begin = 0, head_end = 0;
    std::uint32_t first_tail = kNil, tail_count = 0;
  };

  struct Frame {
    std::uint32_t node;
    std::uint32_t pos = 0, end = 0;  // range of heads_ still to visit
  };

  std::uint32_t find(std::uint32_t x) {
    std::uint32_t root = x;
    while (nodes_[root].parent != root) root = nodes_[root].parent;
    while (nodes_[x].parent != root) x = std::exchange(nodes_[x].parent, root);
    return root;
  }

  // Links two roots; returns the new root.
  std::uint32_t link(std::uint32_t a, std::uint32_t b) {
    if (nodes_[a].rank < nodes_[b].rank) std::swap(a, b);
    nodes_[b].parent = a;
    if (nodes_[a].rank == nodes_[b].rank) ++nodes_[a].rank;
    return a;
  }

  void start(std::uint32_t u) {
    NodeState& s = nodes_[u];
    s.visited = s.is_term = s.on_stack = true;
    s.index = s.low = counter_++;
    stack_.push_back(u);
    frames_.push_back({u});
    for (std::uint32_t i = leave_begin_[u]; i < leave_begin_[u + 1]; ++i) {
      std::uint32_t e = leaving_[i];
      EdgeState& es = edges_[e];
      if (es.tail_size == 1) {
        queues_.push(u, e);
        continue;
      }
      if (es.first_tail == kNil) es.first_tail = u;
      std::uint32_t v = find(es.first_tail);
      if (nodes_[v].on_stack && ++es.tail_count == es.tail_size) queues_.push(v, e);
    }
  }

  void drive() {
    while (!frames_.empty()) {
      Frame& f = frames_.back();
      std::uint32_t u = find(f.node);

      if (f.pos < f.end) {
        std::uint32_t w = heads_[f.pos];
        if (!nodes_[w].visited) {
          start(w);  // invalidates f
          continue;
        }
        const NodeState& ws = nodes_[find(w)];
        if (ws.finished) {
          nodes_[u].is_term = false;
        } else {
          nodes_[u].low = std::min(nodes_[u].low, ws.low);
          nodes_[u].is_term = nodes_[u].is_term && ws.is_term;
        }
        ++f.pos;
        continue;
      }

      if (!queues_.empty(u)) {
        const EdgeState& es = edges_[queues_.pop(u)];
        f.pos = es.head_begin;
        f.end = es.head_end;
        continue;
      }

      if (nodes_[u].low == nodes_[u].index) {
        if (nodes_[u].is_term) {
          u = collapse_top(u);
          if (!queues_.empty(u)) continue;  // newly enabled hyperedges
          stack_.pop_back();
          NodeState& s = nodes_[u];
          s.on_stack = false;
          s.finished = s.terminal = true;
        } else {
          std::uint32_t v;
          do {
            v = stack_.back();
            stack_.pop_back();
            nodes_[v].on_stack = false;
            nodes_[v].finished = true;
          } while (v != u);
        }
      }
      frames_.pop_back();
    }
  }

  // Merges every class above u on the stack into u's class.
  std::uint32_t collapse_top(std::uint32_t u) {
    if (stack_.back() == u) return u;
    std::uint32_t idx = nodes_[u].index;
    bool term = nodes_[u].is_term;
    std::uint32_t root = u;
    while (stack_.back() != u) {
      std::uint32_t v = stack_.back();
      stack_.pop_back();
      nodes_[v].on_stack = false;
      term = term && nodes_[v].is_term;
      std::uint32_t merged = link(root, v);
      std::uint32_t other = merged == root ? v : root;
      queues_.splice(merged, other);
      nodes_[other].on_stack = false;
      root = merged;
    }
    stack_.back() = root;
    NodeState& s = nodes_[root];
    s.on_stack = true;
    s.index = s.low = idx;
    s.is_term = term;
    return root;
  }

  std::size_t n_;
  std::vector<NodeState> nodes_;
  std::vector<EdgeState> edges_;
  std::vector<std::uint32_t> leave_begin_, leaving_, heads_;
  EdgeQueues queues_;
  std::vector<std::uint32_t> stack_;
  std::vector<Frame> frames_;
  std::uint32_t counter_ = 0;
};

}  // namespace

Hypergraph::Hypergraph(std::size_t node_count)
    : node_count_(node_count), size_(node_count), leaving_(node_count) {}

void Hypergraph::add_edge(std::vector<Node> tail, std::vector<Node> head) {
  canonicalize(tail, node_count_, "tail");
  canonicalize(head, node_count_, "head");
  std::size_t e = edges_.size();
  for (Node u : tail) leaving_[u].push_back(e);
  size_ += tail.size() + head.size();
  edges_.push_back({std::move(tail), std::move(head)});
}

IndexSet reachable_from(const Hypergraph& h, Node u) {
  if (u >= h.node_count()) throw std::invalid_argument("reachable_from: node out of range");
  std::vector<bool> reached(h.node_count(), false);
  std::vector<std::size_t> missing(h.edges().size());
  for (std::size_t e = 0; e < h.edges().size(); ++e) missing[e] = h.edge(e).tail.size();

  std::vector<Node> queue{u};
  reached[u] = true;
  for (std::size_t next = 0; next < queue.size(); ++next) {
    for (std::size_t e : h.edges_leaving(queue[next])) {
      if (--missing[e] != 0) continue;
      for (Node w : h.edge(e).head) {
        if (reached[w]) continue;
        reached[w] = true;
        queue.push_back(w);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

SccPartition scc_partition(const Hypergraph& h) {
  const std::size_t n = h.node_count();
  std::vector<std::vector<bool>> reaches(n, std::vector<bool>(n, false));
  for (Node u = 0; u < n; ++u)
    for (Node v : reachable_from(h, u)) reaches[u][v] = true;

  SccPartition p;
  p.component_of.assign(n, kNone);
  for (Node u = 0; u < n; ++u) {
    if (p.component_of[u] != kNone) continue;
    std::size_t c = p.components.size();
    p.components.emplace_back();
    for (Node v = u; v < n; ++v) {
      if (reaches[u][v] && reaches[v][u]) {
        p.component_of[v] = c;
        p.components[c].push_back(v);
      }
    }
  }

  const std::size_t m = p.components.size();
  p.below.assign(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) p.below[i][j] = reaches[p.components[j].front()][p.components[i].front()];

  for (std::size_t i = 0; i < m; ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < m && minimal; ++j)
      if (j != i && p.below[j][i]) minimal = false;
    if (minimal) p.minimal.push_back(i);
  }
  return p;
}

std::vector<IndexSet> minimal_sccs(const Hypergraph& h) { return TerminalSearch(h).run(); }

std::optional<IndexSet> least_scc(const Hypergraph& h) {
  // Every node reaches some terminal component: within reach(u) pick v with
  // an inclusion-minimal reach set; then reach(v) is a terminal component.
  // Hence a unique terminal component is reached from every node, i.e. it
  // is the least element of the order.
  auto terminal = minimal_sccs(h);
  if (terminal.size() != 1) return std::nullopt;
  return std::move(terminal.front());
}

Hypergraph parse_hypergraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<Hypergraph> h;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) {
    return std::invalid_argument("hypergraph line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string word;
    if (!(words >> word)) continue;
    if (!h) {
      std::size_t count;
      if (word != "nodes" || !(words >> count)) throw fail("expected 'nodes <k>'");
      h.emplace(count);
      continue;
    }
    if (word != "tail") throw fail("expected 'tail ... -> head ...'");
    std::vector<Node> tail, head;
    auto* side = &tail;
    bool arrow = false;
    while (words >> word) {
      if (word == "->") {
        if (arrow || !(words >> word) || word != "head") throw fail("expected '-> head'");
        side = &head;
        arrow = true;
        continue;
      }
      std::size_t v;
      try {
        std::size_t used;
        v = std::stoul(word, &used);
        if (used != word.size()) throw std::invalid_argument(word);
      } catch (const std::exception&) {
        throw fail("invalid node '" + word + "'");
      }
      if (v == 0 || v > h->node_count()) throw fail("node " + word + " out of range");
      side->push_back(v - 1);
    }
    if (!arrow) throw fail("missing '-> head'");
    try {
      h->add_edge(std::move(tail), std::move(head));
    } catch (const std::invalid_argument& e) {
      throw fail(e.what());
    }
  }
  if (!h) throw std::invalid_argument("hypergraph: missing 'nodes' header");
  return std::move(*h);
}

std::string to_string(const Hypergraph& h) {
  std::ostringstream out;
  out << "nodes " << h.node_count() << '\n';
  for (const auto& e : h.edges()) {
    out << "tail";
    for (Node v : e.tail) out << ' ' << v + 1;
    out << " -> head";
    for (Node v : e.head) out << ' ' << v + 1;
    out << '\n';
  }
  return out.str();
}

}  // namespace tropdd

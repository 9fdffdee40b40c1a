#include "gpa/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <charconv>
#include <cstdlib>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

namespace gpa {

Graph Graph::from_edges(std::size_t node_count, std::span<const Edge> edges,
                        DuplicatePolicy policy) {
  Graph g;
  g.node_count_ = node_count;

  std::vector<Edge> canon;
  canon.reserve(edges.size());
  std::size_t self_loops = 0;
  for (const Edge& e : edges) {
    if (e.u >= node_count || e.v >= node_count) {
      throw DomainError("edge endpoint out of range: (" + std::to_string(e.u) +
                        ", " + std::to_string(e.v) + ")");
    }
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw DomainError("edge weight must be positive and finite");
    }
    if (e.u == e.v) {
      ++self_loops;
      continue;
    }
    canon.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.weight});
  }
  if (self_loops > 0) {
    warn("dropped " + std::to_string(self_loops) + " self-loop(s)");
  }

  // stable so that kCollapse keeps the first occurrence
  std::stable_sort(canon.begin(), canon.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (const Edge& e : canon) {
    if (!g.edges_.empty() && g.edges_.back().u == e.u && g.edges_.back().v == e.v) {
      if (policy == DuplicatePolicy::kSum) g.edges_.back().weight += e.weight;
      continue;
    }
    g.edges_.push_back(e);
  }

  std::vector<std::size_t> degree(node_count, 0);
  for (const Edge& e : g.edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  g.offsets_.assign(node_count + 1, 0);
  for (std::size_t v = 0; v < node_count; ++v) {
    g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  }
  g.adjacency_.resize(g.offsets_.back());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // edges_ is sorted by (u, v), so each adjacency list ends up sorted by node
  for (const Edge& e : g.edges_) {
    g.adjacency_[cursor[e.u]++] = {e.v, e.weight};
  }
  for (const Edge& e : g.edges_) {
    g.adjacency_[cursor[e.v]++] = {e.u, e.weight};
  }
  for (std::size_t v = 0; v < node_count; ++v) {
    std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]),
              [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
  }
  return g;
}

std::span<const Neighbor> Graph::neighbors(NodeId v) const {
  if (v >= node_count_) {
    throw std::out_of_range("node id " + std::to_string(v) + " out of range");
  }
  return adjacency(v);
}

double Graph::weighted_degree(NodeId v) const {
  double total = 0.0;
  for (const Neighbor& nb : neighbors(v)) total += nb.weight;
  return total;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  if (u >= node_count_ || v >= node_count_) return false;
  auto adj = adjacency(u);
  auto it = std::lower_bound(adj.begin(), adj.end(), v,
                             [](const Neighbor& a, NodeId x) { return a.node < x; });
  return it != adj.end() && it->node == v;
}

Graph induced_subgraph(const Graph& g, std::span<const NodeId> nodes) {
  constexpr NodeId kAbsent = std::numeric_limits<NodeId>::max();
  std::vector<NodeId> local(g.node_count(), kAbsent);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    local[nodes[i]] = static_cast<NodeId>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (local[e.u] != kAbsent && local[e.v] != kAbsent) {
      edges.push_back({local[e.u], local[e.v], e.weight});
    }
  }
  return Graph::from_edges(nodes.size(), edges);
}

std::unordered_map<std::int64_t, NodeId> LoadedGraph::dense_index() const {
  std::unordered_map<std::int64_t, NodeId> index;
  index.reserve(original_ids.size());
  for (std::size_t i = 0; i < original_ids.size(); ++i) {
    index.emplace(original_ids[i], static_cast<NodeId>(i));
  }
  return index;
}

namespace {

bool is_blank_or_comment(std::string_view line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::int64_t parse_id(std::string_view tok, std::size_t line_no) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("invalid node id '" + std::string(tok) + "'", line_no);
  }
  return value;
}

double parse_weight(std::string_view tok, std::size_t line_no) {
  // std::from_chars for double is unavailable on older libstdc++
  std::string s(tok);
  char* end = nullptr;
  errno = 0;
  double value = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || errno == ERANGE) {
    throw ParseError("invalid edge weight '" + s + "'", line_no);
  }
  return value;
}

}  // namespace

LoadedGraph read_edge_list(std::istream& in, bool weighted) {
  struct RawEdge {
    std::int64_t u, v;
    double w;
  };
  std::vector<RawEdge> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    auto tokens = split_ws(line);
    if (tokens.size() != 2 && tokens.size() != 3) {
      throw ParseError("expected 'u v' or 'u v w'", line_no);
    }
    RawEdge e{parse_id(tokens[0], line_no), parse_id(tokens[1], line_no), 1.0};
    if (tokens.size() == 3) {
      double w = parse_weight(tokens[2], line_no);
      if (weighted) {
        if (!(w > 0.0) || !std::isfinite(w)) {
          throw DomainError("non-positive edge weight on line " + std::to_string(line_no));
        }
        e.w = w;
      }
    }
    raw.push_back(e);
  }

  LoadedGraph out;
  out.original_ids.reserve(raw.size() * 2);
  for (const RawEdge& e : raw) {
    out.original_ids.push_back(e.u);
    out.original_ids.push_back(e.v);
  }
  std::sort(out.original_ids.begin(), out.original_ids.end());
  out.original_ids.erase(std::unique(out.original_ids.begin(), out.original_ids.end()),
                         out.original_ids.end());
  auto dense = [&](std::int64_t id) {
    auto it = std::lower_bound(out.original_ids.begin(), out.original_ids.end(), id);
    return static_cast<NodeId>(it - out.original_ids.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const RawEdge& e : raw) edges.push_back({dense(e.u), dense(e.v), e.w});
  out.graph = Graph::from_edges(out.original_ids.size(), edges,
                                weighted ? DuplicatePolicy::kSum : DuplicatePolicy::kCollapse);
  return out;
}

LoadedGraph load_edge_list(const std::string& path, bool weighted) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open edge list: " + path);
  return read_edge_list(in, weighted);
}

void write_edge_list(std::ostream& out, const Graph& g, bool weighted,
                     std::span<const std::int64_t> original_ids) {
  auto id = [&](NodeId v) -> std::int64_t {
    return original_ids.empty() ? static_cast<std::int64_t>(v) : original_ids[v];
  };
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (const Edge& e : g.edges()) {
    out << id(e.u) << ' ' << id(e.v);
    if (weighted) out << ' ' << e.weight;
    out << '\n';
  }
}

void save_edge_list(const std::string& path, const Graph& g, bool weighted,
                    std::span<const std::int64_t> original_ids) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write edge list: " + path);
  write_edge_list(out, g, weighted, original_ids);
}

std::vector<NodeId> LabelSet::labeled_nodes() const {
  std::vector<NodeId> out;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (!labels[v].empty()) out.push_back(static_cast<NodeId>(v));
  }
  return out;
}

LabelSet read_labels(std::istream& in, const LoadedGraph& graph) {
  const auto index = graph.dense_index();
  std::vector<std::pair<NodeId, std::vector<std::int64_t>>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    auto tokens = split_ws(line);
    if (tokens.size() != 2) throw ParseError("expected 'node_id label[,label...]'", line_no);
    auto it = index.find(parse_id(tokens[0], line_no));
    if (it == index.end()) {
      throw ParseError("label for unknown node '" + std::string(tokens[0]) + "'", line_no);
    }
    std::vector<std::int64_t> ls;
    std::string_view rest = tokens[1];
    while (!rest.empty()) {
      auto comma = rest.find(',');
      ls.push_back(parse_id(rest.substr(0, comma), line_no));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    rows.emplace_back(it->second, std::move(ls));
  }

  std::map<std::int64_t, std::uint32_t> label_index;
  for (const auto& [node, ls] : rows) {
    for (auto l : ls) label_index.emplace(l, 0);
  }
  std::uint32_t next = 0;
  for (auto& [orig, dense] : label_index) dense = next++;

  LabelSet out;
  out.label_count = label_index.size();
  out.labels.resize(graph.graph.node_count());
  for (const auto& [node, ls] : rows) {
    for (auto l : ls) out.labels[node].push_back(label_index.at(l));
  }
  for (auto& ls : out.labels) {
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
  }
  return out;
}

LabelSet load_labels(const std::string& path, const LoadedGraph& graph) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open label file: " + path);
  return read_labels(in, graph);
}

std::vector<std::uint32_t> connected_components(const Graph& g) {
  constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> comp(g.node_count(), kUnseen);
  std::vector<NodeId> stack;
  std::uint32_t next = 0;
  for (NodeId s = 0; s < g.node_count(); ++s) {
    if (comp[s] != kUnseen) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      for (const Neighbor& nb : g.adjacency(v)) {
        if (comp[nb.node] == kUnseen) {
          comp[nb.node] = next;
          stack.push_back(nb.node);
        }
      }
    }
    ++next;
  }
  return comp;
}

std::vector<NodeId> largest_connected_component(const Graph& g) {
  if (g.empty()) return {};
  const auto comp = connected_components(g);
  const auto count = *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::size_t> sizes(count, 0);
  for (auto c : comp) ++sizes[c];
  // first maximum = component with the smallest node id among the largest
  const auto best = static_cast<std::uint32_t>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  std::vector<NodeId> out;
  out.reserve(sizes[best]);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (comp[v] == best) out.push_back(v);
  }
  return out;
}

}  // namespace gpa

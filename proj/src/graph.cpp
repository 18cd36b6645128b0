#include "forestdist/graph.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <sstream>
#include <utility>

namespace forestdist {

namespace {

constexpr double kMinTransformedWeight = 1e-300;

// Union-find over 0..n-1.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

WeightedMultigraph::WeightedMultigraph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 2) throw std::invalid_argument("vertex count must be at least 2");
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("loop edges are not allowed");
    if (!(e.weight > 0.0) || !std::isfinite(e.weight))
      throw std::invalid_argument("edge weights must be positive and finite");
  }
}

WeightedMultigraph parse_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = strip_comment(line);
    if (blank(body)) continue;
    std::istringstream fields(body);
    if (n < 0) {
      if (!(fields >> n)) parse_fail(line_no, "expected the vertex count");
      std::string extra;
      if (fields >> extra) parse_fail(line_no, "unexpected token after the vertex count");
      if (n < 2) parse_fail(line_no, "vertex count must be at least 2");
      continue;
    }
    int u = 0, v = 0;
    double w = 1.0;
    if (!(fields >> u >> v)) parse_fail(line_no, "expected `u v [w]`");
    if (!(fields >> w)) {
      if (!fields.eof()) parse_fail(line_no, "malformed weight");
      w = 1.0;
    } else {
      std::string extra;
      if (fields >> extra) parse_fail(line_no, "unexpected token after the weight");
    }
    if (u < 1 || u > n || v < 1 || v > n)
      parse_fail(line_no, "vertex id out of range 1.." + std::to_string(n));
    if (u == v) parse_fail(line_no, "loop edge " + std::to_string(u));
    if (!(w > 0.0) || !std::isfinite(w)) parse_fail(line_no, "weight must be positive");
    edges.push_back({u - 1, v - 1, w});
  }
  if (n < 0) throw ParseError("empty input: missing the vertex count");
  return WeightedMultigraph(n, std::move(edges));
}

WeightedMultigraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

double transform_edge_weight(WeightTransform transform, double alpha, double weight) {
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  const double r = 1.0 / weight;
  double out = 0.0;
  switch (transform) {
    case WeightTransform::LinearScale:
      out = alpha * weight;
      break;
    case WeightTransform::PowerOfAlpha:
      out = std::pow(alpha, r);
      break;
    case WeightTransform::ExpScaledByAlpha:
      out = (alpha / r) * std::exp(-r / alpha);
      break;
    case WeightTransform::PureExponential:
      out = std::exp(-r / alpha);
      break;
  }
  if (!std::isfinite(out) || out < kMinTransformedWeight)
    throw NumericalError("transformed weight out of range at alpha=" + std::to_string(alpha) +
                         " (try a different alpha)");
  return out;
}

bool transform_admissible(WeightTransform transform, double alpha) {
  if (!(alpha > 0.0)) return false;
  if (transform == WeightTransform::PowerOfAlpha) return alpha < 1.0;
  return true;
}

WeightedMultigraph transform_weights(const WeightedMultigraph& g, WeightTransform transform,
                                     double alpha) {
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) e.weight = transform_edge_weight(transform, alpha, e.weight);
  return WeightedMultigraph(g.vertex_count(), std::move(edges));
}

std::vector<std::vector<int>> connected_components(const WeightedMultigraph& g) {
  const int n = g.vertex_count();
  DisjointSets sets(n);
  for (const Edge& e : g.edges()) sets.unite(e.u, e.v);
  std::vector<std::vector<int>> by_root(n);
  for (int v = 0; v < n; ++v) by_root[sets.find(v)].push_back(v);
  std::vector<std::vector<int>> components;
  for (auto& members : by_root)
    if (!members.empty()) components.push_back(std::move(members));
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return components;
}

Subgraph induced_subgraph(const WeightedMultigraph& g, const std::vector<int>& vertices) {
  std::vector<int> new_id(g.vertex_count(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) new_id[vertices[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (new_id[e.u] >= 0 && new_id[e.v] >= 0)
      edges.push_back({new_id[e.u], new_id[e.v], e.weight});
  return {WeightedMultigraph(static_cast<int>(vertices.size()), std::move(edges)), vertices};
}

Subgraph remove_vertex(const WeightedMultigraph& g, int j) {
  const int n = g.vertex_count();
  if (n < 3) throw std::invalid_argument("remove_vertex needs at least 3 vertices");
  if (j < 0 || j >= n) throw std::invalid_argument("vertex id out of range");
  std::vector<int> keep;
  keep.reserve(n - 1);
  for (int v = 0; v < n; ++v)
    if (v != j) keep.push_back(v);
  return induced_subgraph(g, keep);
}

const char* transform_name(WeightTransform transform) {
  switch (transform) {
    case WeightTransform::LinearScale: return "linear";
    case WeightTransform::PowerOfAlpha: return "power";
    case WeightTransform::ExpScaledByAlpha: return "exp-scaled";
    case WeightTransform::PureExponential: return "pure-exp";
  }
  return "?";
}

}  // namespace forestdist

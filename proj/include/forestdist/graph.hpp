#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace forestdist {

/// Raised when edge-list input cannot be parsed. The message carries the
/// offending line number.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a computation leaves the representable range (weight
/// underflow, log of a nonpositive kernel entry, ill-conditioned solve).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One undirected edge with a positive weight (conductance).
/// Vertices are 0-based; parallel (u,v) records are kept distinct.
struct Edge {
  int u;
  int v;
  double weight;
};

/// Undirected weighted multigraph without loops on vertices 0..n-1.
/// Immutable after construction; the constructor validates all invariants.
class WeightedMultigraph {
 public:
  WeightedMultigraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  int n_;
  std::vector<Edge> edges_;
};

/// Edge weight transformations G -> G_alpha. The argument of each rule is
/// the edge resistance r = 1/w.
enum class WeightTransform {
  LinearScale,       // alpha/r, i.e. w * alpha
  PowerOfAlpha,      // alpha^r
  ExpScaledByAlpha,  // (alpha/r) * exp(-r/alpha)
  PureExponential,   // exp(-r/alpha)
};

/// Parses the edge-list text format:
///   first significant line: vertex count n (>= 2)
///   following lines: `u v [w]` with 1-based ids, weight defaulting to 1.0
///   `#` starts a comment; blank lines are ignored
///   repeated `u v` lines create parallel edges
WeightedMultigraph parse_edge_list(std::istream& in);
WeightedMultigraph parse_edge_list(const std::string& text);

/// Applies one edge weight per transform rule at the given alpha > 0.
/// Throws NumericalError if the result is below 1e-300 or not finite.
double transform_edge_weight(WeightTransform transform, double alpha, double weight);

/// True when psi_alpha is decreasing in r with lim_{r->inf} psi_alpha(r) = 0,
/// the conditions a weight transformation has to satisfy. PowerOfAlpha
/// meets them only for alpha in (0,1); the other rules for every alpha > 0.
bool transform_admissible(WeightTransform transform, double alpha);

/// G_alpha: same vertices and edge multiset structure, weights transformed.
WeightedMultigraph transform_weights(const WeightedMultigraph& g,
                                     WeightTransform transform, double alpha);

/// Maximal connected vertex sets, each sorted ascending, components ordered
/// by smallest member.
std::vector<std::vector<int>> connected_components(const WeightedMultigraph& g);

/// Subgraph plus the original vertex id of each new vertex.
struct Subgraph {
  WeightedMultigraph graph;
  std::vector<int> old_ids;  // old_ids[new] == original id
};

/// Graph induced on V(g) \ {j}, vertices relabeled order-preserving.
/// Requires vertex_count >= 3.
Subgraph remove_vertex(const WeightedMultigraph& g, int j);

/// Graph induced on the given vertex set (sorted ascending).
Subgraph induced_subgraph(const WeightedMultigraph& g, const std::vector<int>& vertices);

const char* transform_name(WeightTransform transform);

}  // namespace forestdist

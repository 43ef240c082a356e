#include "dm/graph.hpp"

#include <algorithm>

namespace dm {

Graph::Graph(SquareMatrix adj) : adj_(std::move(adj)) {
  if (adj_.field() != Field::Gf2)
    throw ValidationError("graph adjacency matrices live over gf2");
  if (!adj_.is_symmetric())
    throw ValidationError("graph adjacency matrix must be symmetric");
}

Graph Graph::empty(GroundSet vertices) {
  return Graph(SquareMatrix(Field::Gf2, std::move(vertices)));
}

Graph Graph::from_lists(GroundSet vertices,
                        const std::vector<std::pair<std::string, std::string>>& edges,
                        const std::vector<std::string>& loops) {
  SquareMatrix a(Field::Gf2, vertices);
  for (const auto& [u, v] : edges) {
    size_t i = vertices.index(u), j = vertices.index(v);
    if (i == j) throw ValidationError("edge " + u + "-" + v + " is a loop; use a loop line");
    a.set(i, j, gf_one);
    a.set(j, i, gf_one);
  }
  for (const auto& u : loops) {
    size_t i = vertices.index(u);
    a.set(i, i, gf_one);
  }
  return Graph(std::move(a));
}

Graph Graph::local_complement(size_t u) const {
  if (!has_loop(u))
    throw PivotError("local complementation at " + vertices().label(u) +
                     " needs a loop there");
  return Graph(adj_.ppt(Mask{1} << u));
}

Graph Graph::edge_local_complement(size_t u, size_t v) const {
  if (u == v || !has_edge(u, v) || has_loop(u) || has_loop(v))
    throw PivotError("edge local complementation needs an unlooped edge {" +
                     vertices().label(u) + "," + vertices().label(v) + "}");
  return Graph(adj_.ppt((Mask{1} << u) | (Mask{1} << v)));
}

Graph Graph::loop_complement(Mask X) const {
  return Graph(adj_.diag_complement(X));
}

Graph Graph::del(Mask X) const { return Graph(adj_.drop(X)); }

int Graph::nmax(size_t v) const {
  Mask bit = Mask{1} << v;
  int a = nullity();
  int b = del(bit).nullity();
  int c = loop_complement(bit).nullity();
  return std::max(a, std::max(b, c));
}

SetSystem Graph::delta_matroid() const { return matrix_delta_matroid(adj_); }

Graph graph_from_small_sets(const SetSystem& M) {
  if (!M.is_member(0))
    throw ValidationError("family lacks the empty set; not of the form M_G");
  const GroundSet& g = M.ground();
  SquareMatrix a(Field::Gf2, g);
  for (size_t u = 0; u < g.size(); ++u)
    if (M.is_member(Mask{1} << u)) a.set(u, u, gf_one);
  for (size_t u = 0; u < g.size(); ++u) {
    for (size_t v = u + 1; v < g.size(); ++v) {
      bool pair_in = M.is_member((Mask{1} << u) | (Mask{1} << v));
      bool both_loops = a.at(u, u) == gf_one && a.at(v, v) == gf_one;
      if (pair_in != both_loops) {
        a.set(u, v, gf_one);
        a.set(v, u, gf_one);
      }
    }
  }
  return Graph(std::move(a));
}

Graph fundamental_graph(const Matroid& M, Mask Z) {
  if (!M.bases().is_member(Z))
    throw ValidationError("subset " + M.ground().subset_string(Z) +
                          " is not a basis");
  const GroundSet& g = M.ground();
  SquareMatrix a(Field::Gf2, g);
  for (size_t u = 0; u < g.size(); ++u) {
    for (size_t v = u + 1; v < g.size(); ++v) {
      Mask pair = (Mask{1} << u) | (Mask{1} << v);
      if (M.bases().is_member(Z ^ pair)) {
        a.set(u, v, gf_one);
        a.set(v, u, gf_one);
      }
    }
  }
  return Graph(std::move(a));
}

}  // namespace dm

#pragma once
// Graphs as symmetric matrices over the two-element field, loops on the
// diagonal.  Every graph operation here is a matrix operation: local and
// edge-local complementation are principal pivot transforms, loop
// complementation toggles the diagonal, and the graph's delta-matroid M_G
// collects the nonsingular principal submatrices.

#include <string>
#include <vector>

#include "dm/matrix.hpp"
#include "dm/matroid.hpp"
#include "dm/setsys.hpp"

namespace dm {

class Graph {
 public:
  explicit Graph(SquareMatrix adj);  // gf2 + symmetric enforced
  static Graph empty(GroundSet vertices);
  static Graph from_lists(GroundSet vertices,
                          const std::vector<std::pair<std::string, std::string>>& edges,
                          const std::vector<std::string>& loops);

  const SquareMatrix& adj() const { return adj_; }
  const GroundSet& vertices() const { return adj_.ground(); }
  size_t n() const { return adj_.n(); }

  bool has_edge(size_t u, size_t v) const { return adj_.at(u, v) == gf_one; }
  bool has_loop(size_t u) const { return adj_.at(u, u) == gf_one; }

  // G*{u}: requires a loop at u.
  Graph local_complement(size_t u) const;
  // G*{u,v}: requires an unlooped edge {u,v}.
  Graph edge_local_complement(size_t u, size_t v) const;

  Graph loop_complement(Mask X) const;  // G+X
  Graph del(Mask X) const;              // induced subgraph on V \ X

  int nullity() const { return static_cast<int>(adj_.nullity()); }
  int nullity_of(Mask X) const {
    return static_cast<int>(adj_.principal(X).nullity());
  }
  // nmax_G(v) = max of nu(G), nu(G \ v), nu(G + v).
  int nmax(size_t v) const;

  SetSystem delta_matroid() const;  // M_G

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }
  friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

 private:
  SquareMatrix adj_;
};

// Rebuild the graph from the cardinality <= 2 members of its
// delta-matroid: loops are the singletons; {u,v} is an edge iff its
// membership differs from (loop(u) and loop(v)).  The empty set must be a
// member.
Graph graph_from_small_sets(const SetSystem& M);

// Bipartite graph on (Z, V - Z) with an edge {u,v} iff Z delta {u,v} is a
// basis; its delta-matroid is M*Z.
Graph fundamental_graph(const Matroid& M, Mask Z);

}  // namespace dm

#pragma once
// Shared fixtures: the worked examples that the acceptance criteria quote
// and the seeded random generators behind the property sweeps.  Every
// generator takes the engine by reference so a test controls its own seed.

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dm/graph.hpp"
#include "dm/matrix.hpp"
#include "dm/matroid.hpp"
#include "dm/setsys.hpp"

namespace fx {

using namespace dm;

// Six-edge graph: a loop 1 at the top vertex, a triangle 2,3,4 and a
// parallel pair 5,6 hanging off it.  Its cycle matroid has the six
// spanning trees 235, 236, 245, 246, 345, 346.
inline Multigraph fig1_multigraph() {
  return Multigraph{{"p", "q", "r", "s"},
                    {{"1", "p", "p"},
                     {"2", "p", "r"},
                     {"3", "q", "p"},
                     {"4", "r", "q"},
                     {"5", "r", "s"},
                     {"6", "s", "r"}}};
}

inline Matroid fig1() { return graphic(fig1_multigraph()); }

// Fundamental graph of fig1 with respect to the basis {2, 4, 6}.
inline Graph fig1_fundamental() {
  return Graph::from_lists(GroundSet::numbered(6),
                           {{"2", "3"}, {"3", "4"}, {"5", "6"}}, {});
}

// Two triangles glued along edge 5; spanning trees are every 3-subset
// except the triangles {1,4,5} and {2,3,5}.
inline Multigraph diamond_multigraph() {
  return Multigraph{{"a", "b", "c", "d"},
                    {{"1", "a", "d"},
                     {"2", "d", "c"},
                     {"3", "c", "b"},
                     {"4", "b", "a"},
                     {"5", "d", "b"}}};
}

inline Matroid diamond() { return graphic(diamond_multigraph()); }

inline Multigraph k4_multigraph() {
  return Multigraph{{"a", "b", "c", "d"},
                    {{"1", "a", "b"},
                     {"2", "a", "c"},
                     {"3", "a", "d"},
                     {"4", "b", "c"},
                     {"5", "b", "d"},
                     {"6", "c", "d"}}};
}

inline Matroid k4() { return graphic(k4_multigraph()); }

// --- random generators -----------------------------------------------------

using Rng = std::mt19937_64;

inline Gf4 rand_gf2(Rng& rng) { return Gf4(static_cast<uint8_t>(rng() & 1)); }
inline Gf4 rand_gf4(Rng& rng) { return Gf4(static_cast<uint8_t>(rng() & 3)); }
inline Gf4 rand_gf4_nonzero(Rng& rng) {
  return Gf4(static_cast<uint8_t>(1 + rng() % 3));
}

inline SquareMatrix rand_square(Field f, int n, Rng& rng) {
  SquareMatrix A(f, GroundSet::numbered(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      A.set(i, j, f == Field::Gf2 ? rand_gf2(rng) : rand_gf4(rng));
  return A;
}

// A^T = inv(A) entrywise; the diagonal is forced into the subfield.
inline SquareMatrix rand_inv_symmetric(int n, Rng& rng) {
  SquareMatrix A(Field::Gf4, GroundSet::numbered(n));
  for (int i = 0; i < n; ++i) {
    A.set(i, i, rand_gf2(rng));
    for (int j = i + 1; j < n; ++j) {
      Gf4 v = rand_gf4(rng);
      A.set(i, j, v);
      A.set(j, i, inv(v));
    }
  }
  return A;
}

inline SquareMatrix rand_symmetric_gf2(int n, Rng& rng) {
  SquareMatrix A(Field::Gf2, GroundSet::numbered(n));
  for (int i = 0; i < n; ++i) {
    A.set(i, i, rand_gf2(rng));
    for (int j = i + 1; j < n; ++j) {
      Gf4 v = rand_gf2(rng);
      A.set(i, j, v);
      A.set(j, i, v);
    }
  }
  return A;
}

inline Graph rand_graph(int n, Rng& rng) {
  return Graph(rand_symmetric_gf2(n, rng));
}

inline RectMatrix rand_rect(Field f, int r, int n, Rng& rng) {
  std::vector<std::string> rows(r);
  for (int i = 0; i < r; ++i) rows[i] = "r" + std::to_string(i + 1);
  RectMatrix B(f, rows, GroundSet::numbered(n));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < n; ++j)
      B.set(i, j, f == Field::Gf2 ? rand_gf2(rng) : rand_gf4(rng));
  return B;
}

inline Mask rand_mask(int n, Rng& rng) {
  return n == 0 ? 0 : (rng() & ((Mask{1} << n) - 1));
}

// Nonempty random family; members biased toward the middle cardinalities.
inline SetSystem rand_set_system(int n, Rng& rng) {
  std::vector<Mask> fam;
  int count = 1 + static_cast<int>(rng() % (2 * n + 2));
  for (int i = 0; i < count; ++i) fam.push_back(rand_mask(n, rng));
  return SetSystem(GroundSet::numbered(n), std::move(fam));
}

// Twists of matrix delta-matroids: always a delta-matroid, frequently odd,
// over either field.
inline SetSystem rand_delta_matroid(int n, Rng& rng) {
  SquareMatrix A = (rng() & 1) ? rand_inv_symmetric(n, rng)
                               : rand_symmetric_gf2(n, rng).as_field(Field::Gf4);
  SetSystem M = matrix_delta_matroid(A);
  return M.twist(rand_mask(n, rng));
}

// Column matroid of a random matrix, with the representation kept.
inline Matroid rand_represented_matroid(Field f, int r, int n, Rng& rng) {
  RectMatrix B = rand_rect(f, r, n, rng);
  return column_matroid(B);
}

}  // namespace fx

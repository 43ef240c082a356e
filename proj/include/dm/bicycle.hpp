#pragma once
// Bicycle spaces and bicycle matroids, the principal tripartition in its
// three formulations, and the Eulerian/bipartite predicates (classical and
// the loop-complementation forms).
//
// The three tripartition routes must agree on binary matroids; the
// set-system route extends beyond them and diagnoses non-vf-safe input
// instead of returning a partition that exists by accident.

#include <string>

#include "dm/matrix.hpp"
#include "dm/matroid.hpp"
#include "dm/setsys.hpp"

namespace dm {

// Representation row-reduced onto the basis Z: the Z columns form an
// identity block and rows are relabelled by Z's labels in ground order.
RectMatrix standard_representation(const Matroid& M, Mask Z);

// R(B, alpha) for a standard-form B = (I S) with rows labelled by Z: the
// V x V matrix with blocks 0, S, alpha(S^T), 0 (negation is trivial in
// characteristic 2).  Over the two-element field alpha collapses to the
// identity.  M_{R(B, alpha)} = M(B) * Z.
SquareMatrix r_matrix(const RectMatrix& B, Aut alpha);

// BC_L(Y) = {v in L : the restriction of v to Y lies in inv(L-perp)}.
Subspace bicycle_space(const Subspace& L, Mask Y);

// BM_M(Y) = max(M+Y), validated as a matroid; failure certifies that M
// was not a vf-safe matroid.
Matroid bicycle_matroid(const SetSystem& M, Mask Y);

// d_{M*V ~Y}: the dimension of any bicycle space of M relative to Y.
int bicycle_dimension(const SetSystem& M, Mask Y);

struct Tripartition {
  Mask P = 0, Q = 0, R = 0;
};

// Coloop tests of v against max(M+V+v), max(M+V*v), max(M+V); the failing
// test names the class.  Each max system is validated as a matroid, and
// each element must land in exactly one class; any violation certifies
// non-vf-safe input and throws.
Tripartition tripartition(const SetSystem& M);

// Cycle-space scan: P collects v lying on a cycle X with X minus v a
// cocycle, Q the same with cycle and cocycle swapped, R the elements lying
// on a bicycle.  Needs the attached binary representation.
Tripartition tripartition_classical(const Matroid& M);

// Fundamental-graph route: with H = G+V, the three nullities nu(H+v),
// nu(H minus v), nu(H) are m, m, m+1 in some order; the largest one names
// the class P, Q, R respectively, with P and Q trading places for v in Z.
Tripartition tripartition_fundamental(const Matroid& M, Mask Z);

// Every circuit even.
bool is_bipartite(const Matroid& M);
// Disjoint circuits covering V; binary matroids shortcut to testing
// whether the all-ones vector lies in the cycle space.
bool is_eulerian(const Matroid& M);
// Evenness of M+V and of M~V.  On binary matroids these coincide with the
// classical predicates; in general they are each other's duals.
bool is_bipartite_gen(const SetSystem& M);
bool is_eulerian_gen(const SetSystem& M);

}  // namespace dm

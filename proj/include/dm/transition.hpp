#pragma once
// The weighted transition polynomial Q_{[a,b,c]} and its specializations:
// the Penrose polynomial (direct subset sum, deletion-pivot recursion, and
// the fundamental-graph route), the twist form p_1 on set systems and
// graphs, the Tutte polynomial, and the evaluation-identity report.
//
// Direct sums and recursions are independent computations and every pair
// that must agree is compared in the tests rather than shared.

#include <string>
#include <vector>

#include "dm/graph.hpp"
#include "dm/matroid.hpp"
#include "dm/poly.hpp"
#include "dm/setsys.hpp"

namespace dm {

struct TransitionWeights {
  Rational a, b, c;
};

// Sum of a^|A| b^|B| c^|C| y^{d_{M*B~C}} over ordered tripartitions
// (A,B,C) of V.  3^|V| terms; |V| <= 16.
Poly transition_direct(const SetSystem& M, const TransitionWeights& w);

// The c = 0 recursion: a Q(M\u) + b Q(M*u\u) on a nonsingular u, factor
// (a + by) on a loop, (b + ay) on a coloop.  Smallest element first,
// preferring a nonsingular one.  The root must be a delta-matroid; minors
// of delta-matroids keep the property, so the branches need no recheck.
Poly transition_recursive(const SetSystem& M, const Rational& a, const Rational& b);

// Q_{[1,-1,0]}(M): sum of (-1)^|X| y^{d_{M*X}} over subsets X.
Poly p1(const SetSystem& M);

// Same polynomial for M_G: sum of (-1)^|X| y^{nullity of G[X]}.
Poly p1_graph_direct(const Graph& G);
// Looped-vertex rule, unlooped-edge rule, isolated factor (1 - y).
Poly p1_graph_recursive(const Graph& G);

// P_M: sum of (-1)^|X| y^{d_{M*V~X}} over subsets X.  |V| <= 20.
Poly penrose_direct(const SetSystem& M);

// P_{M*u\u} - P_{M~u\u} on u nonsingular in M~V, factor (1 - y) on a
// coloop of M~V, (y - 1) on a loop of M~V.  Every node requires M~V to be
// a delta-matroid; a violation diagnoses non-vf-safe input.
Poly penrose_recursive(const SetSystem& M);

// (-1)^{nu(M)} p_1(G) for the graph G with M_G = M~V*Z.
Poly penrose_fundamental(const Matroid& M, Mask Z);

// Deletion-contraction, x on a coloop and y on a loop.
TuttePoly tutte(const Matroid& M);

// Q_{[a,b,0]}(M)(y) = a^nu b^rho t_M(1 + (a/b) y, 1 + (b/a) y), checked
// exactly at the sample points.  Zero weights are rejected.
bool verify_transition_tutte(const Matroid& M, const Rational& a,
                             const Rational& b,
                             const std::vector<Rational>& samples);

struct EvalCheck {
  enum class Status { Pass, Fail, Skipped };
  std::string name;
  Status status;
  std::string detail;  // both sides, or the reason the check was skipped
};

// Evaluation identities with their hypotheses tested first; inapplicable
// identities are reported as skipped, never silently dropped.
std::vector<EvalCheck> penrose_evaluations(const SetSystem& M);

}  // namespace dm

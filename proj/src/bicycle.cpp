#include "dm/bicycle.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

#include "dm/error.hpp"
#include "dm/graph.hpp"

namespace dm {

RectMatrix standard_representation(const Matroid& M, Mask Z) {
  if (!M.bases().is_member(Z))
    throw ValidationError("subset " + M.ground().subset_string(Z) +
                          " is not a basis");
  return M.rep().standard_form(Z);
}

SquareMatrix r_matrix(const RectMatrix& B, Aut alpha) {
  const GroundSet& V = B.cols();
  std::vector<size_t> zpos(B.rows());
  for (size_t i = 0; i < B.rows(); ++i) {
    const std::string& l = B.row_labels()[i];
    if (!V.has_label(l))
      throw ValidationError("row label " + l +
                            " is not a column label; not a standard form");
    zpos[i] = V.index(l);
  }
  for (size_t i = 0; i < B.rows(); ++i)
    for (size_t k = 0; k < B.rows(); ++k)
      if (B.at(i, zpos[k]) != (i == k ? gf_one : gf_zero))
        throw ValidationError(
            "row-label columns are not an identity block; not a standard form");
  if (B.field() == Field::Gf2) alpha = Aut::Id;
  Mask zmask = 0;
  for (size_t p : zpos) zmask |= Mask{1} << p;
  SquareMatrix A(B.field(), V);
  for (size_t i = 0; i < B.rows(); ++i)
    for (size_t j = 0; j < V.size(); ++j) {
      if (zmask >> j & 1) continue;
      Gf4 s = B.at(i, j);
      A.set(zpos[i], j, s);
      A.set(j, zpos[i], apply_aut(alpha, s));
    }
  return A;
}

Subspace bicycle_space(const Subspace& L, Mask Y) {
  const std::vector<Vec>& basis = L.basis();
  size_t k = basis.size();
  if (k == 0) return L;
  // v lies in inv(L-perp) on Y iff v is orthogonal on Y to inv(b_j) for
  // every basis vector b_j, since (inv(L-perp))-perp = inv(L).  Solving
  // for the coefficients of v = sum c_i b_i gives a k x k kernel problem.
  std::vector<std::string> row_labels(k);
  for (size_t j = 0; j < k; ++j) row_labels[j] = std::to_string(j + 1);
  RectMatrix T(L.field(), row_labels, GroundSet::numbered(static_cast<int>(k)));
  for (size_t j = 0; j < k; ++j)
    for (size_t i = 0; i < k; ++i) {
      Gf4 s = gf_zero;
      for_each_bit(Y, [&](size_t x) { s = s + basis[i][x] * inv(basis[j][x]); });
      T.set(j, i, s);
    }
  std::vector<Vec> gens;
  for (const Vec& c : T.null_space()) {
    Vec v(L.ground().size(), gf_zero);
    for (size_t i = 0; i < k; ++i)
      for (size_t x = 0; x < v.size(); ++x) v[x] = v[x] + c[i] * basis[i][x];
    gens.push_back(std::move(v));
  }
  return Subspace(L.field(), L.ground(), std::move(gens));
}

Matroid bicycle_matroid(const SetSystem& M, Mask Y) {
  SetSystem mx = M.loop_complement(Y).max_system();
  try {
    return Matroid::from_bases(mx);
  } catch (const ValidationError& e) {
    throw ValidationError(
        std::string("max(M+Y) fails matroid validation (non-vf-safe input): ") +
        e.what());
  }
}

int bicycle_dimension(const SetSystem& M, Mask Y) {
  return M.twist(M.ground().full()).dual_pivot(Y).d();
}

namespace {

Matroid max_matroid(const SetSystem& N, const std::string& what) {
  try {
    return Matroid::from_bases(N.max_system());
  } catch (const ValidationError& e) {
    throw ValidationError(what + " is not a matroid; input is not vf-safe: " +
                          e.what());
  }
}

}  // namespace

Tripartition tripartition(const SetSystem& M) {
  const GroundSet& g = M.ground();
  SetSystem N = M.loop_complement(g.full());
  Matroid C = max_matroid(N, "max(M+V)");
  Tripartition t;
  for (size_t v = 0; v < g.size(); ++v) {
    Mask vb = Mask{1} << v;
    Matroid A = max_matroid(N.loop_complement(vb), "max(M+V+" + g.label(v) + ")");
    Matroid B = max_matroid(N.twist(vb), "max(M+V*" + g.label(v) + ")");
    bool p = !A.bases().is_coloop(v);
    bool q = !B.bases().is_coloop(v);
    bool r = !C.bases().is_coloop(v);
    int cnt = static_cast<int>(p) + static_cast<int>(q) + static_cast<int>(r);
    if (cnt != 1)
      throw ValidationError("element " + g.label(v) + " falls in " +
                            std::to_string(cnt) +
                            " tripartition classes; input is not vf-safe");
    if (p)
      t.P |= vb;
    else if (q)
      t.Q |= vb;
    else
      t.R |= vb;
  }
  return t;
}

Tripartition tripartition_classical(const Matroid& M) {
  Subspace cs = cycle_space(M);
  Subspace ocs = cocycle_space(M);
  std::vector<Vec> cycles = cs.enumerate();
  std::vector<Vec> cocycles = ocs.enumerate();
  const GroundSet& g = M.ground();
  Tripartition t;
  for (size_t v = 0; v < g.size(); ++v) {
    bool p = false, q = false, r = false;
    for (const Vec& x : cycles) {
      if (x[v].is_zero()) continue;
      Vec y = x;
      y[v] = gf_zero;
      if (ocs.contains(y)) p = true;
      if (ocs.contains(x)) r = true;
    }
    for (const Vec& x : cocycles) {
      if (x[v].is_zero()) continue;
      Vec y = x;
      y[v] = gf_zero;
      if (cs.contains(y)) q = true;
    }
    int cnt = static_cast<int>(p) + static_cast<int>(q) + static_cast<int>(r);
    if (cnt != 1)
      throw ValidationError("element " + g.label(v) + " falls in " +
                            std::to_string(cnt) + " tripartition classes");
    if (p)
      t.P |= Mask{1} << v;
    else if (q)
      t.Q |= Mask{1} << v;
    else
      t.R |= Mask{1} << v;
  }
  return t;
}

Tripartition tripartition_fundamental(const Matroid& M, Mask Z) {
  Graph G = fundamental_graph(M, Z);
  Graph H = G.loop_complement(M.ground().full());
  const int nc = H.nullity();
  const GroundSet& g = M.ground();
  Tripartition t;
  for (size_t v = 0; v < g.size(); ++v) {
    Mask vb = Mask{1} << v;
    int na = H.loop_complement(vb).nullity();
    int nb = H.del(vb).nullity();
    int lo = std::min({na, nb, nc}), hi = std::max({na, nb, nc});
    if (hi != lo + 1 || na + nb + nc != 2 * lo + hi)
      throw ValidationError("nullity triple for element " + g.label(v) +
                            " is not of the form m, m, m+1");
    bool in_z = (Z >> v) & 1;
    if (nc == hi)
      t.R |= vb;
    else if ((na == hi) != in_z)
      t.P |= vb;
    else
      t.Q |= vb;
  }
  return t;
}

bool is_bipartite(const Matroid& M) {
  for (Mask c : M.circuits())
    if (popcount(c) % 2) return false;
  return true;
}

namespace {

bool cover_disjoint(const std::vector<Mask>& circuits, Mask remaining) {
  if (!remaining) return true;
  Mask eb = remaining & (~remaining + 1);
  for (Mask c : circuits)
    if ((c & eb) && !(c & ~remaining) && cover_disjoint(circuits, remaining & ~c))
      return true;
  return false;
}

}  // namespace

bool is_eulerian(const Matroid& M) {
  if (M.n() == 0) return true;
  if (M.has_rep() && M.rep().field() == Field::Gf2) {
    Vec ones(M.n(), gf_one);
    return cycle_space(M).contains(ones);
  }
  return cover_disjoint(M.circuits(), M.ground().full());
}

bool is_bipartite_gen(const SetSystem& M) {
  return M.loop_complement(M.ground().full()).is_even();
}

bool is_eulerian_gen(const SetSystem& M) {
  return M.dual_pivot(M.ground().full()).is_even();
}

}  // namespace dm

#pragma once
// Matroids described by their bases: validation (proper + equicardinal +
// symmetric exchange), duals, paper-convention minors, circuits, cycle
// spaces, and the standard constructions used as fixtures (uniform,
// graphic, the seven-point plane, column matroids of representations).
//
// A representation is an optional attachment; operations that need one
// fail loudly instead of inferring representability.

#include <optional>
#include <string>
#include <vector>

#include "dm/matrix.hpp"
#include "dm/setsys.hpp"

namespace dm {

class Subspace {
 public:
  // Generators are row-reduced; the stored basis is the reduced echelon
  // form, so equal subspaces compare equal.
  Subspace(Field f, GroundSet ground, std::vector<Vec> generators);

  Field field() const { return field_; }
  const GroundSet& ground() const { return ground_; }
  const std::vector<Vec>& basis() const { return basis_; }
  size_t dim() const { return basis_.size(); }

  bool contains(const Vec& v) const;

  Subspace orthogonal_complement() const;  // w.r.t. <u,v> = sum u(x) v(x)

  // Image under the entrywise nontrivial automorphism (a subspace again).
  Subspace apply_inv() const;

  // All q^dim vectors; capped to keep enumeration desk-scale.
  std::vector<Vec> enumerate() const;

  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.field_ == b.field_ && a.ground_ == b.ground_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Field field_;
  GroundSet ground_;
  std::vector<Vec> basis_;
};

// Zero coordinates outside Y.
Vec project(const Vec& v, Mask Y);

class Matroid {
 public:
  // Validates: proper, equicardinal, symmetric exchange.  The error names
  // a violating pair when the exchange axiom fails.
  static Matroid from_bases(SetSystem bases);
  static Matroid from_bases(GroundSet ground, std::vector<Mask> bases);

  const SetSystem& bases() const { return bases_; }
  const GroundSet& ground() const { return bases_.ground(); }
  size_t n() const { return ground().size(); }

  int rank() const { return bases_.d(); }
  int nullity() const { return static_cast<int>(n()) - rank(); }

  Matroid dual() const;  // twist by V; a representation dualizes too

  // Matroid-theoretical deletion/contraction: deletion of a coloop and
  // contraction of a loop fall back to the other set-system minor.
  Matroid delete_element(const std::string& label) const;
  Matroid contract_element(const std::string& label) const;

  bool is_independent(Mask S) const;  // contained in some basis
  std::vector<Mask> circuits() const;  // minimal dependent sets

  bool has_rep() const { return rep_.has_value(); }
  const RectMatrix& rep() const;
  Matroid with_rep(RectMatrix rep) const;
  Matroid without_rep() const;

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.bases_ == b.bases_;
  }
  friend bool operator!=(const Matroid& a, const Matroid& b) { return !(a == b); }

 private:
  explicit Matroid(SetSystem bases) : bases_(std::move(bases)) {}
  SetSystem bases_;
  std::optional<RectMatrix> rep_;
};

Matroid uniform(int r, int n);
Matroid fano();  // seven-point plane, binary representation attached

struct Multigraph {
  struct Edge {
    std::string label, u, v;  // u == v is a self-loop
  };
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
};

// Spanning-tree bases of a connected multigraph; graph loops become
// matroid loops.  Attaches the vertex-edge incidence representation.
Matroid graphic(const Multigraph& g);

// M_A = {X : A[X] nonsingular}; includes the empty set by convention.
SetSystem matrix_delta_matroid(const SquareMatrix& A);

// M(A): bases are the maximal independent column sets.
Matroid column_matroid(const RectMatrix& A);
Matroid column_matroid(const SquareMatrix& A);

// CS_M = ker of the attached binary representation; the cocycle space is
// its orthogonal complement (the representation's row space).
Subspace cycle_space(const Matroid& M);
Subspace cocycle_space(const Matroid& M);

// M(L): column matroid of a parity-check matrix of L.
Matroid matroid_of_subspace(const Subspace& L);

// For all circuits C1 of M1 and C2 of M2: |C1 and C2| != 1.
bool is_orthogonal(const Matroid& M1, const Matroid& M2);

}  // namespace dm

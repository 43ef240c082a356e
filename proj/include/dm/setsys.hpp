#pragma once
// Set systems M = (V, D) with the twist / loop complementation / dual pivot
// group action, extremal operators, and the delta-matroid and vf-safety
// predicates.
//
// The three operations generate a group acting independently per element;
// for a single u the six words reduce to {id, *u, +u, ~u, +u*u, *u+u}, an
// S3.  Every twist/loopc word is equal to one of the normal form +Z1*Z2+Z3
// with Z1 subset of Z2.  Operations are written on the right and associate
// to the left: M+X*Y means (M+X)*Y.

#include <cstdint>
#include <string>
#include <vector>

#include "dm/ground.hpp"

namespace dm {

class SetSystem {
 public:
  // Members are deduplicated and stored sorted by (cardinality, mask).
  // An empty family is the improper system.
  SetSystem(GroundSet ground, std::vector<Mask> members);

  const GroundSet& ground() const { return ground_; }
  const std::vector<Mask>& family() const { return family_; }
  size_t size() const { return family_.size(); }
  bool proper() const { return !family_.empty(); }
  bool is_member(Mask m) const;

  // d_M: smallest member cardinality.  Requires a proper system.
  int d() const;

  SetSystem twist(Mask X) const;            // M * X
  SetSystem loop_complement(Mask X) const;  // M + X
  SetSystem dual_pivot(Mask X) const;       // M ~ X  (the paper's *-bar)

  SetSystem restrict(Mask X) const;  // M[X]: members contained in X, ground X
  SetSystem del(Mask X) const;       // M \ X = M[V \ X]

  // Inclusion-minimal / inclusion-maximal members, same ground set.
  SetSystem min_system() const;
  SetSystem max_system() const;

  bool is_loop(size_t u) const;    // no member contains u
  bool is_coloop(size_t u) const;  // every member contains u
  bool is_singular(size_t u) const { return is_loop(u) || is_coloop(u); }
  bool is_even() const;
  bool is_equicardinal() const;

  // Symmetric exchange axiom, brute force.  Improper systems fail.
  bool is_delta_matroid() const;
  // First violation witness for error reporting: (X, Y, x) with no valid y.
  struct ExchangeViolation {
    Mask X, Y;
    size_t x;
  };
  bool find_exchange_violation(ExchangeViolation* out) const;

  // True iff every system in the orbit under twist and loop complementation
  // is a delta-matroid; checked via M+Z1~Z2 over disjoint Z1, Z2 (twisting
  // preserves the property, so these coset representatives cover the
  // orbit).  |V| <= 12.
  bool is_vf_safe() const;

  std::string family_string() const;

  friend bool operator==(const SetSystem& a, const SetSystem& b) {
    return a.ground_ == b.ground_ && a.family_ == b.family_;
  }
  friend bool operator!=(const SetSystem& a, const SetSystem& b) {
    return !(a == b);
  }

 private:
  GroundSet ground_;
  std::vector<Mask> family_;
};

// --- operation words -------------------------------------------------------

enum class OpKind { Twist, LoopC, DualPivot, Delete, Restrict };

struct Op {
  OpKind kind;
  std::vector<std::string> labels;
};

// Left-to-right application; Delete/Restrict shrink the ground set.
SetSystem apply_sequence(SetSystem M, const std::vector<Op>& ops);

// Per-element S3: elements indexed 0..5.
namespace s3 {
inline constexpr uint8_t id = 0;
inline constexpr uint8_t twist = 1;       // *u
inline constexpr uint8_t loopc = 2;       // +u
inline constexpr uint8_t dualpivot = 3;   // ~u = *u +u *u = +u *u +u
inline constexpr uint8_t loopc_twist = 4; // +u *u
inline constexpr uint8_t twist_loopc = 5; // *u +u

// g then h, as words applied left to right.
uint8_t compose(uint8_t g, uint8_t h);
}  // namespace s3

// Normal form of a twist/loopc/dualpivot word: M w = M +Z1 *Z2 +Z3 with
// Z1 subset of Z2.  Rejects words containing Delete/Restrict.
struct NormalForm {
  Mask z1, z2, z3;
};
NormalForm normal_form(const GroundSet& g, const std::vector<Op>& word);

// M +Z1 *Z2 +Z3.
SetSystem apply_normal_form(const SetSystem& M, const NormalForm& nf);

}  // namespace dm

#include "dm/setsys.hpp"

#include <algorithm>
#include <array>

namespace dm {
namespace {

void canonicalize(std::vector<Mask>& fam) {
  std::sort(fam.begin(), fam.end(), mask_less);
  fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
}

// Replace fam by its symmetric difference with toggles (members toggled in
// and out of the family).
void toggle_members(std::vector<Mask>& fam, std::vector<Mask>& toggles) {
  std::sort(toggles.begin(), toggles.end(), mask_less);
  std::vector<Mask> out;
  out.reserve(fam.size() + toggles.size());
  std::set_symmetric_difference(fam.begin(), fam.end(), toggles.begin(),
                                toggles.end(), std::back_inserter(out),
                                mask_less);
  fam = std::move(out);
}

}  // namespace

SetSystem::SetSystem(GroundSet ground, std::vector<Mask> members)
    : ground_(std::move(ground)), family_(std::move(members)) {
  Mask full = ground_.full();
  for (Mask m : family_) {
    if (m & ~full) throw ValidationError("member outside the ground set");
  }
  canonicalize(family_);
}

bool SetSystem::is_member(Mask m) const {
  return std::binary_search(family_.begin(), family_.end(), m, mask_less);
}

int SetSystem::d() const {
  if (!proper()) throw ValidationError("improper set system has no d value");
  return popcount(family_.front());
}

SetSystem SetSystem::twist(Mask X) const {
  if (X & ~ground_.full()) throw ValidationError("twist set outside the ground set");
  std::vector<Mask> fam(family_);
  for (Mask& m : fam) m ^= X;
  return SetSystem(ground_, std::move(fam));
}

SetSystem SetSystem::loop_complement(Mask X) const {
  if (X & ~ground_.full()) throw ValidationError("loop complementation set outside the ground set");
  std::vector<Mask> fam(family_);
  // Per element u: toggle Z+u for every member Z avoiding u.  Equivalent to
  // the parity-of-chain definition, one pass per element.
  for_each_bit(X, [&](size_t i) {
    Mask bit = Mask{1} << i;
    std::vector<Mask> toggles;
    for (Mask m : fam)
      if (!(m & bit)) toggles.push_back(m | bit);
    toggle_members(fam, toggles);
  });
  return SetSystem(ground_, std::move(fam));
}

SetSystem SetSystem::dual_pivot(Mask X) const {
  if (X & ~ground_.full()) throw ValidationError("dual pivot set outside the ground set");
  std::vector<Mask> fam(family_);
  // Per element u: toggle Z-u for every member Z containing u.
  for_each_bit(X, [&](size_t i) {
    Mask bit = Mask{1} << i;
    std::vector<Mask> toggles;
    for (Mask m : fam)
      if (m & bit) toggles.push_back(m & ~bit);
    toggle_members(fam, toggles);
  });
  return SetSystem(ground_, std::move(fam));
}

SetSystem SetSystem::restrict(Mask X) const {
  if (X & ~ground_.full()) throw ValidationError("restriction set outside the ground set");
  std::vector<Mask> fam;
  for (Mask m : family_)
    if (!(m & ~X)) fam.push_back(ground_.project(m, X));
  return SetSystem(ground_.restricted(X), std::move(fam));
}

SetSystem SetSystem::del(Mask X) const { return restrict(~X & ground_.full()); }

SetSystem SetSystem::min_system() const {
  if (!proper()) throw ValidationError("improper set system has no minimal members");
  std::vector<Mask> out;
  for (size_t i = 0; i < family_.size(); ++i) {
    bool minimal = true;
    // Sorted by cardinality: only earlier members can be proper subsets.
    for (size_t j = 0; j < i && minimal; ++j) {
      if ((family_[j] & family_[i]) == family_[j] && family_[j] != family_[i])
        minimal = false;
    }
    if (minimal) out.push_back(family_[i]);
  }
  return SetSystem(ground_, std::move(out));
}

SetSystem SetSystem::max_system() const {
  if (!proper()) throw ValidationError("improper set system has no maximal members");
  std::vector<Mask> out;
  for (size_t i = 0; i < family_.size(); ++i) {
    bool maximal = true;
    for (size_t j = i + 1; j < family_.size() && maximal; ++j) {
      if ((family_[i] & family_[j]) == family_[i] && family_[i] != family_[j])
        maximal = false;
    }
    if (maximal) out.push_back(family_[i]);
  }
  return SetSystem(ground_, std::move(out));
}

bool SetSystem::is_loop(size_t u) const {
  if (!proper()) throw ValidationError("improper set system");
  if (u >= ground_.size()) throw ValidationError("element index out of range");
  Mask bit = Mask{1} << u;
  for (Mask m : family_)
    if (m & bit) return false;
  return true;
}

bool SetSystem::is_coloop(size_t u) const {
  if (!proper()) throw ValidationError("improper set system");
  if (u >= ground_.size()) throw ValidationError("element index out of range");
  Mask bit = Mask{1} << u;
  for (Mask m : family_)
    if (!(m & bit)) return false;
  return true;
}

bool SetSystem::is_even() const {
  if (!proper()) throw ValidationError("improper set system");
  int parity = popcount(family_.front()) & 1;
  for (Mask m : family_)
    if ((popcount(m) & 1) != parity) return false;
  return true;
}

bool SetSystem::is_equicardinal() const {
  if (!proper()) throw ValidationError("improper set system");
  return popcount(family_.front()) == popcount(family_.back());
}

bool SetSystem::find_exchange_violation(ExchangeViolation* out) const {
  for (Mask X : family_) {
    for (Mask Y : family_) {
      Mask diff = X ^ Y;
      bool ok_all = true;
      size_t bad_x = 0;
      for_each_bit(diff, [&](size_t x) {
        if (!ok_all) return;
        Mask xb = Mask{1} << x;
        // y = x is allowed: the pair {x,y} collapses to {x}.
        bool found = is_member(X ^ xb);
        for_each_bit(diff, [&](size_t y) {
          if (found || y == x) return;
          if (is_member(X ^ xb ^ (Mask{1} << y))) found = true;
        });
        if (!found) {
          ok_all = false;
          bad_x = x;
        }
      });
      if (!ok_all) {
        if (out) *out = ExchangeViolation{X, Y, bad_x};
        return true;
      }
    }
  }
  return false;
}

bool SetSystem::is_delta_matroid() const {
  if (!proper()) return false;
  return !find_exchange_violation(nullptr);
}

bool SetSystem::is_vf_safe() const {
  if (ground_.size() > 12) {
    throw CapacityError("vf-safety scans 3^|V| systems; |V| <= 12 (got " +
                        std::to_string(ground_.size()) + ")");
  }
  Mask full = ground_.full();
  for (Mask z1 = 0;; z1 = (z1 - full) & full) {
    SetSystem base = loop_complement(z1);
    Mask comp = full & ~z1;
    for (Mask z2 = 0;; z2 = (z2 - comp) & comp) {
      if (!base.dual_pivot(z2).is_delta_matroid()) return false;
      if (z2 == comp) break;
    }
    if (z1 == full) break;
  }
  return true;
}

std::string SetSystem::family_string() const {
  std::string s;
  for (size_t i = 0; i < family_.size(); ++i) {
    if (i) s += ", ";
    s += ground_.subset_string(family_[i]);
  }
  return s;
}

SetSystem apply_sequence(SetSystem M, const std::vector<Op>& ops) {
  for (const Op& op : ops) {
    Mask X = M.ground().subset(op.labels);
    switch (op.kind) {
      case OpKind::Twist: M = M.twist(X); break;
      case OpKind::LoopC: M = M.loop_complement(X); break;
      case OpKind::DualPivot: M = M.dual_pivot(X); break;
      case OpKind::Delete: M = M.del(X); break;
      case OpKind::Restrict: M = M.restrict(X); break;
    }
  }
  return M;
}

namespace s3 {
namespace {

// Faithful action on three points; words act left to right.
constexpr std::array<std::array<uint8_t, 3>, 6> kPerm = {{
    {0, 1, 2},  // id
    {1, 0, 2},  // *u
    {0, 2, 1},  // +u
    {2, 1, 0},  // ~u
    {1, 2, 0},  // +u *u
    {2, 0, 1},  // *u +u
}};

uint8_t find_perm(const std::array<uint8_t, 3>& p) {
  for (uint8_t i = 0; i < 6; ++i)
    if (kPerm[i] == p) return i;
  return 0;  // unreachable
}

}  // namespace

uint8_t compose(uint8_t g, uint8_t h) {
  std::array<uint8_t, 3> p;
  for (uint8_t x = 0; x < 3; ++x) p[x] = kPerm[h][kPerm[g][x]];
  return find_perm(p);
}

}  // namespace s3

NormalForm normal_form(const GroundSet& g, const std::vector<Op>& word) {
  std::vector<uint8_t> acc(g.size(), s3::id);
  for (const Op& op : word) {
    uint8_t gen;
    switch (op.kind) {
      case OpKind::Twist: gen = s3::twist; break;
      case OpKind::LoopC: gen = s3::loopc; break;
      case OpKind::DualPivot: gen = s3::dualpivot; break;
      default:
        throw ValidationError("normal form applies to twist/loopc/dual-pivot words only");
    }
    Mask X = g.subset(op.labels);
    for_each_bit(X, [&](size_t i) { acc[i] = s3::compose(acc[i], gen); });
  }
  // Word tables per S3 element: the exponents of +Z1 *Z2 +Z3.
  static constexpr uint8_t z1_of[6] = {0, 0, 0, 1, 1, 0};
  static constexpr uint8_t z2_of[6] = {0, 1, 0, 1, 1, 1};
  static constexpr uint8_t z3_of[6] = {0, 0, 1, 1, 0, 1};
  NormalForm nf{0, 0, 0};
  for (size_t i = 0; i < acc.size(); ++i) {
    if (z1_of[acc[i]]) nf.z1 |= Mask{1} << i;
    if (z2_of[acc[i]]) nf.z2 |= Mask{1} << i;
    if (z3_of[acc[i]]) nf.z3 |= Mask{1} << i;
  }
  return nf;
}

SetSystem apply_normal_form(const SetSystem& M, const NormalForm& nf) {
  return M.loop_complement(nf.z1).twist(nf.z2).loop_complement(nf.z3);
}

}  // namespace dm

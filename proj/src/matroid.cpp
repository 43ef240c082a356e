#include "dm/matroid.hpp"

#include <algorithm>
#include <numeric>

namespace dm {
namespace {

std::vector<Vec> reduce_rows(std::vector<Vec> rows, size_t ncols) {
  // Reduced echelon form, dropping zero rows; canonical for the row space.
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < ncols && r < rows.size(); ++c) {
    size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Gf4 scale = rows[r][c].inverse();
    for (size_t j = 0; j < ncols; ++j) rows[r][j] = rows[r][j] * scale;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Gf4 f = rows[i][c];
      for (size_t j = 0; j < ncols; ++j) rows[i][j] += f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(pivots.size());
  return rows;
}

RectMatrix rows_to_rect(Field f, const GroundSet& ground, const std::vector<Vec>& rows,
                        const char* prefix) {
  std::vector<std::string> labels;
  labels.reserve(rows.size());
  for (size_t i = 0; i < rows.size(); ++i)
    labels.push_back(prefix + std::to_string(i + 1));
  RectMatrix out(f, std::move(labels), ground);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < ground.size(); ++j) out.set(i, j, rows[i][j]);
  return out;
}

struct UnionFind {
  std::vector<size_t> parent;
  explicit UnionFind(size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), size_t{0});
  }
  size_t find(size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // False if already joined (edge closes a cycle).
  bool join(size_t a, size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

Subspace::Subspace(Field f, GroundSet ground, std::vector<Vec> generators)
    : field_(f), ground_(std::move(ground)) {
  for (const Vec& v : generators) {
    if (v.size() != ground_.size())
      throw ValidationError("generator length does not match the ground set");
    for (Gf4 x : v)
      if (!x.in_field(field_))
        throw ValidationError("generator entry outside " + field_name(field_));
  }
  basis_ = reduce_rows(std::move(generators), ground_.size());
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ground_.size())
    throw ValidationError("vector length does not match the ground set");
  Vec w = v;
  for (const Vec& row : basis_) {
    size_t p = 0;
    while (p < w.size() && row[p].is_zero()) ++p;
    if (p == w.size()) continue;
    if (!w[p].is_zero()) {
      Gf4 f = w[p];
      for (size_t j = 0; j < w.size(); ++j) w[j] += f * row[j];
    }
  }
  return support(w) == 0;
}

Subspace Subspace::orthogonal_complement() const {
  size_t n = ground_.size();
  if (basis_.empty()) {
    // Whole space.
    std::vector<Vec> gens;
    for (size_t i = 0; i < n; ++i) {
      Vec e(n, gf_zero);
      e[i] = gf_one;
      gens.push_back(std::move(e));
    }
    return Subspace(field_, ground_, std::move(gens));
  }
  // Kernel of the basis matrix under <u,v> = sum u(x) v(x).
  std::vector<Vec> rows = basis_;
  std::vector<size_t> pivots;
  {
    size_t r = 0;
    for (size_t c = 0; c < n && r < rows.size(); ++c) {
      if (rows[r][c].is_zero()) continue;
      pivots.push_back(c);
      ++r;
    }
  }
  std::vector<bool> is_pivot(n, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<Vec> gens;
  for (size_t fcol = 0; fcol < n; ++fcol) {
    if (is_pivot[fcol]) continue;
    Vec v(n, gf_zero);
    v[fcol] = gf_one;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = basis_[r][fcol];
    gens.push_back(std::move(v));
  }
  return Subspace(field_, ground_, std::move(gens));
}

Subspace Subspace::apply_inv() const {
  std::vector<Vec> gens = basis_;
  for (Vec& v : gens)
    for (Gf4& x : v) x = inv(x);
  return Subspace(field_, ground_, std::move(gens));
}

std::vector<Vec> Subspace::enumerate() const {
  size_t q = field_ == Field::Gf2 ? 2 : 4;
  double count = 1;
  for (size_t i = 0; i < dim(); ++i) count *= static_cast<double>(q);
  if (count > (1 << 20))
    throw CapacityError("subspace enumeration exceeds 2^20 vectors");
  size_t n = ground_.size();
  std::vector<Vec> out;
  std::vector<uint8_t> coeff(dim(), 0);
  for (;;) {
    Vec v(n, gf_zero);
    for (size_t i = 0; i < dim(); ++i) {
      Gf4 c{coeff[i]};
      if (!c.is_zero())
        for (size_t j = 0; j < n; ++j) v[j] += c * basis_[i][j];
    }
    out.push_back(std::move(v));
    size_t i = 0;
    while (i < dim()) {
      coeff[i] = static_cast<uint8_t>(coeff[i] + 1);
      if (coeff[i] < q) break;
      coeff[i] = 0;
      ++i;
    }
    if (i == dim()) break;
  }
  return out;
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ground_ != other.ground_ || field_ != other.field_)
    throw ValidationError("subspace ambient mismatch");
  // L1 cap L2 = (L1^perp + L2^perp)^perp.
  Subspace p1 = orthogonal_complement();
  Subspace p2 = other.orthogonal_complement();
  std::vector<Vec> gens = p1.basis();
  gens.insert(gens.end(), p2.basis().begin(), p2.basis().end());
  return Subspace(field_, ground_, std::move(gens)).orthogonal_complement();
}

Vec project(const Vec& v, Mask Y) {
  Vec out = v;
  for (size_t i = 0; i < out.size(); ++i)
    if (!(Y & (Mask{1} << i))) out[i] = gf_zero;
  return out;
}

Matroid Matroid::from_bases(SetSystem bases) {
  if (!bases.proper())
    throw ValidationError("matroid needs at least one basis");
  if (!bases.is_equicardinal())
    throw ValidationError("bases of different cardinality: " +
                          bases.ground().subset_string(bases.family().front()) +
                          " and " +
                          bases.ground().subset_string(bases.family().back()));
  SetSystem::ExchangeViolation viol;
  if (bases.find_exchange_violation(&viol)) {
    throw ValidationError(
        "symmetric exchange fails for the pair " +
        bases.ground().subset_string(viol.X) + ", " +
        bases.ground().subset_string(viol.Y) + " at element " +
        bases.ground().label(viol.x));
  }
  return Matroid(std::move(bases));
}

Matroid Matroid::from_bases(GroundSet ground, std::vector<Mask> bases) {
  return from_bases(SetSystem(std::move(ground), std::move(bases)));
}

Matroid Matroid::dual() const {
  Matroid out(bases_.twist(ground().full()));
  if (rep_) {
    // Rows spanning the kernel of a representation represent the dual.
    std::vector<Vec> ker = rep_->null_space();
    out.rep_ = rows_to_rect(rep_->field(), rep_->cols(), ker, "d");
  }
  return out;
}

Matroid Matroid::delete_element(const std::string& label) const {
  size_t u = ground().index(label);
  Mask bit = Mask{1} << u;
  SetSystem minor =
      bases_.is_coloop(u) ? bases_.twist(bit).del(bit) : bases_.del(bit);
  return from_bases(std::move(minor));
}

Matroid Matroid::contract_element(const std::string& label) const {
  size_t u = ground().index(label);
  Mask bit = Mask{1} << u;
  SetSystem minor =
      bases_.is_loop(u) ? bases_.del(bit) : bases_.twist(bit).del(bit);
  return from_bases(std::move(minor));
}

bool Matroid::is_independent(Mask S) const {
  for (Mask b : bases_.family())
    if ((S & b) == S) return true;
  return false;
}

std::vector<Mask> Matroid::circuits() const {
  if (n() > 16) throw CapacityError("circuit enumeration needs |V| <= 16");
  std::vector<Mask> out;
  Mask full = ground().full();
  for (Mask S = 1; S <= full; ++S) {
    if (is_independent(S)) continue;
    bool minimal = true;
    for_each_bit(S, [&](size_t x) {
      if (minimal && !is_independent(S & ~(Mask{1} << x))) minimal = false;
    });
    if (minimal) out.push_back(S);
  }
  std::sort(out.begin(), out.end(), mask_less);
  return out;
}

const RectMatrix& Matroid::rep() const {
  if (!rep_) throw ValidationError("matroid carries no representation");
  return *rep_;
}

Matroid Matroid::with_rep(RectMatrix rep) const {
  if (rep.cols() != ground())
    throw ValidationError("representation columns do not match the ground set");
  Matroid out = *this;
  out.rep_ = std::move(rep);
  return out;
}

Matroid Matroid::without_rep() const {
  Matroid out = *this;
  out.rep_.reset();
  return out;
}

Matroid uniform(int r, int n) {
  if (r < 0 || n < 0 || r > n) throw ValidationError("uniform needs 0 <= r <= n");
  GroundSet g = GroundSet::numbered(n);
  std::vector<Mask> bases;
  for (Mask S = 0; S <= g.full(); ++S) {
    if (popcount(S) == r) bases.push_back(S);
    if (S == g.full()) break;
  }
  return Matroid::from_bases(std::move(g), std::move(bases));
}

Matroid fano() {
  GroundSet g = GroundSet::numbered(7);
  // Column j is the binary expansion of j; dependent triples are exactly
  // the seven lines {a,b,c} with a XOR b XOR c = 0.
  RectMatrix rep(Field::Gf2, {"r1", "r2", "r3"}, g);
  for (int j = 1; j <= 7; ++j) {
    rep.set(0, static_cast<size_t>(j - 1), Gf4(static_cast<uint8_t>((j >> 2) & 1)));
    rep.set(1, static_cast<size_t>(j - 1), Gf4(static_cast<uint8_t>((j >> 1) & 1)));
    rep.set(2, static_cast<size_t>(j - 1), Gf4(static_cast<uint8_t>(j & 1)));
  }
  std::vector<Mask> bases;
  for (Mask S = 0; S <= g.full(); ++S) {
    if (popcount(S) != 3) continue;
    int a[3], k = 0;
    for_each_bit(S, [&](size_t i) { a[k++] = static_cast<int>(i) + 1; });
    if ((a[0] ^ a[1] ^ a[2]) != 0) bases.push_back(S);
  }
  return Matroid::from_bases(g, std::move(bases)).with_rep(std::move(rep));
}

Matroid graphic(const Multigraph& mg) {
  size_t nv = mg.vertices.size();
  size_t ne = mg.edges.size();
  if (ne > 20) throw CapacityError("graphic enumeration needs at most 20 edges");
  std::vector<std::string> edge_labels;
  edge_labels.reserve(ne);
  for (const auto& e : mg.edges) edge_labels.push_back(e.label);
  GroundSet g{edge_labels};

  auto vindex = [&](const std::string& v) -> size_t {
    auto it = std::find(mg.vertices.begin(), mg.vertices.end(), v);
    if (it == mg.vertices.end())
      throw ValidationError("edge endpoint '" + v + "' is not a declared vertex");
    return static_cast<size_t>(it - mg.vertices.begin());
  };
  std::vector<std::pair<size_t, size_t>> ends;
  ends.reserve(ne);
  for (const auto& e : mg.edges) ends.emplace_back(vindex(e.u), vindex(e.v));

  {
    UnionFind uf(nv);
    size_t comps = nv;
    for (auto [a, b] : ends)
      if (uf.join(a, b)) --comps;
    if (nv > 0 && comps != 1)
      throw ValidationError("multigraph is not connected");
  }

  size_t tree_size = nv == 0 ? 0 : nv - 1;
  std::vector<Mask> bases;
  for (Mask S = 0; S <= g.full(); ++S) {
    if (static_cast<size_t>(popcount(S)) == tree_size) {
      UnionFind uf(nv);
      bool acyclic = true;
      for_each_bit(S, [&](size_t i) {
        if (!acyclic) return;
        auto [a, b] = ends[i];
        if (a == b || !uf.join(a, b)) acyclic = false;  // loop closes a cycle
      });
      if (acyclic) bases.push_back(S);
    }
    if (S == g.full()) break;
  }

  RectMatrix rep(Field::Gf2, mg.vertices, g);
  for (size_t j = 0; j < ne; ++j) {
    auto [a, b] = ends[j];
    if (a != b) {
      rep.set(a, j, gf_one);
      rep.set(b, j, gf_one);
    }
  }
  return Matroid::from_bases(g, std::move(bases)).with_rep(std::move(rep));
}

SetSystem matrix_delta_matroid(const SquareMatrix& A) {
  if (A.n() > 20) throw CapacityError("M_A enumeration needs |V| <= 20");
  std::vector<Mask> fam;
  for (Mask X = 0; X <= A.ground().full(); ++X) {
    if (A.principal_nonsingular(X)) fam.push_back(X);
    if (X == A.ground().full()) break;
  }
  return SetSystem(A.ground(), std::move(fam));
}

Matroid column_matroid(const RectMatrix& A) {
  if (A.ncols() > 20) throw CapacityError("column matroid enumeration needs |V| <= 20");
  size_t r = A.rank();
  std::vector<Mask> bases;
  for (Mask S = 0; S <= A.cols().full(); ++S) {
    if (static_cast<size_t>(popcount(S)) == r && A.columns_independent(S))
      bases.push_back(S);
    if (S == A.cols().full()) break;
  }
  return Matroid::from_bases(A.cols(), std::move(bases)).with_rep(A);
}

Matroid column_matroid(const SquareMatrix& A) {
  std::vector<std::string> row_labels;
  for (size_t i = 0; i < A.n(); ++i) row_labels.push_back(A.ground().label(i));
  RectMatrix r(A.field(), std::move(row_labels), A.ground());
  for (size_t i = 0; i < A.n(); ++i)
    for (size_t j = 0; j < A.n(); ++j) r.set(i, j, A.at(i, j));
  return column_matroid(r);
}

Subspace cycle_space(const Matroid& M) {
  const RectMatrix& rep = M.rep();
  if (rep.field() != Field::Gf2)
    throw ValidationError("cycle space needs a binary representation");
  return Subspace(Field::Gf2, M.ground(), rep.null_space());
}

Subspace cocycle_space(const Matroid& M) {
  const RectMatrix& rep = M.rep();
  if (rep.field() != Field::Gf2)
    throw ValidationError("cocycle space needs a binary representation");
  return Subspace(Field::Gf2, M.ground(), rep.row_space());
}

Matroid matroid_of_subspace(const Subspace& L) {
  Subspace perp = L.orthogonal_complement();
  RectMatrix H = rows_to_rect(L.field(), L.ground(), perp.basis(), "h");
  return column_matroid(H);
}

bool is_orthogonal(const Matroid& M1, const Matroid& M2) {
  if (M1.ground() != M2.ground())
    throw ValidationError("orthogonality needs a common ground set");
  std::vector<Mask> c1 = M1.circuits();
  std::vector<Mask> c2 = M2.circuits();
  for (Mask a : c1)
    for (Mask b : c2)
      if (popcount(a & b) == 1) return false;
  return true;
}

}  // namespace dm

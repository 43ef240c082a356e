#include "dm/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace dm {
namespace {

using Rows = std::vector<Vec>;

// Reduced row echelon form with first-nonzero pivoting in column order.
// Returns the pivot column of each pivot row, in order.
std::vector<size_t> rref(Rows& rows, size_t ncols) {
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
  return pivots;
}

std::vector<Vec> kernel_basis(Rows rows, size_t ncols) {
  std::vector<size_t> pivots = rref(rows, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(ncols, gf_zero);
    v[f] = gf_one;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = rows[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vec> row_space_basis(Rows rows, size_t ncols) {
  std::vector<size_t> pivots = rref(rows, ncols);
  rows.resize(pivots.size());
  return rows;
}

size_t rank_of(Rows rows, size_t ncols) { return rref(rows, ncols).size(); }

}  // namespace

Mask support(const Vec& v) {
  Mask m = 0;
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) m |= Mask{1} << i;
  return m;
}

SquareMatrix::SquareMatrix(Field f, GroundSet ground)
    : field_(f), ground_(std::move(ground)), a_(ground_.size() * ground_.size()) {}

void SquareMatrix::set(size_t i, size_t j, Gf4 v) {
  if (!v.in_field(field_)) {
    throw ValidationError("scalar " + to_token(v) + " not in " + field_name(field_));
  }
  a_[i * n() + j] = v;
}

SquareMatrix SquareMatrix::principal(Mask X) const {
  SquareMatrix out(field_, ground_.restricted(X));
  size_t r = 0;
  for_each_bit(X, [&](size_t i) {
    size_t c = 0;
    for_each_bit(X, [&](size_t j) {
      out.a_[r * out.n() + c] = at(i, j);
      ++c;
    });
    ++r;
  });
  return out;
}

Gf4 SquareMatrix::det() const {
  Rows rows(n(), Vec(n()));
  for (size_t i = 0; i < n(); ++i)
    for (size_t j = 0; j < n(); ++j) rows[i][j] = at(i, j);
  Gf4 d = gf_one;
  for (size_t c = 0; c < n(); ++c) {
    size_t p = c;
    while (p < n() && rows[p][c].is_zero()) ++p;
    if (p == n()) return gf_zero;
    std::swap(rows[c], rows[p]);  // characteristic 2: no sign to track
    d *= rows[c][c];
    Gf4 scale = rows[c][c].inverse();
    for (size_t i = c + 1; i < n(); ++i) {
      if (rows[i][c].is_zero()) continue;
      Gf4 f = rows[i][c] * scale;
      for (size_t j = c; j < n(); ++j) rows[i][j] += f * rows[c][j];
    }
  }
  return d;
}

size_t SquareMatrix::rank() const {
  Rows rows(n(), Vec(n()));
  for (size_t i = 0; i < n(); ++i)
    for (size_t j = 0; j < n(); ++j) rows[i][j] = at(i, j);
  return rank_of(std::move(rows), n());
}

std::vector<Vec> SquareMatrix::null_space() const {
  Rows rows(n(), Vec(n()));
  for (size_t i = 0; i < n(); ++i)
    for (size_t j = 0; j < n(); ++j) rows[i][j] = at(i, j);
  return kernel_basis(std::move(rows), n());
}

SquareMatrix SquareMatrix::ppt(Mask X) const {
  size_t k = static_cast<size_t>(popcount(X));
  // Invert P = A[X] by Gauss-Jordan on [P | I].
  Rows work(k, Vec(2 * k, gf_zero));
  {
    size_t r = 0;
    for_each_bit(X, [&](size_t i) {
      size_t c = 0;
      for_each_bit(X, [&](size_t j) {
        work[r][c] = at(i, j);
        ++c;
      });
      work[r][k + r] = gf_one;
      ++r;
    });
  }
  for (size_t c = 0; c < k; ++c) {
    size_t p = c;
    while (p < k && work[p][c].is_zero()) ++p;
    if (p == k) {
      throw PivotError("singular pivot A[X] with X = " + ground_.subset_string(X));
    }
    std::swap(work[c], work[p]);
    Gf4 scale = work[c][c].inverse();
    for (size_t j = 0; j < 2 * k; ++j) work[c][j] = work[c][j] * scale;
    for (size_t i = 0; i < k; ++i) {
      if (i == c || work[i][c].is_zero()) continue;
      Gf4 f = work[i][c];
      for (size_t j = 0; j < 2 * k; ++j) work[i][j] += f * work[c][j];
    }
  }

  std::vector<size_t> xs, rest;
  for (size_t i = 0; i < n(); ++i) {
    if (X & (Mask{1} << i)) xs.push_back(i);
    else rest.push_back(i);
  }
  auto pinv = [&](size_t r, size_t c) { return work[r][k + c]; };

  // Block formula: A*X = [ P^{-1}, -P^{-1}Q ; RP^{-1}, S - RP^{-1}Q ]
  // with Q = A[X, V\X], R = A[V\X, X], S = A[V\X]; signs vanish.
  SquareMatrix out(field_, ground_);
  for (size_t r = 0; r < k; ++r)
    for (size_t c = 0; c < k; ++c) out.a_[xs[r] * n() + xs[c]] = pinv(r, c);
  for (size_t r = 0; r < k; ++r) {
    for (size_t j : rest) {
      Gf4 s = gf_zero;
      for (size_t c = 0; c < k; ++c) s += pinv(r, c) * at(xs[c], j);
      out.a_[xs[r] * n() + j] = s;
    }
  }
  for (size_t i : rest) {
    for (size_t c = 0; c < k; ++c) {
      Gf4 s = gf_zero;
      for (size_t r = 0; r < k; ++r) s += at(i, xs[r]) * pinv(r, c);
      out.a_[i * n() + xs[c]] = s;
    }
  }
  for (size_t i : rest) {
    for (size_t j : rest) {
      Gf4 s = at(i, j);
      for (size_t r = 0; r < k; ++r) {
        // (R P^{-1} Q)[i,j]
        Gf4 rp = gf_zero;
        for (size_t c = 0; c < k; ++c) rp += at(i, xs[c]) * pinv(c, r);
        s += rp * at(xs[r], j);
      }
      out.a_[i * n() + j] = s;
    }
  }
  return out;
}

SquareMatrix SquareMatrix::diag_complement(Mask X) const {
  SquareMatrix out = *this;
  for_each_bit(X, [&](size_t i) { out.a_[i * n() + i] += gf_one; });
  return out;
}

bool SquareMatrix::is_alpha_symmetric(Aut a) const {
  if (a == Aut::Inv && field_ == Field::Gf2) {
    throw ValidationError("automorphism inv does not apply over gf2");
  }
  for (size_t i = 0; i < n(); ++i)
    for (size_t j = 0; j < n(); ++j)
      if (at(i, j) != ::dm::apply_aut(a, at(j, i))) return false;
  return true;
}

bool SquareMatrix::is_pu() const {
  if (field_ == Field::Gf2) return true;
  if (n() > 24) throw CapacityError("is_pu enumerates 2^|V| principal minors; |V| <= 24");
  for (Mask X = 0; X < (Mask{1} << n()); ++X) {
    Gf4 d = principal(X).det();
    if (d == gf_w || d == gf_W) return false;
  }
  return true;
}

SquareMatrix SquareMatrix::apply_aut(Aut a) const {
  SquareMatrix out = *this;
  if (a == Aut::Inv)
    for (auto& x : out.a_) x = inv(x);
  return out;
}

Vec SquareMatrix::mul(const Vec& v) const {
  Vec out(n(), gf_zero);
  for (size_t i = 0; i < n(); ++i)
    for (size_t j = 0; j < n(); ++j) out[i] += at(i, j) * v[j];
  return out;
}

SquareMatrix SquareMatrix::as_field(Field f) const {
  SquareMatrix out(f, ground_);
  for (size_t i = 0; i < n(); ++i)
    for (size_t j = 0; j < n(); ++j) out.set(i, j, at(i, j));
  return out;
}

std::string SquareMatrix::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < n(); ++i) {
    os << ground_.label(i) << ':';
    for (size_t j = 0; j < n(); ++j) os << ' ' << to_token(at(i, j));
    os << '\n';
  }
  return os.str();
}

RectMatrix::RectMatrix(Field f, std::vector<std::string> row_labels, GroundSet cols)
    : field_(f),
      row_labels_(std::move(row_labels)),
      cols_(std::move(cols)),
      a_(row_labels_.size() * cols_.size()) {}

void RectMatrix::set(size_t i, size_t j, Gf4 v) {
  if (!v.in_field(field_)) {
    throw ValidationError("scalar " + to_token(v) + " not in " + field_name(field_));
  }
  a_[i * ncols() + j] = v;
}

size_t RectMatrix::rank() const {
  Rows r(rows(), Vec(ncols()));
  for (size_t i = 0; i < rows(); ++i)
    for (size_t j = 0; j < ncols(); ++j) r[i][j] = at(i, j);
  return rank_of(std::move(r), ncols());
}

std::vector<Vec> RectMatrix::null_space() const {
  Rows r(rows(), Vec(ncols()));
  for (size_t i = 0; i < rows(); ++i)
    for (size_t j = 0; j < ncols(); ++j) r[i][j] = at(i, j);
  return kernel_basis(std::move(r), ncols());
}

std::vector<Vec> RectMatrix::row_space() const {
  Rows r(rows(), Vec(ncols()));
  for (size_t i = 0; i < rows(); ++i)
    for (size_t j = 0; j < ncols(); ++j) r[i][j] = at(i, j);
  return row_space_basis(std::move(r), ncols());
}

Vec RectMatrix::mul(const Vec& v) const {
  Vec out(rows(), gf_zero);
  for (size_t i = 0; i < rows(); ++i)
    for (size_t j = 0; j < ncols(); ++j) out[i] += at(i, j) * v[j];
  return out;
}

bool RectMatrix::columns_independent(Mask X) const {
  size_t k = static_cast<size_t>(popcount(X));
  Rows r(rows(), Vec(k));
  for (size_t i = 0; i < rows(); ++i) {
    size_t c = 0;
    for_each_bit(X, [&](size_t j) {
      r[i][c] = at(i, j);
      ++c;
    });
  }
  return rank_of(std::move(r), k) == k;
}

RectMatrix RectMatrix::standard_form(Mask Z) const {
  Rows r(rows(), Vec(ncols()));
  for (size_t i = 0; i < rows(); ++i)
    for (size_t j = 0; j < ncols(); ++j) r[i][j] = at(i, j);

  std::vector<size_t> zcols;
  for_each_bit(Z, [&](size_t j) { zcols.push_back(j); });

  std::vector<size_t> pivot_row;
  size_t next = 0;
  for (size_t c : zcols) {
    size_t p = next;
    while (p < r.size() && r[p][c].is_zero()) ++p;
    if (p == r.size()) {
      throw ValidationError("columns " + cols_.subset_string(Z) +
                            " are dependent; not a basis of the column matroid");
    }
    std::swap(r[next], r[p]);
    Gf4 scale = r[next][c].inverse();
    for (size_t j = 0; j < ncols(); ++j) r[next][j] = r[next][j] * scale;
    for (size_t i = 0; i < r.size(); ++i) {
      if (i == next || r[i][c].is_zero()) continue;
      Gf4 f = r[i][c];
      for (size_t j = 0; j < ncols(); ++j) r[i][j] += f * r[next][j];
    }
    pivot_row.push_back(next);
    ++next;
  }
  for (size_t i = next; i < r.size(); ++i) {
    if (support(r[i]) != 0) {
      throw ValidationError("columns " + cols_.subset_string(Z) +
                            " do not span the column space; not a basis");
    }
  }

  RectMatrix out(field_, cols_.labels_of(Z), cols_);
  for (size_t i = 0; i < next; ++i)
    for (size_t j = 0; j < ncols(); ++j) out.a_[i * ncols() + j] = r[i][j];
  return out;
}

RectMatrix RectMatrix::apply_aut(Aut a) const {
  RectMatrix out = *this;
  if (a == Aut::Inv)
    for (auto& x : out.a_) x = inv(x);
  return out;
}

RectMatrix RectMatrix::as_field(Field f) const {
  RectMatrix out(f, row_labels_, cols_);
  for (size_t i = 0; i < rows(); ++i)
    for (size_t j = 0; j < ncols(); ++j) out.set(i, j, at(i, j));
  return out;
}

std::string RectMatrix::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < rows(); ++i) {
    os << row_labels_[i] << ':';
    for (size_t j = 0; j < ncols(); ++j) os << ' ' << to_token(at(i, j));
    os << '\n';
  }
  return os.str();
}

}  // namespace dm

#include "isoprod/smith.hpp"

#include <algorithm>
#include <stdexcept>

namespace isoprod {

IntegerMatrix IntegerMatrix::identity(int n) {
  IntegerMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  IntegerMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Integer& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Integer& b = o.at(k, j);
        if (b != 0) r.at(i, j) += a * b;
      }
    }
  return r;
}

IntegerMatrix IntegerMatrix::dedup_rows() const {
  std::vector<int> keep;
  std::vector<std::vector<Integer>> seen;
  for (int i = 0; i < rows_; ++i) {
    std::vector<Integer> row(cols_);
    bool zero = true;
    for (int j = 0; j < cols_; ++j) {
      row[j] = at(i, j);
      if (row[j] != 0) zero = false;
    }
    if (zero) continue;
    if (std::find(seen.begin(), seen.end(), row) != seen.end()) continue;
    seen.push_back(std::move(row));
    keep.push_back(i);
  }
  IntegerMatrix r(static_cast<int>(keep.size()), cols_);
  for (size_t i = 0; i < keep.size(); ++i)
    for (int j = 0; j < cols_; ++j) r.at(static_cast<int>(i), j) = at(keep[i], j);
  return r;
}

namespace {

// Quotient with remainder of minimal absolute value.
Integer rounded_div(const Integer& n, const Integer& d) {
  Integer q = n / d, r = n - q * d;
  if (2 * abs(r) > abs(d)) q += (r < 0) == (d < 0) ? 1 : -1;
  return q;
}

// Quotient with remainder in [0, |d|).
Integer floor_div(const Integer& n, const Integer& d) {
  Integer q = n / d;
  if (q * d != n && ((n < 0) != (d < 0))) --q;
  return q;
}

// g = gcd(a, b) > 0 with s*a + t*b = g and small |s|, |t|.
void ext_gcd(const Integer& a, const Integer& b, Integer& g, Integer& s,
             Integer& t) {
  Integer r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    Integer q = rounded_div(r0, r1);
    Integer r2 = r0 - q * r1;
    r0 = r1; r1 = r2;
    Integer s2 = s0 - q * s1;
    s0 = s1; s1 = s2;
    Integer t2 = t0 - q * t1;
    t0 = t1; t1 = t2;
  }
  if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
  g = r0; s = s0; t = t0;
}

struct Worker {
  IntegerMatrix a, u, v;
  bool want_u;
  int rows, cols;

  Worker(const IntegerMatrix& m, bool wu)
      : a(m), want_u(wu), rows(m.rows()), cols(m.cols()) {
    if (want_u) u = IntegerMatrix::identity(rows);
    v = IntegerMatrix::identity(cols);
  }

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols; ++c) std::swap(a.at(i, c), a.at(j, c));
    if (want_u)
      for (int c = 0; c < rows; ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows; ++r) std::swap(a.at(r, i), a.at(r, j));
    for (int r = 0; r < cols; ++r) std::swap(v.at(r, i), v.at(r, j));
  }
  void row_sub(int i, const Integer& q, int t) {  // row_i -= q * row_t
    if (q == 0) return;
    for (int c = 0; c < cols; ++c)
      if (a.at(t, c) != 0) a.at(i, c) -= q * a.at(t, c);
    if (want_u)
      for (int c = 0; c < rows; ++c)
        if (u.at(t, c) != 0) u.at(i, c) -= q * u.at(t, c);
  }
  void col_sub(int j, const Integer& q, int t) {  // col_j -= q * col_t
    if (q == 0) return;
    for (int r = 0; r < rows; ++r)
      if (a.at(r, t) != 0) a.at(r, j) -= q * a.at(r, t);
    for (int r = 0; r < cols; ++r)
      if (v.at(r, t) != 0) v.at(r, j) -= q * v.at(r, t);
  }
  void negate_row(int i) {
    for (int c = 0; c < cols; ++c) a.at(i, c) = -a.at(i, c);
    if (want_u)
      for (int c = 0; c < rows; ++c) u.at(i, c) = -u.at(i, c);
  }
  void negate_col(int j) {
    for (int r = 0; r < rows; ++r) a.at(r, j) = -a.at(r, j);
    for (int r = 0; r < cols; ++r) v.at(r, j) = -v.at(r, j);
  }

  // Unimodular transform of rows r and i making a(i,c) = 0 and
  // a(r,c) = gcd(a(r,c), a(i,c)).
  void row_gcd_transform(int r, int i, int c) {
    const Integer p = a.at(r, c), x = a.at(i, c);
    if (x == 0) return;
    if (p == 0) {
      swap_rows(r, i);
      return;
    }
    if (x % p == 0) {
      row_sub(i, x / p, r);
      return;
    }
    Integer g, s, t;
    ext_gcd(p, x, g, s, t);
    const Integer pg = p / g, xg = x / g;
    for (int j = 0; j < cols; ++j) {
      Integer ar = a.at(r, j), ai = a.at(i, j);
      a.at(r, j) = s * ar + t * ai;
      a.at(i, j) = pg * ai - xg * ar;
    }
    if (want_u)
      for (int j = 0; j < rows; ++j) {
        Integer ur = u.at(r, j), ui = u.at(i, j);
        u.at(r, j) = s * ur + t * ui;
        u.at(i, j) = pg * ui - xg * ur;
      }
  }

  // Column counterpart: makes a(r,j) = 0 and a(r,c) = gcd.
  void col_gcd_transform(int c, int j, int r) {
    const Integer p = a.at(r, c), x = a.at(r, j);
    if (x == 0) return;
    if (p == 0) {
      swap_cols(c, j);
      return;
    }
    if (x % p == 0) {
      col_sub(j, x / p, c);
      return;
    }
    Integer g, s, t;
    ext_gcd(p, x, g, s, t);
    const Integer pg = p / g, xg = x / g;
    for (int i = 0; i < rows; ++i) {
      Integer ac = a.at(i, c), aj = a.at(i, j);
      a.at(i, c) = s * ac + t * aj;
      a.at(i, j) = pg * aj - xg * ac;
    }
    for (int i = 0; i < cols; ++i) {
      Integer vc = v.at(i, c), vj = v.at(i, j);
      v.at(i, c) = s * vc + t * vj;
      v.at(i, j) = pg * vj - xg * vc;
    }
  }

  // Column echelon form via row operations.  Entries above each pivot are
  // reduced modulo the pivot, which keeps intermediate entries small.
  void row_echelon(int t0) {
    int r = t0;
    for (int c = t0; c < cols && r < rows; ++c) {
      int best = -1;
      for (int i = r; i < rows; ++i)
        if (a.at(i, c) != 0 &&
            (best < 0 || abs(a.at(i, c)) < abs(a.at(best, c))))
          best = i;
      if (best < 0) continue;
      swap_rows(r, best);
      for (int i = r + 1; i < rows; ++i) row_gcd_transform(r, i, c);
      if (a.at(r, c) < 0) negate_row(r);
      for (int i = t0; i < r; ++i)
        row_sub(i, floor_div(a.at(i, c), a.at(r, c)), r);
      ++r;
    }
  }

  // Row echelon form via column operations; mirror of row_echelon.
  void col_echelon(int t0) {
    int c = t0;
    for (int r = t0; r < rows && c < cols; ++r) {
      int best = -1;
      for (int j = c; j < cols; ++j)
        if (a.at(r, j) != 0 &&
            (best < 0 || abs(a.at(r, j)) < abs(a.at(r, best))))
          best = j;
      if (best < 0) continue;
      swap_cols(c, best);
      for (int j = c + 1; j < cols; ++j) col_gcd_transform(c, j, r);
      if (a.at(r, c) < 0) negate_col(c);
      for (int j = t0; j < c; ++j)
        col_sub(j, floor_div(a.at(r, j), a.at(r, c)), c);
      ++c;
    }
  }

  // Every row and column of the trailing block holds at most one nonzero.
  bool isolated(int t0) const {
    for (int i = t0; i < rows; ++i) {
      int n = 0;
      for (int j = t0; j < cols; ++j)
        if (a.at(i, j) != 0 && ++n > 1) return false;
    }
    for (int j = t0; j < cols; ++j) {
      int n = 0;
      for (int i = t0; i < rows; ++i)
        if (a.at(i, j) != 0 && ++n > 1) return false;
    }
    return true;
  }

  // Move the isolated nonzero entries onto the leading diagonal.
  void gather(int t0) {
    int k = std::min(rows, cols);
    for (int t = t0; t < k; ++t) {
      if (a.at(t, t) != 0) continue;
      int fi = -1, fj = -1;
      for (int i = t; i < rows && fi < 0; ++i)
        for (int j = t; j < cols; ++j)
          if (a.at(i, j) != 0) {
            fi = i;
            fj = j;
            break;
          }
      if (fi < 0) return;
      swap_rows(t, fi);
      swap_cols(t, fj);
    }
  }

  void diagonalize(int from) {
    for (int sweep = 0; !isolated(from); ++sweep) {
      if (sweep > 1000)
        throw std::runtime_error("smith normal form did not converge");
      row_echelon(from);
      if (isolated(from)) break;
      col_echelon(from);
    }
    gather(from);
  }

  void run() {
    diagonalize(0);
    int k = std::min(rows, cols);
    for (int t = 0; t < k; ++t)
      if (a.at(t, t) < 0) negate_row(t);
    // enforce the divisibility chain
    for (;;) {
      bool dirty = false;
      for (int i = 0; i + 1 < k && !dirty; ++i) {
        if (a.at(i, i) == 0) break;
        for (int j = i + 1; j < k && !dirty; ++j) {
          if (a.at(j, j) % a.at(i, i) != 0) {
            col_sub(i, Integer(-1), j);  // col_i += col_j
            diagonalize(i);
            for (int t = i; t < k; ++t)
              if (a.at(t, t) < 0) negate_row(t);
            dirty = true;
          }
        }
      }
      if (!dirty) break;
    }
  }
};

}  // namespace

SmithResult smith_normal_form(const IntegerMatrix& m, bool want_u) {
  Worker w(m, want_u);
  w.run();
  SmithResult res;
  res.d = std::move(w.a);
  if (want_u) res.u = std::move(w.u);
  res.v = std::move(w.v);
  int k = std::min(m.rows(), m.cols());
  res.diagonal.reserve(k);
  for (int t = 0; t < k; ++t) res.diagonal.push_back(res.d.at(t, t));
  return res;
}

Integer determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  int n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntegerMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (int t = 0; t < n - 1; ++t) {
    if (a.at(t, t) == 0) {
      int p = -1;
      for (int i = t + 1; i < n; ++i)
        if (a.at(i, t) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(a.at(t, c), a.at(p, c));
      sign = -sign;
    }
    for (int i = t + 1; i < n; ++i)
      for (int j = t + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(t, t) - a.at(i, t) * a.at(t, j)) / prev;
    prev = a.at(t, t);
  }
  return sign * a.at(n - 1, n - 1);
}

std::vector<Integer> AbelianInvariants::canonical(const std::vector<Integer>& w) const {
  if (static_cast<int>(w.size()) != vt.cols())
    throw std::invalid_argument("exponent vector has wrong length");
  auto dot_row = [&](int r) {
    Integer s = 0;
    for (size_t j = 0; j < w.size(); ++j)
      if (w[j] != 0) s += vt.at(r, static_cast<int>(j)) * w[j];
    return s;
  };
  std::vector<Integer> out;
  out.reserve(free_cols.size() + torsion_cols.size());
  for (int r : free_cols) out.push_back(dot_row(r));
  for (size_t i = 0; i < torsion_cols.size(); ++i) {
    Integer y = dot_row(torsion_cols[i]) % torsion[i];
    if (y < 0) y += torsion[i];
    out.push_back(y);
  }
  return out;
}

bool AbelianInvariants::is_trivial_class(const std::vector<Integer>& w) const {
  for (const Integer& x : canonical(w))
    if (x != 0) return false;
  return true;
}

AbelianInvariants abelian_invariants(const IntegerMatrix& relations) {
  IntegerMatrix m = relations.dedup_rows();
  SmithResult s = smith_normal_form(m, /*want_u=*/false);
  int c = relations.cols();
  int k = std::min(m.rows(), c);

  AbelianInvariants inv;
  inv.vt = IntegerMatrix(c, c);
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j) inv.vt.at(i, j) = s.v.at(j, i);
  for (int t = 0; t < c; ++t) {
    Integer d = t < k ? s.diagonal[t] : Integer(0);
    if (d == 0) {
      inv.free_cols.push_back(t);
    } else if (d >= 2) {
      inv.torsion.push_back(d);
      inv.torsion_cols.push_back(t);
    }  // d == 1: coordinate dies
  }
  inv.rank = static_cast<int>(inv.free_cols.size());
  return inv;
}

}  // namespace isoprod

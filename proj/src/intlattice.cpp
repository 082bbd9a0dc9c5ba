#include "a1c/intlattice.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace a1c {

Vec make_vec(std::initializer_list<long long> entries) {
  Vec v;
  v.reserve(entries.size());
  for (long long e : entries) v.emplace_back(e);
  return v;
}

Integer dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error("dot: dimension mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error("add: dimension mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error("sub: dimension mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Integer& s, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

Vec negate(const Vec& a) { return scale(Integer(-1), a); }

bool is_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(),
                     [](const Integer& x) { return x == 0; });
}

Integer content(const Vec& a) {
  Integer g = 0;
  for (const Integer& x : a) g = boost::multiprecision::gcd(g, x);
  return boost::multiprecision::abs(g);
}

Vec primitive(const Vec& a) {
  Integer g = content(a);
  if (g <= 1) return a;
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] / g;
  return r;
}

std::string to_string(const Vec& a) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ',';
    os << a[i];
  }
  os << ')';
  return os.str();
}

void canonicalize(std::vector<Vec>& vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

//-----------------------------------------------------------------------------
// IntMatrix
//-----------------------------------------------------------------------------

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols,
                     std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw Error("IntMatrix: entry count does not match rows x cols");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error("IntMatrix: ragged initializer");
    for (long long e : r) entries_.emplace_back(e);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error("from_rows: dimension mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<Vec>& columns,
                                  std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows)
      throw Error("from_columns: dimension mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Vec IntMatrix::row(std::size_t i) const {
  return Vec(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec IntMatrix::column(std::size_t j) const {
  Vec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<Vec> IntMatrix::row_vectors() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

std::vector<Vec> IntMatrix::column_vectors() const {
  std::vector<Vec> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vec IntMatrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw Error("apply: dimension mismatch");
  Vec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
    r[i] = std::move(s);
  }
  return r;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error("matrix product: dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix r = a;
  for (std::size_t i = 0; i < r.rows(); ++i) r.negate_row(i);
  return r;
}

//-----------------------------------------------------------------------------
// Smith normal form
//-----------------------------------------------------------------------------

namespace {

struct SmithState {
  IntMatrix U, D, V;

  void row_swap(std::size_t a, std::size_t b) {
    D.swap_rows(a, b);
    U.swap_rows(a, b);
  }
  void col_swap(std::size_t a, std::size_t b) {
    D.swap_cols(a, b);
    V.swap_cols(a, b);
  }
  void row_add(std::size_t dst, std::size_t src, const Integer& f) {
    D.add_row(dst, src, f);
    U.add_row(dst, src, f);
  }
  void col_add(std::size_t dst, std::size_t src, const Integer& f) {
    D.add_col(dst, src, f);
    V.add_col(dst, src, f);
  }
};

// Smallest nonzero |entry| in the trailing submatrix, row-major ties.
bool find_pivot(const IntMatrix& d, std::size_t t, std::size_t& pi,
                std::size_t& pj) {
  bool found = false;
  Integer best;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Integer a = boost::multiprecision::abs(d(i, j));
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  return found;
}

// Smallest nonzero |entry| restricted to row t and column t, row-major ties.
void find_cross_pivot(const IntMatrix& d, std::size_t t, std::size_t& pi,
                      std::size_t& pj) {
  Integer best = boost::multiprecision::abs(d(t, t));
  pi = t;
  pj = t;
  for (std::size_t j = t + 1; j < d.cols(); ++j) {
    if (d(t, j) == 0) continue;
    Integer a = boost::multiprecision::abs(d(t, j));
    if (best == 0 || a < best) {
      best = a;
      pi = t;
      pj = j;
    }
  }
  for (std::size_t i = t + 1; i < d.rows(); ++i) {
    if (d(i, t) == 0) continue;
    Integer a = boost::multiprecision::abs(d(i, t));
    if (best == 0 || a < best) {
      best = a;
      pi = i;
      pj = t;
    }
  }
}

}  // namespace

SmithDecomposition snf(const IntMatrix& m) {
  SmithState s{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  const std::size_t r = m.rows(), c = m.cols();
  std::vector<Integer> factors;

  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    std::size_t pi = 0, pj = 0;
    if (!find_pivot(s.D, t, pi, pj)) break;
    s.row_swap(t, pi);
    s.col_swap(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (s.D(i, t) == 0) continue;
        s.row_add(i, t, -(s.D(i, t) / s.D(t, t)));
        if (s.D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (s.D(t, j) == 0) continue;
        s.col_add(j, t, -(s.D(t, j) / s.D(t, t)));
        if (s.D(t, j) != 0) clean = false;
      }
      if (!clean) {
        find_cross_pivot(s.D, t, pi, pj);
        s.row_swap(t, pi);
        s.col_swap(t, pj);
        continue;
      }
      // Divisibility: fold an offending row into row t and reduce again.
      bool divides = true;
      for (std::size_t i = t + 1; i < r && divides; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (s.D(i, j) % s.D(t, t) != 0) {
            s.row_add(t, i, Integer(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (s.D(t, t) < 0) {
      s.D.negate_row(t);
      s.U.negate_row(t);
    }
    factors.push_back(s.D(t, t));
  }
  return SmithDecomposition{std::move(s.U), std::move(s.D), std::move(s.V),
                            std::move(factors)};
}

CokernelStructure cokernel_structure(const IntMatrix& m) {
  SmithDecomposition sd = snf(m);
  CokernelStructure out;
  out.free_rank = m.rows() - sd.rank();
  for (const Integer& f : sd.invariant_factors)
    if (f > 1) out.torsion_factors.push_back(f);
  return out;
}

SpanReport span_report(const std::vector<Vec>& vectors,
                       std::size_t ambient_rank) {
  SpanReport rep;
  if (ambient_rank == 0) {
    rep.spans_rationally = rep.spans_lattice = true;
    rep.index = Integer(1);
    return rep;
  }
  if (vectors.empty()) return rep;
  SmithDecomposition sd = snf(IntMatrix::from_columns(vectors, ambient_rank));
  if (sd.rank() < ambient_rank) return rep;
  Integer idx = 1;
  for (const Integer& f : sd.invariant_factors) idx *= f;
  rep.spans_rationally = true;
  rep.spans_lattice = (idx == 1);
  rep.index = idx;
  return rep;
}

//-----------------------------------------------------------------------------
// Fraction-free elimination
//-----------------------------------------------------------------------------

namespace {

// Bareiss elimination in place; returns the rank and the signed final pivot
// for square full-rank input.
std::size_t bareiss(IntMatrix& a, Integer* det) {
  const std::size_t n = a.rows(), mcols = a.cols();
  Integer prev = 1;
  int sign = 1;
  std::size_t rk = 0;
  for (std::size_t col = 0; col < mcols && rk < n; ++col) {
    std::size_t p = rk;
    while (p < n && a(p, col) == 0) ++p;
    if (p == n) continue;
    if (p != rk) {
      a.swap_rows(p, rk);
      sign = -sign;
    }
    for (std::size_t i = rk + 1; i < n; ++i) {
      for (std::size_t j = col + 1; j < mcols; ++j)
        a(i, j) = (a(rk, col) * a(i, j) - a(i, col) * a(rk, j)) / prev;
      a(i, col) = 0;
    }
    prev = a(rk, col);
    ++rk;
  }
  if (det) *det = (rk == n && n == mcols) ? Integer(sign) * prev : Integer(0);
  return rk;
}

}  // namespace

std::size_t rank(const IntMatrix& m) {
  IntMatrix a = m;
  return bareiss(a, nullptr);
}

std::size_t rank(const std::vector<Vec>& vectors, std::size_t ambient_rank) {
  if (vectors.empty() || ambient_rank == 0) return 0;
  return rank(IntMatrix::from_rows(vectors, ambient_rank));
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant: matrix not square");
  if (m.rows() == 0) return 1;
  IntMatrix a = m;
  Integer det;
  bareiss(a, &det);
  return det;
}

IntMatrix adjugate(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw Error("adjugate: matrix not square");
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t a = 0, ra = 0; a < n; ++a) {
        if (a == i) continue;
        for (std::size_t b = 0, cb = 0; b < n; ++b) {
          if (b == j) continue;
          minor(ra, cb++) = m(a, b);
        }
        ++ra;
      }
      Integer cof = determinant(minor);
      if ((i + j) % 2) cof = -cof;
      adj(j, i) = cof;
    }
  return adj;
}

bool is_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  Integer d = determinant(m);
  return d == 1 || d == -1;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  Integer d = determinant(m);
  if (d != 1 && d != -1) throw Error("unimodular_inverse: matrix not unimodular");
  IntMatrix adj = adjugate(m);
  if (d == -1) adj = -adj;
  return adj;
}

std::vector<Vec> kernel_basis(const IntMatrix& m) {
  SmithDecomposition sd = snf(m);
  std::vector<Vec> out;
  for (std::size_t j = sd.rank(); j < m.cols(); ++j) out.push_back(sd.V.column(j));
  return out;
}

std::vector<Vec> left_kernel_basis(const IntMatrix& m) {
  SmithDecomposition sd = snf(m);
  std::vector<Vec> out;
  for (std::size_t i = sd.rank(); i < m.rows(); ++i) out.push_back(sd.U.row(i));
  return out;
}

IntMatrix hermite_rows(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t n = a.rows();
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < n; ++col) {
    bool have_pivot = false;
    for (;;) {
      std::size_t best = n;
      for (std::size_t i = r; i < n; ++i) {
        if (a(i, col) == 0) continue;
        if (best == n || boost::multiprecision::abs(a(i, col)) <
                             boost::multiprecision::abs(a(best, col)))
          best = i;
      }
      if (best == n) break;
      have_pivot = true;
      a.swap_rows(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < n; ++i) {
        if (a(i, col) == 0) continue;
        a.add_row(i, r, -(a(i, col) / a(r, col)));
        if (a(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (!have_pivot) continue;
    if (a(r, col) < 0) a.negate_row(r);
    for (std::size_t i = 0; i < r; ++i)
      a.add_row(i, r, -floor_div(a(i, col), a(r, col)));
    ++r;
  }
  std::vector<Integer> kept(a.entries().begin(),
                            a.entries().begin() +
                                static_cast<std::ptrdiff_t>(r * a.cols()));
  return IntMatrix(r, a.cols(), std::move(kept));
}

}  // namespace a1c

#ifndef WIRTINGER_INTLINALG_HPP
#define WIRTINGER_INTLINALG_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wirtinger {

using BigInt = boost::multiprecision::cpp_int;
using IntVector = std::vector<BigInt>;

/// Sparse row: (column, value) pairs sorted by column, values nonzero.
using SparseRow = std::vector<std::pair<std::size_t, BigInt>>;

namespace detail {

/// dst += factor * src, both sorted sparse rows.
inline void axpy(SparseRow& dst, const BigInt& factor, const SparseRow& src) {
  if (factor == 0 || src.empty()) return;
  SparseRow out;
  out.reserve(dst.size() + src.size());
  auto a = dst.begin();
  auto b = src.begin();
  while (a != dst.end() || b != src.end()) {
    if (b == src.end() || (a != dst.end() && a->first < b->first)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == dst.end() || b->first < a->first) {
      out.emplace_back(b->first, factor * b->second);
      ++b;
    } else {
      BigInt v = a->second + factor * b->second;
      if (v != 0) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  dst = std::move(out);
}

inline const BigInt* find_entry(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

inline void scale(SparseRow& row, const BigInt& s) {
  for (auto& e : row) e.second *= s;
}

/// a*x + b*y written into x, c*x + d*y written into y (old values on the right).
inline void combine2(SparseRow& x, SparseRow& y, const BigInt& a, const BigInt& b,
                     const BigInt& c, const BigInt& d) {
  SparseRow nx;
  SparseRow ny;
  if (a != 0) { nx = x; scale(nx, a); }
  axpy(nx, b, y);
  if (c != 0) { ny = x; scale(ny, c); }
  axpy(ny, d, y);
  x = std::move(nx);
  y = std::move(ny);
}

inline BigInt abs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

}  // namespace detail

/// Integer matrix with sparse row storage and arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows) {}

  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    cols_ = rows.size() ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
      SparseRow row;
      std::size_t j = 0;
      for (long long v : r) {
        if (v != 0) row.emplace_back(j, BigInt(v));
        ++j;
      }
      data_.push_back(std::move(row));
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(i, BigInt(1));
    return m;
  }

  static IntMatrix from_rows(std::size_t cols, std::vector<SparseRow> rows) {
    IntMatrix m;
    m.cols_ = cols;
    m.data_ = std::move(rows);
    for (const auto& r : m.data_)
      for (const auto& e : r)
        if (e.first >= cols) throw std::out_of_range("IntMatrix: column out of range");
    return m;
  }

  template <class Int>
  static IntMatrix from_dense(const std::vector<std::vector<Int>>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("IntMatrix: ragged rows");
      for (std::size_t j = 0; j < cols; ++j)
        if (rows[i][j] != 0) m.data_[i].emplace_back(j, BigInt(rows[i][j]));
    }
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return data_.size(); }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] const SparseRow& row(std::size_t i) const { return data_.at(i); }
  [[nodiscard]] std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
  }

  [[nodiscard]] BigInt at(std::size_t i, std::size_t j) const {
    if (i >= rows() || j >= cols_) throw std::out_of_range("IntMatrix::at");
    const BigInt* v = detail::find_entry(data_[i], j);
    return v ? *v : BigInt(0);
  }

  void set(std::size_t i, std::size_t j, const BigInt& v) {
    if (i >= rows() || j >= cols_) throw std::out_of_range("IntMatrix::set");
    auto& r = data_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j,
                               [](const auto& e, std::size_t c) { return e.first < c; });
    if (it != r.end() && it->first == j) {
      if (v == 0)
        r.erase(it);
      else
        it->second = v;
    } else if (v != 0) {
      r.insert(it, {j, v});
    }
  }

  void add(std::size_t i, std::size_t j, const BigInt& v) { set(i, j, at(i, j) + v); }

  [[nodiscard]] IntMatrix transpose() const {
    std::vector<SparseRow> t(cols_);
    for (std::size_t i = 0; i < rows(); ++i)
      for (const auto& [j, v] : data_[i]) t[j].emplace_back(i, v);
    return from_rows(rows(), std::move(t));
  }

  [[nodiscard]] IntVector multiply(const IntVector& x) const {
    if (x.size() != cols_) throw std::invalid_argument("IntMatrix::multiply: dimension mismatch");
    IntVector y(rows());
    for (std::size_t i = 0; i < rows(); ++i)
      for (const auto& [j, v] : data_[i]) y[i] += v * x[j];
    return y;
  }

  /// x^T * A
  [[nodiscard]] IntVector left_multiply(const IntVector& x) const {
    if (x.size() != rows()) throw std::invalid_argument("IntMatrix::left_multiply: dimension mismatch");
    IntVector y(cols_);
    for (std::size_t i = 0; i < rows(); ++i)
      if (x[i] != 0)
        for (const auto& [j, v] : data_[i]) y[j] += x[i] * v;
    return y;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("IntMatrix product: dimension mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (const auto& [k, v] : a.data_[i]) detail::axpy(c.data_[i], v, b.data_[k]);
    return c;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  [[nodiscard]] bool is_diagonal() const {
    for (std::size_t i = 0; i < rows(); ++i)
      for (const auto& e : data_[i])
        if (e.first != i) return false;
    return true;
  }

 private:
  std::size_t cols_ = 0;
  std::vector<SparseRow> data_;
};

struct SnfOptions {
  bool compute_u = true;
  bool compute_v = true;
};

/// U * A * V = D with U, V unimodular and D = diag(d_1, ..., d_r, 0, ...),
/// d_i > 0 and d_i | d_{i+1}. U or V is left empty (0x0) when not requested.
struct SNFResult {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;
  std::vector<BigInt> invariant_factors;  // d_1..d_r, all positive

  [[nodiscard]] std::size_t rank() const { return invariant_factors.size(); }

  friend bool operator==(const SNFResult&, const SNFResult&) = default;
};

/// Smith normal form by sparse elimination. The pivot is always the entry of
/// least absolute value, ties broken by (row, col); divisibility of the
/// diagonal is repaired at the end with 2x2 gcd/lcm steps.
inline SNFResult smith_normal_form(const IntMatrix& A, SnfOptions opts = {}) {
  using detail::abs;
  const std::size_t m = A.rows();
  const std::size_t n = A.cols();
  std::vector<SparseRow> rows(m);
  for (std::size_t i = 0; i < m; ++i) rows[i] = A.row(i);

  std::vector<SparseRow> u_rows;   // rows of U
  std::vector<SparseRow> vt_rows;  // columns of V
  if (opts.compute_u) u_rows = [&] {
    std::vector<SparseRow> r(m);
    for (std::size_t i = 0; i < m; ++i) r[i].emplace_back(i, BigInt(1));
    return r;
  }();
  if (opts.compute_v) vt_rows = [&] {
    std::vector<SparseRow> r(n);
    for (std::size_t j = 0; j < n; ++j) r[j].emplace_back(j, BigInt(1));
    return r;
  }();

  std::vector<char> row_active(m, 1);
  struct Pivot {
    std::size_t row;
    std::size_t col;
    BigInt value;
  };
  std::vector<Pivot> pivots;

  auto entry = [&](std::size_t i, std::size_t j) -> const BigInt* {
    return detail::find_entry(rows[i], j);
  };
  auto row_op = [&](std::size_t dst, const BigInt& factor, std::size_t src) {
    detail::axpy(rows[dst], factor, rows[src]);
    if (opts.compute_u) detail::axpy(u_rows[dst], factor, u_rows[src]);
  };

  while (true) {
    // global least |a|, ties by (row, col)
    std::optional<std::pair<std::size_t, std::size_t>> best;
    BigInt best_abs;
    for (std::size_t i = 0; i < m && !(best && best_abs == 1); ++i) {
      if (!row_active[i]) continue;
      for (const auto& [j, v] : rows[i]) {
        BigInt av = abs(v);
        if (!best || av < best_abs) {
          best = {i, j};
          best_abs = std::move(av);
          if (best_abs == 1) break;
        }
      }
    }
    if (!best) break;
    auto [r, c] = *best;

    while (true) {
      const BigInt p = *entry(r, c);
      // clear column c with row operations
      bool column_residue = false;
      for (std::size_t i = 0; i < m; ++i) {
        if (i == r || !row_active[i]) continue;
        const BigInt* e = entry(i, c);
        if (!e) continue;
        const BigInt q = *e / p;
        if (q != 0) row_op(i, BigInt(-q), r);
        if (entry(i, c)) column_residue = true;
      }
      if (column_residue) {
        std::optional<std::size_t> nr;
        BigInt nabs;
        for (std::size_t i = 0; i < m; ++i) {
          if (!row_active[i]) continue;
          const BigInt* e = entry(i, c);
          if (!e) continue;
          BigInt av = abs(*e);
          if (!nr || av < nabs) {
            nr = i;
            nabs = std::move(av);
          }
        }
        r = *nr;
        continue;
      }
      // column c is now zero outside row r; clear row r with column operations
      bool row_residue = false;
      SparseRow kept;
      for (auto& [j, v] : rows[r]) {
        if (j == c) {
          kept.emplace_back(j, v);
          continue;
        }
        const BigInt q = v / p;
        BigInt rem = v - q * p;
        if (q != 0 && opts.compute_v) detail::axpy(vt_rows[j], BigInt(-q), vt_rows[c]);
        if (rem != 0) {
          row_residue = true;
          kept.emplace_back(j, std::move(rem));
        }
      }
      rows[r] = std::move(kept);
      if (row_residue) {
        std::optional<std::size_t> nc;
        BigInt nabs;
        for (const auto& [j, v] : rows[r]) {
          BigInt av = abs(v);
          if (!nc || av < nabs) {
            nc = j;
            nabs = std::move(av);
          }
        }
        c = *nc;
        continue;
      }
      break;
    }
    pivots.push_back({r, c, *entry(r, c)});
    row_active[r] = 0;
    rows[r].clear();
  }

  // gather pivot rows/cols first, in pivot order
  const std::size_t rank = pivots.size();
  std::vector<BigInt> diag(rank);
  std::vector<SparseRow> U2;
  std::vector<SparseRow> VT2;
  {
    std::vector<char> row_used(m, 0);
    std::vector<char> col_used(n, 0);
    for (std::size_t k = 0; k < rank; ++k) {
      diag[k] = pivots[k].value;
      row_used[pivots[k].row] = 1;
      col_used[pivots[k].col] = 1;
      if (opts.compute_u) U2.push_back(std::move(u_rows[pivots[k].row]));
      if (opts.compute_v) VT2.push_back(std::move(vt_rows[pivots[k].col]));
    }
    if (opts.compute_u)
      for (std::size_t i = 0; i < m; ++i)
        if (!row_used[i]) U2.push_back(std::move(u_rows[i]));
    if (opts.compute_v)
      for (std::size_t j = 0; j < n; ++j)
        if (!col_used[j]) VT2.push_back(std::move(vt_rows[j]));
  }
  for (std::size_t k = 0; k < rank; ++k) {
    if (diag[k] < 0) {
      diag[k] = -diag[k];
      if (opts.compute_u) detail::scale(U2[k], BigInt(-1));
    }
  }
  // divisibility chain
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = i + 1; j < rank; ++j) {
      const BigInt& a = diag[i];
      const BigInt& b = diag[j];
      if (b % a == 0) continue;
      // g = s*a + t*b
      BigInt old_r = a, rr = b, old_s = 1, s = 0, old_t = 0, t = 1;
      while (rr != 0) {
        const BigInt q = old_r / rr;
        BigInt tmp = old_r - q * rr;
        old_r = rr;
        rr = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
      }
      const BigInt g = old_r;  // positive since a, b > 0
      const BigInt aa = a / g;
      const BigInt bb = b / g;
      // U2 = [[s, t], [-b/g, a/g]],  V2 = [[1, -t b/g], [1, s a/g]]
      if (opts.compute_u) detail::combine2(U2[i], U2[j], old_s, old_t, BigInt(-bb), aa);
      if (opts.compute_v) {
        // new col_i = col_i + col_j ; new col_j = -t*bb col_i + s*aa col_j
        detail::combine2(VT2[i], VT2[j], BigInt(1), BigInt(1), BigInt(-old_t * bb),
                         BigInt(old_s * aa));
      }
      const BigInt l = a * bb;
      diag[i] = g;
      diag[j] = l;
    }
  }

  SNFResult res;
  res.D = IntMatrix(m, n);
  for (std::size_t k = 0; k < rank; ++k) res.D.set(k, k, diag[k]);
  if (opts.compute_u) res.U = IntMatrix::from_rows(m, std::move(U2));
  if (opts.compute_v) res.V = IntMatrix::from_rows(n, std::move(VT2)).transpose();
  res.invariant_factors = std::move(diag);
  return res;
}

inline std::size_t rank(const IntMatrix& A) {
  return smith_normal_form(A, {false, false}).rank();
}

/// Some x with A x = b over the integers, or nothing.
inline std::optional<IntVector> solve_integer_system(const IntMatrix& A, const IntVector& b) {
  if (b.size() != A.rows())
    throw std::invalid_argument("solve_integer_system: dimension mismatch");
  const auto snf = smith_normal_form(A);
  const IntVector c = snf.U.multiply(b);
  IntVector y(A.cols());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < snf.rank()) {
      if (c[i] % snf.invariant_factors[i] != 0) return std::nullopt;
      y[i] = c[i] / snf.invariant_factors[i];
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return snf.V.multiply(y);
}

namespace detail {
inline void normalize_sign(IntVector& v) {
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    return;
  }
}
}  // namespace detail

/// Basis of {x : x A = 0}, from the trailing rows of U.
inline std::vector<IntVector> left_kernel_basis(const IntMatrix& A) {
  const auto snf = smith_normal_form(A, {true, false});
  std::vector<IntVector> basis;
  for (std::size_t i = snf.rank(); i < A.rows(); ++i) {
    IntVector v(A.rows());
    for (const auto& [j, x] : snf.U.row(i)) v[j] = x;
    detail::normalize_sign(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Basis of {x : A x = 0}, from the trailing columns of V.
inline std::vector<IntVector> right_kernel_basis(const IntMatrix& A) {
  const auto snf = smith_normal_form(A, {false, true});
  const IntMatrix vt = snf.V.transpose();
  std::vector<IntVector> basis;
  for (std::size_t j = snf.rank(); j < A.cols(); ++j) {
    IntVector v(A.cols());
    for (const auto& [i, x] : vt.row(j)) v[i] = x;
    detail::normalize_sign(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace wirtinger

#endif  // WIRTINGER_INTLINALG_HPP

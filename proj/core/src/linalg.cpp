#include "kdef/linalg.hpp"

#include <optional>
#include <random>
#include <stdexcept>

namespace kdef {

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vector Matrix::operator*(const Vector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("dimension mismatch in matrix-vector product");
  Vector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero() && !x[j].is_zero()) y[i] += (*this)(i, j) * x[j];
  return y;
}

Scalar dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch in dot product");
  Scalar s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

bool is_zero_vector(const Vector& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

namespace {

constexpr std::uint64_t kPrime = (1ull << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kPrime);
}

std::uint64_t invmod(std::uint64_t a) {
  std::uint64_t r = 1, e = kPrime - 2;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

bool any_algebraic(const Matrix& a, const Vector& b) {
  auto alg = [](const Scalar& s) { return s.context() && s.context()->algebraic(); };
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (alg(b[i])) return true;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (alg(a(i, j))) return true;
  }
  return false;
}

// Rows of [A | b] that are independent modulo the prime at a random point.
std::optional<std::vector<std::size_t>> select_rows(const Matrix& a, const Vector& b,
                                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> point(kMaxGenerators);
  for (auto& v : point) v = rng() % kPrime;
  const std::size_t n = a.cols() + 1;
  std::vector<std::vector<std::uint64_t>> basis;
  std::vector<std::size_t> pivots, chosen;
  for (std::size_t i = 0; i < a.rows() && basis.size() < n; ++i) {
    std::vector<std::uint64_t> r(n);
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& s = j + 1 < n ? a(i, j) : b[i];
      if (s.is_zero()) continue;
      auto img = s.mod_image(kPrime, point);
      if (!img) return std::nullopt;
      r[j] = *img;
    }
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::uint64_t f = r[pivots[k]];
      if (!f) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (basis[k][j]) r[j] = (r[j] + kPrime - mulmod(f, basis[k][j])) % kPrime;
    }
    std::size_t p = 0;
    while (p < n && r[p] == 0) ++p;
    if (p == n) continue;
    std::uint64_t inv = invmod(r[p]);
    for (auto& v : r) v = mulmod(v, inv);
    for (auto& row : basis) {
      std::uint64_t f = row[p];
      if (!f) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (r[j]) row[j] = (row[j] + kPrime - mulmod(f, r[j])) % kPrime;
    }
    basis.push_back(std::move(r));
    pivots.push_back(p);
    chosen.push_back(i);
  }
  return chosen;
}

struct Elimination {
  std::vector<Vector> rows;  // reduced rows of [A | b]
  std::vector<std::size_t> pivot_cols;
};

Elimination gauss_jordan(std::vector<Vector> rows, std::size_t ncols) {
  Elimination e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t best = rows.size();
    int best_size = 0;
    for (std::size_t i = r; i < rows.size(); ++i) {
      if (rows[i][c].is_zero()) continue;
      int sz = rows[i][c].size_measure();
      if (best == rows.size() || sz < best_size) {
        best = i;
        best_size = sz;
      }
    }
    if (best == rows.size()) continue;
    std::swap(rows[r], rows[best]);
    Scalar inv = rows[r][c].inverse();
    for (auto& v : rows[r])
      if (!v.is_zero()) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Scalar f = rows[i][c];
      for (std::size_t j = c; j < rows[i].size(); ++j)
        if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
    }
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.rows = std::move(rows);
  return e;
}

LinearSolution solve_rows(const Matrix& a, const Vector& b, const std::vector<std::size_t>& idx) {
  const std::size_t n = a.cols();
  std::vector<Vector> rows;
  rows.reserve(idx.size());
  for (std::size_t i : idx) {
    Vector r = a.row(i);
    r.push_back(b[i]);
    rows.push_back(std::move(r));
  }
  Elimination e = gauss_jordan(std::move(rows), n);
  LinearSolution sol;
  sol.rank = e.pivot_cols.size();
  for (std::size_t i = sol.rank; i < e.rows.size(); ++i) {
    if (e.rows[i][n].is_zero()) continue;
    // Inconsistent: a left-kernel vector of the selected rows pairs nonzero with b.
    Matrix at(n, idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k)
      for (std::size_t j = 0; j < n; ++j) at(j, k) = a(idx[k], j);
    for (const auto& v : nullspace(at)) {
      Vector full(a.rows());
      for (std::size_t k = 0; k < idx.size(); ++k) full[idx[k]] = v[k];
      if (!dot(full, b).is_zero()) {
        sol.certificate = std::move(full);
        return sol;
      }
    }
    throw std::logic_error("inconsistent system without a certificate");
  }
  sol.consistent = true;
  sol.particular.assign(n, Scalar());
  std::vector<bool> is_pivot(n, false);
  for (std::size_t k = 0; k < sol.rank; ++k) {
    is_pivot[e.pivot_cols[k]] = true;
    sol.particular[e.pivot_cols[k]] = e.rows[k][n];
  }
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n);
    v[f] = Scalar(1);
    for (std::size_t k = 0; k < sol.rank; ++k) v[e.pivot_cols[k]] = -e.rows[k][f];
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

bool verify(const Matrix& a, const Vector& b, const LinearSolution& s) {
  if (!s.consistent) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Scalar acc;
      for (std::size_t i = 0; i < a.rows(); ++i)
        if (!s.certificate[i].is_zero() && !a(i, j).is_zero()) acc += s.certificate[i] * a(i, j);
      if (!acc.is_zero()) return false;
    }
    return !dot(s.certificate, b).is_zero();
  }
  Vector ax = a * s.particular;
  for (std::size_t i = 0; i < ax.size(); ++i)
    if (ax[i] != b[i]) return false;
  for (const auto& n : s.nullspace)
    if (!is_zero_vector(a * n)) return false;
  return true;
}

}  // namespace

LinearSolution solve_linear(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("right-hand side length differs from row count");
  std::vector<std::size_t> all(a.rows());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  if (a.rows() > a.cols() + 1 && !any_algebraic(a, b)) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      auto chosen = select_rows(a, b, seed);
      if (!chosen) continue;
      LinearSolution s = solve_rows(a, b, *chosen);
      if (verify(a, b, s)) return s;
    }
  }
  LinearSolution s = solve_rows(a, b, all);
  if (!verify(a, b, s)) throw std::logic_error("linear solution failed its exact post-check");
  return s;
}

std::size_t rank(const Matrix& a) {
  if (a.cols() > a.rows()) return solve_linear(a.transposed(), Vector(a.cols())).rank;
  return solve_linear(a, Vector(a.rows())).rank;
}

std::vector<Vector> nullspace(const Matrix& a) {
  return solve_linear(a, Vector(a.rows())).nullspace;
}

}  // namespace kdef

#include "homotower/exactlinalg.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace homotower {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows[0].size() : 0;
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c)
      throw std::invalid_argument("ragged row in IntMatrix::from_rows");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch in *");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const BigInt& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

std::vector<BigInt> SnfResult::diagonal() const {
  std::size_t n = std::min(S.rows(), S.cols());
  std::vector<BigInt> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = S.at(i, i);
  return d;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row a -= q * row b
void row_axpy(IntMatrix& m, std::size_t a, std::size_t b, const BigInt& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) -= q * m.at(b, j);
}

void col_axpy(IntMatrix& m, std::size_t a, std::size_t b, const BigInt& q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, a) -= q * m.at(i, b);
}

void negate_row(IntMatrix& m, std::size_t a) {
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) = -m.at(a, j);
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
  SnfResult r{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  IntMatrix& s = r.S;
  const std::size_t nr = s.rows(), nc = s.cols();

  for (std::size_t t = 0; t < std::min(nr, nc); ++t) {
    for (;;) {
      // Min-abs pivot over the trailing block keeps coefficient growth down.
      std::size_t pi = t, pj = t;
      BigInt best = 0;
      for (std::size_t i = t; i < nr; ++i)
        for (std::size_t j = t; j < nc; ++j) {
          const BigInt& e = s.at(i, j);
          if (e == 0) continue;
          BigInt a = abs(e);
          if (best == 0 || a < best) {
            best = a;
            pi = i;
            pj = j;
          }
        }
      if (best == 0) goto done;  // trailing block is zero

      swap_rows(s, t, pi);
      swap_rows(r.U, t, pi);
      swap_cols(s, t, pj);
      swap_cols(r.V, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < nr; ++i) {
        if (s.at(i, t) == 0) continue;
        BigInt q = s.at(i, t) / s.at(t, t);
        row_axpy(s, i, t, q);
        row_axpy(r.U, i, t, q);
        if (s.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < nc; ++j) {
        if (s.at(t, j) == 0) continue;
        BigInt q = s.at(t, j) / s.at(t, t);
        col_axpy(s, j, t, q);
        col_axpy(r.V, j, t, q);
        if (s.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot divides the rest of its row/column; force it to divide the
      // whole trailing block before moving on.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < nr && divides_all; ++i)
        for (std::size_t j = t + 1; j < nc; ++j)
          if (s.at(i, j) % s.at(t, t) != 0) {
            row_axpy(s, t, i, BigInt(-1));
            row_axpy(r.U, t, i, BigInt(-1));
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    if (s.at(t, t) < 0) {
      negate_row(s, t);
      negate_row(r.U, t);
    }
  }
done:
  return r;
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  // Bareiss fraction-free elimination: divisions are exact.
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a.at(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      swap_rows(a, k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
    if (n == d) return true;
    if (n % d == 0) return false;
  }
  for (std::uint64_t d = 11; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FpMatrix::FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {
  if (!is_prime(p)) throw std::invalid_argument("modulus is not prime");
}

FpMatrix modp_reduce(const IntMatrix& m, std::uint32_t p) {
  FpMatrix out(p, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      BigInt r = m.at(i, j) % p;
      if (r < 0) r += p;
      out.at(i, j) = static_cast<std::uint32_t>(r);
    }
  return out;
}

namespace {

inline std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

// Inverse mod prime p by Fermat.
std::uint32_t invmod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace

FpEchelon fp_echelon(FpMatrix m) {
  const std::uint32_t p = m.p();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = col; j < m.cols(); ++j)
        std::swap(m.at(row, j), m.at(piv, j));
    std::uint32_t inv = invmod(m.at(row, col), p);
    for (std::size_t j = col; j < m.cols(); ++j)
      m.at(row, j) = mulmod(m.at(row, j), inv, p);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row) continue;
      std::uint32_t f = m.at(i, col);
      if (f == 0) continue;
      for (std::size_t j = col; j < m.cols(); ++j) {
        std::uint64_t v = m.at(i, j) + static_cast<std::uint64_t>(p) -
                          mulmod(f, m.at(row, j), p);
        m.at(i, j) = static_cast<std::uint32_t>(v % p);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return FpEchelon{std::move(m), std::move(pivots)};
}

std::size_t fp_rank(const FpMatrix& m) { return fp_echelon(m).pivots.size(); }

std::vector<std::vector<std::uint32_t>> fp_nullspace(const FpMatrix& m) {
  const std::uint32_t p = m.p();
  FpEchelon e = fp_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;

  std::vector<std::vector<std::uint32_t>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint32_t> v(m.cols(), 0);
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      std::uint32_t coef = e.rref.at(r, f);
      if (coef) v[e.pivots[r]] = p - coef;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool betti_lower_bound_check(const IntMatrix& m, std::uint32_t q) {
  return fp_rank(modp_reduce(m, q)) == m.cols();
}

bool FpSpan::insert(std::vector<std::uint32_t> v) {
  assert(v.size() == dim_);
  std::size_t lead = dim_;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    std::uint32_t f = v[pivots_[k]];
    if (f == 0) continue;
    const auto& row = rows_[k];
    for (std::size_t j = pivots_[k]; j < dim_; ++j) {
      std::uint64_t x = v[j] + static_cast<std::uint64_t>(p_) - mulmod(f, row[j], p_);
      v[j] = static_cast<std::uint32_t>(x % p_);
    }
  }
  for (std::size_t j = 0; j < dim_; ++j)
    if (v[j] != 0) {
      lead = j;
      break;
    }
  if (lead == dim_) return false;

  std::uint32_t inv = invmod(v[lead], p_);
  for (std::size_t j = lead; j < dim_; ++j) v[j] = mulmod(v[j], inv, p_);
  // Keep rows ordered by pivot so reduce() stays a single pass.
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, lead);
  return true;
}

std::vector<std::uint32_t> FpSpan::reduce(std::vector<std::uint32_t> v) const {
  assert(v.size() == dim_);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    std::uint32_t f = v[pivots_[k]];
    if (f == 0) continue;
    const auto& row = rows_[k];
    for (std::size_t j = pivots_[k]; j < dim_; ++j) {
      std::uint64_t x = v[j] + static_cast<std::uint64_t>(p_) - mulmod(f, row[j], p_);
      v[j] = static_cast<std::uint32_t>(x % p_);
    }
  }
  return v;
}

}  // namespace homotower

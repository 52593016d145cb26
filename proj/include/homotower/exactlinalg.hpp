#ifndef HOMOTOWER_EXACTLINALG_HPP
#define HOMOTOWER_EXACTLINALG_HPP

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace homotower {

using BigInt = boost::multiprecision::cpp_int;

/// Dense integer matrix with arbitrary-precision entries, row-major.
/// Zero-sized shapes are allowed everywhere.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> a_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// U * M * V = S with S diagonal, nonnegative, each entry dividing the
/// next, and U, V unimodular.
struct SnfResult {
  IntMatrix S, U, V;

  /// The diagonal of S, length min(rows, cols).
  std::vector<BigInt> diagonal() const;
};

SnfResult smith_normal_form(const IntMatrix& m);

/// Exact determinant (Bareiss).  Square input required.
BigInt determinant(const IntMatrix& m);

bool is_prime(std::uint64_t n);

/// Dense matrix over F_p, entries reduced into 0..p-1.
class FpMatrix {
 public:
  FpMatrix() = default;
  /// Throws std::invalid_argument unless p is prime.
  FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);

  std::uint32_t p() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  std::uint32_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const FpMatrix&) const = default;

 private:
  std::uint32_t p_ = 2;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint32_t> a_;
};

FpMatrix modp_reduce(const IntMatrix& m, std::uint32_t p);

struct FpEchelon {
  FpMatrix rref;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form; deterministic (lowest-index pivots first).
FpEchelon fp_echelon(FpMatrix m);

std::size_t fp_rank(const FpMatrix& m);

/// Kernel basis read off the RREF: one vector per free column, in free
/// column order, unit coordinate at the free column.
std::vector<std::vector<std::uint32_t>> fp_nullspace(const FpMatrix& m);

/// True iff M has full column rank mod q; this certifies full column
/// rank over the rationals (rank can only drop under reduction), hence
/// first Betti number 0 for a presented group with relation matrix M.
bool betti_lower_bound_check(const IntMatrix& m, std::uint32_t q);

/// Incremental echelon basis of a subspace of F_p^dim; used wherever a
/// span is built up one vector at a time.
class FpSpan {
 public:
  FpSpan(std::uint32_t p, std::size_t dim) : p_(p), dim_(dim) {}

  /// Reduces v against the basis; if a nonzero remainder survives it is
  /// normalized and inserted.  Returns true when the dimension grew.
  bool insert(std::vector<std::uint32_t> v);

  /// Remainder of v after reduction against the current basis.
  std::vector<std::uint32_t> reduce(std::vector<std::uint32_t> v) const;

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient_dim() const { return dim_; }

  /// Echelonized basis rows (leading entries 1) and their pivot
  /// columns, in increasing pivot order.
  const std::vector<std::vector<std::uint32_t>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::uint32_t p_;
  std::size_t dim_;
  std::vector<std::vector<std::uint32_t>> rows_;  // echelonized
  std::vector<std::size_t> pivots_;               // increasing
};

}  // namespace homotower

#endif

#pragma once

// Exact integer linear algebra: matrices over Z, Smith and Hermite normal
// forms, kernels, cokernels and lattice indices.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "a1c/error.hpp"

namespace a1c {

using Integer = boost::multiprecision::cpp_int;
using Vec = std::vector<Integer>;

Vec make_vec(std::initializer_list<long long> entries);
Integer dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Integer& s, const Vec& a);
Vec negate(const Vec& a);
bool is_zero(const Vec& a);
/// gcd of the entries (0 for the zero vector).
Integer content(const Vec& a);
/// Divides by the content; the zero vector is returned unchanged.
Vec primitive(const Vec& a);
std::string to_string(const Vec& a);

/// Sorts lexicographically and removes duplicates.
void canonicalize(std::vector<Vec>& vs);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<Vec>& columns,
                                std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Integer>& entries() const { return entries_; }

  const Integer& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  Integer& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }

  Vec row(std::size_t i) const;
  Vec column(std::size_t j) const;
  std::vector<Vec> row_vectors() const;
  std::vector<Vec> column_vectors() const;

  IntMatrix transpose() const;
  Vec apply(const Vec& v) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t i);

  bool operator==(const IntMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);

struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  /// Nonzero diagonal entries of D, each dividing the next.
  std::vector<Integer> invariant_factors;

  std::size_t rank() const { return invariant_factors.size(); }
};

/// U * M * V = D with U, V unimodular. Pivots on the smallest nonzero
/// absolute value, ties broken by row-major position.
SmithDecomposition snf(const IntMatrix& m);

struct CokernelStructure {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion_factors;

  bool torsion_free() const { return torsion_factors.empty(); }
  bool operator==(const CokernelStructure&) const = default;
};

/// Structure of Z^rows / M(Z^cols).
CokernelStructure cokernel_structure(const IntMatrix& m);

struct SpanReport {
  bool spans_rationally = false;
  bool spans_lattice = false;
  /// Lattice index of the generated sublattice; empty when infinite.
  std::optional<Integer> index;
};

SpanReport span_report(const std::vector<Vec>& vectors,
                       std::size_t ambient_rank);

std::size_t rank(const IntMatrix& m);
std::size_t rank(const std::vector<Vec>& vectors, std::size_t ambient_rank);
Integer determinant(const IntMatrix& m);
/// adj(M) with adj(M) * M = det(M) * I.
IntMatrix adjugate(const IntMatrix& m);
bool is_unimodular(const IntMatrix& m);
/// Inverse of a unimodular matrix.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Saturated basis of {x in Z^cols : M x = 0}, as columns.
std::vector<Vec> kernel_basis(const IntMatrix& m);
/// Saturated basis of {y in Z^rows : y M = 0}.
std::vector<Vec> left_kernel_basis(const IntMatrix& m);

/// Row-style Hermite normal form of the lattice spanned by the rows:
/// echelon, positive pivots, entries above a pivot reduced into [0, pivot).
/// Zero rows are dropped.
IntMatrix hermite_rows(const IntMatrix& m);

/// Floor division for integers with positive divisor semantics.
Integer floor_div(const Integer& a, const Integer& b);

}  // namespace a1c

#pragma once

// Exact integer linear algebra over arbitrary-precision integers: primitive
// linear forms, row-style Hermite normal form, saturated integer kernels and
// lattice membership/equality.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "rell/errors.hpp"

namespace rell {

using Integer = mpz_class;
using IntVec = std::vector<Integer>;

IntVec make_vec(std::initializer_list<long> values);
Integer dot(const IntVec& a, const IntVec& b);
bool is_zero(const IntVec& v);
/// gcd of all entries; 0 for the zero vector.
Integer content(const IntVec& v);

/// Rectangular integer matrix, one IntVec per row. The column count is fixed
/// at construction so that the empty matrix still knows its ambient space.
class IntMat {
 public:
  explicit IntMat(std::size_t cols = 0) : cols_(cols) {}
  IntMat(std::size_t cols, std::vector<IntVec> rows);
  static IntMat from(std::initializer_list<std::initializer_list<long>> rows);

  void add_row(IntVec row);

  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }
  const IntVec& operator[](std::size_t i) const { return rows_[i]; }
  const std::vector<IntVec>& rows() const noexcept { return rows_; }

  auto begin() const { return rows_.begin(); }
  auto end() const { return rows_.end(); }

  friend bool operator==(const IntMat&, const IntMat&) = default;

 private:
  std::size_t cols_;
  std::vector<IntVec> rows_;
};

/// Integer linear functional with coprime coefficients.
class PrimitiveForm {
 public:
  /// Divides by the content. Direction is preserved. Throws ZeroVector.
  static PrimitiveForm from(IntVec v);

  const IntVec& coeffs() const noexcept { return coeffs_; }
  std::size_t dim() const noexcept { return coeffs_.size(); }
  Integer operator()(const IntVec& x) const;

  friend bool operator==(const PrimitiveForm&, const PrimitiveForm&) = default;

 private:
  explicit PrimitiveForm(IntVec c) : coeffs_(std::move(c)) {}
  IntVec coeffs_;
};

PrimitiveForm primitive(const IntVec& v);

/// A sublattice of Z^n stored in canonical row-style Hermite normal form:
/// nonzero rows, strictly increasing pivot columns, positive pivots, and
/// entries above each pivot reduced into [0, pivot).
class LatticeBasis {
 public:
  explicit LatticeBasis(std::size_t ambient_dim) : rows_(ambient_dim) {}

  std::size_t ambient_dim() const noexcept { return rows_.cols(); }
  std::size_t rank() const noexcept { return rows_.size(); }
  const IntMat& rows() const noexcept { return rows_; }
  /// Column index of the leading entry of row i.
  std::size_t pivot(std::size_t i) const;
  /// True iff this is all of Z^n.
  bool is_full() const;

  /// Adds a generator to the lattice, keeping the basis canonical.
  void insert(IntVec v);

  friend bool operator==(const LatticeBasis&, const LatticeBasis&) = default;

 private:
  void reduce_above();
  IntMat rows_;
};

LatticeBasis hnf(const IntMat& m);
std::size_t rank(const IntMat& m);

/// Saturated kernel {z in Z^n : f(z) = 0 for all f in forms}.
LatticeBasis kernel_basis(const std::vector<PrimitiveForm>& forms,
                          std::size_t ambient_dim);
/// Same, for the row space of an arbitrary integer matrix.
LatticeBasis kernel_basis(const IntMat& m);

bool lattice_equal(const LatticeBasis& a, const LatticeBasis& b);
bool lattice_member(const IntVec& v, const LatticeBasis& b);

}  // namespace rell

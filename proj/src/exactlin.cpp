#include "rell/exactlin.hpp"

#include <string>
#include <utility>

namespace rell {

namespace {

void require_dim(std::size_t got, std::size_t want, const char* what) {
  if (got != want)
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + ": expected length " +
                    std::to_string(want) + ", got " + std::to_string(got));
}

std::size_t leading_index(const IntVec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return i;
  return v.size();
}

// a += k * b
void axpy(IntVec& a, const Integer& k, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += k * b[i];
}

}  // namespace

IntVec make_vec(std::initializer_list<long> values) {
  IntVec v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

Integer dot(const IntVec& a, const IntVec& b) {
  require_dim(b.size(), a.size(), "dot");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const IntVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Integer content(const IntVec& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

// ---------------------------------------------------------------- IntMat

IntMat::IntMat(std::size_t cols, std::vector<IntVec> rows) : cols_(cols) {
  rows_.reserve(rows.size());
  for (auto& r : rows) add_row(std::move(r));
}

IntMat IntMat::from(std::initializer_list<std::initializer_list<long>> rows) {
  IntMat m(rows.size() == 0 ? 0 : rows.begin()->size());
  for (const auto& r : rows) m.add_row(make_vec(r));
  return m;
}

void IntMat::add_row(IntVec row) {
  require_dim(row.size(), cols_, "IntMat row");
  rows_.push_back(std::move(row));
}

// --------------------------------------------------------- PrimitiveForm

PrimitiveForm PrimitiveForm::from(IntVec v) {
  Integer g = content(v);
  if (g == 0) throw Error(ErrorCode::ZeroVector, "primitive form of zero vector");
  if (g != 1)
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return PrimitiveForm(std::move(v));
}

PrimitiveForm primitive(const IntVec& v) { return PrimitiveForm::from(v); }

Integer PrimitiveForm::operator()(const IntVec& x) const {
  return dot(coeffs_, x);
}

// ---------------------------------------------------------- LatticeBasis

std::size_t LatticeBasis::pivot(std::size_t i) const {
  return leading_index(rows_[i]);
}

bool LatticeBasis::is_full() const {
  if (rank() != ambient_dim()) return false;
  for (std::size_t i = 0; i < rank(); ++i)
    if (rows_[i][i] != 1) return false;
  return true;
}

void LatticeBasis::insert(IntVec v) {
  require_dim(v.size(), ambient_dim(), "lattice generator");
  std::vector<IntVec> rows = rows_.rows();
  std::size_t r = 0;
  for (std::size_t col = leading_index(v); col < v.size();
       col = leading_index(v)) {
    while (r < rows.size() && leading_index(rows[r]) < col) ++r;
    if (r == rows.size() || leading_index(rows[r]) > col) {
      if (v[col] < 0)
        for (auto& x : v) x = -x;
      rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(r), std::move(v));
      v.clear();
      break;
    }
    // Unimodular 2x2 step: the row keeps gcd(b, a) at col, v loses it.
    IntVec& row = rows[r];
    Integer g, x, y;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(),
               row[col].get_mpz_t(), v[col].get_mpz_t());
    Integer p = row[col] / g;
    Integer q = v[col] / g;
    IntVec merged(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) {
      merged[i] = x * row[i] + y * v[i];
      v[i] = p * v[i] - q * row[i];
    }
    if (merged[col] < 0)
      for (auto& e : merged) e = -e;
    row = std::move(merged);
    ++r;
  }
  rows_ = IntMat(ambient_dim(), std::move(rows));
  reduce_above();
}

void LatticeBasis::reduce_above() {
  std::vector<IntVec> rows = rows_.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::size_t p = leading_index(rows[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (rows[j][p] >= 0 && rows[j][p] < rows[i][p]) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[j][p].get_mpz_t(), rows[i][p].get_mpz_t());
      axpy(rows[j], -q, rows[i]);
    }
  }
  rows_ = IntMat(ambient_dim(), std::move(rows));
}

LatticeBasis hnf(const IntMat& m) {
  LatticeBasis b(m.cols());
  for (const auto& row : m)
    if (!is_zero(row)) b.insert(row);
  return b;
}

std::size_t rank(const IntMat& m) { return hnf(m).rank(); }

LatticeBasis kernel_basis(const IntMat& m) {
  // Row-reduce [M^T | I]; rows whose first block vanishes span the kernel.
  const std::size_t n = m.cols();
  const std::size_t k = m.size();
  IntMat aug(k + n);
  for (std::size_t i = 0; i < n; ++i) {
    IntVec row(k + n);
    for (std::size_t j = 0; j < k; ++j) row[j] = m[j][i];
    row[k + i] = 1;
    aug.add_row(std::move(row));
  }
  LatticeBasis full = hnf(aug);
  IntMat kernel(n);
  for (std::size_t i = 0; i < full.rank(); ++i) {
    if (full.pivot(i) < k) continue;
    const IntVec& row = full.rows()[i];
    kernel.add_row(IntVec(row.begin() + static_cast<std::ptrdiff_t>(k), row.end()));
  }
  return hnf(kernel);
}

LatticeBasis kernel_basis(const std::vector<PrimitiveForm>& forms,
                          std::size_t ambient_dim) {
  IntMat m(ambient_dim);
  for (const auto& f : forms) m.add_row(f.coeffs());
  return kernel_basis(m);
}

bool lattice_equal(const LatticeBasis& a, const LatticeBasis& b) {
  require_dim(b.ambient_dim(), a.ambient_dim(), "lattice_equal");
  return a == b;
}

bool lattice_member(const IntVec& v, const LatticeBasis& b) {
  require_dim(v.size(), b.ambient_dim(), "lattice_member");
  IntVec rest = v;
  for (std::size_t i = 0; i < b.rank(); ++i) {
    const IntVec& row = b.rows()[i];
    const std::size_t p = b.pivot(i);
    for (std::size_t c = 0; c < p; ++c)
      if (rest[c] != 0) return false;
    if (!mpz_divisible_p(rest[p].get_mpz_t(), row[p].get_mpz_t())) return false;
    Integer q = rest[p] / row[p];
    axpy(rest, -q, row);
  }
  return is_zero(rest);
}

}  // namespace rell

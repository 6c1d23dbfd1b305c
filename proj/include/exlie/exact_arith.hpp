#pragma once

// Exact rational scalars, dense rational matrices and fraction-free
// elimination.  Every other module builds on these primitives.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace exlie {

// GMP keeps mpq values canonical (lowest terms, positive denominator) after
// every arithmetic operation; make_rational canonicalizes explicit fractions.
using Rational = mpq_class;
using Integer = mpz_class;
using Vec = std::vector<Rational>;

Rational make_rational(long num, long den = 1);
Rational parse_rational(const std::string& text);  // "3", "-2/5"
std::string to_string(const Rational& r);

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rational& s, const Vec& a);
Rational dot(const Vec& a, const Vec& b);
bool is_zero(const Vec& a);

// Small random rationals for property trials: numerator in [−5, 5],
// denominator in [1, 3].  Driven only by the caller's engine.
Rational random_rational(std::mt19937_64& rng);
Vec random_vec(std::mt19937_64& rng, std::size_t n);

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  const std::vector<Rational>& entries() const { return entries_; }
  Vec row(std::size_t r) const;

  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& other) const;
  Vec operator*(const Vec& v) const;
  bool operator==(const RatMatrix& other) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

// A row with integer entries, stored sparsely with strictly increasing
// column indices.
struct SparseRow {
  std::vector<std::uint32_t> idx;
  std::vector<Integer> val;
  bool empty() const { return idx.empty(); }
};

// Builds a row from rational coefficients by clearing denominators.
SparseRow integer_row(const std::vector<std::pair<std::uint32_t, Rational>>& terms);
SparseRow integer_row(const Vec& dense);

// Incremental fraction-free row echelon form.  Rows are kept primitive
// (content gcd 1, positive leading entry); the pivot of a row is its first
// nonzero column, so the pivot choice is deterministic and independent of
// insertion timing for a fixed row sequence.
class EchelonBuilder {
 public:
  explicit EchelonBuilder(std::size_t cols);

  // Reduces the row against the current pivots; keeps it if independent.
  // Returns true when the rank grew.
  bool add(SparseRow row);
  bool add(const Vec& dense) { return add(integer_row(dense)); }

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return order_.size(); }
  bool has_pivot(std::size_t col) const { return slot_[col] >= 0; }

  // Exact kernel basis: one primitive integer vector per free column, in
  // increasing free-column order.
  std::vector<Vec> nullspace() const;

  // Solves rows · x = 0 style systems augmented with a last column holding
  // the right-hand side.  Only meaningful when the builder was fed
  // augmented rows; returns nullopt when a pivot sits on the last column.
  std::optional<Vec> augmented_solution() const;

 private:
  void reduce(SparseRow& row) const;
  std::vector<SparseRow> reduced_rows() const;

  std::size_t cols_;
  std::vector<SparseRow> rows_;
  std::vector<long> slot_;           // column -> index into rows_ or -1
  std::vector<std::uint32_t> order_; // pivot columns in insertion order
};

std::vector<Vec> nullspace(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);
std::optional<Vec> solve(const RatMatrix& m, const Vec& rhs);
std::size_t span_dimension(const std::vector<Vec>& vectors);
std::optional<RatMatrix> inverse(const RatMatrix& m);

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  bool operator==(const Signature&) const = default;
};

// Inertia of a symmetric matrix by exact congruence diagonalization.
Signature signature(const RatMatrix& symmetric);

}  // namespace exlie

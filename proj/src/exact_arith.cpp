#include "exlie/exact_arith.hpp"

#include <algorithm>
#include <numeric>

#include "exlie/error.hpp"

namespace exlie {

Rational make_rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::kUsage, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0 || r.get_den() == 0) {
    throw Error(ErrorKind::kUsage, "not a rational number: '" + text + "'");
  }
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

Vec add(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec scale(const Rational& s, const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
  return out;
}

Rational dot(const Vec& a, const Vec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

bool is_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(),
                     [](const Rational& x) { return sgn(x) == 0; });
}

Rational random_rational(std::mt19937_64& rng) {
  // Draw from the raw engine output so results do not depend on the
  // standard library's distribution implementations.
  long num = static_cast<long>(rng() % 11) - 5;
  long den = static_cast<long>(rng() % 3) + 1;
  return make_rational(num, den);
}

Vec random_vec(std::mt19937_64& rng, std::size_t n) {
  Vec v(n);
  for (Rational& x : v) x = random_rational(rng);
  return v;
}

// ---------------------------------------------------------------- RatMatrix

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return RatMatrix();
  RatMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) {
      throw Error(ErrorKind::kUsage, "ragged matrix rows");
    }
    for (std::size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Vec RatMatrix::row(std::size_t r) const {
  return Vec(entries_.begin() + r * cols_, entries_.begin() + (r + 1) * cols_);
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
  if (cols_ != other.rows_) {
    throw Error(ErrorKind::kUsage, "matrix product shape mismatch");
  }
  RatMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(r, k);
      if (sgn(a) == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) {
        const Rational& b = other.at(k, c);
        if (sgn(b) != 0) out.at(r, c) += a * b;
      }
    }
  }
  return out;
}

Vec RatMatrix::operator*(const Vec& v) const {
  if (cols_ != v.size()) {
    throw Error(ErrorKind::kUsage, "matrix-vector shape mismatch");
  }
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (sgn(at(r, c)) != 0 && sgn(v[c]) != 0) out[r] += at(r, c) * v[c];
    }
  }
  return out;
}

bool RatMatrix::operator==(const RatMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ &&
         entries_ == other.entries_;
}

// ------------------------------------------------------------ sparse rows

namespace {

void make_primitive(SparseRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const Integer& v : row.val) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (row.val[0] < 0) g = -g;
  if (g != 1) {
    for (Integer& v : row.val) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

// Returns a·row − b·piv, dropping cancelled entries.
SparseRow combine(const SparseRow& row, const Integer& a, const SparseRow& piv,
                  const Integer& b) {
  SparseRow out;
  out.idx.reserve(row.idx.size() + piv.idx.size());
  out.val.reserve(row.idx.size() + piv.idx.size());
  std::size_t i = 0, j = 0;
  Integer t;
  while (i < row.idx.size() || j < piv.idx.size()) {
    if (j == piv.idx.size() ||
        (i < row.idx.size() && row.idx[i] < piv.idx[j])) {
      out.idx.push_back(row.idx[i]);
      out.val.push_back(a * row.val[i]);
      ++i;
    } else if (i == row.idx.size() || piv.idx[j] < row.idx[i]) {
      out.idx.push_back(piv.idx[j]);
      out.val.push_back(-b * piv.val[j]);
      ++j;
    } else {
      t = a * row.val[i] - b * piv.val[j];
      if (t != 0) {
        out.idx.push_back(row.idx[i]);
        out.val.push_back(t);
      }
      ++i;
      ++j;
    }
  }
  return out;
}

// Eliminates column `pos` of `row` (entry row.val[pos]) using pivot row
// `piv` whose leading column equals row.idx[pos].
SparseRow eliminate(const SparseRow& row, std::size_t pos, const SparseRow& piv) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), piv.val[0].get_mpz_t(), row.val[pos].get_mpz_t());
  Integer a = piv.val[0] / g;
  Integer b = row.val[pos] / g;
  SparseRow out = combine(row, a, piv, b);
  make_primitive(out);
  return out;
}

}  // namespace

SparseRow integer_row(
    const std::vector<std::pair<std::uint32_t, Rational>>& terms) {
  std::vector<std::pair<std::uint32_t, Rational>> sorted = terms;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<std::pair<std::uint32_t, Rational>> merged;
  for (auto& t : sorted) {
    if (!merged.empty() && merged.back().first == t.first) {
      merged.back().second += t.second;
    } else {
      merged.push_back(t);
    }
  }
  Integer lcm = 1;
  for (const auto& t : merged) {
    if (sgn(t.second) != 0) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), t.second.get_den_mpz_t());
    }
  }
  SparseRow row;
  for (const auto& t : merged) {
    if (sgn(t.second) == 0) continue;
    row.idx.push_back(t.first);
    row.val.push_back(t.second.get_num() * (lcm / t.second.get_den()));
  }
  return row;
}

SparseRow integer_row(const Vec& dense) {
  std::vector<std::pair<std::uint32_t, Rational>> terms;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (sgn(dense[i]) != 0) terms.emplace_back(static_cast<std::uint32_t>(i), dense[i]);
  }
  return integer_row(terms);
}

// --------------------------------------------------------- EchelonBuilder

EchelonBuilder::EchelonBuilder(std::size_t cols) : cols_(cols), slot_(cols, -1) {}

void EchelonBuilder::reduce(SparseRow& row) const {
  while (!row.empty()) {
    long s = slot_[row.idx[0]];
    if (s < 0) return;
    row = eliminate(row, 0, rows_[static_cast<std::size_t>(s)]);
  }
}

bool EchelonBuilder::add(SparseRow row) {
  for (std::uint32_t c : row.idx) {
    if (c >= cols_) throw Error(ErrorKind::kUsage, "row column out of range");
  }
  make_primitive(row);
  reduce(row);
  if (row.empty()) return false;
  std::uint32_t lead = row.idx[0];
  slot_[lead] = static_cast<long>(rows_.size());
  order_.push_back(lead);
  rows_.push_back(std::move(row));
  return true;
}

std::vector<SparseRow> EchelonBuilder::reduced_rows() const {
  // Back substitution in decreasing pivot order: after processing, each row
  // has its pivot plus entries in free columns only.
  std::vector<std::uint32_t> leads = order_;
  std::sort(leads.begin(), leads.end(), std::greater<>());
  std::vector<SparseRow> red(rows_.size());
  for (std::uint32_t lead : leads) {
    std::size_t s = static_cast<std::size_t>(slot_[lead]);
    SparseRow row = rows_[s];
    std::size_t pos = 1;
    while (pos < row.idx.size()) {
      long t = slot_[row.idx[pos]];
      if (t < 0) {
        ++pos;
        continue;
      }
      // The pivot row for this column is already reduced; eliminating it
      // only introduces free columns, which sit after or before pos but are
      // never pivots, so rescanning from pos is sufficient.
      std::uint32_t col = row.idx[pos];
      row = eliminate(row, pos, red[static_cast<std::size_t>(t)]);
      pos = static_cast<std::size_t>(
          std::lower_bound(row.idx.begin(), row.idx.end(), col) - row.idx.begin());
    }
    red[s] = std::move(row);
  }
  return red;
}

std::vector<Vec> EchelonBuilder::nullspace() const {
  std::vector<SparseRow> red = reduced_rows();
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (slot_[f] >= 0) continue;
    Vec v(cols_);
    v[f] = 1;
    for (const SparseRow& row : red) {
      auto it = std::lower_bound(row.idx.begin(), row.idx.end(),
                                 static_cast<std::uint32_t>(f));
      if (it == row.idx.end() || *it != f) continue;
      const Integer& coef = row.val[static_cast<std::size_t>(it - row.idx.begin())];
      Rational x(-coef, row.val[0]);
      x.canonicalize();
      v[row.idx[0]] = x;
    }
    // Scale to a primitive integer vector with positive free coordinate.
    Integer lcm = 1;
    for (const Rational& x : v) {
      if (sgn(x) != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    }
    Integer g = 0;
    for (Rational& x : v) {
      if (sgn(x) == 0) continue;
      x *= lcm;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
    }
    if (g > 1) {
      for (Rational& x : v) x /= g;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> EchelonBuilder::augmented_solution() const {
  if (cols_ == 0) return Vec();
  std::size_t last = cols_ - 1;
  if (slot_[last] >= 0) return std::nullopt;
  std::vector<SparseRow> red = reduced_rows();
  Vec x(last);
  for (const SparseRow& row : red) {
    if (row.idx.back() != last) continue;
    Rational v(row.val.back(), row.val[0]);
    v.canonicalize();
    x[row.idx[0]] = v;
  }
  return x;
}

// ------------------------------------------------------- dense front ends

std::vector<Vec> nullspace(const RatMatrix& m) {
  EchelonBuilder b(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) b.add(m.row(r));
  return b.nullspace();
}

std::size_t rank(const RatMatrix& m) {
  EchelonBuilder b(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) b.add(m.row(r));
  return b.rank();
}

std::optional<Vec> solve(const RatMatrix& m, const Vec& rhs) {
  if (rhs.size() != m.rows()) {
    throw Error(ErrorKind::kUsage, "right-hand side length mismatch");
  }
  EchelonBuilder b(m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Vec row = m.row(r);
    row.push_back(rhs[r]);
    b.add(row);
  }
  return b.augmented_solution();
}

std::size_t span_dimension(const std::vector<Vec>& vectors) {
  if (vectors.empty()) return 0;
  EchelonBuilder b(vectors[0].size());
  for (const Vec& v : vectors) {
    if (v.size() != b.cols()) {
      throw Error(ErrorKind::kUsage, "span_dimension: unequal vector lengths");
    }
    b.add(v);
  }
  return b.rank();
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::kUsage, "inverse of a non-square matrix");
  }
  std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a.at(p, c)) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(a.at(p, k), a.at(c, k));
        std::swap(inv.at(p, k), inv.at(c, k));
      }
    }
    Rational piv = a.at(c, c);
    for (std::size_t k = 0; k < n; ++k) {
      a.at(c, k) /= piv;
      inv.at(c, k) /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(a.at(r, c)) == 0) continue;
      Rational f = a.at(r, c);
      for (std::size_t k = 0; k < n; ++k) {
        if (sgn(a.at(c, k)) != 0) a.at(r, k) -= f * a.at(c, k);
        if (sgn(inv.at(c, k)) != 0) inv.at(r, k) -= f * inv.at(c, k);
      }
    }
  }
  return inv;
}

Signature signature(const RatMatrix& symmetric) {
  if (symmetric.rows() != symmetric.cols()) {
    throw Error(ErrorKind::kUsage, "signature of a non-square matrix");
  }
  std::size_t n = symmetric.rows();
  RatMatrix a = symmetric;
  std::vector<bool> done(n, false);
  Signature sig;
  for (std::size_t step = 0; step < n; ++step) {
    // Pick a remaining index with nonzero diagonal; otherwise create one by
    // the congruence e_i -> e_i + e_j, which puts 2·a_ij on the diagonal.
    std::size_t piv = n;
    for (std::size_t i = 0; i < n && piv == n; ++i) {
      if (!done[i] && sgn(a.at(i, i)) != 0) piv = i;
    }
    if (piv == n) {
      std::size_t pi = n, pj = n;
      for (std::size_t i = 0; i < n && pi == n; ++i) {
        if (done[i]) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (!done[j] && j != i && sgn(a.at(i, j)) != 0) {
            pi = i;
            pj = j;
            break;
          }
        }
      }
      if (pi == n) break;  // remaining block is zero
      for (std::size_t k = 0; k < n; ++k) a.at(pi, k) += a.at(pj, k);
      for (std::size_t k = 0; k < n; ++k) a.at(k, pi) += a.at(k, pj);
      piv = pi;
    }
    Rational d = a.at(piv, piv);
    if (d > 0) ++sig.positive; else ++sig.negative;
    done[piv] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || sgn(a.at(i, piv)) == 0) continue;
      Rational f = a.at(i, piv) / d;
      for (std::size_t k = 0; k < n; ++k) {
        if (!done[k]) a.at(i, k) -= f * a.at(piv, k);
      }
      a.at(i, piv) = 0;
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (!done[k]) a.at(piv, k) = 0;
    }
  }
  sig.zero = n - sig.positive - sig.negative;
  return sig;
}

}  // namespace exlie

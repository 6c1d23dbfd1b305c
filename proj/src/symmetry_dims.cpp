#include "exlie/symmetry_dims.hpp"

#include <future>
#include <map>
#include <mutex>

#include "exlie/error.hpp"

namespace exlie {

namespace {

struct Triplet {
  int row;
  int col;
  Rational val;
};

std::vector<Triplet> to_triplets(const Vec& flat, int d) {
  std::vector<Triplet> out;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      if (sgn(flat[static_cast<std::size_t>(a * d + b)]) != 0)
        out.push_back({a, b, flat[static_cast<std::size_t>(a * d + b)]});
  return out;
}

// Flattened matrix of L_{e_i}: entry (a, b) = (e_i ∘ e_b)_a.
Vec left_mult_flat(const CubicJordanAlgebra& j, int i) {
  int d = j.dim();
  Vec flat(static_cast<std::size_t>(d * d));
  for (int b = 0; b < d; ++b)
    for (const auto& t : j.circ_entry(i, b))
      flat[static_cast<std::size_t>(t.index * d + b)] = t.coef;
  return flat;
}

}  // namespace

DerivationBasis derivation_algebra(const CubicJordanAlgebra& j) {
  const int d = j.dim();
  // by_jk[j·d + k] lists (a, C_aj^k): the e_k component of e_a ∘ e_j.
  std::vector<std::vector<std::pair<int, Rational>>> by_jk(static_cast<std::size_t>(d * d));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (const auto& t : j.circ_entry(a, b))
        by_jk[static_cast<std::size_t>(b * d + static_cast<int>(t.index))].emplace_back(a, t.coef);

  EchelonBuilder builder(static_cast<std::size_t>(d * d));
  std::vector<std::pair<std::uint32_t, Rational>> terms;
  auto var = [d](int a, int b) { return static_cast<std::uint32_t>(a * d + b); };
  // D(e_i ∘ e_j) − D(e_i) ∘ e_j − e_i ∘ D(e_j) = 0, component k.
  for (int i = 0; i < d; ++i) {
    for (int jj = i; jj < d; ++jj) {
      for (int k = 0; k < d; ++k) {
        terms.clear();
        for (const auto& t : j.circ_entry(i, jj)) terms.emplace_back(var(k, t.index), t.coef);
        for (const auto& [a, c] : by_jk[static_cast<std::size_t>(jj * d + k)])
          terms.emplace_back(var(a, i), -c);
        for (const auto& [a, c] : by_jk[static_cast<std::size_t>(i * d + k)])
          terms.emplace_back(var(a, jj), -c);
        SparseRow row = integer_row(terms);
        if (!row.empty()) builder.add(std::move(row));
      }
    }
  }
  DerivationBasis out;
  out.dim_j = d;
  out.operators = builder.nullspace();
  return out;
}

StructureDims structure_algebra(const CubicJordanAlgebra& j, const DerivationBasis& der) {
  const int d = j.dim();
  const std::size_t dd = static_cast<std::size_t>(d * d);
  EchelonBuilder span(dd);
  std::vector<Vec> basis;
  std::vector<Vec> lmats;
  for (int i = 0; i < d; ++i) {
    lmats.push_back(left_mult_flat(j, i));
    if (span.add(lmats.back())) basis.push_back(lmats.back());
  }
  for (const Vec& op : der.operators) {
    if (span.add(op)) basis.push_back(op);
  }
  StructureDims out;
  out.dim_str = static_cast<int>(basis.size());

  // Centre: Z = Σ c_t B_t with [Z, L_{e_i}] = 0 for every i.  For the
  // semisimple algebras here str is generated by the L's, so this is the
  // full centre.
  const std::size_t s = basis.size();
  std::vector<std::vector<Triplet>> sparse_basis;
  for (const Vec& b : basis) sparse_basis.push_back(to_triplets(b, d));
  EchelonBuilder center(s);
  std::vector<Vec> comm(s, Vec(dd));
  for (int i = 0; i < d; ++i) {
    // Row and column access to L_i.
    std::vector<std::vector<std::pair<int, Rational>>> lrow(d), lcol(d);
    for (const Triplet& t : to_triplets(lmats[static_cast<std::size_t>(i)], d)) {
      lrow[t.row].emplace_back(t.col, t.val);
      lcol[t.col].emplace_back(t.row, t.val);
    }
    for (std::size_t t = 0; t < s; ++t) {
      Vec& acc = comm[t];
      for (Rational& x : acc) x = 0;
      for (const Triplet& e : sparse_basis[t]) {
        // (B L)_{p q} += B_{p r} L_{r q}
        for (const auto& [q, w] : lrow[e.col])
          acc[static_cast<std::size_t>(e.row * d + q)] += e.val * w;
        // (L B)_{p q} −= L_{p r} B_{r q}
        for (const auto& [p, w] : lcol[e.row])
          acc[static_cast<std::size_t>(p * d + e.col)] -= w * e.val;
      }
    }
    Vec row(s);
    for (std::size_t pq = 0; pq < dd; ++pq) {
      bool any = false;
      for (std::size_t t = 0; t < s; ++t) {
        row[t] = comm[t][pq];
        if (sgn(row[t]) != 0) any = true;
      }
      if (any) center.add(row);
    }
  }
  out.dim_center = static_cast<int>(s - center.rank());

  // Units of the simple summands: R ⊕ Γ has two, (1, 0) and (0, c_Γ); every
  // other kind is simple with unit c.  Their multiplication operators are
  // central and are the part of str removed to form str0.  (For Γ_{1,1} the
  // centre is larger because so(1,1) is itself abelian.)
  std::vector<Vec> units;
  if (j.descriptor().kind == JordanDescriptor::Kind::kSpinFactor) {
    Vec scalar(d), vector_part = j.identity();
    scalar[0] = 1;
    vector_part[0] = 0;
    units = {scalar, vector_part};
  } else {
    units = {j.identity()};
  }
  std::vector<Vec> scalings;
  for (const Vec& u : units) scalings.push_back(j.left_mult(u).entries());
  out.dim_scalings = static_cast<int>(span_dimension(scalings));
  out.dim_str0 = out.dim_str - out.dim_scalings;
  return out;
}

SymmetryReport symmetry_report(const JordanDescriptor& desc) {
  static std::mutex mu;
  static std::map<std::string, SymmetryReport> cache;
  std::string key = to_string(desc);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto j = jordan(desc);
  DerivationBasis der = derivation_algebra(*j);
  StructureDims str = structure_algebra(*j, der);
  SymmetryReport r;
  r.algebra = desc;
  r.dim_j = j->dim();
  r.dim_der = der.dim();
  r.dim_str = str.dim_str;
  r.dim_center = str.dim_center;
  r.dim_scalings = str.dim_scalings;
  r.dim_str0 = str.dim_str0;
  r.dim_conf = 2 * r.dim_j + r.dim_str;
  if (j->is_cubic()) r.dim_qconf = r.dim_conf + 1 + 2 * (2 * r.dim_j + 2) + 2;
  if (auto row = table1_row_for(desc)) {
    r.table1_labels = std::vector<std::string>{row->aut, row->str0, row->conf, row->qconf};
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, r).first->second;
}

// ----------------------------------------------------- magic-square table

const std::vector<std::pair<int, int>>& spin_samples() {
  static const std::vector<std::pair<int, int>> samples = {
      {8, 0}, {4, 4}, {9, 1}, {5, 5}, {7, 0}, {4, 3},  {7, 1},  {5, 3}, {6, 4}, {8, 2},
      {1, 2}, {3, 1}, {7, 3}, {12, 4}, {2, 10}, {8, 4}, {5, 4}, {8, 8}, {11, 3}, {1, 1}};
  return samples;
}

namespace {

std::string so_label(int m, int n) {
  if (n == 0) return "so(" + std::to_string(m) + ")";
  return "so(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

Table1Row spin_row(int m, int n) {
  Table1Row r;
  r.row = to_string(JordanDescriptor::spin_factor(m, n));
  r.aut = so_label(m, 0) + "+" + so_label(n, 0);
  r.str0 = so_label(m, n);
  r.conf = "sl(2,R)+" + so_label(m + 1, n + 1);
  r.qconf = so_label(m + 3, n + 3);
  return r;
}

}  // namespace

std::vector<Table1Row> table1_rows() {
  std::vector<Table1Row> rows = {
      {"R", "0", "0", "sl(2,R)", "G2(2)"},
      {"J3(R)", "so(3)", "sl(3,R)", "sp(3,R)", "F4(4)"},
      {"J3(C)", "su(3)", "sl(3,C)_R", "su(3,3)", "E6(2)"},
      {"J3(Cs)", "sl(3,R)", "sl(3,R)+sl(3,R)", "sl(6,R)", "E6(6)"},
      {"J3(H)", "usp(6)", "su*(6)", "so*(12)", "E7(-5)"},
      {"J3(Hs)", "sp(3,R)", "sl(6,R)", "so(6,6)", "E7(7)"},
      {"J3(O)", "F4(-52)", "E6(-26)", "E7(-25)", "E8(-24)"},
      {"J3(Os)", "F4(4)", "E6(6)", "E7(7)", "E8(8)"},
  };
  for (auto [m, n] : spin_samples()) rows.push_back(spin_row(m, n));
  return rows;
}

std::optional<Table1Row> table1_row_for(const JordanDescriptor& d) {
  if (d.kind == JordanDescriptor::Kind::kSpinFactor) return spin_row(d.m, d.n);
  std::string key = to_string(d);
  for (const Table1Row& r : table1_rows())
    if (r.row == key) return r;
  return std::nullopt;
}

int Table1Verification::failures() const {
  int n = 0;
  for (const DimCheck& c : checks)
    if (!c.ok()) ++n;
  return n;
}

Table1Verification verify_table1() {
  Table1Verification v;
  for (const Table1Row& row : table1_rows()) {
    SymmetryReport r = symmetry_report(parse_descriptor(row.row));
    v.checks.push_back({row.row + " aut", row.aut, lie_dim(row.aut), r.dim_der});
    v.checks.push_back({row.row + " str0", row.str0, lie_dim(row.str0), r.dim_str0});
    v.checks.push_back({row.row + " conf", row.conf, lie_dim(row.conf), r.dim_conf});
    v.checks.push_back({row.row + " qconf", row.qconf, lie_dim(row.qconf), r.dim_qconf.value_or(-1)});
  }
  return v;
}

// ------------------------------------------------------------ embeddings

namespace {

Signature quadratic_signature(const CubicJordanAlgebra& j) {
  int d = j.dim();
  RatMatrix g(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      g.at(a, b) = j.quadratic_polarization(unit_vec(d, a), unit_vec(d, b));
  return signature(g);
}

}  // namespace

std::vector<EmbeddingCheck> verify_embedding_dims() {
  std::vector<EmbeddingCheck> out;
  for (const Table1Row& row : table1_rows()) {
    if (row.row.rfind("R+Gamma", 0) == 0) continue;
    SymmetryReport r = symmetry_report(parse_descriptor(row.row));
    int qconf = r.dim_qconf.value_or(-1);
    int dim_f = 2 * r.dim_j + 2;
    out.push_back({row.row, "dim aut <= dim str0", r.dim_der <= r.dim_str0});
    out.push_back({row.row, "dim str0 + dim so(1,1) <= dim conf", r.dim_str0 + 1 <= r.dim_conf});
    out.push_back({row.row, "dim conf + dim sl(2,R) <= dim qconf", r.dim_conf + 3 <= qconf});
    out.push_back({row.row, "dim qconf - dim conf - 3 = 2 dim F(J)",
                   qconf - r.dim_conf - 3 == 2 * dim_f});
  }
  // J2^A ≅ Γ_{1,q+1} for division A, J2^{A_s} ≅ Γ_{q/2+1,q/2+1} for split A.
  for (CALabel l : all_ca_labels()) {
    int q = ca_dim(l);
    auto gamma = ca_is_split(l) ? JordanDescriptor::quadratic_spin(q / 2 + 1, q / 2 + 1)
                                : JordanDescriptor::quadratic_spin(1, q + 1);
    auto j2 = JordanDescriptor::hermitian2(l);
    auto a = jordan(j2);
    auto b = jordan(gamma);
    std::string subject = to_string(j2) + " vs " + to_string(gamma);
    out.push_back({subject, "equal dimension", a->dim() == b->dim()});
    out.push_back({subject, "equal norm-form signature",
                   quadratic_signature(*a) == quadratic_signature(*b)});
    SymmetryReport ra = symmetry_report(j2), rb = symmetry_report(gamma);
    out.push_back({subject, "equal dim der", ra.dim_der == rb.dim_der});
    out.push_back({subject, "equal dim str0", ra.dim_str0 == rb.dim_str0});
  }
  return out;
}

}  // namespace exlie

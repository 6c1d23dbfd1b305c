#include "exlie/real_form.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "exlie/error.hpp"
#include "exlie/lie_labels.hpp"

namespace exlie {

bool SatakeDiagram::is_black(int node) const {
  return std::binary_search(black.begin(), black.end(), node);
}

int SatakeDiagram::tau(int node) const {
  for (const auto& [a, b] : arrows) {
    if (a == node) return b;
    if (b == node) return a;
  }
  return node;
}

void SatakeDiagram::validate(const RootSystem& rs) const {
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::kInconsistent, "invalid Satake diagram for " + complex_type + ": " + why);
  };
  std::set<int> seen;
  for (int b : black) {
    if (b < 1 || b > rs.rank) fail("black node out of range");
    if (!seen.insert(b).second) fail("repeated black node");
  }
  std::set<int> paired;
  for (const auto& [a, b] : arrows) {
    if (a < 1 || b < 1 || a > rs.rank || b > rs.rank || a == b) fail("bad arrow");
    if (is_black(a) || is_black(b)) fail("arrow touches a black node");
    if (!paired.insert(a).second || !paired.insert(b).second) fail("node carries two arrows");
  }
  // Some diagram automorphism must agree with the arrows on white nodes and
  // preserve the black set.
  std::vector<int> perm(static_cast<std::size_t>(rs.rank));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    bool ok = true;
    for (int i = 1; i <= rs.rank && ok; ++i) {
      const int pi = perm[static_cast<std::size_t>(i - 1)];
      if (is_black(i) != is_black(pi)) ok = false;
      if (!is_black(i) && tau(i) != pi) ok = false;
      for (int j = 1; j <= rs.rank && ok; ++j)
        if (rs.cartan[i - 1][j - 1] != rs.cartan[pi - 1][perm[static_cast<std::size_t>(j - 1)] - 1]) ok = false;
    }
    if (ok) return;
  } while (std::next_permutation(perm.begin(), perm.end()));
  fail("arrows are not induced by a diagram automorphism preserving the black nodes");
}

namespace {

std::vector<std::vector<int>> singletons(int n) {
  std::vector<std::vector<int>> out;
  for (int i = 1; i <= n; ++i) out.push_back({i});
  return out;
}

std::vector<RealForm> build_registry() {
  std::vector<RealForm> r;
  auto add = [&](std::string label, std::string roman, std::string type, std::vector<int> black,
                 std::vector<std::pair<int, int>> arrows, int g, int k, int p, int npm,
                 std::string m0, bool ds, std::vector<std::vector<int>> nodes, std::string note) {
    RealForm f;
    f.label = std::move(label);
    f.roman = std::move(roman);
    f.satake = {std::move(type), std::move(black), std::move(arrows)};
    f.dim_g = g;
    f.dim_K = k;
    f.dim_P = p;
    f.dim_Npm = npm;
    f.m0_label = std::move(m0);
    f.has_discrete_series = ds;
    f.parabolic_nodes = std::move(nodes);
    f.pin_note = std::move(note);
    r.push_back(std::move(f));
  };
  add("E6(6)", "EI", "E6", {}, {}, 78, 36, 42, 36, "0", false,
      {{1}, {6}, {2}, {3}, {5}, {4}},
      "P1 and P5 delete the two chain ends (isomorphic pair); P2 deletes the node attached at "
      "the branch; P3 and P6 delete the nodes next to the ends (isomorphic pair); P4 deletes "
      "the branch node.");
  add("E6(2)", "EII", "E6", {}, {{1, 5}, {2, 4}}, 78, 38, 40, 36, "u(1)+u(1)", true,
      {{1, 5}, {2, 4}, {3}, {6}}, "Orbits of the arrow involution, outermost first.");
  add("E6(-14)", "EIII", "E6", {2, 3, 4}, {{1, 5}}, 78, 46, 32, 30, "so(6)+so(2)", true,
      {{1, 5}, {6}}, "The arrow-paired chain ends, then the node attached at the branch.");
  add("E6(-26)", "EIV", "E6", {2, 3, 4, 6}, {}, 78, 52, 26, 24, "so(8)", false, {{1}, {5}},
      "The two white chain ends; the parabolics are isomorphic.");
  add("E7(7)", "EV", "E7", {}, {}, 133, 63, 70, 63, "0", true, singletons(7),
      "Split form: P_j deletes node j.");
  add("E7(-5)", "EVI", "E7", {4, 6, 7}, {}, 133, 69, 64, 60, "su(2)+su(2)+su(2)", true,
      {{1}, {5}, {2}, {3}},
      "White nodes ordered by the tabulated Levi factors: so*(12), so(7,3)+su(2), "
      "su*(6)+sl(2,R), so(5,1)+sl(3,R)+su(2).");
  add("E7(-25)", "EVII", "E7", {2, 3, 4, 7}, {}, 133, 79, 54, 51, "so(8)", true,
      {{1}, {5}, {6}},
      "White nodes ordered by the tabulated Levi factors: so(10,2), so(9,1)+sl(2,R), E6(-26).");
  add("E8(8)", "EVIII", "E8", {}, {}, 248, 120, 128, 120, "0", true, singletons(8),
      "Split form: P_j deletes node j.");
  add("E8(-24)", "EIX", "E8", {2, 3, 4, 8}, {}, 248, 136, 112, 108, "so(8)", true,
      {{1}, {5}, {6}, {7}},
      "White nodes ordered by the tabulated Levi factors: so(11,3), so(9,1)+sl(3,R), "
      "E6(-26)+sl(2,R), E7(-25).");
  add("F4(4)", "FI", "F4", {}, {}, 52, 24, 28, 24, "0", true, {{2}, {3}, {1}, {4}},
      "Ordered by the tabulated Levi factors: sl(3,R)+sl(2,R) twice (short A2 first), then "
      "sp(3,R) and so(4,3).");
  add("F4(-20)", "FII", "F4", {1, 2, 3}, {}, 52, 36, 16, 15, "so(7)", true, {{4}},
      "Single white node.");
  add("G2(2)", "G", "G2", {}, {}, 14, 6, 8, 6, "0", true, {{2}, {1}},
      "P1 keeps the long simple root (deletes the short one); P2 keeps the short one.");
  return r;
}

}  // namespace

const std::vector<RealForm>& registry() {
  static const std::vector<RealForm> forms = build_registry();
  return forms;
}

std::string normalize_form_label(const std::string& label) {
  std::string out;
  for (std::size_t i = 0; i < label.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(label[i]);
    // U+2212 MINUS SIGN is E2 88 92 in UTF-8.
    if (c == 0xE2 && i + 2 < label.size() && static_cast<unsigned char>(label[i + 1]) == 0x88 &&
        static_cast<unsigned char>(label[i + 2]) == 0x92) {
      out.push_back('-');
      i += 2;
      continue;
    }
    if (c == ' ' || c == '_' || c == '{' || c == '}' || c == '$') continue;
    out.push_back(static_cast<char>(std::toupper(c)));
  }
  return out;
}

const RealForm& find_form(const std::vector<RealForm>& forms, const std::string& label) {
  const std::string key = normalize_form_label(label);
  for (const auto& f : forms) {
    if (normalize_form_label(f.label) == key || normalize_form_label(f.roman) == key) return f;
  }
  throw Error(ErrorKind::kUnknownLabel, "unknown real form: " + label);
}

const RealForm& find_form(const std::string& label) { return find_form(registry(), label); }

bool RestrictedRoot::positive() const {
  for (int c : coords)
    if (c != 0) return c > 0;
  return false;
}

int RestrictedRootSystem::positive_multiplicity_sum() const {
  int s = 0;
  for (const auto& r : roots)
    if (r.positive()) s += r.multiplicity;
  return s;
}

int RestrictedRootSystem::find(const std::vector<int>& c) const {
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (roots[i].coords == c) return static_cast<int>(i);
  return -1;
}

std::vector<std::vector<int>> restriction_coords(const RealForm& form) {
  const auto& rs = form.roots();
  std::vector<std::vector<int>> out;
  out.reserve(rs.coefficients.size());
  for (const auto& c : rs.coefficients) {
    std::vector<int> coords;
    for (const auto& orbit : form.parabolic_nodes) {
      int s = 0;
      for (int v : orbit) s += c[static_cast<std::size_t>(v - 1)];
      coords.push_back(s);
    }
    out.push_back(std::move(coords));
  }
  return out;
}

Vec satake_projection(const RealForm& form, const Vec& v) {
  const auto& rs = form.roots();
  const auto& sd = form.satake;
  // Express v over the simple roots (they form a basis of the ambient span
  // that matters); components outside that span do not pair with roots.
  const auto n = static_cast<std::size_t>(rs.rank);
  Vec pairing(n);
  for (std::size_t i = 0; i < n; ++i) pairing[i] = dot(v, rs.simple_roots[i]);
  auto coeffs = solve(rs.gram, pairing);
  if (!coeffs) throw Error(ErrorKind::kInconsistent, "singular Gram matrix");
  // Average over the arrow involution.
  Vec avg(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto t = static_cast<std::size_t>(sd.tau(static_cast<int>(i) + 1) - 1);
    avg[i] += (*coeffs)[i] / 2;
    avg[t] += (*coeffs)[i] / 2;
  }
  // Remove the orthogonal projection onto the black span.
  if (!sd.black.empty()) {
    const std::size_t nb = sd.black.size();
    RatMatrix gb(nb, nb);
    Vec rhs(nb);
    for (std::size_t a = 0; a < nb; ++a) {
      const auto ia = static_cast<std::size_t>(sd.black[a] - 1);
      for (std::size_t b = 0; b < nb; ++b)
        gb.at(a, b) = rs.gram.at(ia, static_cast<std::size_t>(sd.black[b] - 1));
      for (std::size_t k = 0; k < n; ++k) rhs[a] += avg[k] * rs.gram.at(k, ia);
    }
    auto c = solve(gb, rhs);
    if (!c) throw Error(ErrorKind::kInconsistent, "singular black Gram matrix");
    for (std::size_t a = 0; a < nb; ++a) avg[static_cast<std::size_t>(sd.black[a] - 1)] -= (*c)[a];
  }
  Vec out(rs.simple_roots[0].size());
  for (std::size_t i = 0; i < n; ++i)
    if (avg[i] != 0) out = add(out, scale(avg[i], rs.simple_roots[i]));
  return out;
}

RestrictedRootSystem restricted_root_system(const RealForm& form) {
  const auto& rs = form.roots();
  RestrictedRootSystem out;
  out.form = form.label;
  out.split_rank = form.split_rank();
  for (const auto& orbit : form.parabolic_nodes)
    out.restricted_simple.push_back(
        satake_projection(form, rs.simple_roots[static_cast<std::size_t>(orbit.front() - 1)]));

  const auto coords = restriction_coords(form);
  std::map<std::vector<int>, int> counts;
  for (const auto& c : coords) {
    if (std::all_of(c.begin(), c.end(), [](int x) { return x == 0; })) {
      ++out.zero_restrictions;
    } else {
      ++counts[c];
    }
  }
  const auto r = static_cast<std::size_t>(out.split_rank);
  Rational longest = 0;
  std::vector<RestrictedRoot> pos, neg;
  for (const auto& [c, m] : counts) {
    RestrictedRoot root;
    root.coords = c;
    root.multiplicity = m;
    Vec v(rs.simple_roots[0].size());
    for (std::size_t j = 0; j < r; ++j)
      if (c[j] != 0) v = add(v, scale(Rational(c[j]), out.restricted_simple[j]));
    root.vector = std::move(v);
    root.relative_length = dot(root.vector, root.vector);
    longest = std::max(longest, root.relative_length);
    (root.positive() ? pos : neg).push_back(std::move(root));
  }
  auto height_order = [](const RestrictedRoot& a, const RestrictedRoot& b) {
    int ha = std::accumulate(a.coords.begin(), a.coords.end(), 0);
    int hb = std::accumulate(b.coords.begin(), b.coords.end(), 0);
    if (std::abs(ha) != std::abs(hb)) return std::abs(ha) < std::abs(hb);
    return a.coords > b.coords;
  };
  std::sort(pos.begin(), pos.end(), height_order);
  std::sort(neg.begin(), neg.end(), height_order);
  out.roots = std::move(pos);
  out.roots.insert(out.roots.end(), neg.begin(), neg.end());
  for (auto& root : out.roots) root.relative_length /= longest;

  // Cartan matrix and type of the restricted simple roots.
  RootSystem simple;
  simple.rank = out.split_rank;
  simple.simple_roots = out.restricted_simple;
  simple.gram = RatMatrix(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      simple.gram.at(i, j) = dot(out.restricted_simple[i], out.restricted_simple[j]);
  simple.cartan.assign(r, std::vector<int>(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      Rational c = 2 * simple.gram.at(i, j) / simple.gram.at(j, j);
      if (c.get_den() != 1)
        throw Error(ErrorKind::kInconsistent, "non-integral restricted Cartan entry for " + form.label);
      simple.cartan[i][j] = static_cast<int>(c.get_num().get_si());
    }
  }
  out.cartan = simple.cartan;
  std::vector<int> all(r);
  std::iota(all.begin(), all.end(), 1);
  auto comps = dynkin_components(simple, all);
  if (comps.size() != 1)
    throw Error(ErrorKind::kInconsistent, "restricted system of " + form.label + " is not irreducible");
  bool doubled = false;
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<int> twice(r, 0);
    twice[j] = 2;
    if (counts.count(twice)) doubled = true;
  }
  out.reduced_type = doubled ? "BC" + std::to_string(out.split_rank) : comps[0].label();
  return out;
}

int dim_m0(const RealForm& form) {
  const int d = form.dim_g - 2 * form.dim_Npm - form.split_rank();
  const long expected = lie_dim(form.m0_label);
  if (d != expected)
    throw Error(ErrorKind::kInconsistent, form.label + ": dim g - 2 dim N - r = " + std::to_string(d) +
                                              " but dim " + form.m0_label + " = " +
                                              std::to_string(expected));
  return d;
}

int dim_m0_from_roots(const RealForm& form) {
  const auto rr = restricted_root_system(form);
  return form.roots().rank + rr.zero_restrictions - form.split_rank();
}

std::vector<std::string> registry_problems(const RealForm& form) {
  std::vector<std::string> problems;
  const std::string who = form.label + ": ";
  try {
    const auto& rs = root_system(form.satake.complex_type);
    form.satake.validate(rs);
    if (rs.dim() != form.dim_g) problems.push_back(who + "dim g differs from the complex type");
    // Orbits must partition the white nodes and respect the arrows.
    std::set<int> covered;
    for (const auto& orbit : form.parabolic_nodes) {
      for (int v : orbit) {
        if (v < 1 || v > rs.rank || form.satake.is_black(v) || !covered.insert(v).second)
          problems.push_back(who + "parabolic orbit table is not a partition of the white nodes");
        if (std::find(orbit.begin(), orbit.end(), form.satake.tau(v)) == orbit.end())
          problems.push_back(who + "parabolic orbit not closed under the arrows");
      }
    }
    if (static_cast<int>(covered.size() + form.satake.black.size()) != rs.rank)
      problems.push_back(who + "parabolic orbit table misses white nodes");
  } catch (const Error& e) {
    problems.push_back(who + e.what());
    return problems;
  }
  if (form.dim_K + form.dim_P != form.dim_g)
    problems.push_back(who + "dim K + dim P = " + std::to_string(form.dim_K + form.dim_P) +
                       " differs from dim g = " + std::to_string(form.dim_g));
  try {
    const auto rr = restricted_root_system(form);
    if (rr.positive_multiplicity_sum() != form.dim_Npm)
      problems.push_back(who + "positive restricted multiplicities sum to " +
                         std::to_string(rr.positive_multiplicity_sum()) + " but dim N = " +
                         std::to_string(form.dim_Npm));
    dim_m0(form);
    if (dim_m0_from_roots(form) != form.dim_g - 2 * form.dim_Npm - form.split_rank())
      problems.push_back(who + "dim M0 from the roots differs from dim g - 2 dim N - r");
  } catch (const Error& e) {
    problems.push_back(who + e.what());
  }
  return problems;
}

}  // namespace exlie

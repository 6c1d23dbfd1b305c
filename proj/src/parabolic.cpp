#include "exlie/parabolic.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "exlie/error.hpp"
#include "exlie/lie_labels.hpp"

namespace exlie {

namespace {

std::string sig_label(const std::string& name, int p, int q) {
  if (q > p) std::swap(p, q);
  if (q == 0) return name + "(" + std::to_string(p) + ")";
  return name + "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

std::string compact_exceptional(char family, int rank) {
  switch (family) {
    case 'G': return "G2(-14)";
    case 'F': return "F4(-52)";
    default: break;
  }
  switch (rank) {
    case 6: return "E6(-78)";
    case 7: return "E7(-133)";
    default: return "E8(-248)";
  }
}

// One Satake subdiagram component, in the component's Bourbaki order:
// black[i] and partner[i] (position of the arrow partner, or i itself).
struct Pattern {
  char family;
  int rank;
  std::vector<bool> black;
  std::vector<int> partner;

  bool none_black() const { return std::none_of(black.begin(), black.end(), [](bool b) { return b; }); }
  bool all_black() const { return std::all_of(black.begin(), black.end(), [](bool b) { return b; }); }
  bool no_arrows() const {
    for (int i = 0; i < rank; ++i)
      if (partner[static_cast<std::size_t>(i)] != i) return false;
    return true;
  }
  std::set<int> black_positions() const {  // 1-based
    std::set<int> s;
    for (int i = 0; i < rank; ++i)
      if (black[static_cast<std::size_t>(i)]) s.insert(i + 1);
    return s;
  }
  std::set<std::pair<int, int>> arrow_pairs() const {  // 1-based, i < j
    std::set<std::pair<int, int>> s;
    for (int i = 0; i < rank; ++i) {
      const int p = partner[static_cast<std::size_t>(i)];
      if (p > i) s.insert({i + 1, p + 1});
    }
    return s;
  }
};

std::optional<std::string> classify_a(const Pattern& p) {
  const int n = p.rank;
  if (p.no_arrows()) {
    if (p.none_black()) return "sl(" + std::to_string(n + 1) + ",R)";
    if (p.all_black()) return "su(" + std::to_string(n + 1) + ")";
    // Alternating: black exactly at odd positions, n odd.
    if (n % 2 == 1) {
      bool alt = true;
      for (int i = 0; i < n; ++i) alt = alt && (p.black[static_cast<std::size_t>(i)] == (i % 2 == 0));
      if (alt) return "su*(" + std::to_string(n + 1) + ")";
    }
    return std::nullopt;
  }
  // Arrows reverse the chain on the white nodes; black nodes form the middle.
  int whites = 0;
  for (int i = 0; i < n; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    if (p.black[ui]) continue;
    ++whites;
    if (p.partner[ui] != n - 1 - i) return std::nullopt;
  }
  if (p.none_black()) {
    const int half = (n + 1) / 2;
    return sig_label("su", n + 1 - half, half);
  }
  if (whites % 2 != 0) return std::nullopt;
  const int q = whites / 2;
  for (int i = 0; i < n; ++i) {
    const bool should_be_white = i < q || i >= n - q;
    if (p.black[static_cast<std::size_t>(i)] == should_be_white) return std::nullopt;
  }
  return sig_label("su", n + 1 - q, q);
}

// White prefix length of a chain whose remaining nodes are all black.
std::optional<int> white_prefix(const std::vector<bool>& black, std::size_t upto) {
  std::size_t k = 0;
  while (k < upto && !black[k]) ++k;
  for (std::size_t i = k; i < upto; ++i)
    if (!black[i]) return std::nullopt;
  return static_cast<int>(k);
}

std::optional<std::string> classify_b(const Pattern& p) {
  if (!p.no_arrows()) return std::nullopt;
  auto k = white_prefix(p.black, p.black.size());
  if (!k) return std::nullopt;
  return sig_label("so", 2 * p.rank + 1 - *k, *k);
}

std::optional<std::string> classify_c(const Pattern& p) {
  if (!p.no_arrows()) return std::nullopt;
  if (p.none_black()) return "sp(" + std::to_string(p.rank) + ",R)";
  if (p.all_black()) return "usp(" + std::to_string(2 * p.rank) + ")";
  return std::nullopt;
}

std::optional<std::string> classify_d_oriented(const Pattern& p) {
  const int n = p.rank;
  const auto& b = p.black;
  const std::size_t leg1 = static_cast<std::size_t>(n - 2), leg2 = static_cast<std::size_t>(n - 1);
  const bool legs_swapped = p.partner[leg1] == n - 1 && p.partner[leg2] == n - 2;
  // Only the two legs may carry an arrow.
  for (int i = 0; i < n - 2; ++i)
    if (p.partner[static_cast<std::size_t>(i)] != i) return std::nullopt;
  if (!legs_swapped && !p.no_arrows()) return std::nullopt;
  if (p.none_black()) return legs_swapped ? sig_label("so", n + 1, n - 1) : sig_label("so", n, n);
  if (!legs_swapped && b[leg1] && b[leg2]) {
    if (auto k = white_prefix(b, static_cast<std::size_t>(n - 2))) return sig_label("so", 2 * n - *k, *k);
  }
  // so*(2n): black at chain positions 1, 3, 5, ...; for even n one leg is
  // black and the other white, for odd n the legs carry an arrow.
  bool alt = true;
  for (int i = 0; i < n - 2; ++i) alt = alt && (b[static_cast<std::size_t>(i)] == (i % 2 == 0));
  if (alt) {
    if (n % 2 == 0 && !legs_swapped && b[leg1] != b[leg2]) return "so*(" + std::to_string(2 * n) + ")";
    if (n % 2 == 1 && legs_swapped && !b[leg1] && !b[leg2]) return "so*(" + std::to_string(2 * n) + ")";
  }
  return std::nullopt;
}

std::optional<std::string> classify_d(const Pattern& p) {
  if (p.all_black()) return "so(" + std::to_string(2 * p.rank) + ")";
  if (p.rank != 4) return classify_d_oriented(p);
  // D4: any of the three leaves may start the chain.
  const std::vector<std::array<int, 4>> orders{{0, 1, 2, 3}, {2, 1, 0, 3}, {3, 1, 2, 0}};
  for (const auto& ord : orders) {
    Pattern q = p;
    for (int i = 0; i < 4; ++i) {
      const auto src = static_cast<std::size_t>(ord[static_cast<std::size_t>(i)]);
      q.black[static_cast<std::size_t>(i)] = p.black[src];
      const int partner_src = p.partner[src];
      const auto it = std::find(ord.begin(), ord.end(), partner_src);
      q.partner[static_cast<std::size_t>(i)] = static_cast<int>(it - ord.begin());
    }
    if (auto r = classify_d_oriented(q)) return r;
  }
  return std::nullopt;
}

std::optional<std::string> classify_exceptional(const Pattern& p) {
  using S = std::set<int>;
  using A = std::set<std::pair<int, int>>;
  const S black = p.black_positions();
  const A arrows = p.arrow_pairs();
  struct Row {
    char family;
    int rank;
    S black;
    A arrows;
    const char* label;
  };
  // Black nodes and arrows in Bourbaki numbering of the component.
  static const std::vector<Row> rows{
      {'E', 6, {}, {}, "E6(6)"},
      {'E', 6, {}, {{1, 6}, {3, 5}}, "E6(2)"},
      {'E', 6, {3, 4, 5}, {{1, 6}}, "E6(-14)"},
      {'E', 6, {2, 3, 4, 5}, {}, "E6(-26)"},
      {'E', 7, {}, {}, "E7(7)"},
      {'E', 7, {2, 5, 7}, {}, "E7(-5)"},
      {'E', 7, {2, 3, 4, 5}, {}, "E7(-25)"},
      {'E', 8, {}, {}, "E8(8)"},
      {'E', 8, {2, 3, 4, 5}, {}, "E8(-24)"},
      {'F', 4, {}, {}, "F4(4)"},
      {'F', 4, {1, 2, 3}, {}, "F4(-20)"},
      {'G', 2, {}, {}, "G2(2)"},
  };
  if (p.all_black()) return compact_exceptional(p.family, p.rank);
  for (const auto& r : rows)
    if (r.family == p.family && r.rank == p.rank && r.black == black && r.arrows == arrows) return r.label;
  return std::nullopt;
}

std::string root_length_suffix(const RootSystem& rs, const std::vector<int>& nodes) {
  if (rs.family != 'F' && rs.family != 'G') return "";
  const bool long_roots = rs.node_length(nodes.front()) == 1;
  return long_roots ? "_L" : "_S";
}

std::vector<int> theta_nodes(const RealForm& form, const std::vector<int>& theta) {
  std::vector<int> nodes = form.satake.black;
  for (int t : theta) {
    if (t < 1 || t > form.split_rank())
      throw Error(ErrorKind::kInvalidIndex, form.label + ": restricted index " + std::to_string(t) +
                                                " outside 1.." + std::to_string(form.split_rank()));
    const auto& orbit = form.parabolic_nodes[static_cast<std::size_t>(t - 1)];
    nodes.insert(nodes.end(), orbit.begin(), orbit.end());
  }
  std::sort(nodes.begin(), nodes.end());
  return nodes;
}

std::vector<int> normalized_theta(const RealForm& form, std::vector<int> theta) {
  std::sort(theta.begin(), theta.end());
  if (std::adjacent_find(theta.begin(), theta.end()) != theta.end())
    throw Error(ErrorKind::kInvalidIndex, "repeated index in theta");
  for (int t : theta)
    if (t < 1 || t > form.split_rank())
      throw Error(ErrorKind::kInvalidIndex, form.label + ": restricted index " + std::to_string(t) +
                                                " outside 1.." + std::to_string(form.split_rank()));
  return theta;
}

}  // namespace

long ParabolicSubalgebra::levi_label_dim() const {
  long d = abelian_rank;
  for (const auto& f : levi_factors) d += lie_dim(f);
  return d;
}

std::string ParabolicSubalgebra::levi_label() const {
  std::vector<LieTerm> terms;
  for (const auto& f : levi_factors) {
    auto t = parse_lie_label(f);
    terms.insert(terms.end(), t.begin(), t.end());
  }
  return canonical_label(terms);
}

LeviClassification classify_levi(const RealForm& form, const std::vector<int>& theta_in) {
  const auto theta = normalized_theta(form, theta_in);
  const auto& rs = form.roots();
  const auto& sd = form.satake;
  const auto nodes = theta_nodes(form, theta);
  const auto comps = dynkin_components(rs, nodes);

  auto component_of = [&](int node) {
    for (std::size_t c = 0; c < comps.size(); ++c)
      if (std::find(comps[c].nodes.begin(), comps[c].nodes.end(), node) != comps[c].nodes.end())
        return static_cast<int>(c);
    return -1;
  };

  LeviClassification out;
  std::vector<bool> done(comps.size(), false);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (done[c]) continue;
    done[c] = true;
    const auto& comp = comps[c];
    const int other = component_of(sd.tau(comp.nodes.front()));
    if (other != static_cast<int>(c)) {
      // Two components exchanged by the arrows: a complex algebra viewed as real.
      const auto& partner = comps[static_cast<std::size_t>(other)];
      bool white = true;
      for (int v : comp.nodes) white = white && !sd.is_black(v);
      for (int v : partner.nodes) white = white && !sd.is_black(v);
      if (comp.family != 'A' || partner.family != 'A' || comp.rank != partner.rank || !white)
        throw Error(ErrorKind::kUnclassified,
                    form.label + ": arrow-exchanged components " + comp.label() + " not in lookup");
      done[static_cast<std::size_t>(other)] = true;
      out.factors.push_back("sl(" + std::to_string(comp.rank + 1) + ",C)_R");
      continue;
    }
    Pattern p{comp.family, comp.rank, {}, {}};
    for (int v : comp.nodes) {
      p.black.push_back(sd.is_black(v));
      const int t = sd.tau(v);
      const auto it = std::find(comp.nodes.begin(), comp.nodes.end(), t);
      p.partner.push_back(static_cast<int>(it - comp.nodes.begin()));
    }
    std::optional<std::string> label;
    switch (comp.family) {
      case 'A': label = classify_a(p); break;
      case 'B': label = classify_b(p); break;
      case 'C': label = classify_c(p); break;
      case 'D': label = classify_d(p); break;
      default: label = classify_exceptional(p); break;
    }
    if (!label) {
      std::string desc;
      for (std::size_t i = 0; i < p.black.size(); ++i) desc += p.black[i] ? 'b' : 'w';
      throw Error(ErrorKind::kUnclassified,
                  form.label + ": Satake subdiagram " + comp.label() + " [" + desc + "] not in lookup");
    }
    if (comp.family == 'A') *label += root_length_suffix(rs, comp.nodes);
    out.factors.push_back(*label);
  }
  const int r = form.split_rank();
  out.abelian_rank = rs.rank - static_cast<int>(nodes.size()) - (r - static_cast<int>(theta.size()));
  // Largest factors first, ties by spelling, for a stable presentation.
  std::stable_sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    const long da = lie_dim(a), db = lie_dim(b);
    return da != db ? da > db : a < b;
  });
  return out;
}

ParabolicSubalgebra standard_parabolic(const RealForm& form, const std::vector<int>& theta_in) {
  const auto theta = normalized_theta(form, theta_in);
  const int r = form.split_rank();
  ParabolicSubalgebra p;
  p.form = form.label;
  p.theta = theta;
  p.dim_a_theta = r - static_cast<int>(theta.size());
  p.is_maximal = p.dim_a_theta == 1;
  std::vector<bool> kept(static_cast<std::size_t>(r), false);
  for (int t : theta) kept[static_cast<std::size_t>(t - 1)] = true;
  for (int j = 1; j <= r; ++j) {
    if (kept[static_cast<std::size_t>(j - 1)]) continue;
    if (p.is_maximal) p.deleted_node = j;
    const auto& orbit = form.parabolic_nodes[static_cast<std::size_t>(j - 1)];
    p.removed_simple_nodes.insert(p.removed_simple_nodes.end(), orbit.begin(), orbit.end());
  }
  std::sort(p.removed_simple_nodes.begin(), p.removed_simple_nodes.end());

  // Roots: restriction coordinates decide membership in M_theta and N_theta.
  const auto coords = restriction_coords(form);
  int m_roots = 0;
  for (const auto& c : coords) {
    bool in_m = true, positive_outside = false;
    for (int j = 0; j < r; ++j) {
      if (kept[static_cast<std::size_t>(j)]) continue;
      if (c[static_cast<std::size_t>(j)] != 0) in_m = false;
      if (c[static_cast<std::size_t>(j)] > 0) positive_outside = true;
    }
    if (in_m) ++m_roots;
    // A root lies in N_theta when it is positive with some coordinate
    // outside theta; positivity of a restricted root is positivity of its
    // coordinates, which are all >= 0 or all <= 0.
    if (positive_outside) ++p.dim_n_theta;
  }
  p.dim_m_theta = form.roots().rank + m_roots - p.dim_a_theta;

  auto levi = classify_levi(form, theta);
  p.levi_factors = std::move(levi.factors);
  p.abelian_rank = levi.abelian_rank;
  if (p.levi_label_dim() != p.dim_m_theta)
    throw Error(ErrorKind::kInconsistent,
                form.label + ": Levi labels have dimension " + std::to_string(p.levi_label_dim()) +
                    " but M has dimension " + std::to_string(p.dim_m_theta));
  return p;
}

ParabolicSubalgebra maximal_parabolic(const RealForm& form, int j) {
  const int r = form.split_rank();
  if (j < 1 || j > r)
    throw Error(ErrorKind::kInvalidIndex,
                form.label + ": node " + std::to_string(j) + " outside 1.." + std::to_string(r));
  std::vector<int> theta;
  for (int t = 1; t <= r; ++t)
    if (t != j) theta.push_back(t);
  return standard_parabolic(form, theta);
}

std::vector<ParabolicSubalgebra> maximal_parabolics(const RealForm& form) {
  std::vector<ParabolicSubalgebra> out;
  for (int j = 1; j <= form.split_rank(); ++j) out.push_back(maximal_parabolic(form, j));
  return out;
}

std::vector<ParabolicSubalgebra> all_standard_parabolics(const RealForm& form) {
  const int r = form.split_rank();
  std::vector<ParabolicSubalgebra> out;
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    std::vector<int> theta;
    for (int t = 0; t < r; ++t)
      if (mask & (1u << t)) theta.push_back(t + 1);
    out.push_back(standard_parabolic(form, theta));
  }
  return out;
}

int GradingProfile::total() const {
  int s = 0;
  for (const auto& [k, d] : grades) s += d;
  return s;
}

int GradingProfile::positive_sum() const {
  int s = 0;
  for (const auto& [k, d] : grades)
    if (k > 0) s += d;
  return s;
}

GradingProfile grading_profile(const RealForm& form, int j) {
  if (j < 1 || j > form.split_rank())
    throw Error(ErrorKind::kInvalidIndex, form.label + ": node " + std::to_string(j) + " out of range");
  GradingProfile g;
  g.deleted_node = j;
  g.grades[0] = form.roots().rank;
  for (const auto& c : restriction_coords(form)) {
    const int k = c[static_cast<std::size_t>(j - 1)];
    ++g.grades[k];
    g.depth = std::max(g.depth, std::abs(k));
  }
  return g;
}

LengthCounts long_short_counts(const RealForm& form, int j) {
  if (j < 1 || j > form.split_rank())
    throw Error(ErrorKind::kInvalidIndex, form.label + ": node " + std::to_string(j) + " out of range");
  const auto rr = restricted_root_system(form);
  std::set<Rational> lengths;
  for (const auto& r : rr.roots) lengths.insert(r.relative_length);
  if (lengths.size() < 2)
    throw Error(ErrorKind::kNotApplicable,
                form.label + ": restricted root system " + rr.reduced_type + " has a single root length");
  const Rational shortest = *lengths.begin();
  LengthCounts out;
  for (const auto& r : rr.roots) {
    if (!r.positive() || r.coords[static_cast<std::size_t>(j - 1)] <= 0) continue;
    if (r.relative_length == 1) {
      out.long_count += r.multiplicity;
    } else if (r.relative_length == shortest) {
      out.short_count += r.multiplicity;
    } else {
      out.medium_count += r.multiplicity;
    }
  }
  return out;
}

}  // namespace exlie

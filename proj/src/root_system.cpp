#include "exlie/root_system.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <set>

#include "exlie/error.hpp"

namespace exlie {

namespace {

Vec ambient(std::size_t n, std::initializer_list<std::pair<std::size_t, Rational>> terms) {
  Vec v(n);
  for (const auto& [i, c] : terms) v[i] += c;
  return v;
}

Rational half(long num) { return make_rational(num, 2); }

// Bourbaki simple roots of E8 in R^8; E7 and E6 use the first 7 and 6.
std::vector<Vec> e8_simple() {
  std::vector<Vec> s;
  Vec a1(8);
  a1[0] = half(1);
  a1[7] = half(1);
  for (int i = 1; i <= 6; ++i) a1[static_cast<std::size_t>(i)] = half(-1);
  s.push_back(a1);
  s.push_back(ambient(8, {{0, 1}, {1, 1}}));
  for (std::size_t i = 1; i <= 6; ++i) s.push_back(ambient(8, {{i, 1}, {i - 1, -1}}));
  return s;
}

struct TypeSpec {
  char family;
  int rank;
};

TypeSpec parse_type(const std::string& type) {
  if (type.size() < 2) throw Error(ErrorKind::kUnsupported, "unsupported root system type: " + type);
  char f = type[0];
  int n = 0;
  try {
    std::size_t pos = 0;
    n = std::stoi(type.substr(1), &pos);
    if (pos != type.size() - 1) n = 0;
  } catch (const std::exception&) {
    n = 0;
  }
  bool ok = (f == 'A' && n >= 1) || (f == 'B' && n >= 2) || (f == 'C' && n >= 2) ||
            (f == 'D' && n >= 4) || (f == 'E' && n >= 6 && n <= 8) || (f == 'F' && n == 4) ||
            (f == 'G' && n == 2);
  if (!ok) throw Error(ErrorKind::kUnsupported, "unsupported root system type: " + type);
  return {f, n};
}

// Simple roots in Bourbaki numbering.
std::vector<Vec> bourbaki_simple(const TypeSpec& t) {
  const auto n = static_cast<std::size_t>(t.rank);
  std::vector<Vec> s;
  switch (t.family) {
    case 'A':
      for (std::size_t i = 0; i < n; ++i) s.push_back(ambient(n + 1, {{i, 1}, {i + 1, -1}}));
      break;
    case 'B':
    case 'C':
    case 'D':
      for (std::size_t i = 0; i + 1 < n; ++i) s.push_back(ambient(n, {{i, 1}, {i + 1, -1}}));
      if (t.family == 'B') s.push_back(ambient(n, {{n - 1, 1}}));
      if (t.family == 'C') s.push_back(ambient(n, {{n - 1, 2}}));
      if (t.family == 'D') s.push_back(ambient(n, {{n - 2, 1}, {n - 1, 1}}));
      break;
    case 'E': {
      auto e8 = e8_simple();
      s.assign(e8.begin(), e8.begin() + t.rank);
      break;
    }
    case 'F':
      s.push_back(ambient(4, {{1, 1}, {2, -1}}));
      s.push_back(ambient(4, {{2, 1}, {3, -1}}));
      s.push_back(ambient(4, {{3, 1}}));
      s.push_back(ambient(4, {{0, half(1)}, {1, half(-1)}, {2, half(-1)}, {3, half(-1)}}));
      break;
    case 'G':
      s.push_back(ambient(3, {{0, 1}, {1, -1}}));
      s.push_back(ambient(3, {{0, -2}, {1, 1}, {2, 1}}));
      break;
    default:
      break;
  }
  return s;
}

// Node i (0-based) of this project's numbering -> Bourbaki label.
std::vector<int> bourbaki_map(const TypeSpec& t) {
  switch (t.family) {
    case 'E': {
      std::vector<int> m{1};
      for (int i = 3; i <= t.rank; ++i) m.push_back(i);
      m.push_back(2);
      return m;
    }
    case 'G':
      return {2, 1};
    default: {
      std::vector<int> m;
      for (int i = 1; i <= t.rank; ++i) m.push_back(i);
      return m;
    }
  }
}

}  // namespace

Rational RootSystem::relative_length(int index) const {
  const Vec& r = all_roots[static_cast<std::size_t>(index)];
  Rational longest = 0;
  for (int i = 0; i < rank; ++i) longest = std::max(longest, gram.at(i, i));
  return dot(r, r) / longest;
}

Rational RootSystem::node_length(int node) const {
  Rational longest = 0;
  for (int i = 0; i < rank; ++i) longest = std::max(longest, gram.at(i, i));
  return gram.at(node - 1, node - 1) / longest;
}

bool RootSystem::is_positive(int index) const {
  for (int c : coefficients[static_cast<std::size_t>(index)]) {
    if (c != 0) return c > 0;
  }
  return false;
}

int RootSystem::find(const std::vector<int>& coeffs) const {
  auto it = std::find(coefficients.begin(), coefficients.end(), coeffs);
  return it == coefficients.end() ? -1 : static_cast<int>(it - coefficients.begin());
}

RootSystem build_root_system(const std::string& type) {
  const TypeSpec t = parse_type(type);
  RootSystem rs;
  rs.type = type;
  rs.family = t.family;
  rs.rank = t.rank;
  rs.bourbaki_index = bourbaki_map(t);
  const auto bourbaki = bourbaki_simple(t);
  for (int b : rs.bourbaki_index) rs.simple_roots.push_back(bourbaki[static_cast<std::size_t>(b - 1)]);

  const auto n = static_cast<std::size_t>(t.rank);
  rs.gram = RatMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rs.gram.at(i, j) = dot(rs.simple_roots[i], rs.simple_roots[j]);
  rs.cartan.assign(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational c = 2 * rs.gram.at(i, j) / rs.gram.at(j, j);
      if (c.get_den() != 1) throw Error(ErrorKind::kInconsistent, "non-integral Cartan entry");
      rs.cartan[i][j] = static_cast<int>(c.get_num().get_si());
    }
  }

  // Reflection closure on coefficient vectors:
  // s_j(b) = b - <b, a_j^v> a_j with <b, a_j^v> = sum_i b_i cartan[i][j].
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    if (seen.insert(e).second) queue.push_back(e);
  }
  while (!queue.empty()) {
    auto b = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < n; ++j) {
      int pairing = 0;
      for (std::size_t i = 0; i < n; ++i) pairing += b[i] * rs.cartan[i][j];
      if (pairing == 0) continue;
      auto r = b;
      r[j] -= pairing;
      if (seen.insert(r).second) queue.push_back(r);
    }
  }
  // Order: positive roots by height then lexicographically, then negatives.
  std::vector<std::vector<int>> positive;
  for (const auto& c : seen) {
    bool pos = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
    bool neg = std::all_of(c.begin(), c.end(), [](int x) { return x <= 0; });
    if (!pos && !neg) throw Error(ErrorKind::kInconsistent, "root with mixed-sign coefficients");
    if (pos) positive.push_back(c);
  }
  auto height = [](const std::vector<int>& c) {
    int h = 0;
    for (int x : c) h += x;
    return h;
  };
  std::sort(positive.begin(), positive.end(), [&](const auto& a, const auto& b) {
    int ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a > b;
  });
  rs.coefficients = positive;
  for (const auto& c : positive) {
    std::vector<int> m(c.size());
    std::transform(c.begin(), c.end(), m.begin(), [](int x) { return -x; });
    rs.coefficients.push_back(m);
  }
  for (const auto& c : rs.coefficients) {
    Vec v(rs.simple_roots[0].size());
    for (std::size_t i = 0; i < n; ++i)
      if (c[i] != 0) v = add(v, scale(Rational(c[i]), rs.simple_roots[i]));
    rs.all_roots.push_back(std::move(v));
  }
  return rs;
}

const RootSystem& root_system(const std::string& type) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<RootSystem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(type);
  if (it == cache.end())
    it = cache.emplace(type, std::make_unique<RootSystem>(build_root_system(type))).first;
  return *it->second;
}

std::string DynkinComponent::label() const { return std::string(1, family) + std::to_string(rank); }

namespace {

// Walks a path from `start` away from `prev` through nodes in `members`.
std::vector<int> walk_arm(const std::map<int, std::vector<int>>& adj, int start, int prev) {
  std::vector<int> arm{start};
  int cur = start;
  while (true) {
    int next = -1;
    for (int x : adj.at(cur))
      if (x != prev) next = x;
    if (next < 0 || adj.at(cur).size() > 2) break;
    prev = cur;
    cur = next;
    arm.push_back(cur);
  }
  return arm;
}

DynkinComponent classify_component(const RootSystem& rs, const std::vector<int>& members) {
  auto bond = [&](int a, int b) { return rs.cartan[a - 1][b - 1] * rs.cartan[b - 1][a - 1]; };
  std::map<int, std::vector<int>> adj;
  int max_bond = 0;
  for (int a : members) {
    adj[a];
    for (int b : members) {
      if (a != b && bond(a, b) != 0) {
        adj[a].push_back(b);
        max_bond = std::max(max_bond, bond(a, b));
      }
    }
  }
  const int n = static_cast<int>(members.size());
  auto unclassified = [&]() {
    return Error(ErrorKind::kUnclassified, "subdiagram is not a finite Dynkin diagram");
  };
  DynkinComponent comp;
  comp.rank = n;
  if (n == 1) {
    comp.family = 'A';
    comp.nodes = members;
    return comp;
  }
  std::vector<int> branch, leaves;
  for (const auto& [v, nb] : adj) {
    if (nb.size() >= 3) branch.push_back(v);
    if (nb.size() == 1) leaves.push_back(v);
    if (nb.size() > 3) throw unclassified();
  }
  if (branch.size() > 1 || (branch.empty() && leaves.size() != 2)) throw unclassified();

  if (branch.size() == 1) {
    if (max_bond != 1) throw unclassified();
    const int b = branch[0];
    std::vector<std::vector<int>> arms;
    for (int x : adj.at(b)) arms.push_back(walk_arm(adj, x, b));
    std::sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) {
      return x.size() != y.size() ? x.size() < y.size() : x.back() < y.back();
    });
    const std::size_t a0 = arms[0].size(), a1 = arms[1].size(), a2 = arms[2].size();
    if (a0 == 1 && a1 == 1) {
      // D_n: chain from the far end of the longest arm to the branch, then legs.
      comp.family = 'D';
      std::vector<std::vector<int>> order = arms;
      if (a2 == 1) {
        // D4: all arms are single leaves; the smallest label starts the chain.
        std::sort(order.begin(), order.end());
        comp.nodes = {order[0][0], b, order[1][0], order[2][0]};
      } else {
        std::vector<int> chain(order[2].rbegin(), order[2].rend());
        chain.push_back(b);
        chain.push_back(std::min(order[0][0], order[1][0]));
        chain.push_back(std::max(order[0][0], order[1][0]));
        comp.nodes = chain;
      }
      return comp;
    }
    if (a0 == 1 && a1 == 2 && a2 >= 2 && a2 <= 4) {
      comp.family = 'E';
      std::vector<int> two = arms[1], lng = arms[2];
      if (a2 == 2 && lng.back() < two.back()) std::swap(two, lng);
      // Bourbaki: 1 = end of the length-two arm, 2 = short arm, 3 = inner
      // node of the length-two arm, 4 = branch, 5.. = long arm outward.
      comp.nodes = {two[1], arms[0][0], two[0], b};
      comp.nodes.insert(comp.nodes.end(), lng.begin(), lng.end());
      return comp;
    }
    throw unclassified();
  }

  // Chains.
  std::vector<int> chain = walk_arm(adj, std::min(leaves[0], leaves[1]), -1);
  if (static_cast<int>(chain.size()) != n) throw unclassified();
  if (max_bond == 1) {
    comp.family = 'A';
    comp.nodes = chain;
    return comp;
  }
  if (max_bond == 3) {
    if (n != 2) throw unclassified();
    comp.family = 'G';
    comp.nodes = chain;
    if (rs.node_length(chain[0]) > rs.node_length(chain[1])) std::swap(comp.nodes[0], comp.nodes[1]);
    return comp;
  }
  int doubles = 0;
  for (int i = 0; i + 1 < n; ++i)
    if (bond(chain[i], chain[i + 1]) == 2) ++doubles;
  if (doubles != 1) throw unclassified();
  // Orient the chain so that it starts at a long node.
  Rational top = 0;
  for (int v : chain) top = std::max(top, rs.node_length(v));
  if (rs.node_length(chain.front()) != top) std::reverse(chain.begin(), chain.end());
  int shorts = 0;
  for (int v : chain)
    if (rs.node_length(v) != top) ++shorts;
  if (n == 4 && bond(chain[1], chain[2]) == 2) {
    comp.family = 'F';
  } else if (n == 2 || shorts == 1) {
    comp.family = 'B';
    if (bond(chain[n - 2], chain[n - 1]) != 2) throw unclassified();
  } else if (shorts == n - 1) {
    comp.family = 'C';
    // C_n chain ends at the long node.
    std::reverse(chain.begin(), chain.end());
    if (bond(chain[n - 2], chain[n - 1]) != 2) throw unclassified();
  } else {
    throw unclassified();
  }
  comp.nodes = chain;
  return comp;
}

}  // namespace

std::vector<DynkinComponent> dynkin_components(const RootSystem& rs, const std::vector<int>& nodes) {
  std::set<int> remaining;
  for (int v : nodes) {
    if (v < 1 || v > rs.rank) throw Error(ErrorKind::kInvalidIndex, "node index out of range");
    remaining.insert(v);
  }
  std::vector<DynkinComponent> out;
  while (!remaining.empty()) {
    std::vector<int> members;
    std::deque<int> queue{*remaining.begin()};
    remaining.erase(remaining.begin());
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      members.push_back(v);
      for (auto it = remaining.begin(); it != remaining.end();) {
        if (rs.cartan[v - 1][*it - 1] != 0) {
          queue.push_back(*it);
          it = remaining.erase(it);
        } else {
          ++it;
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(classify_component(rs, members));
  }
  return out;
}

std::vector<std::string> classify_subsystem(const RootSystem& rs, const std::vector<int>& nodes) {
  std::vector<std::string> labels;
  for (const auto& c : dynkin_components(rs, nodes)) labels.push_back(c.label());
  std::sort(labels.begin(), labels.end());
  return labels;
}

std::vector<int> grade_vector(const RootSystem& rs, const std::vector<int>& nodes) {
  for (int v : nodes)
    if (v < 1 || v > rs.rank) throw Error(ErrorKind::kInvalidIndex, "node index out of range");
  std::vector<int> grades;
  grades.reserve(rs.coefficients.size());
  for (const auto& c : rs.coefficients) {
    int g = 0;
    for (int v : nodes) g += c[static_cast<std::size_t>(v - 1)];
    grades.push_back(g);
  }
  return grades;
}

std::vector<int> grade_vector(const RootSystem& rs, int node) {
  return grade_vector(rs, std::vector<int>{node});
}

}  // namespace exlie

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "exlie/error.hpp"
#include "exlie/root_system.hpp"

using namespace exlie;

namespace {

// Independent Cartan-matrix oracle in Bourbaki numbering built from a
// bond list {long-or-equal node, other node, multiplicity}.
struct Bond {
  int a, b, mult;  // a is the longer (or equal) node
};
std::vector<std::vector<int>> cartan_from_bonds(int n, const std::vector<Bond>& bonds) {
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  for (const auto& b : bonds) {
    c[b.a - 1][b.b - 1] = -b.mult;
    c[b.b - 1][b.a - 1] = -1;
  }
  return c;
}

std::vector<std::vector<int>> bourbaki_cartan(const std::string& type) {
  if (type == "E6" || type == "E7" || type == "E8") {
    int n = type[1] - '0';
    std::vector<Bond> bonds{{1, 3, 1}, {2, 4, 1}};
    for (int i = 3; i < n; ++i) bonds.push_back({i, i + 1, 1});
    return cartan_from_bonds(n, bonds);
  }
  if (type == "F4") return cartan_from_bonds(4, {{1, 2, 1}, {2, 3, 2}, {3, 4, 1}});
  if (type == "G2") return cartan_from_bonds(2, {{2, 1, 3}});
  int n = std::stoi(type.substr(1));
  std::vector<Bond> bonds;
  for (int i = 1; i + 1 < n; ++i) bonds.push_back({i, i + 1, 1});
  switch (type[0]) {
    case 'A': bonds.push_back({n - 1, n, 1}); break;
    case 'B': bonds.push_back({n - 1, n, 2}); break;
    case 'C': bonds.push_back({n, n - 1, 2}); break;
    case 'D': bonds.push_back({n - 2, n, 1}); break;
  }
  if (n == 1) bonds.clear();
  return cartan_from_bonds(n, bonds);
}

long expected_root_count(const std::string& type) {
  static const std::map<std::string, long> counts{{"E6", 72}, {"E7", 126}, {"E8", 240},
                                                  {"F4", 48}, {"G2", 12}};
  auto it = counts.find(type);
  if (it != counts.end()) return it->second;
  long n = std::stol(type.substr(1));
  switch (type[0]) {
    case 'A': return n * (n + 1);
    case 'B':
    case 'C': return 2 * n * n;
    case 'D': return 2 * n * (n - 1);
  }
  return -1;
}

const std::vector<std::string> kTypes{"A1", "A2", "A5", "A7", "B2", "B3", "B5", "C3",
                                      "C4", "D4", "D5", "D7", "E6", "E7", "E8", "F4", "G2"};

}  // namespace

TEST_CASE("root counts and dimensions") {
  for (const auto& t : kTypes) {
    CAPTURE(t);
    const auto& rs = root_system(t);
    CHECK(rs.num_roots() == expected_root_count(t));
    CHECK(rs.dim() == rs.rank + rs.num_roots());
  }
  CHECK(root_system("E8").dim() == 248);
  CHECK(root_system("G2").dim() == 14);
  CHECK(root_system("A1").dim() == 3);
  CHECK(root_system("E7").dim() == 133);
  CHECK(root_system("E6").dim() == 78);
  CHECK(root_system("F4").dim() == 52);
}

TEST_CASE("Cartan matrices match the Dynkin oracle after renumbering") {
  for (const auto& t : kTypes) {
    CAPTURE(t);
    const auto& rs = root_system(t);
    auto oracle = bourbaki_cartan(t);
    for (int i = 0; i < rs.rank; ++i)
      for (int j = 0; j < rs.rank; ++j)
        CHECK(rs.cartan[i][j] == oracle[rs.bourbaki_index[i] - 1][rs.bourbaki_index[j] - 1]);
  }
  // Exceptional numbering: the branch node carries the last label.
  CHECK(root_system("E6").bourbaki_index == std::vector<int>{1, 3, 4, 5, 6, 2});
  CHECK(root_system("E7").bourbaki_index == std::vector<int>{1, 3, 4, 5, 6, 7, 2});
  CHECK(root_system("E8").bourbaki_index == std::vector<int>{1, 3, 4, 5, 6, 7, 8, 2});
  // G2: node 1 is long.
  CHECK(root_system("G2").node_length(1) == 1);
  CHECK(root_system("G2").node_length(2) == make_rational(1, 3));
}

TEST_CASE("root system closure and sign coherence") {
  for (const auto& t : kTypes) {
    CAPTURE(t);
    const auto& rs = root_system(t);
    std::set<Vec> roots(rs.all_roots.begin(), rs.all_roots.end());
    CHECK(roots.size() == rs.all_roots.size());
    int positives = 0;
    for (std::size_t i = 0; i < rs.all_roots.size(); ++i) {
      const auto& c = rs.coefficients[i];
      bool nonneg = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
      bool nonpos = std::all_of(c.begin(), c.end(), [](int x) { return x <= 0; });
      CHECK((nonneg || nonpos));
      if (nonneg) ++positives;
      CHECK(roots.count(scale(Rational(-1), rs.all_roots[i])) == 1);
      // Ambient vector agrees with the coefficient expansion.
      Vec v(rs.simple_roots[0].size());
      for (int k = 0; k < rs.rank; ++k) v = add(v, scale(Rational(c[k]), rs.simple_roots[k]));
      CHECK(v == rs.all_roots[i]);
    }
    CHECK(positives * 2 == rs.num_roots());
    // alpha + beta is a root when (alpha, beta) < 0, alpha - beta when > 0.
    int tested = 0;
    for (std::size_t i = 0; i < rs.all_roots.size() && tested < 4000; ++i) {
      for (std::size_t j = i + 1; j < rs.all_roots.size() && tested < 4000; ++j, ++tested) {
        Vec s = add(rs.all_roots[i], rs.all_roots[j]);
        if (is_zero(s)) continue;
        if (dot(rs.all_roots[i], rs.all_roots[j]) < 0) CHECK(roots.count(s) == 1);
        if (dot(rs.all_roots[i], rs.all_roots[j]) > 0 && rs.all_roots[i] != rs.all_roots[j])
          CHECK(roots.count(sub(rs.all_roots[i], rs.all_roots[j])) == 1);
      }
    }
  }
}

TEST_CASE("root lengths") {
  const auto& f4 = root_system("F4");
  int longs = 0;
  for (int i = 0; i < f4.num_roots(); ++i) longs += f4.is_long(i);
  CHECK(longs == 24);
  const auto& g2 = root_system("G2");
  longs = 0;
  for (int i = 0; i < g2.num_roots(); ++i) longs += g2.is_long(i);
  CHECK(longs == 6);
  const auto& e8 = root_system("E8");
  for (int i = 0; i < e8.num_roots(); ++i) CHECK(e8.is_long(i));
}

TEST_CASE("classify_subsystem") {
  using L = std::vector<std::string>;
  CHECK(classify_subsystem(root_system("E6"), {2, 3, 4, 5, 6}) == L{"D5"});
  CHECK(classify_subsystem(root_system("E8"), {1, 2, 3, 4, 5, 6, 8}) == L{"E7"});
  CHECK(classify_subsystem(root_system("F4"), {2, 3, 4}) == L{"C3"});
  CHECK(classify_subsystem(root_system("F4"), {1, 2, 3}) == L{"B3"});
  CHECK(classify_subsystem(root_system("E6"), {1, 2, 4, 5, 6}) == L{"A1", "A2", "A2"});
  CHECK(classify_subsystem(root_system("E7"), {1, 2, 4, 5, 6, 7}) == L{"A1", "A2", "A3"});
  CHECK(classify_subsystem(root_system("E6"), {1, 2, 3, 4, 5}) == L{"A5"});
  CHECK(classify_subsystem(root_system("E7"), {1, 2, 3, 4, 5, 7}) == L{"E6"});
  CHECK(classify_subsystem(root_system("F4"), {1, 2}) == L{"A2"});
  CHECK(classify_subsystem(root_system("F4"), {2, 3}) == L{"B2"});
  CHECK(classify_subsystem(root_system("D5"), {1, 2, 4, 5}) == L{"A1", "A1", "A2"});
  CHECK(classify_subsystem(root_system("D5"), {3, 4, 5}) == L{"A3"});
  CHECK(classify_subsystem(root_system("G2"), {1}) == L{"A1"});
  CHECK(classify_subsystem(root_system("E6"), {}) == L{});
  // Full node set returns the ambient type.
  for (const auto& t : kTypes) {
    const auto& rs = root_system(t);
    std::vector<int> all;
    for (int i = 1; i <= rs.rank; ++i) all.push_back(i);
    CHECK(classify_subsystem(rs, all) == L{t == "B2" ? "B2" : t});
  }
  CHECK_THROWS_AS(classify_subsystem(root_system("E6"), {7}), Error);
}

TEST_CASE("component node order") {
  // E7 minus node 1 is D6: chain from the far end of the long arm.
  auto comps = dynkin_components(root_system("E7"), {2, 3, 4, 5, 6, 7});
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].label() == "D6");
  CHECK(comps[0].nodes == std::vector<int>{6, 5, 4, 3, 2, 7});
  comps = dynkin_components(root_system("E8"), {1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(comps[0].nodes == std::vector<int>{1, 8, 2, 3, 4, 5, 6, 7});
  comps = dynkin_components(root_system("F4"), {1, 2, 3});
  CHECK(comps[0].nodes == std::vector<int>{1, 2, 3});
  comps = dynkin_components(root_system("F4"), {2, 3, 4});
  CHECK(comps[0].label() == "C3");
  CHECK(comps[0].nodes == std::vector<int>{4, 3, 2});
  comps = dynkin_components(root_system("G2"), {1, 2});
  CHECK(comps[0].nodes == std::vector<int>{2, 1});
}

TEST_CASE("grade vectors") {
  const auto& e6 = root_system("E6");
  auto g = grade_vector(e6, 1);
  std::map<int, int> hist;
  for (int x : g) ++hist[x];
  CHECK(hist == std::map<int, int>{{-1, 16}, {0, 40}, {1, 16}});

  const auto& e7 = root_system("E7");
  hist.clear();
  for (int x : grade_vector(e7, 1)) ++hist[x];
  CHECK(hist[2] == 1);
  CHECK(hist[-2] == 1);
  CHECK(hist.begin()->first == -2);
  CHECK(hist.rbegin()->first == 2);

  for (const auto& t : kTypes) {
    const auto& rs = root_system(t);
    for (int j = 1; j <= rs.rank; ++j) {
      auto gv = grade_vector(rs, j);
      long sum = 0;
      std::map<int, int> h;
      for (int x : gv) {
        sum += x;
        ++h[x];
      }
      CHECK(sum == 0);
      for (const auto& [k, c] : h) CHECK(h[-k] == c);
      // Grade zero exactly on the subsystem of the remaining nodes.
      for (std::size_t i = 0; i < gv.size(); ++i) {
        bool in_sub = rs.coefficients[i][j - 1] == 0;
        CHECK((gv[i] == 0) == in_sub);
      }
    }
  }
  CHECK_THROWS_AS(grade_vector(e6, 0), Error);
}

TEST_CASE("unsupported types") {
  CHECK_THROWS_AS(build_root_system("E9"), Error);
  CHECK_THROWS_AS(build_root_system("H3"), Error);
  CHECK_THROWS_AS(build_root_system("B1"), Error);
  CHECK_THROWS_AS(build_root_system(""), Error);
  CHECK_THROWS_AS(build_root_system("A0"), Error);
}

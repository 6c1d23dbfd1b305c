#include "exlie/tables.hpp"

namespace exlie {

const std::vector<MaxParabolicRow>& max_parabolic_table() {
  using LS = std::pair<int, int>;
  static const std::vector<MaxParabolicRow> rows{
      // E6(6)
      {"E6(6)", 1, "so(5,5)", 0, 16, {}},
      {"E6(6)", 2, "sl(6,R)", 0, 21, {}},
      {"E6(6)", 3, "sl(5,R)+sl(2,R)", 0, 25, {}},
      {"E6(6)", 4, "sl(3,R)+sl(3,R)+sl(2,R)", 0, 29, {}},
      {"E6(6)", 5, "so(5,5)", 0, 16, {}},
      {"E6(6)", 6, "sl(5,R)+sl(2,R)", 0, 25, {}},
      // E6(2)
      {"E6(2)", 1, "so(5,3)", 1, 24, {}},
      {"E6(2)", 2, "sl(3,R)+sl(2,C)_R", 1, 31, {}},
      {"E6(2)", 3, "sl(3,C)_R+sl(2,R)", 0, 29, {}},
      {"E6(2)", 4, "su(3,3)", 0, 21, {}},
      // E6(-14)
      {"E6(-14)", 1, "so(7,1)", 1, 24, {}},
      {"E6(-14)", 2, "su(5,1)", 0, 21, {}},
      // E6(-26)
      {"E6(-26)", 1, "so(9,1)", 0, 16, {}},
      {"E6(-26)", 2, "so(9,1)", 0, 16, {}},
      // E7(7)
      {"E7(7)", 1, "so(6,6)", 0, 33, {}},
      {"E7(7)", 2, "sl(6,R)+sl(2,R)", 0, 47, {}},
      {"E7(7)", 3, "sl(4,R)+sl(3,R)+sl(2,R)", 0, 53, {}},
      {"E7(7)", 4, "sl(5,R)+sl(3,R)", 0, 50, {}},
      {"E7(7)", 5, "so(5,5)+sl(2,R)", 0, 42, {}},
      {"E7(7)", 6, "E6(6)", 0, 27, {}},
      {"E7(7)", 7, "sl(7,R)", 0, 42, {}},
      // E7(-5)
      {"E7(-5)", 1, "so*(12)", 0, 33, {}},
      {"E7(-5)", 2, "so(7,3)+su(2)", 0, 42, {}},
      {"E7(-5)", 3, "su*(6)+sl(2,R)", 0, 47, {}},
      {"E7(-5)", 4, "so(5,1)+sl(3,R)+su(2)", 0, 53, {}},
      // E7(-25); the printed dim N subscripts run 3, 2, 1 against M_1, M_2,
      // M_3 -- the values are paired with the Levi factor on the same line.
      {"E7(-25)", 1, "so(10,2)", 0, 33, {}},
      {"E7(-25)", 2, "so(9,1)+sl(2,R)", 0, 42, {}},
      {"E7(-25)", 3, "E6(-26)", 0, 27, {}},
      // E8(8)
      {"E8(8)", 1, "so(7,7)", 0, 78, {}},
      {"E8(8)", 2, "sl(7,R)+sl(2,R)", 0, 98, {}},
      {"E8(8)", 3, "sl(5,R)+sl(3,R)+sl(2,R)", 0, 106, {}},
      {"E8(8)", 4, "sl(5,R)+sl(4,R)", 0, 104, {}},
      {"E8(8)", 5, "so(5,5)+sl(3,R)", 0, 97, {}},
      {"E8(8)", 6, "E6(6)+sl(2,R)", 0, 83, {}},
      {"E8(8)", 7, "E7(7)", 0, 57, {}},
      {"E8(8)", 8, "sl(8,R)", 0, 92, {}},
      // E8(-24)
      {"E8(-24)", 1, "so(11,3)", 0, 78, {}},
      {"E8(-24)", 2, "so(9,1)+sl(3,R)", 0, 97, {}},
      {"E8(-24)", 3, "E6(-26)+sl(2,R)", 0, 83, {}},
      {"E8(-24)", 4, "E7(-25)", 0, 57, {}},
      // F4(4)
      {"F4(4)", 1, "sl(3,R)_S+sl(2,R)_L", 0, 20, LS{11, 9}},
      {"F4(4)", 2, "sl(3,R)_L+sl(2,R)_S", 0, 20, LS{9, 11}},
      {"F4(4)", 3, "sp(3,R)", 0, 15, LS{9, 6}},
      {"F4(4)", 4, "so(4,3)", 0, 15, LS{6, 9}},
      // F4(-20)
      {"F4(-20)", 1, "so(7)", 0, 15, {}},
      // G2(2): P1 keeps the long simple root, P2 the short one.
      {"G2(2)", 1, "sl(2,R)_L", 0, 5, LS{2, 3}},
      {"G2(2)", 2, "sl(2,R)_S", 0, 5, LS{3, 2}},
  };
  return rows;
}

const std::vector<GradingRow>& grading_table() {
  static const std::vector<GradingRow> rows{
      {"E6(6)", "1", 1, 3, {{1, 16}}, "isomorphic to index 5"},
      {"E6(6)", "2", 2, 5, {{1, 20}, {2, 1}}, ""},
      {"E6(6)", "3", 3, 5, {{1, 20}, {2, 5}}, "isomorphic to index 6"},
      {"E6(6)", "4", 4, 7, {{1, 18}, {2, 9}, {3, 2}}, ""},
      {"E6(2)", "1", 1, 5, {{1, 16}, {2, 8}}, ""},
      {"E6(2)", "2", 2, 9, {{1, 12}, {2, 12}, {3, 4}, {4, 3}}, ""},
      {"E6(2)", "3", 3, 7, {{1, 18}, {2, 9}, {3, 2}}, ""},
      {"E6(2)", "4", 4, 5, {{1, 20}, {2, 1}}, ""},
      {"E6(-14)", "1", 1, 5, {{1, 16}, {2, 8}}, ""},
      {"E6(-14)", "2", 2, 5, {{1, 20}, {2, 1}}, ""},
      {"E6(-26)", "1", 1, 3, {{1, 16}}, ""},
      {"E7(7)", "1", 1, 5, {{1, 32}, {2, 1}}, ""},
      {"E7(7)", "2", 2, 7, {{1, 30}, {2, 15}, {3, 2}}, ""},
      {"E7(7)", "3", 3, 9, {{1, 24}, {2, 18}, {3, 8}, {4, 3}}, ""},
      {"E7(7)", "4", 4, 7, {{1, 30}, {2, 15}, {3, 5}}, ""},
      {"E7(7)", "5", 5, 5, {{1, 32}, {2, 10}}, ""},
      {"E7(7)", "6", 6, 3, {{1, 27}}, ""},
      {"E7(7)", "7", 7, 5, {{1, 35}, {2, 7}}, ""},
      {"E7(-5)", "1", 1, 5, {{1, 32}, {2, 1}}, ""},
      {"E7(-5)", "2", 2, 5, {{1, 32}, {2, 10}}, ""},
      {"E7(-5)", "3", 3, 7, {{1, 30}, {2, 15}, {3, 2}}, ""},
      {"E7(-5)", "4", 4, 7, {{1, 24}, {2, 18}, {3, 8}, {4, 3}},
       "announced as a 7-grading while the displayed grades run to 4"},
      {"E7(-25)", "1", 1, 5, {{1, 32}, {2, 1}}, ""},
      {"E7(-25)", "2", 2, 5, {{1, 32}, {2, 10}}, ""},
      {"E7(-25)", "3", 3, 3, {{1, 27}}, ""},
      {"E8(8)", "1", 1, 5, {{1, 64}, {2, 14}}, ""},
      {"E8(8)", "2", 2, 9, {{1, 42}, {2, 35}, {3, 14}, {4, 7}}, ""},
      {"E8(8)", "3", 3, 13, {{1, 30}, {2, 30}, {3, 20}, {4, 15}, {5, 6}, {6, 5}}, ""},
      {"E8(8)", "4", 4, 11, {{1, 40}, {2, 30}, {3, 20}, {4, 10}, {5, 4}}, ""},
      {"E8(8)", "5", 5, 9, {{1, 48}, {2, 30}, {3, 16}, {4, 3}}, ""},
      {"E8(8)", "6", 6, 7, {{1, 54}, {2, 27}, {3, 2}}, ""},
      {"E8(8)", "7", 7, 3, {{1, 56}, {2, 1}},
       "announced as a 3-grading while the displayed grades run to 2"},
      {"E8(8)", "8", 8, 7, {{1, 56}, {2, 28}, {3, 8}}, ""},
      {"E8(-24)", "1", 1, 5, {{1, 64}, {2, 14}}, ""},
      {"E8(-24)", "2", 2, 9, {{1, 48}, {2, 30}, {3, 16}, {4, 3}}, ""},
      {"E8(-24)", "3", 3, 7, {{1, 54}, {2, 27}, {3, 2}}, ""},
      {"E8(-24)", "4", 4, 5, {{1, 56}, {2, 1}}, ""},
      {"F4(4)", "1", 2, 9, {{1, 6}, {2, 9}, {3, 2}, {4, 3}},
       "printed under index 1; the Levi factor and root counts of index 1 belong to the "
       "other sl(3,R)+sl(2,R) parabolic, so the display is assigned to index 2"},
      {"F4(4)", "2", 1, 7, {{1, 12}, {2, 6}, {3, 2}},
       "printed under index 2; assigned to index 1 (see index 1)"},
      {"F4(4)", "3", 3, 5, {{1, 14}, {2, 1}}, ""},
      {"F4(4)", "4", 4, 5, {{1, 8}, {2, 7}}, ""},
      {"F4(-20)", "1", 1, 5, {{1, 8}, {2, 7}}, ""},
      {"G2(2)", "S", 1, 7, {{1, 2}, {2, 1}, {3, 2}},
       "printed under S; the long/short root counts put the 7-grading on the parabolic "
       "keeping the long root (index 1)"},
      {"G2(2)", "L", 2, 5, {{1, 4}, {2, 1}},
       "printed under L; assigned to index 2 (see S)"},
  };
  return rows;
}

}  // namespace exlie

#pragma once

// Multiplication tables of the classification, transcribed row by row.
// Products are `ei*ej = ...` joined by ';'. Tables flagged `symmetric`
// list each product once and get the mirrored product added.

namespace novikov::data {

struct LieRow {
  const char* id;
  int dim;
  const char* params;
  const char* brackets;  // [ei,ej] for i < j, written ei*ej
};

// clang-format off
inline constexpr LieRow lie_rows[] = {
    {"r2", 2, "", "e1*e2 = e1"},
    {"g1", 3, "", "e1*e2 = e2; e1*e3 = e3"},
    {"g2", 3, "alpha", "e1*e2 = e3; e1*e3 = alpha e2 + e3"},
    {"g3", 3, "", "e1*e2 = e3"},
    {"g4", 3, "", "e1*e2 = e3; e1*e3 = e2"},
    {"g5", 3, "", "e1*e2 = e3; e1*e3 = -e2"},
    {"h1", 4, "", "e1*e2 = e3"},
    {"h2", 4, "", "e1*e2 = e3; e1*e3 = e4"},
};

struct EntryRow {
  const char* id;        // file-safe identifier
  const char* name;      // display name
  const char* table;     // table label
  const char* lie;       // Lie algebra id, "abelian" for CAAs
  const char* lie_args;  // e.g. "alpha = a^2 + a"
  const char* field;
  int dim;
  const char* params;
  bool symmetric;
  const char* products;
  const char* excluded;  // "a = 0" style, ';' separated
  const char* note;
  const char* printed = "";  // products as printed when they differ (erratum)
};

inline constexpr EntryRow entry_rows[] = {
    // Table 1: nilpotent CAAs of dimension <= 3 over R
    {"A0", "A0", "Table 1", "abelian", "", "R", 0, "", true, "", "", ""},
    {"A1", "A1", "Table 1", "abelian", "", "R", 1, "", true, "", "", ""},
    {"A2_1", "A2_1", "Table 1", "abelian", "", "R", 2, "", true, "", "", ""},
    {"A2_2", "A2_2", "Table 1", "abelian", "", "R", 2, "", true, "e1*e1 = e2", "", ""},
    {"A3_1", "A3_1", "Table 1", "abelian", "", "R", 3, "", true, "", "", ""},
    {"A3_2", "A3_2", "Table 1", "abelian", "", "R", 3, "", true, "e1*e1 = e2", "", ""},
    {"A3_3", "A3_3", "Table 1", "abelian", "", "R", 3, "", true, "e1*e1 = e2; e1*e2 = e3", "", ""},
    {"A3_4", "A3_4", "Table 1", "abelian", "", "R", 3, "", true, "e1*e1 = e3; e2*e2 = e3", "", ""},
    {"A3_5", "A3_5", "Table 1", "abelian", "", "R", 3, "", true, "e1*e1 = -e3; e2*e2 = e3", "", ""},

    // Table 2: g1
    {"g1_N1", "N^g1_1(a)", "Table 2", "g1", "", "R", 3, "a", false,
     "e1*e1 = a e1; e1*e2 = (a+1) e2; e1*e3 = (a+1) e3; e2*e1 = a e2; e3*e1 = a e3", "", ""},
    {"g1_N2", "N^g1_2", "Table 2", "g1", "", "R", 3, "", false,
     "e1*e1 = -e1 + e2; e2*e1 = -e2; e3*e1 = -e3", "", ""},

    // Table 3: g2^alpha, generic alpha
    {"g2_N1", "N^g2(alpha)_1(a)", "Table 3", "g2", "alpha = alpha", "R", 3, "alpha a", false,
     "e1*e1 = a e1; e1*e2 = a e2 + e3; e1*e3 = alpha e2 + (a+1) e3; e2*e1 = a e2; e3*e1 = a e3", "", ""},
    {"g2_N2", "N^g2(a^2+a)_2(a)", "Table 3", "g2", "alpha = a^2 + a", "R", 3, "a", false,
     "e1*e1 = a e1 + e2; e1*e2 = a e2 + e3; e1*e3 = (a^2+a) e2 + (a+1) e3; e2*e1 = a e2; e3*e1 = a e3", "", ""},

    // Table 4: g2^(-2/9)
    {"g2m_N3", "N^g2(-2/9)_3", "Table 4", "g2", "alpha = -2/9", "R", 3, "", false,
     "e1*e1 = -1/3 e1; e1*e2 = 8/3 e2 - 8 e3; e1*e3 = 7/9 e2 - 7/3 e3; e2*e1 = 8/3 e2 - 9 e3; "
     "e3*e1 = e2 - 10/3 e3", "", ""},
    {"g2m_N4", "N^g2(-2/9)_4", "Table 4", "g2", "alpha = -2/9", "R", 3, "", false,
     "e1*e1 = -1/3 e1 + e2; e1*e2 = 8/3 e2 - 8 e3; e1*e3 = 7/9 e2 - 7/3 e3; e2*e1 = 8/3 e2 - 9 e3; "
     "e3*e1 = e2 - 10/3 e3", "", ""},
    {"g2m_N5", "N^g2(-2/9)_5(a)", "Table 4", "g2", "alpha = -2/9", "R", 3, "a", false,
     "e1*e1 = 3a e1 + (-3a^2 - 1/3 a) e2; e1*e2 = 6a e2 + (-9a + 1) e3; e1*e3 = (a - 2/9) e2 + e3; "
     "e2*e1 = 6a e2 - 9a e3; e2*e2 = -3 e2 + 9 e3; e2*e3 = -e2 + 3 e3; e3*e1 = a e2; "
     "e3*e2 = -e2 + 3 e3; e3*e3 = -1/3 e2 + e3", "", ""},
    {"g2m_N6", "N^g2(-2/9)_6", "Table 4", "g2", "alpha = -2/9", "R", 3, "", false,
     "e1*e1 = -2/3 e1 - 8/27 e2 + 2/3 e3; e1*e2 = -4/3 e2 + 3 e3; e1*e3 = -4/9 e2 + e3; "
     "e2*e1 = -4/3 e2 + 2 e3; e2*e2 = -3 e2 + 9 e3; e2*e3 = -e2 + 3 e3; e3*e1 = -2/9 e2; "
     "e3*e2 = -e2 + 3 e3; e3*e3 = -1/3 e2 + e3", "", ""},
    {"g2m_N7", "N^g2(-2/9)_7", "Table 4", "g2", "alpha = -2/9", "R", 3, "", false,
     "e1*e1 = -2/3 e1 - 11/27 e2 + e3; e1*e2 = -4/3 e2 + 3 e3; e1*e3 = -4/9 e2 + e3; "
     "e2*e1 = -4/3 e2 + 2 e3; e2*e2 = -3 e2 + 9 e3; e2*e3 = -e2 + 3 e3; e3*e1 = -2/9 e2; "
     "e3*e2 = -e2 + 3 e3; e3*e3 = -1/3 e2 + e3", "", ""},

    // Table 5: g2^0
    {"g20_N8", "N^g2(0)_8(a)", "Table 5", "g2", "alpha = 0", "R", 3, "a", false,
     "e1*e1 = a e1; e1*e2 = (a+1) e3; e1*e3 = (a+1) e3; e2*e1 = a e3; e3*e1 = a e3", "a = 0",
     "a = 0 gives N^g2(0)_1(0)"},
    {"g20_N9", "N^g2(0)_9", "Table 5", "g2", "alpha = 0", "R", 3, "", false,
     "e1*e1 = -e1 + e3; e2*e1 = -e3; e3*e1 = -e3", "", ""},
    {"g20_N10", "N^g2(0)_10(a)", "Table 5", "g2", "alpha = 0", "R", 3, "a", false,
     "e1*e1 = a e1; e1*e2 = a e2 + e3; e1*e3 = (a+1) e3; e2*e1 = a e2; e2*e2 = -e2 + e3; e3*e1 = a e3", "", ""},
    {"g20_N11", "N^g2(0)_11", "Table 5", "g2", "alpha = 0", "R", 3, "", false,
     "e1*e1 = -e1 + e3; e1*e2 = -e2 + e3; e2*e1 = -e2; e2*e2 = -e2 + e3; e3*e1 = -e3", "", ""},

    // Table 6: g3
    {"g3_N1", "N^g3_1(a)", "Table 6", "g3", "", "R", 3, "a", false,
     "e1*e1 = e2; e1*e2 = (a+1) e3; e2*e1 = a e3", "", ""},
    {"g3_N2", "N^g3_2(a)", "Table 6", "g3", "", "R", 3, "a", false,
     "e1*e1 = a e3; e1*e2 = e3; e2*e2 = e3", "", ""},
    {"g3_N3", "N^g3_3", "Table 6", "g3", "", "R", 3, "", false,
     "e1*e1 = e3; e1*e2 = e1; e2*e1 = e1 - e3; e2*e2 = e2; e2*e3 = e3; e3*e2 = e3", "", ""},
    {"g3_N4", "N^g3_4", "Table 6", "g3", "", "R", 3, "", false,
     "e1*e2 = e1; e2*e1 = e1 - e3; e2*e2 = e2; e2*e3 = e3; e3*e2 = e3", "", ""},
    {"g3_N5", "N^g3_5", "Table 6", "g3", "", "R", 3, "", false,
     "e1*e2 = 1/2 e3; e2*e1 = -1/2 e3", "", ""},

    // Table 7: g4
    {"g4_N1", "N^g4_1(a)", "Table 7", "g4", "", "R", 3, "a", false,
     "e1*e1 = a e1; e1*e2 = a e2 + e3; e1*e3 = e2 + a e3; e2*e1 = a e2; e3*e1 = a e3", "", ""},
    {"g4_N2", "N^g4_2", "Table 7", "g4", "", "R", 3, "", false,
     "e1*e1 = e1 + e3; e1*e2 = e2 + e3; e1*e3 = e2 + e3; e2*e1 = e2; e3*e1 = e3", "", ""},

    // Table 8: g5 (real only)
    {"g5_N1", "N^g5_1(a)", "Table 8", "g5", "", "R", 3, "a", false,
     "e1*e1 = a e1; e1*e2 = a e2 + e3; e1*e3 = -e2 + a e3; e2*e1 = a e2; e3*e1 = a e3", "", ""},

    // Table 9: CAAs of dimension 4 over C
    {"A4_1", "A4_1", "Table 9", "abelian", "", "C", 4, "", true, "", "", ""},
    {"A4_2", "A4_2", "Table 9", "abelian", "", "C", 4, "", true, "e1*e1 = e2", "", ""},
    {"A4_3", "A4_3", "Table 9", "abelian", "", "C", 4, "", true, "e1*e1 = e3; e2*e2 = e3", "", ""},
    {"A4_4", "A4_4", "Table 9", "abelian", "", "C", 4, "", true, "e1*e1 = e2; e1*e2 = e3", "", ""},
    {"A4_5", "A4_5", "Table 9", "abelian", "", "C", 4, "", true, "e1*e1 = -e3; e1*e2 = e4; e2*e2 = e3", "", ""},
    {"A4_6", "A4_6", "Table 9", "abelian", "", "C", 4, "", true, "e1*e2 = e4; e2*e2 = e3", "", ""},
    {"A4_7", "A4_7", "Table 9", "abelian", "", "C", 4, "", true, "e1*e1 = e4; e2*e2 = e4; e3*e3 = e4", "", ""},
    {"A4_8", "A4_8", "Table 9", "abelian", "", "C", 4, "", true, "e1*e1 = e2; e1*e2 = e4; e3*e3 = e4", "", ""},
    {"A4_9", "A4_9", "Table 9", "abelian", "", "C", 4, "", true,
     "e1*e1 = e2; e1*e2 = e3; e1*e3 = e4; e2*e2 = e4", "", ""},
    {"4uA0", "4~A0", "Table 9", "abelian", "", "C", 4, "", true,
     "e1*e1 = e1; e2*e2 = e2; e3*e3 = e3; e4*e4 = e4", "", ""},
    {"2uA0_uA1", "2~A0+~A1", "Table 9", "abelian", "", "C", 4, "", true,
     "e1*e1 = e1; e2*e2 = e2; e3*e3 = e3; e3*e4 = e4", "", ""},
    {"2uA1", "2~A1", "Table 9", "abelian", "", "C", 4, "", true,
     "e1*e1 = e1; e1*e2 = e2; e3*e3 = e3; e3*e4 = e4", "", ""},
    {"uA0_uA2_1", "~A0+~A2_1", "Table 9", "abelian", "", "C", 4, "", true,
     "e1*e1 = e1; e2*e2 = e2; e2*e3 = e3; e2*e4 = e4", "", ""},
    {"uA0_uA2_2", "~A0+~A2_2", "Table 9", "abelian", "", "C", 4, "", true,
     "e1*e1 = e1; e2*e2 = e2; e2*e3 = e3; e2*e4 = e4; e3*e3 = e4", "", ""},
    {"uA3_1", "~A3_1", "Table 9", "abelian", "", "C", 4, "", true,
     "e1*e1 = e1; e1*e2 = e2; e1*e3 = e3; e1*e4 = e4", "", ""},
    {"uA3_2", "~A3_2", "Table 9", "abelian", "", "C", 4, "", true,
     "e1*e1 = e1; e1*e2 = e2; e1*e3 = e3; e1*e4 = e4; e2*e2 = e3", "", ""},
    {"uA3_3", "~A3_3", "Table 9", "abelian", "", "C", 4, "", true,
     "e1*e1 = e1; e1*e2 = e2; e1*e3 = e3; e1*e4 = e4; e2*e2 = e3; e2*e3 = e4", "", ""},
    {"uA3_4", "~A3_4", "Table 9", "abelian", "", "C", 4, "", true,
     "e1*e1 = e1; e1*e2 = e2; e1*e3 = e3; e1*e4 = e4; e2*e2 = e4; e3*e3 = e4", "", ""},
    {"3uA0_A1", "3~A0+A1", "Table 9", "abelian", "", "C", 4, "", true,
     "e1*e1 = e1; e2*e2 = e2; e3*e3 = e3", "", ""},
    {"uA0_uA1_A1", "~A0+~A1+A1", "Table 9", "abelian", "", "C", 4, "", true,
     "e1*e1 = e1; e2*e2 = e2; e2*e3 = e3", "", ""},
    {"uA2_1_A1", "~A2_1+A1", "Table 9", "abelian", "", "C", 4, "", true,
     "e1*e1 = e1; e1*e2 = e2; e1*e3 = e3", "", ""},
    {"uA2_2_A1", "~A2_2+A1", "Table 9", "abelian", "", "C", 4, "", true,
     "e1*e1 = e1; e1*e2 = e2; e1*e3 = e3; e2*e2 = e3", "", ""},
    {"2uA0_A2_1", "2~A0+A2_1", "Table 9", "abelian", "", "C", 4, "", true, "e1*e1 = e1; e2*e2 = e2", "", ""},
    {"2uA0_A2_2", "2~A0+A2_2", "Table 9", "abelian", "", "C", 4, "", true,
     "e1*e1 = e1; e2*e2 = e2; e3*e3 = e4", "", ""},
    {"uA1_A2_1", "~A1+A2_1", "Table 9", "abelian", "", "C", 4, "", true, "e1*e1 = e1; e1*e2 = e2", "", ""},
    {"uA1_A2_2", "~A1+A2_2", "Table 9", "abelian", "", "C", 4, "", true,
     "e1*e1 = e1; e1*e2 = e2; e3*e3 = e4", "", ""},
    {"uA0_A3_1", "~A0+A3_1", "Table 9", "abelian", "", "C", 4, "", true, "e1*e1 = e1", "", ""},
    {"uA0_A3_2", "~A0+A3_2", "Table 9", "abelian", "", "C", 4, "", true, "e1*e1 = e1; e2*e3 = e4", "",
     "nilpotent block e2*e3 = e4 is A3_4 of Table 1 over C"},
    {"uA0_A3_3", "~A0+A3_3", "Table 9", "abelian", "", "C", 4, "", true, "e1*e1 = e1; e2*e2 = e3", "",
     "nilpotent block e2*e2 = e3 is A3_2 of Table 1"},
    {"uA0_A3_4", "~A0+A3_4", "Table 9", "abelian", "", "C", 4, "", true,
     "e1*e1 = e1; e2*e2 = e3; e2*e3 = e4", "", "nilpotent block is A3_3 of Table 1"},

    // Table 10: h1
    {"h1_N1", "N^h1_1(alpha)", "Table 10", "h1", "", "C", 4, "alpha", false,
     "e1*e2 = (alpha+1) e3; e2*e1 = alpha e3", "", ""},
    {"h1_N2", "N^h1_2(alpha)", "Table 10", "h1", "", "C", 4, "alpha", false,
     "e1*e2 = (alpha+1) e3; e2*e1 = alpha e3; e2*e2 = e4", "", ""},
    {"h1_N3", "N^h1_3(alpha)", "Table 10", "h1", "", "C", 4, "alpha", false,
     "e1*e2 = (alpha+1) e3; e2*e1 = alpha e3; e2*e2 = e1", "", ""},
    {"h1_N4", "N^h1_4", "Table 10", "h1", "", "C", 4, "", false, "e1*e1 = e3; e1*e2 = e3; e2*e2 = e4", "", ""},
    {"h1_N5", "N^h1_5", "Table 10", "h1", "", "C", 4, "", false,
     "e1*e2 = e3; e2*e2 = e4; e2*e4 = e3; e4*e2 = e3", "", ""},
    {"h1_N6", "N^h1_6", "Table 10", "h1", "", "C", 4, "", false, "e1*e2 = e3; e2*e4 = e3; e4*e2 = e3", "", ""},
    {"h1_N7", "N^h1_7(alpha)", "Table 10", "h1", "", "C", 4, "alpha", false,
     "e1*e2 = e3; e2*e2 = e1 + alpha e4; e2*e4 = e3; e4*e2 = e3", "", ""},
    {"h1_N8", "N^h1_8", "Table 10", "h1", "", "C", 4, "", false,
     "e1*e1 = e3; e1*e2 = e3; e2*e2 = e4; e2*e4 = e3; e4*e2 = e3", "", ""},
    {"h1_N9", "N^h1_9", "Table 10", "h1", "", "C", 4, "", false,
     "e1*e1 = e3; e1*e2 = e3; e2*e4 = e3; e4*e2 = e3", "", ""},
    {"h1_N10", "N^h1_10(alpha)", "Table 10", "h1", "", "C", 4, "alpha", false,
     "e1*e2 = (alpha+1) e3; e2*e1 = alpha e3; e4*e4 = e3", "", ""},
    {"h1_N11", "N^h1_11", "Table 10", "h1", "", "C", 4, "", false,
     "e1*e2 = 1/2 e3; e2*e1 = -1/2 e3; e2*e2 = e3; e4*e4 = e3", "", ""},
    {"h1_N12", "N^h1_12(alpha)", "Table 10", "h1", "", "C", 4, "alpha", false,
     "e1*e2 = (alpha+1) e3; e2*e1 = alpha e3; e2*e2 = e1; e4*e4 = e3", "", ""},
    {"h1_N13", "N^h1_13", "Table 10", "h1", "", "C", 4, "", false, "e1*e2 = e3 + e4; e2*e1 = e4", "", ""},
    {"h1_N14", "N^h1_14", "Table 10", "h1", "", "C", 4, "", false,
     "e1*e2 = e3 + e4; e2*e1 = e4; e2*e2 = e1", "", ""},
    {"h1_N15", "N^h1_15(alpha)", "Table 10", "h1", "", "C", 4, "alpha", false,
     "e1*e1 = e3; e1*e2 = e3 + e4; e2*e1 = e4; e2*e2 = alpha e3", "", ""},
    {"h1_N16", "N^h1_16", "Table 10", "h1", "", "C", 4, "", false,
     "e1*e1 = e3; e1*e2 = e3 + e4; e2*e1 = e4; e2*e2 = e1; e2*e4 = e3; e4*e2 = e3", "", ""},
    {"h1_N17", "N^h1_17", "Table 10", "h1", "", "C", 4, "", false,
     "e1*e1 = e1; e1*e2 = e2 + e3; e1*e3 = e3; e2*e1 = e2; e2*e2 = e3; e3*e1 = e3", "", ""},
    {"h1_N18", "N^h1_18", "Table 10", "h1", "", "C", 4, "", false,
     "e1*e1 = e1; e1*e2 = e2 + e3; e1*e3 = e3; e2*e1 = e2; e3*e1 = e3", "", ""},
    {"h1_N19", "N^h1_19", "Table 10", "h1", "", "C", 4, "", false,
     "e1*e1 = e1; e1*e2 = e2 + e3; e1*e3 = e3; e1*e4 = e4; e2*e1 = e2; e3*e1 = e3; e4*e1 = e4", "", ""},
    {"h1_N20", "N^h1_20", "Table 10", "h1", "", "C", 4, "", false,
     "e1*e1 = e1; e1*e2 = e2 + e3; e1*e3 = e3; e1*e4 = e4; e2*e1 = e2; e2*e2 = e3; e3*e1 = e3; e4*e1 = e4", "",
     "printed e2*e2 = e2 fails left symmetry at (e1,e2,e2); e2*e2 = e3 used",
     "e1*e1 = e1; e1*e2 = e2 + e3; e1*e3 = e3; e1*e4 = e4; e2*e1 = e2; e2*e2 = e2; e3*e1 = e3; e4*e1 = e4"},
    {"h1_N21", "N^h1_21", "Table 10", "h1", "", "C", 4, "", false,
     "e1*e1 = e1; e1*e2 = e2 + e3; e1*e3 = e3; e1*e4 = e4; e2*e1 = e2; e2*e2 = e4; e3*e1 = e3; e4*e1 = e4", "",
     ""},
    {"h1_N22", "N^h1_22", "Table 10", "h1", "", "C", 4, "", false,
     "e1*e1 = e1; e1*e2 = e2 + e3; e1*e3 = e3; e1*e4 = e4; e2*e1 = e2; e2*e4 = e3; e3*e1 = e3; e4*e1 = e4; "
     "e4*e2 = e3", "", ""},
    {"h1_N23", "N^h1_23", "Table 10", "h1", "", "C", 4, "", false,
     "e1*e1 = e1; e1*e2 = e2 + e3; e1*e3 = e3; e1*e4 = e4; e2*e1 = e2; e2*e2 = e4; e2*e4 = e3; e3*e1 = e3; "
     "e4*e1 = e4; e4*e2 = e3", "", ""},
    {"h1_N24", "N^h1_24", "Table 10", "h1", "", "C", 4, "", false,
     "e1*e1 = e1; e1*e2 = e2 + e3; e1*e3 = e3; e1*e4 = e4; e2*e1 = e2; e2*e2 = e3; e3*e1 = e3; e4*e1 = e4; "
     "e4*e4 = e3", "", ""},
    {"h1_N25", "N^h1_25", "Table 10", "h1", "", "C", 4, "", false,
     "e1*e1 = e1; e1*e2 = e2 + e3; e1*e3 = e3; e1*e4 = e4; e2*e1 = e2; e3*e1 = e3; e4*e1 = e4; e4*e4 = e3", "",
     ""},
    {"h1_N26", "N^h1_26(alpha)", "Table 10", "h1", "", "C", 4, "alpha", false,
     "e1*e2 = (alpha+1) e3; e2*e1 = alpha e3; e2*e2 = e1; e4*e4 = e4", "", ""},
    {"h1_N27", "N^h1_27(alpha)", "Table 10", "h1", "", "C", 4, "alpha", false,
     "e1*e2 = (alpha+1) e3; e2*e1 = alpha e3; e4*e4 = e4", "", ""},
    {"h1_N28", "N^h1_28", "Table 10", "h1", "", "C", 4, "", false,
     "e1*e2 = 1/2 e3; e2*e1 = -1/2 e3; e2*e2 = e3; e4*e4 = e4", "", ""},
    {"h1_N29", "N^h1_29", "Table 10", "h1", "", "C", 4, "", false,
     "e1*e1 = e1; e1*e2 = e2 + e3; e1*e3 = e3; e2*e1 = e2; e2*e2 = e3; e3*e1 = e3; e4*e4 = e4", "", ""},
    {"h1_N30", "N^h1_30", "Table 10", "h1", "", "C", 4, "", false,
     "e1*e1 = e1; e1*e2 = e2 + e3; e1*e3 = e3; e2*e1 = e2; e3*e1 = e3; e4*e4 = e4", "", ""},

    // Table 11: h2 (no N_10 in the list)
    {"h2_N1", "N^h2_1", "Table 11", "h2", "", "C", 4, "", false, "e1*e2 = e3; e1*e3 = e4", "", ""},
    {"h2_N2", "N^h2_2", "Table 11", "h2", "", "C", 4, "", false, "e1*e1 = e2; e1*e2 = e3; e1*e3 = e4", "", ""},
    {"h2_N3", "N^h2_3", "Table 11", "h2", "", "C", 4, "", false, "e1*e2 = e3 + e4; e1*e3 = e4; e2*e1 = e4", "",
     ""},
    {"h2_N4", "N^h2_4", "Table 11", "h2", "", "C", 4, "", false,
     "e1*e1 = e2; e1*e2 = e3 + e4; e1*e3 = e4; e2*e1 = e4", "", ""},
    {"h2_N5", "N^h2_5", "Table 11", "h2", "", "C", 4, "", false,
     "e1*e3 = 1/2 e4; e2*e1 = -e3; e3*e1 = -1/2 e4", "", ""},
    {"h2_N6", "N^h2_6", "Table 11", "h2", "", "C", 4, "", false,
     "e1*e1 = e4; e1*e3 = 1/2 e4; e2*e1 = -e3; e3*e1 = -1/2 e4", "", ""},
    {"h2_N7", "N^h2_7", "Table 11", "h2", "", "C", 4, "", false,
     "e1*e1 = e2; e1*e3 = 1/2 e4; e2*e1 = -e3; e3*e1 = -1/2 e4", "", ""},
    {"h2_N8", "N^h2_8(alpha)", "Table 11", "h2", "", "C", 4, "alpha", false,
     "e1*e1 = (2alpha^2 + alpha) e2; e1*e2 = (2alpha + 1) e3; e1*e3 = (alpha+1) e4; e2*e1 = 2alpha e3; "
     "e2*e2 = e4; e3*e1 = alpha e4", "", ""},
    {"h2_N9", "N^h2_9", "Table 11", "h2", "", "C", 4, "", false,
     "e1*e1 = e3; e1*e2 = e3; e1*e3 = e4; e2*e2 = e4", "", ""},
    {"h2_N11", "N^h2_11", "Table 11", "h2", "", "C", 4, "", false,
     "e1*e1 = e3; e1*e3 = 1/2 e4; e2*e1 = -e3; e2*e2 = e4; e3*e1 = -1/2 e4", "", ""},
    {"h2_N12", "N^h2_12", "Table 11", "h2", "", "C", 4, "", false,
     "e1*e1 = e4; e1*e2 = e3; e1*e3 = e4; e2*e2 = 2 e3; e2*e3 = e4; e3*e2 = e4", "", ""},
    {"h2_N13", "N^h2_13", "Table 11", "h2", "", "C", 4, "", false,
     "e1*e2 = e3; e1*e3 = e4; e2*e2 = 2 e3; e2*e3 = e4; e3*e2 = e4", "", ""},
    {"h2_N14", "N^h2_14(alpha)", "Table 11", "h2", "", "C", 4, "alpha", false,
     "e1*e1 = alpha e4; e1*e2 = e3; e1*e3 = e4; e2*e2 = 2 e3 + e4; e2*e3 = e4; e3*e2 = e4", "", ""},
    {"h2_N15", "N^h2_15", "Table 11", "h2", "", "C", 4, "", false,
     "e1*e1 = e1; e1*e2 = e2 + e3; e1*e3 = e3 + e4; e1*e4 = e4; e2*e1 = e2; e3*e1 = e3; e4*e1 = e4", "", ""},
    {"h2_N16", "N^h2_16", "Table 11", "h2", "", "C", 4, "", false,
     "e1*e1 = e1; e1*e2 = e2 + e3; e1*e3 = e3 + e4; e1*e4 = e4; e2*e1 = e2; e2*e2 = e4; e3*e1 = e3; e4*e1 = e4",
     "", ""},
    {"h2_N17", "N^h2_17", "Table 11", "h2", "", "C", 4, "alpha", false,
     "e1*e1 = e1; e1*e2 = e2 + e3; e1*e3 = e3 + e4; e1*e4 = e4; e2*e1 = e2; e2*e2 = 2 e3 + alpha e4; "
     "e2*e3 = e4; e3*e1 = e3; e3*e2 = e4; e4*e1 = e4", "", "alpha appears in the table but not in the name"},
};
// clang-format on

}  // namespace novikov::data

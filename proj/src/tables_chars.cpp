#include "rmx/tables.hpp"

#include <map>
#include <stdexcept>

// Reference character listings. The listing order fixes the basis order used
// by the module builders; zero-weight monomials sit where the bases expect
// them (checked at build time).

namespace rmx::tables {

namespace {

const char* A1 = "1_0 + 1_2^{-1}";
const char* A2 = "1_0 + 1_2^{-1} 2_1 + 2_3^{-1}";
const char* A3 = "1_0 + 1_2^{-1} 2_1 + 2_3^{-1} 3_2 + 3_4^{-1}";
const char* A4 = "1_0 + 1_2^{-1} 2_1 + 2_3^{-1} 3_2 + 3_4^{-1} 4_3 + 4_5^{-1}";

const char* B2 =
    "1_0 + 1_4^{-1} 2_1 2_3 + 2_5^{-1} 2_1 + 1_2 2_3^{-1} 2_5^{-1} + 1_6^{-1}";
const char* B3 =
    "1_0 + 1_4^{-1} 2_2 + 2_6^{-1} 3_3 3_5 + 3_7^{-1} 3_3 + 2_4 3_5^{-1} 3_7^{-1} + "
    "1_6 2_8^{-1} + 1_10^{-1}";

const char* C2 = "1_0 + 1_2^{-1} 2_1 + 1_4 2_5^{-1} + 1_6^{-1}";
const char* C3 =
    "1_0 + 1_2^{-1} 2_1 + 2_3^{-1} 3_2 + 2_5 3_6^{-1} + 1_6 2_7^{-1} + 1_8^{-1}";

const char* D4 =
    "1_0 + 1_2^{-1} 2_1 + 2_3^{-1} 3_2 4_2 + 3_4^{-1} 4_2 + 3_2 4_4^{-1} + "
    "2_3 3_4^{-1} 4_4^{-1} + 1_4 2_5^{-1} + 1_6^{-1}";

const char* G2 =
    "1_0 + 1_2^{-1} 2_1 + 1_4 1_6 2_7^{-1} + 1_8^{-1} 1_4 + 1_6^{-1} 1_8^{-1} 2_5 + "
    "1_10 2_11^{-1} + 1_12^{-1}";

const char* E6 =
    "1_0 + 1_2^{-1} 2_1 + 2_3^{-1} 3_2 + 3_4^{-1} 4_3 6_3 + 4_3 6_5^{-1} + "
    "4_5^{-1} 5_4 6_3 + 3_4 4_5^{-1} 5_4 6_5^{-1} + 5_6^{-1} 6_3 + 3_4 5_6^{-1} 6_5^{-1} + "
    "2_5 3_6^{-1} 5_4 + 2_5 3_6^{-1} 4_5 5_6^{-1} + 1_6 2_7^{-1} 5_4 + 2_5 4_7^{-1} + "
    "1_6 2_7^{-1} 4_5 5_6^{-1} + 1_8^{-1} 5_4 + 1_8^{-1} 4_5 5_6^{-1} + "
    "1_6 2_7^{-1} 3_6 4_7^{-1} + 1_8^{-1} 3_6 4_7^{-1} + 1_6 3_8^{-1} 6_7 + 1_6 6_9^{-1} + "
    "1_8^{-1} 2_7 3_8^{-1} 6_7 + 1_8^{-1} 2_7 6_9^{-1} + 2_9^{-1} 6_7 + "
    "2_9^{-1} 3_8 6_9^{-1} + 3_10^{-1} 4_9 + 4_11^{-1} 5_10 + 5_12^{-1}";

const char* E7 =
    "1_0 + 1_2^{-1} 2_1 + 2_3^{-1} 3_2 + 3_4^{-1} 4_3 + 4_5^{-1} 5_4 7_4 + 5_4 7_6^{-1} + "
    "5_6^{-1} 6_5 7_4 + 4_5 5_6^{-1} 6_5 7_6^{-1} + 6_7^{-1} 7_4 + 4_5 6_7^{-1} 7_6^{-1} + "
    "3_6 4_7^{-1} 6_5 + 3_6 4_7^{-1} 5_6 6_7^{-1} + 2_7 3_8^{-1} 6_5 + 3_6 5_8^{-1} + "
    "2_7 3_8^{-1} 5_6 6_7^{-1} + 1_8 2_9^{-1} 6_5 + 1_8 2_9^{-1} 5_6 6_7^{-1} + "
    "2_7 3_8^{-1} 4_7 5_8^{-1} + 1_8 2_9^{-1} 4_7 5_8^{-1} + 2_7 4_9^{-1} 7_8 + "
    "2_7 7_10^{-1} + 1_8 2_9^{-1} 3_8 4_9^{-1} 7_8 + 1_8 2_9^{-1} 3_8 7_10^{-1} + "
    "1_8 3_10^{-1} 7_8 + 1_8 3_10^{-1} 4_9 7_10^{-1} + 1_8 4_11^{-1} 5_10 + "
    "1_8 5_12^{-1} 6_11 + 1_8 6_13^{-1} + "
    "1_10^{-1} 6_5 + 1_10^{-1} 5_6 6_7^{-1} + 1_10^{-1} 4_7 5_8^{-1} + "
    "1_10^{-1} 3_8 4_9^{-1} 7_8 + 1_10^{-1} 3_8 7_10^{-1} + 1_10^{-1} 2_9 3_10^{-1} 7_8 + "
    "1_10^{-1} 2_9 3_10^{-1} 4_9 7_10^{-1} + 2_11^{-1} 7_8 + 2_11^{-1} 4_9 7_10^{-1} + "
    "1_10^{-1} 2_9 4_11^{-1} 5_10 + 2_11^{-1} 3_10 4_11^{-1} 5_10 + "
    "1_10^{-1} 2_9 5_12^{-1} 6_11 + 1_10^{-1} 2_9 6_13^{-1} + 2_11^{-1} 3_10 5_12^{-1} 6_11 + "
    "3_12^{-1} 5_10 + 2_11^{-1} 3_10 6_13^{-1} + 3_12^{-1} 4_11 5_12^{-1} 6_11 + "
    "3_12^{-1} 4_11 6_13^{-1} + 4_13^{-1} 6_11 7_12 + 6_11 7_14^{-1} + "
    "4_13^{-1} 5_12 6_13^{-1} 7_12 + 5_12 6_13^{-1} 7_14^{-1} + 5_14^{-1} 7_12 + "
    "4_13 5_14^{-1} 7_14^{-1} + 3_14 4_15^{-1} + 2_15 3_16^{-1} + 1_16 2_17^{-1} + 1_18^{-1}";

const char* F4 =
    "1_0 + 1_2^{-1} 2_1 + 2_3^{-1} 3_2 + 2_5 3_6^{-1} 4_4 + 2_5 4_8^{-1} + "
    "1_6 2_7^{-1} 4_4 + 1_8^{-1} 4_4 + 1_6 2_7^{-1} 3_6 4_8^{-1} + 1_8^{-1} 3_6 4_8^{-1} + "
    "1_6 2_9 3_10^{-1} + 1_8^{-1} 2_7 2_9 3_10^{-1} + 1_6 1_10 2_11^{-1} + "
    "1_8^{-1} 1_10 2_11^{-1} 2_7 + 1_12^{-1} 1_6 + 1_8^{-1} 1_12^{-1} 2_7 + "
    "1_10 2_9^{-1} 2_11^{-1} 3_8 + 1_12^{-1} 2_9^{-1} 3_8 + 1_10 3_12^{-1} 4_10 + "
    "1_12^{-1} 2_11 3_12^{-1} 4_10 + 1_10 4_14^{-1} + 1_12^{-1} 2_11 4_14^{-1} + "
    "2_13^{-1} 4_10 + 2_13^{-1} 3_12 4_14^{-1} + 2_15 3_16^{-1} + 1_16 2_17^{-1} + 1_18^{-1}";

const char* G2fun2 =
    "2_0 + 1_1 1_3 1_5 2_6^{-1} + 1_7^{-1} 1_1 1_3 + 1_5^{-1} 1_7^{-1} 1_1 2_4 + "
    "1_3^{-1} 1_5^{-1} 1_7^{-1} 2_2 2_4 + 1_1 1_9 2_10^{-1} + 1_11^{-1} 1_1 + "
    "1_3^{-1} 1_9 2_10^{-1} 2_2 + 2_8^{-1} 2_4 + 1_3^{-1} 1_11^{-1} 2_2 + "
    "1_5 1_7 1_9 2_8^{-1} 2_10^{-1} + 1_11^{-1} 1_5 1_7 2_8^{-1} + 1_9^{-1} 1_11^{-1} 1_5 + "
    "1_7^{-1} 1_9^{-1} 1_11^{-1} 2_6 + 2_12^{-1}";

const char* A2ad =
    "1_0 2_3 + 1_2^{-1} 2_1 2_3 + 1_0 1_4 2_5^{-1} + 1_6^{-1} 1_0 + "
    "1_2^{-1} 1_4 2_5^{-1} 2_1 + 1_2^{-1} 1_6^{-1} 2_1 + 1_4 2_3^{-1} 2_5^{-1} + "
    "1_6^{-1} 2_3^{-1}";

// E8: 248 distinct monomials, listing order = basis order v_1..v_248;
// positions 121-128 are the zero-weight monomials, position 125 carries
// multiplicity two (the second copy is the trivial summand, v_249).
const char* E8 =
    "1_0 + 1_2^{-1} 2_1 + 2_3^{-1} 3_2 + 3_4^{-1} 4_3 + 4_5^{-1} 5_4 + "
    "5_6^{-1} 6_5 8_5 + 6_5 8_7^{-1} + 6_7^{-1} 7_6 8_5 + 5_6 6_7^{-1} 7_6 8_7^{-1} + "
    "7_8^{-1} 8_5 + 5_6 7_8^{-1} 8_7^{-1} + 4_7 5_8^{-1} 7_6 + 4_7 5_8^{-1} 6_7 7_8^{-1} + "
    "3_8 4_9^{-1} 7_6 + 4_7 6_9^{-1} + 3_8 4_9^{-1} 6_7 7_8^{-1} + 2_9 3_10^{-1} 7_6 + "
    "2_9 3_10^{-1} 6_7 7_8^{-1} + 3_8 4_9^{-1} 5_8 6_9^{-1} + 2_9 3_10^{-1} 5_8 6_9^{-1} + "
    "3_8 5_10^{-1} 8_9 + 3_8 8_11^{-1} + 2_9 3_10^{-1} 4_9 5_10^{-1} 8_9 + "
    "2_9 3_10^{-1} 4_9 8_11^{-1} + 2_9 4_11^{-1} 8_9 + 2_9 4_11^{-1} 5_10 8_11^{-1} + "
    "2_9 5_12^{-1} 6_11 + 2_9 6_13^{-1} 7_12 + 2_9 7_14^{-1} + "
    "1_10 2_11^{-1} 7_6 + 1_10 2_11^{-1} 6_7 7_8^{-1} + 1_10 2_11^{-1} 5_8 6_9^{-1} + "
    "1_10 2_11^{-1} 4_9 5_10^{-1} 8_9 + 1_10 2_11^{-1} 4_9 8_11^{-1} + "
    "1_10 2_11^{-1} 3_10 4_11^{-1} 8_9 + 1_10 2_11^{-1} 3_10 4_11^{-1} 5_10 8_11^{-1} + "
    "1_10 3_12^{-1} 8_9 + 1_10 3_12^{-1} 5_10 8_11^{-1} + 1_10 2_11^{-1} 3_10 5_12^{-1} 6_11 + "
    "1_10 3_12^{-1} 4_11 5_12^{-1} 6_11 + 1_10 2_11^{-1} 3_10 6_13^{-1} 7_12 + "
    "1_10 2_11^{-1} 3_10 7_14^{-1} + 1_10 3_12^{-1} 4_11 6_13^{-1} 7_12 + 1_10 4_13^{-1} 6_11 + "
    "1_10 3_12^{-1} 4_11 7_14^{-1} + 1_10 4_13^{-1} 5_12 6_13^{-1} 7_12 + "
    "1_10 4_13^{-1} 5_12 7_14^{-1} + 1_10 5_14^{-1} 7_12 8_13 + 1_10 7_12 8_15^{-1} + "
    "1_10 5_14^{-1} 6_13 7_14^{-1} 8_13 + 1_10 6_13 7_14^{-1} 8_15^{-1} + 1_10 6_15^{-1} 8_13 + "
    "1_10 5_14 6_15^{-1} 8_15^{-1} + 1_10 4_15 5_16^{-1} + 1_10 3_16 4_17^{-1} + "
    "1_10 2_17 3_18^{-1} + 1_10 1_18 2_19^{-1} + "
    "1_12^{-1} 7_6 + 1_12^{-1} 6_7 7_8^{-1} + 1_12^{-1} 5_8 6_9^{-1} + "
    "1_12^{-1} 4_9 5_10^{-1} 8_9 + 1_12^{-1} 4_9 8_11^{-1} + 1_12^{-1} 3_10 4_11^{-1} 8_9 + "
    "1_12^{-1} 3_10 4_11^{-1} 5_10 8_11^{-1} + 1_12^{-1} 2_11 3_12^{-1} 8_9 + "
    "1_12^{-1} 2_11 3_12^{-1} 5_10 8_11^{-1} + 1_12^{-1} 3_10 5_12^{-1} 6_11 + "
    "1_12^{-1} 2_11 3_12^{-1} 4_11 5_12^{-1} 6_11 + 1_12^{-1} 3_10 6_13^{-1} 7_12 + "
    "1_12^{-1} 3_10 7_14^{-1} + 1_12^{-1} 2_11 3_12^{-1} 4_11 6_13^{-1} 7_12 + "
    "1_12^{-1} 2_11 4_13^{-1} 6_11 + 1_12^{-1} 2_11 3_12^{-1} 4_11 7_14^{-1} + "
    "1_12^{-1} 2_11 4_13^{-1} 5_12 6_13^{-1} 7_12 + 1_12^{-1} 2_11 4_13^{-1} 5_12 7_14^{-1} + "
    "1_12^{-1} 2_11 5_14^{-1} 7_12 8_13 + 1_12^{-1} 2_11 7_12 8_15^{-1} + "
    "1_12^{-1} 2_11 5_14^{-1} 6_13 7_14^{-1} 8_13 + 1_12^{-1} 2_11 6_13 7_14^{-1} 8_15^{-1} + "
    "1_12^{-1} 2_11 6_15^{-1} 8_13 + 1_12^{-1} 2_11 5_14 6_15^{-1} 8_15^{-1} + "
    "1_12^{-1} 2_11 4_15 5_16^{-1} + 1_12^{-1} 2_11 3_16 4_17^{-1} + "
    "1_12^{-1} 2_11 2_17 3_18^{-1} + "
    "2_13^{-1} 8_9 + 2_13^{-1} 5_10 8_11^{-1} + 2_13^{-1} 4_11 5_12^{-1} 6_11 + "
    "2_13^{-1} 3_12 4_13^{-1} 6_11 + 2_13^{-1} 4_11 6_13^{-1} 7_12 + "
    "2_13^{-1} 3_12 4_13^{-1} 5_12 6_13^{-1} 7_12 + 2_13^{-1} 4_11 7_14^{-1} + 3_14^{-1} 6_11 + "
    "3_14^{-1} 5_12 6_13^{-1} 7_12 + 2_13^{-1} 3_12 5_14^{-1} 7_12 8_13 + "
    "2_13^{-1} 3_12 4_13^{-1} 5_12 7_14^{-1} + 3_14^{-1} 4_13 5_14^{-1} 7_12 8_13 + "
    "3_14^{-1} 5_12 7_14^{-1} + 2_13^{-1} 3_12 5_14^{-1} 6_13 7_14^{-1} 8_13 + "
    "2_13^{-1} 3_12 7_12 8_15^{-1} + 4_15^{-1} 7_12 8_13 + "
    "3_14^{-1} 4_13 5_14^{-1} 6_13 7_14^{-1} 8_13 + 3_14^{-1} 4_13 7_12 8_15^{-1} + "
    "2_13^{-1} 3_12 6_15^{-1} 8_13 + 2_13^{-1} 3_12 6_13 7_14^{-1} 8_15^{-1} + "
    "4_15^{-1} 6_13 7_14^{-1} 8_13 + 4_15^{-1} 5_14 7_12 8_15^{-1} + "
    "3_14^{-1} 4_13 6_15^{-1} 8_13 + 3_14^{-1} 4_13 6_13 7_14^{-1} 8_15^{-1} + "
    "2_13^{-1} 3_12 5_14 6_15^{-1} 8_15^{-1} + 4_15^{-1} 5_14 6_15^{-1} 8_13 + "
    "4_15^{-1} 5_14 6_13 7_14^{-1} 8_15^{-1} + 5_16^{-1} 6_15 7_12 + "
    "3_14^{-1} 4_13 5_14 6_15^{-1} 8_15^{-1} + 2_13^{-1} 3_12 4_15 5_16^{-1} + "
    "2_13^{-1} 3_12 3_16 4_17^{-1} + 3_14^{-1} 4_13 4_15 5_16^{-1} + "
    "4_15^{-1} 5_14^{2} 6_15^{-1} 8_15^{-1} + 5_16^{-1} 6_13 6_15 7_14^{-1} + "
    "6_17^{-1} 7_12 7_16 + 5_16^{-1} 8_13 8_15 + "
    "1_20^{-1} 1_10 + 1_12^{-1} 1_18 2_19^{-1} 2_11 + 2_13^{-1} 2_17 3_18^{-1} 3_12 + "
    "3_14^{-1} 3_16 4_17^{-1} 4_13 + 2*5_16^{-1} 5_14 + 6_17^{-1} 6_13 7_14^{-1} 7_16 + "
    "7_18^{-1} 7_12 + 8_17^{-1} 8_13 + "
    "5_14 8_15^{-1} 8_17^{-1} + 6_13 7_14^{-1} 7_18^{-1} + 5_14 6_15^{-1} 6_17^{-1} 7_16 + "
    "4_15 5_16^{-2} 6_15 8_15 + 3_16 4_15^{-1} 4_17^{-1} 5_14 + 2_17 3_14^{-1} 3_18^{-1} 4_13 + "
    "2_17 3_18^{-1} 4_15^{-1} 5_14 + 3_16 4_17^{-1} 5_16^{-1} 6_15 8_15 + "
    "5_14 6_15^{-1} 7_18^{-1} + 4_15 5_16^{-1} 6_17^{-1} 7_16 8_15 + "
    "4_15 5_16^{-1} 6_15 8_17^{-1} + 2_17 3_18^{-1} 5_16^{-1} 6_15 8_15 + "
    "3_16 4_17^{-1} 6_17^{-1} 7_16 8_15 + 3_16 4_17^{-1} 6_15 8_17^{-1} + "
    "4_15 5_16^{-1} 7_18^{-1} 8_15 + 4_15 6_17^{-1} 7_16 8_17^{-1} + "
    "2_17 3_18^{-1} 6_17^{-1} 7_16 8_15 + 2_17 3_18^{-1} 6_15 8_17^{-1} + "
    "3_16 4_17^{-1} 7_18^{-1} 8_15 + 3_16 4_17^{-1} 5_16 6_17^{-1} 7_16 8_17^{-1} + "
    "4_15 7_18^{-1} 8_17^{-1} + 2_17 3_18^{-1} 7_18^{-1} 8_15 + "
    "2_17 3_18^{-1} 5_16 6_17^{-1} 7_16 8_17^{-1} + 3_16 5_18^{-1} 7_16 + "
    "3_16 4_17^{-1} 5_16 7_18^{-1} 8_17^{-1} + 2_17 3_18^{-1} 4_17 5_18^{-1} 7_16 + "
    "2_17 3_18^{-1} 5_16 7_18^{-1} 8_17^{-1} + 3_16 5_18^{-1} 6_17 7_18^{-1} + 3_16 6_19^{-1} + "
    "2_17 4_19^{-1} 7_16 + 2_17 3_18^{-1} 4_17 5_18^{-1} 6_17 7_18^{-1} + "
    "2_17 4_19^{-1} 6_17 7_18^{-1} + 2_17 3_18^{-1} 4_17 6_19^{-1} + "
    "2_17 4_19^{-1} 5_18 6_19^{-1} + 2_17 5_20^{-1} 8_19 + 2_17 8_21^{-1} + "
    "1_18 2_13^{-1} 2_19^{-1} 3_12 + 1_18 2_19^{-1} 3_14^{-1} 4_13 + "
    "1_18 2_19^{-1} 4_15^{-1} 5_14 + 1_18 2_19^{-1} 5_16^{-1} 6_15 8_15 + "
    "1_18 2_19^{-1} 6_15 8_17^{-1} + 1_18 2_19^{-1} 6_17^{-1} 7_16 8_15 + "
    "1_18 2_19^{-1} 5_16 6_17^{-1} 7_16 8_17^{-1} + 1_18 2_19^{-1} 7_18^{-1} 8_15 + "
    "1_18 2_19^{-1} 5_16 7_18^{-1} 8_17^{-1} + 1_18 2_19^{-1} 4_17 5_18^{-1} 7_16 + "
    "1_18 2_19^{-1} 4_17 5_18^{-1} 6_17 7_18^{-1} + 1_18 2_19^{-1} 3_18 4_19^{-1} 7_16 + "
    "1_18 2_19^{-1} 4_17 6_19^{-1} + 1_18 2_19^{-1} 3_18 4_19^{-1} 6_17 7_18^{-1} + "
    "1_18 3_20^{-1} 7_16 + 1_18 3_20^{-1} 6_17 7_18^{-1} + "
    "1_18 2_19^{-1} 3_18 4_19^{-1} 5_18 6_19^{-1} + 1_18 3_20^{-1} 5_18 6_19^{-1} + "
    "1_18 2_19^{-1} 3_18 5_20^{-1} 8_19 + 1_18 2_19^{-1} 3_18 8_21^{-1} + "
    "1_18 3_20^{-1} 4_19 5_20^{-1} 8_19 + 1_18 3_20^{-1} 4_19 8_21^{-1} + 1_18 4_21^{-1} 8_19 + "
    "1_18 4_21^{-1} 5_20 8_21^{-1} + 1_18 5_22^{-1} 6_21 + 1_18 6_23^{-1} 7_22 + "
    "1_18 7_24^{-1} + "
    "1_12^{-1} 1_20^{-1} 2_11 + "
    "1_20^{-1} 2_13^{-1} 3_12 + 1_20^{-1} 3_14^{-1} 4_13 + 1_20^{-1} 4_15^{-1} 5_14 + "
    "1_20^{-1} 5_16^{-1} 6_15 8_15 + 1_20^{-1} 6_15 8_17^{-1} + 1_20^{-1} 6_17^{-1} 7_16 8_15 + "
    "1_20^{-1} 5_16 6_17^{-1} 7_16 8_17^{-1} + 1_20^{-1} 7_18^{-1} 8_15 + "
    "1_20^{-1} 5_16 7_18^{-1} 8_17^{-1} + 1_20^{-1} 4_17 5_18^{-1} 7_16 + "
    "1_20^{-1} 4_17 5_18^{-1} 6_17 7_18^{-1} + 1_20^{-1} 3_18 4_19^{-1} 7_16 + "
    "1_20^{-1} 4_17 6_19^{-1} + 1_20^{-1} 3_18 4_19^{-1} 6_17 7_18^{-1} + "
    "1_20^{-1} 2_19 3_20^{-1} 7_16 + 1_20^{-1} 2_19 3_20^{-1} 6_17 7_18^{-1} + "
    "1_20^{-1} 3_18 4_19^{-1} 5_18 6_19^{-1} + 1_20^{-1} 2_19 3_20^{-1} 5_18 6_19^{-1} + "
    "1_20^{-1} 3_18 5_20^{-1} 8_19 + 1_20^{-1} 3_18 8_21^{-1} + "
    "1_20^{-1} 2_19 3_20^{-1} 4_19 5_20^{-1} 8_19 + 1_20^{-1} 2_19 3_20^{-1} 4_19 8_21^{-1} + "
    "1_20^{-1} 2_19 4_21^{-1} 8_19 + 1_20^{-1} 2_19 4_21^{-1} 5_20 8_21^{-1} + "
    "1_20^{-1} 2_19 5_22^{-1} 6_21 + 1_20^{-1} 2_19 6_23^{-1} 7_22 + 1_20^{-1} 2_19 7_24^{-1} + "
    "2_21^{-1} 7_16 + 2_21^{-1} 6_17 7_18^{-1} + 2_21^{-1} 5_18 6_19^{-1} + "
    "2_21^{-1} 4_19 5_20^{-1} 8_19 + 2_21^{-1} 4_19 8_21^{-1} + 2_21^{-1} 3_20 4_21^{-1} 8_19 + "
    "2_21^{-1} 3_20 4_21^{-1} 5_20 8_21^{-1} + 3_22^{-1} 8_19 + 3_22^{-1} 5_20 8_21^{-1} + "
    "2_21^{-1} 3_20 5_22^{-1} 6_21 + 3_22^{-1} 4_21 5_22^{-1} 6_21 + "
    "2_21^{-1} 3_20 6_23^{-1} 7_22 + 2_21^{-1} 3_20 7_24^{-1} + 3_22^{-1} 4_21 6_23^{-1} 7_22 + "
    "4_23^{-1} 6_21 + 3_22^{-1} 4_21 7_24^{-1} + 4_23^{-1} 5_22 6_23^{-1} 7_22 + "
    "4_23^{-1} 5_22 7_24^{-1} + 5_24^{-1} 7_22 8_23 + 7_22 8_25^{-1} + "
    "5_24^{-1} 6_23 7_24^{-1} 8_23 + 6_23 7_24^{-1} 8_25^{-1} + 6_25^{-1} 8_23 + "
    "5_24 6_25^{-1} 8_25^{-1} + 4_25 5_26^{-1} + 3_26 4_27^{-1} + 2_27 3_28^{-1} + "
    "1_28 2_29^{-1} + 1_30^{-1}";

} // namespace

const std::string& printed_character(const std::string& key) {
  static const std::map<std::string, std::string> chars = {
      {"A1", A1}, {"A2", A2}, {"A3", A3}, {"A4", A4}, {"B2", B2}, {"B3", B3},
      {"C2", C2}, {"C3", C3}, {"D4", D4}, {"E6", E6}, {"E7", E7}, {"E8", E8},
      {"F4", F4}, {"G2", G2}, {"G2fun2", G2fun2}, {"A2ad", A2ad}};
  auto it = chars.find(key);
  if (it == chars.end()) throw std::domain_error("no printed character for " + key);
  return it->second;
}

} // namespace rmx::tables

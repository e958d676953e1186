#pragma once

// Frozen expected values shared by the unit and acceptance suites.  The
// large height grid lives in <braids/reference_data.hpp> because the CLI
// self-check uses it too; everything here is test-only.

#include <array>
#include <string>
#include <vector>

namespace fixtures {

// Normal forms of the nineteen divisors of Delta_3^2, in the canonical
// enumeration order (factors joined by U+00B7).
inline const std::vector<std::string> kDivDelta32Renders{
    "1",           "a",           "a·a",    "b",           "ba",
    "ba·a",   "b·b",    "b·ba",   "ab",          "aba",
    "aba·a",  "ab·b",   "ab·ba",  "a·ab",   "aba·b",
    "aba·ba", "ba·ab",  "aba·ab", "aba·aba",
};

// Jump heights between consecutive entries of the enumeration above.
inline const std::vector<int> kDivDelta32Jumps{1, 1, 2, 1, 1, 2, 1, 2, 1,
                                               1, 2, 1, 2, 1, 1, 2, 1, 1};

// Same data for Delta_3 itself.
inline const std::vector<std::string> kDivDelta3Words{"1", "a", "b", "ba", "ab", "aba"};
inline const std::vector<int> kDivDelta3Jumps{1, 2, 1, 2, 1};

// Quotient words linking consecutive entries of the Delta_3^2 enumeration.
inline const std::vector<std::string> kQuotientsDelta32{
    "a", "a", "AAb", "a", "a", "AAb", "a", "bAA", "a",
    "a", "AAb", "a", "bAA", "a", "a", "bAA", "a", "a",
};

// The two-strand-relevant enumerations emitted by the explicit construction.
inline const std::vector<std::string> kS31{"", "a", "b", "ba", "ab", "aba"};

inline const std::vector<std::string> kS32{
    "",     "a",     "aa",   "b",     "ba",     "baa",  "bb",
    "bba",  "ab",    "aba",  "abaa",  "abb",    "abba", "aab",
    "aaba", "aabaa", "baab", "baaba", "baabaa",
};

inline const std::vector<std::string> kW31{"a", "Ab", "a", "bA", "a"};

inline const std::vector<std::string> kW32{
    "a", "a", "AAb", "a", "a", "AAb", "a", "bAA", "a",
    "a", "AAb", "a", "bAA", "a", "a", "bAA", "a", "a",
};

// Transition matrix for three strands: rows and columns indexed by the
// simple elements written as 1, s1, s2, s2 s1, s1 s2, Delta_3.
inline const std::vector<std::string> kM3Order{"", "a", "b", "ba", "ab", "aba"};

inline constexpr std::array<std::array<int, 6>, 6> kM3{{
    {1, 0, 0, 0, 0, 0},
    {1, 1, 0, 0, 1, 0},
    {1, 0, 1, 1, 0, 0},
    {1, 1, 0, 0, 1, 0},
    {1, 0, 1, 1, 0, 0},
    {1, 1, 1, 1, 1, 1},
}};

// Two-strand transition matrix, indexed by (1, s1).
inline constexpr std::array<std::array<int, 2>, 2> kM2{{
    {1, 0},
    {1, 1},
}};

// Run-length codes of two-generator positive words.
struct CodeFixture {
    std::string word;
    std::vector<int> code;
};

inline const std::vector<CodeFixture> kCodes{
    {"", {}},
    {"a", {1}},
    {"b", {1, 0}},
    {"ab", {1, 1, 0}},
    {"ba", {1, 1}},
    {"abaa", {1, 1, 2}},
    {"aaba", {2, 1, 1}},
    {"baab", {1, 2, 1, 0}},
    {"bbbaaabbbbb", {3, 3, 5, 0}},
};

// Values of h_1(Delta_3^d) = number of degree-at-most-d divisors, d = 0..10.
inline const std::vector<long long> kTwoGenCounts{1,   6,    19,   48,   109, 234,
                                                  487, 996,  2017, 4062, 8155};

}  // namespace fixtures

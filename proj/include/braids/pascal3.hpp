#pragma once

#include <string>
#include <vector>

#include "braids/word.hpp"

namespace braids {

enum class DeltaDirection { suffix, prefix };

// Sliding subword of the repeating pattern C = sigma_{n-1}..sigma_1 sigma_1..
// sigma_{n-1}: with p = q|C| + s, the suffix direction takes the last s
// letters of C followed by q full copies, the prefix direction q full copies
// followed by the first s letters. The two are reverses of each other.
PositiveWord delta_np(int n, int p, DeltaDirection dir);

struct SEntry {
    PositiveWord word;
    std::string provenance;  // which rule of the construction produced it
};

struct BraidSequence {
    int n = 1;
    int d = 0;
    std::vector<SEntry> entries;
};

// Explicit listing of the divisors of Delta_n^d in increasing order, built
// without any comparison machinery. Only n <= 3 is constructed.
BraidSequence s_sequence(int n, int d);

// Quotient words between consecutive entries of s_sequence(n, d): entry(k-1)
// times the k-th word equals entry(k).
std::vector<BraidWord> w_sequence(int n, int d);

struct PascalCheck {
    std::string id;
    bool pass = false;
    std::string detail;
};

struct PascalReport {
    int d = 0;
    std::vector<PascalCheck> checks;
    bool all_pass = false;
};

// Re-derives the guarantees of the degree-d enumeration (membership, count,
// telescoping quotients, drawn sigma-positive transitions, agreement with the
// order-sorted enumeration, and the boundary identities of the construction)
// and reports each one. A negative cap falls back to the configured bound.
PascalReport verify_pascal(int d, int degree_cap = -1);

// Run lengths of the maximal constant blocks of a two-generator word, with a
// trailing 0 when the word ends with sigma_2.
std::vector<int> burckel_code(const PositiveWord& w);

// Whether every interior run of the code has length at least 2 — the shape
// shared by exactly one word per braid.
bool is_burckel_normal(const PositiveWord& w);

// Length-then-lexicographic comparison of codes: -1, 0, or +1.
int shortlex_compare(const std::vector<int>& a, const std::vector<int>& b);

// The unique normal word representing the same braid as x, found by lookup
// in the enumeration of x's degree.
PositiveWord burckel_representative(const PositiveWord& x);

std::string to_json(const BraidSequence& s);
std::string to_json(const PascalReport& r);

}  // namespace braids

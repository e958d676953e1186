#pragma once

#include <string>

#include "braids/word.hpp"

namespace braids {

enum class Polarity { positive, negative, trivial };
enum class Ordering { less, equal, greater };

std::string to_string(Polarity p);
std::string to_string(Ordering o);

struct ReducedWord {
    BraidWord word;        // handle-free representative, sigma-consistent
    Polarity polarity;     // sign of the highest-index letters (trivial if empty)
    int main_index = 0;    // highest generator index present, 0 if trivial
};

// Runs handle reduction until no handle remains. The result represents the
// same braid and every occurrence of its highest generator carries one sign,
// which decides the order. Throws cap_exceeded past the step budget.
ReducedWord reduce_to_sigma_consistent(const BraidWord& w);

Ordering compare(const BraidWord& x, const BraidWord& y, int n);
Ordering compare(const PositiveWord& x, const PositiveWord& y, int n);

// Index of the highest generator in some representative of w; the braid must
// be nontrivial.
int main_generator_index(const BraidWord& w, int n);

// For x < y, the index of the highest generator of x^{-1} y.
int jump_height(const BraidWord& x, const BraidWord& y, int n);
int jump_height(const PositiveWord& x, const PositiveWord& y, int n);

}  // namespace braids

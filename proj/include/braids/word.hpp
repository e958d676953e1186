#pragma once

#include <string>
#include <vector>

namespace braids {

// One letter of a braid word: 1-based generator index and sign (+1 or -1).
struct Letter {
    int index;
    int sign;
    friend bool operator==(const Letter&, const Letter&) = default;
};

// A word in the generators of B_n; letters may be inverted.
struct BraidWord {
    int ambient = 1;
    std::vector<Letter> letters;
    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

// A word in the positive monoid: just the generator subscripts.
struct PositiveWord {
    int ambient = 1;
    std::vector<int> indices;
    friend bool operator==(const PositiveWord&, const PositiveWord&) = default;
};

BraidWord to_braid_word(const PositiveWord& w);
// Throws std::invalid_argument if w has a negative letter.
PositiveWord to_positive(const BraidWord& w);
bool is_positive(const BraidWord& w);

// Parses text as a word in B_n. Letters: a..y for sigma_1..sigma_25, A..Y for
// their inverses, s<digits> / S<digits> for arbitrary indices; whitespace is
// skipped. Generator indices must satisfy 1 <= index < n. Throws parse_error.
BraidWord parse_word(const std::string& text, int n);
// As above with n = 1 + largest index in the text (minimum 1).
BraidWord parse_word(const std::string& text);
PositiveWord parse_positive_word(const std::string& text, int n);

// Renders with the same letter conventions; round-trips parse_word.
std::string render_word(const BraidWord& w);
std::string render_word(const PositiveWord& w);
// Same, but the empty word renders as "1".
std::string display_word(const BraidWord& w);
std::string display_word(const PositiveWord& w);

// The flip automorphism of B_n: sigma_i -> sigma_(n-i).
BraidWord flip(const BraidWord& w, int n);
PositiveWord flip(const PositiveWord& w, int n);

BraidWord inverse(const BraidWord& w);
BraidWord concat(const BraidWord& a, const BraidWord& b);
PositiveWord concat(const PositiveWord& a, const PositiveWord& b);
PositiveWord power(const PositiveWord& w, int k);

// Largest generator index occurring in w; 0 for the empty word.
int max_index(const BraidWord& w);
int max_index(const PositiveWord& w);

}  // namespace braids

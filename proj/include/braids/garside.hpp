#pragma once

#include <string>
#include <vector>

#include "braids/permutation.hpp"
#include "braids/word.hpp"

namespace braids {

// Left-greedy normal form: a sequence of simple factors with every adjacent
// pair left-weighted and no identity factors. Two positive words represent
// the same braid iff their normal forms are equal.
struct NormalForm {
    int n = 1;
    std::vector<Permutation> factors;
    int degree() const { return static_cast<int>(factors.size()); }
    bool is_trivial() const { return factors.empty(); }
    friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

// Word for the half twist: delta_word(n) = (s1..s_{n-1})(s1..s_{n-2})...(s1).
PositiveWord delta_word(int n);

// Right complement s^-1 * Delta of a simple braid.
Permutation right_complement(const Permutation& s);
// Greatest common left divisor of two simple braids.
Permutation simple_gcd(const Permutation& a, const Permutation& b);
// For u a left divisor of the simple s: the simple u^-1 s.
Permutation simple_left_quotient(const Permutation& u, const Permutation& s);
bool simple_left_divides(const Permutation& u, const Permutation& s);

// (s, t) is left-weighted: every atom dividing t on the left already divides
// s on the right; equivalently gcd(right_complement(s), t) = 1.
bool is_normal_pair(const Permutation& s, const Permutation& t);

NormalForm normal_form(const PositiveWord& w);
NormalForm nf_of_simple(const Permutation& s, int n);
NormalForm delta_power_nf(int n, int d);
// x * s, renormalized (s a simple n-braid).
NormalForm nf_append(NormalForm x, const Permutation& s);
NormalForm nf_concat(const NormalForm& a, const NormalForm& b);

// "1" for the trivial braid; factors joined with U+00B7, e.g. "aba·b".
std::string render(const NormalForm& x);
PositiveWord word_of(const NormalForm& x);

// d-th factor, with identity padding beyond the degree (d >= 1).
Permutation factor_at(const NormalForm& x, int d);

// Whether [x] left-divides Delta_n^d, decided on the degree of the
// normal form of x in B_n.
bool degree_bound_test(const PositiveWord& x, int n, int d);

// Greatest common left divisor / least common right multiple, as positive
// words (canonical up to braid equality).
PositiveWord left_gcd(const PositiveWord& x, const PositiveWord& y);
PositiveWord right_lcm(const PositiveWord& x, const PositiveWord& y);
// True iff left_gcd(x, y) equals x as a braid.
bool left_divides(const PositiveWord& x, const PositiveWord& y);

// Subword reversing of x^-1 y into v u^-1 with u, v positive; then
// x v = y u = right_lcm(x, y).
struct ReversingResult {
    PositiveWord positive_part;  // v
    PositiveWord negative_part;  // u
};
ReversingResult reverse_quotient(const PositiveWord& x, const PositiveWord& y);

// For a a left divisor of x: the positive word a^-1 x (throws otherwise).
PositiveWord positive_left_quotient(const PositiveWord& a, const PositiveWord& x);

// Image of the word under the reversal anti-automorphism.
PositiveWord reversed(const PositiveWord& w);
// Whether sigma_i divides [x] on the right.
bool atom_right_divides(int i, const PositiveWord& x);

}  // namespace braids

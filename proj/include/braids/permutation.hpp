#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braids/word.hpp"

namespace braids {

// A permutation of {1..n}, used to represent simple (permutation) braids.
// Positive words act left to right: the permutation of uv is perm(u)
// followed by perm(v).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int n);                       // identity
    static Permutation transposition(int n, int i);    // swaps i and i+1
    static Permutation longest(int n);                 // i -> n+1-i (half twist)
    static Permutation from_images(const std::vector<int>& images);  // 1-based

    int size() const { return static_cast<int>(img_.size()); }
    int image(int i) const { return img_[i - 1] + 1; }
    bool is_identity() const;

    Permutation then(const Permutation& g) const;      // *this followed by g
    Permutation inverse_perm() const;

    // sigma_i divides the simple braid on the left iff i is a left descent,
    // on the right iff i is a right descent.
    bool left_descent(int i) const { return img_[i - 1] > img_[i]; }
    bool right_descent(int i) const;
    std::uint32_t left_descent_mask() const;
    std::uint32_t right_descent_mask() const;

    int length() const;                                // inversion count
    std::uint64_t key() const;                         // packed one-line (n <= 10)
    std::string one_line() const;                      // "[2,3,1]" for diagnostics

    friend bool operator==(const Permutation&, const Permutation&) = default;
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

private:
    std::vector<std::uint8_t> img_;                    // 0-based images
};

// Fold of adjacent transpositions, left to right.
Permutation permutation_of(const PositiveWord& w);

enum class Side { left, right };

// Whether sigma_i divides the simple braid with permutation s on that side.
bool generator_divides_simple(Side side, int i, const Permutation& s);

// Canonical positive word of a simple braid: repeatedly emit the smallest
// left descent.
PositiveWord word_of_simple(const Permutation& s);

// All n! permutations in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);

}  // namespace braids

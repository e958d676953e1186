#pragma once

#include <map>
#include <string>
#include <vector>

#include "braids/garside.hpp"
#include "braids/order.hpp"
#include "braids/word.hpp"

namespace braids {

// The left divisors of a positive braid, together with the labeled graph
// whose edges are right multiplications by a single generator.
struct DivisorSet {
    PositiveWord base;
    int n = 1;
    std::vector<NormalForm> elements;  // breadth-first discovery order; elements[0] is trivial
    struct Edge {
        int from;
        int label;
        int to;
    };
    std::vector<Edge> edges;              // elements[from] * sigma_label = elements[to]
    std::map<std::string, int> index_of;  // normal-form render -> index into elements

    int find(const NormalForm& x) const;  // -1 when x is not a divisor
};

DivisorSet divisors(const PositiveWord& z, int n);

// Whether the path traced by w from the vertex `start` stays inside the
// divisor graph of z. The starting vertex must itself be a divisor.
bool is_drawn(const BraidWord& w, const PositiveWord& start, const PositiveWord& z, int n);
bool is_drawn(const BraidWord& w, const PositiveWord& start, const DivisorSet& divs);

struct OrderedEnumeration {
    PositiveWord base;
    int n = 1;
    std::vector<PositiveWord> entries;  // every divisor of base, increasing in the braid order
    std::vector<int> jumps;             // jumps[k] joins entries[k] and entries[k+1]
};

OrderedEnumeration ordered_enumeration(const DivisorSet& divs);
OrderedEnumeration ordered_enumeration(const PositiveWord& z, int n);

// 1 + the number of jumps of height at least r.
int height(const OrderedEnumeration& e, int r);
int height(const PositiveWord& z, int n, int r);

// Height at the main generator index of z, minus one. Undefined for the
// trivial braid.
int complexity(const PositiveWord& z, int n);

// Words w_k with entry_{k-1} * w_k = entry_k, each sigma-positive with a
// single letter of its main index, drawn from entry_{k-1} in the divisor
// graph. Violations of those guarantees raise logic_error.
std::vector<BraidWord> quotient_sequence(const OrderedEnumeration& e, const DivisorSet& divs);
std::vector<BraidWord> quotient_sequence(const PositiveWord& z, int n);

enum class Extremal { minimum, maximum, both, interior };
std::string to_string(Extremal e);

// Position of a divisor x of Delta_n^d inside its class: x is maximal exactly
// when the d-th normal-form factor of x has sigma_1..sigma_{r-1} among its
// right descents, and minimal exactly when no sigma_i with i < r divides x on
// the right.
Extremal classify_extremal(const NormalForm& x, int n, int d, int r);

// Same classification for a divisor x of an arbitrary z: x is maximal exactly
// when no x*sigma_i with i < r stays a divisor of z, minimal as above.
Extremal classify_extremal_general(const PositiveWord& x, const PositiveWord& z, int n, int r);

// Grouping of the ordered enumeration of Div(z) by the subgroup generated by
// sigma_1..sigma_{r-1}. Classes are intervals; each carries its bounds as
// inclusive indices into the enumeration. Construction cross-checks the
// partition (class minima divide their members, translation by the minimum
// is an isomorphism onto the divisors of the quotient, and both extremal
// classifiers agree with the enumeration order) and raises logic_error on
// any mismatch.
struct BrClassPartition {
    int r = 1;
    OrderedEnumeration enumeration;
    struct ClassRange {
        int first;
        int last;  // inclusive
    };
    std::vector<ClassRange> classes;
};

BrClassPartition br_class_partition(const PositiveWord& z, int n, int r);

std::string to_dot(const DivisorSet& divs);
std::string to_json(const OrderedEnumeration& e);
std::string to_json(const OrderedEnumeration& e, const std::vector<BraidWord>& quotients);

}  // namespace braids

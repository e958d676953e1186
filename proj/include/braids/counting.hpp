#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "braids/permutation.hpp"

namespace braids {

using BigInt = boost::multiprecision::cpp_int;

// Adjacency matrix of the normal-pair relation over all n! simple elements.
struct TransitionMatrix {
    int n = 1;
    int size = 0;                      // n!
    std::vector<Permutation> simples;  // ordered by one-line notation
    std::vector<std::uint8_t> a;       // row-major: a[s*size+t] = 1 iff (s,t) is a normal pair

    int index_of(const Permutation& p) const;
    std::uint8_t at(int s, int t) const { return a[static_cast<std::size_t>(s) * size + t]; }
};

TransitionMatrix transition_matrix(int n);
TransitionMatrix transition_matrix_serial(int n);

// Shared per-n instance; built on first use.
const TransitionMatrix& cached_transition_matrix(int n);

std::vector<BigInt> vec_mat_product(const std::vector<BigInt>& v, const TransitionMatrix& m);
std::vector<BigInt> vec_mat_product_serial(const std::vector<BigInt>& v,
                                           const TransitionMatrix& m);

// Number of normal sequences of d simple factors ending in t, where identity
// factors may appear only as trailing padding. For t != 1 this counts the
// degree-d positive braids whose last normal-form factor is t.
BigInt count_last_factor(int n, int d, const Permutation& t);

// Height of the divisor enumeration of Delta_n^d at level r, computed from
// powers of the transition matrix instead of the enumeration itself.
BigInt height_via_matrix(int n, int d, int r);

// Complexity of Delta_n^d, computed along two independent matrix routes that
// must agree.
BigInt complexity_via_matrix(int n, int d);

enum class ClosedForm {
    h1_delta3,        // h_1(Delta_3^d); parameter d
    h2_delta3,        // h_2(Delta_3^d); parameter d
    h1_delta4,        // h_1(Delta_4^d); parameter d
    h2_delta4,        // h_2(Delta_4^d); parameter d
    h3_delta4,        // h_3(Delta_4^d); parameter d
    hr_delta,         // h_r(Delta_n) = n!/r!; parameters n, r
    h_top_delta2,     // h_{n-1}(Delta_n^2) = 2^n - 1; parameter n
    h_subtop_delta2,  // h_{n-2}(Delta_n^2) = 2*3^n - (n+6)*2^{n-1} + 1; parameter n
    h_top_delta3,     // h_{n-1}(Delta_n^3) = sum_{i<n} n!/i!; parameter n
    rec_h1_delta3,    // h_1(Delta_3^d) through its order-1 recurrence; parameter d
    rec_h1_delta4,    // h_1(Delta_4^d) through its order-2 recurrence; parameter d
};

// Exact integer evaluation of the named formula (irrational terms are tracked
// as integer pairs and must cancel; any lost integrality is a logic error).
BigInt closed_form_height(ClosedForm form, int p1, int p2 = -1);

// h_1(Delta_n^2) through the alternating binomial recurrence.
BigInt carlitz_recurrence_h1_delta_squared(int n);

// Heights h_r(Delta_n^d) for all 1 <= r < n, laid out one row per (n, r).
struct Table1 {
    int n_max = 1;
    int d_max = 0;
    struct Row {
        int n;
        int r;
        std::vector<BigInt> values;  // indexed by d = 0..d_max
    };
    std::vector<Row> rows;
};

Table1 table1(int n_max, int d_max);
std::string to_csv(const Table1& t);
std::string to_text(const Table1& t);

}  // namespace braids

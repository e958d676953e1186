#pragma once

#include <atomic>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace braids {

// Thrown when an operation would exceed a configured resource cap.
class cap_exceeded : public std::runtime_error {
public:
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown on malformed input text (bad letter, out-of-range generator index).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Runtime-adjustable resource limits. The CLI seeds these from environment
// variables and flags; library code reads them as defaults.
namespace caps {

std::atomic<long long>& reducer_steps();       // handle-reduction / reversing budget
std::atomic<std::size_t>& divisor_cap();       // max divisor-set size
std::atomic<int>& matrix_nmax();               // max strand count for n! x n! matrices
std::atomic<int>& pascal_dmax();               // max exponent for triangle verification
std::atomic<int>& representative_degree_cap(); // max degree for shortlex lookup

}  // namespace caps

}  // namespace braids

#include "braids/caps.hpp"

namespace braids::caps {

std::atomic<long long>& reducer_steps() {
    static std::atomic<long long> v{10'000'000};
    return v;
}

std::atomic<std::size_t>& divisor_cap() {
    static std::atomic<std::size_t> v{500'000};
    return v;
}

std::atomic<int>& matrix_nmax() {
    static std::atomic<int> v{6};
    return v;
}

std::atomic<int>& pascal_dmax() {
    static std::atomic<int> v{8};
    return v;
}

std::atomic<int>& representative_degree_cap() {
    static std::atomic<int> v{12};
    return v;
}

}  // namespace braids::caps

// Timing comparison of the threaded counting kernels against their serial
// reference implementations: matrix construction for n = 5, 6 and repeated
// vector-matrix products (the inner loop of every height computation).
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <braids/counting.hpp>

using namespace braids;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

BigInt checksum(const std::vector<BigInt>& v) {
    BigInt total = 0;
    for (const BigInt& x : v) total += x;
    return total;
}

void bench_build(int n, int repeats) {
    auto t0 = Clock::now();
    TransitionMatrix serial;
    for (int k = 0; k < repeats; ++k) serial = transition_matrix_serial(n);
    double serial_ms = ms_since(t0) / repeats;

    t0 = Clock::now();
    TransitionMatrix threaded;
    for (int k = 0; k < repeats; ++k) threaded = transition_matrix(n);
    double threaded_ms = ms_since(t0) / repeats;

    if (serial.a != threaded.a) {
        std::cerr << "build mismatch at n=" << n << "\n";
        std::exit(1);
    }
    std::cout << "build n=" << n << " (" << serial.size << "x" << serial.size << ")"
              << "  serial " << serial_ms << " ms"
              << "  threaded " << threaded_ms << " ms"
              << "  speedup x" << serial_ms / threaded_ms << "\n";
}

void bench_products(int n, int steps) {
    const TransitionMatrix& m = cached_transition_matrix(n);
    std::mt19937_64 rng(20260816);
    std::vector<BigInt> start(m.size);
    for (BigInt& x : start) x = BigInt(rng() % 1000 + 1);

    auto t0 = Clock::now();
    std::vector<BigInt> vs = start;
    for (int k = 0; k < steps; ++k) vs = vec_mat_product_serial(vs, m);
    double serial_ms = ms_since(t0);

    t0 = Clock::now();
    std::vector<BigInt> vt = start;
    for (int k = 0; k < steps; ++k) vt = vec_mat_product(vt, m);
    double threaded_ms = ms_since(t0);

    if (vs != vt) {
        std::cerr << "product mismatch at n=" << n << "\n";
        std::exit(1);
    }
    std::cout << "products n=" << n << " steps=" << steps
              << "  serial " << serial_ms << " ms"
              << "  threaded " << threaded_ms << " ms"
              << "  speedup x" << serial_ms / threaded_ms
              << "  checksum " << checksum(vt).str().substr(0, 12) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    int steps = argc > 1 ? std::atoi(argv[1]) : 24;
    bench_build(5, 5);
    bench_build(6, 2);
    bench_products(5, steps);
    bench_products(6, steps);
    std::cout << "all kernels agree with the serial reference\n";
    return 0;
}

#pragma once

#include <array>

namespace braids::reference {

// Reference values of h_r(Delta_n^d) for 2 <= n <= 6, 1 <= r < n, d <= 6,
// used to regression-test the counting routes.
inline constexpr int kDMax = 6;

struct HeightRow {
    int n;
    int r;
    std::array<long long, kDMax + 1> values;  // indexed by d
};

inline constexpr std::array<HeightRow, 15> kHeights{{
    {2, 1, {1, 2, 3, 4, 5, 6, 7}},
    {3, 1, {1, 6, 19, 48, 109, 234, 487}},
    {3, 2, {1, 3, 7, 15, 31, 63, 127}},
    {4, 1, {1, 24, 211, 1380, 8077, 45252, 249223}},
    {4, 2, {1, 12, 83, 492, 2765, 15240, 83399}},
    {4, 3, {1, 4, 15, 64, 309, 1600, 8547}},
    {5, 1, {1, 120, 3651, 79140, 1548701, 29375460, 551997751}},
    {5, 2, {1, 60, 1501, 30540, 585811, 11044080, 207154921}},
    {5, 3, {1, 20, 311, 5260, 94881, 1755360, 32741851}},
    {5, 4, {1, 5, 31, 325, 4931, 86565, 1590231}},
    {6, 1, {1, 720, 90921, 7952040, 634472921, 49477263360, 3836712177121}},
    {6, 2, {1, 360, 38559, 3228300, 254718389, 19808530620, 1535016069499}},
    {6, 3, {1, 120, 8727, 649260, 49654757, 3831626580, 296361570667}},
    {6, 4, {1, 30, 1075, 61620, 4387195, 332578230, 25612893355}},
    {6, 5, {1, 6, 63, 1956, 116423, 8448606, 643888543}},
}};

}  // namespace braids::reference

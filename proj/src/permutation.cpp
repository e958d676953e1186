#include "braids/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace braids {

Permutation::Permutation(int n) {
    if (n < 1) throw std::invalid_argument("permutation size must be at least 1");
    img_.resize(n);
    std::iota(img_.begin(), img_.end(), 0);
}

Permutation Permutation::transposition(int n, int i) {
    if (i < 1 || i >= n)
        throw std::invalid_argument("transposition index " + std::to_string(i) +
                                    " out of range for n=" + std::to_string(n));
    Permutation p(n);
    std::swap(p.img_[i - 1], p.img_[i]);
    return p;
}

Permutation Permutation::longest(int n) {
    Permutation p(n);
    std::reverse(p.img_.begin(), p.img_.end());
    return p;
}

Permutation Permutation::from_images(const std::vector<int>& images) {
    Permutation p;
    p.img_.reserve(images.size());
    for (int v : images) p.img_.push_back(static_cast<std::uint8_t>(v - 1));
    std::vector<bool> seen(images.size(), false);
    for (std::uint8_t v : p.img_) {
        if (v >= images.size() || seen[v])
            throw std::invalid_argument("not a permutation");
        seen[v] = true;
    }
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Permutation Permutation::then(const Permutation& g) const {
    if (size() != g.size()) throw std::invalid_argument("size mismatch in composition");
    Permutation out;
    out.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) out.img_[i] = g.img_[img_[i]];
    return out;
}

Permutation Permutation::inverse_perm() const {
    Permutation out;
    out.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) out.img_[img_[i]] = static_cast<std::uint8_t>(i);
    return out;
}

bool Permutation::right_descent(int i) const {
    // position of i comes after position of i+1
    int pi = 0, pj = 0;
    for (int k = 0; k < size(); ++k) {
        if (img_[k] == i - 1) pi = k;
        if (img_[k] == i) pj = k;
    }
    return pi > pj;
}

std::uint32_t Permutation::left_descent_mask() const {
    std::uint32_t m = 0;
    for (int i = 1; i < size(); ++i)
        if (left_descent(i)) m |= (1u << (i - 1));
    return m;
}

std::uint32_t Permutation::right_descent_mask() const {
    std::uint32_t m = 0;
    std::vector<int> pos(img_.size());
    for (int k = 0; k < size(); ++k) pos[img_[k]] = k;
    for (int i = 1; i < size(); ++i)
        if (pos[i - 1] > pos[i]) m |= (1u << (i - 1));
    return m;
}

int Permutation::length() const {
    int inv = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (img_[i] > img_[j]) ++inv;
    return inv;
}

std::uint64_t Permutation::key() const {
    std::uint64_t k = 0;
    for (std::uint8_t v : img_) k = (k << 6) | v;
    return k | (static_cast<std::uint64_t>(img_.size()) << 60);
}

std::string Permutation::one_line() const {
    std::string s = "[";
    for (int i = 1; i <= size(); ++i) {
        if (i > 1) s += ",";
        s += std::to_string(image(i));
    }
    return s + "]";
}

Permutation permutation_of(const PositiveWord& w) {
    Permutation p(w.ambient);
    for (int i : w.indices) p = p.then(Permutation::transposition(w.ambient, i));
    return p;
}

bool generator_divides_simple(Side side, int i, const Permutation& s) {
    if (i < 1 || i >= s.size())
        throw std::invalid_argument("generator index out of range");
    return side == Side::left ? s.left_descent(i) : s.right_descent(i);
}

PositiveWord word_of_simple(const Permutation& s) {
    PositiveWord w;
    w.ambient = s.size();
    Permutation cur = s;
    while (!cur.is_identity()) {
        int i = 1;
        while (!cur.left_descent(i)) ++i;
        w.indices.push_back(i);
        cur = Permutation::transposition(cur.size(), i).then(cur);
    }
    return w;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> line(n);
    std::iota(line.begin(), line.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_images(line));
    } while (std::next_permutation(line.begin(), line.end()));
    return out;
}

}  // namespace braids

#include "braids/order.hpp"

#include <algorithm>
#include <stdexcept>

#include "braids/caps.hpp"

namespace braids {

std::string to_string(Polarity p) {
    switch (p) {
        case Polarity::positive: return "positive";
        case Polarity::negative: return "negative";
        default: return "trivial";
    }
}

std::string to_string(Ordering o) {
    switch (o) {
        case Ordering::less: return "less";
        case Ordering::equal: return "equal";
        default: return "greater";
    }
}

namespace {

// A handle is a subword sigma_i^e ... sigma_i^{-e} whose interior letters all
// have index greater than i. Scanning for the earliest-closing handle keeps
// its interior free of nested handles, so the rewrite is always permitted.
bool reduce_one_handle(std::vector<Letter>& w) {
    for (std::size_t q = 0; q < w.size(); ++q) {
        int i = w[q].index;
        for (std::size_t p = q; p-- > 0;) {
            if (w[p].index > i) continue;
            if (w[p].index < i || w[p].sign == w[q].sign) break;
            int e = w[p].sign;
            std::vector<Letter> repl;
            for (std::size_t k = p + 1; k < q; ++k) {
                if (w[k].index == i + 1) {
                    repl.push_back({i + 1, -e});
                    repl.push_back({i, w[k].sign});
                    repl.push_back({i + 1, e});
                } else {
                    repl.push_back(w[k]);
                }
            }
            w.erase(w.begin() + p, w.begin() + q + 1);
            w.insert(w.begin() + p, repl.begin(), repl.end());
            return true;
        }
    }
    return false;
}

std::vector<Letter> reduce_handle_free(std::vector<Letter> w) {
    const long long budget = caps::reducer_steps().load();
    long long steps = 0;
    while (reduce_one_handle(w)) {
        if (++steps > budget) throw cap_exceeded("handle reduction exceeded the step budget");
    }
    return w;
}

void check_ambient(const BraidWord& w, int n) {
    for (const Letter& l : w.letters) {
        if (l.index < 1 || l.index >= n)
            throw std::invalid_argument("generator index out of range for " + std::to_string(n) +
                                        " strands");
    }
}

}  // namespace

ReducedWord reduce_to_sigma_consistent(const BraidWord& w) {
    int n = w.ambient;
    check_ambient(w, n);
    // Handle-free words carry one sign on their lowest generator; conjugating
    // by the index flip i -> n-i moves that guarantee to the highest one.
    BraidWord flipped = flip(w, n);
    flipped.letters = reduce_handle_free(std::move(flipped.letters));
    ReducedWord out;
    out.word = flip(flipped, n);
    if (out.word.letters.empty()) {
        out.polarity = Polarity::trivial;
        out.main_index = 0;
        return out;
    }
    int m = 0;
    for (const Letter& l : out.word.letters) m = std::max(m, l.index);
    int sign = 0;
    for (const Letter& l : out.word.letters) {
        if (l.index != m) continue;
        if (sign == 0) sign = l.sign;
        if (sign != l.sign) throw std::logic_error("reduced word mixes signs on its main generator");
    }
    out.main_index = m;
    out.polarity = sign > 0 ? Polarity::positive : Polarity::negative;
    return out;
}

Ordering compare(const BraidWord& x, const BraidWord& y, int n) {
    BraidWord bx = x, by = y;
    bx.ambient = by.ambient = n;
    ReducedWord r = reduce_to_sigma_consistent(concat(inverse(bx), by));
    switch (r.polarity) {
        case Polarity::positive: return Ordering::less;
        case Polarity::negative: return Ordering::greater;
        default: return Ordering::equal;
    }
}

Ordering compare(const PositiveWord& x, const PositiveWord& y, int n) {
    return compare(to_braid_word(x), to_braid_word(y), n);
}

int main_generator_index(const BraidWord& w, int n) {
    BraidWord bw = w;
    bw.ambient = n;
    ReducedWord r = reduce_to_sigma_consistent(bw);
    if (r.polarity == Polarity::trivial)
        throw std::invalid_argument("the trivial braid has no main generator");
    return r.main_index;
}

int jump_height(const BraidWord& x, const BraidWord& y, int n) {
    BraidWord bx = x, by = y;
    bx.ambient = by.ambient = n;
    ReducedWord r = reduce_to_sigma_consistent(concat(inverse(bx), by));
    if (r.polarity != Polarity::positive)
        throw std::invalid_argument("jump_height requires the first braid to be smaller");
    return r.main_index;
}

int jump_height(const PositiveWord& x, const PositiveWord& y, int n) {
    return jump_height(to_braid_word(x), to_braid_word(y), n);
}

}  // namespace braids

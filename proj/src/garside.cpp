#include "braids/garside.hpp"

#include <algorithm>
#include <stdexcept>

#include "braids/caps.hpp"

namespace braids {

PositiveWord delta_word(int n) {
    if (n < 1) throw std::invalid_argument("strand count must be at least 1");
    PositiveWord w;
    w.ambient = n;
    for (int k = n - 1; k >= 1; --k)
        for (int i = 1; i <= k; ++i) w.indices.push_back(i);
    return w;
}

Permutation right_complement(const Permutation& s) {
    return s.inverse_perm().then(Permutation::longest(s.size()));
}

Permutation simple_gcd(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("size mismatch in simple_gcd");
    int n = a.size();
    Permutation pa = a, pb = b, g(n);
    for (;;) {
        int found = 0;
        for (int i = 1; i < n; ++i) {
            if (pa.left_descent(i) && pb.left_descent(i)) {
                found = i;
                break;
            }
        }
        if (found == 0) break;
        Permutation t = Permutation::transposition(n, found);
        g = g.then(t);
        pa = t.then(pa);
        pb = t.then(pb);
    }
    return g;
}

Permutation simple_left_quotient(const Permutation& u, const Permutation& s) {
    Permutation q = u.inverse_perm().then(s);
    if (u.length() + q.length() != s.length())
        throw std::invalid_argument("simple_left_quotient: u does not divide s");
    return q;
}

bool simple_left_divides(const Permutation& u, const Permutation& s) {
    Permutation q = u.inverse_perm().then(s);
    return u.length() + q.length() == s.length();
}

bool is_normal_pair(const Permutation& s, const Permutation& t) {
    if (s.size() != t.size()) throw std::invalid_argument("size mismatch in is_normal_pair");
    return (t.left_descent_mask() & ~s.right_descent_mask()) == 0;
}

namespace {

// Restores the left-weighted property by local moves (shift the shared part
// of each non-normal pair into the left factor) until a fixpoint; drops
// identity factors. Terminates: each move strictly shifts length leftward.
void renormalize(NormalForm& x) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k + 1 < x.factors.size(); ++k) {
            Permutation u = simple_gcd(right_complement(x.factors[k]), x.factors[k + 1]);
            if (u.is_identity()) continue;
            x.factors[k] = x.factors[k].then(u);
            x.factors[k + 1] = u.inverse_perm().then(x.factors[k + 1]);
            changed = true;
        }
        x.factors.erase(std::remove_if(x.factors.begin(), x.factors.end(),
                                       [](const Permutation& f) { return f.is_identity(); }),
                        x.factors.end());
    }
}

}  // namespace

NormalForm normal_form(const PositiveWord& w) {
    NormalForm nf;
    nf.n = w.ambient;
    for (int i : w.indices) nf = nf_append(std::move(nf), Permutation::transposition(w.ambient, i));
    return nf;
}

NormalForm nf_of_simple(const Permutation& s, int n) {
    NormalForm nf;
    nf.n = n;
    if (!s.is_identity()) nf.factors.push_back(s);
    return nf;
}

NormalForm delta_power_nf(int n, int d) {
    if (d < 0) throw std::invalid_argument("negative exponent");
    NormalForm nf;
    nf.n = n;
    if (n >= 2) nf.factors.assign(d, Permutation::longest(n));
    return nf;
}

NormalForm nf_append(NormalForm x, const Permutation& s) {
    if (s.size() != x.n) throw std::invalid_argument("factor size mismatch");
    if (s.is_identity()) return x;
    x.factors.push_back(s);
    // Bubble the new material leftward; a follow-up fixpoint pass guards the
    // rare case where an absorbed divisor re-breaks a pair on the right.
    for (std::size_t k = x.factors.size() - 1; k-- > 0;) {
        Permutation u = simple_gcd(right_complement(x.factors[k]), x.factors[k + 1]);
        if (u.is_identity()) break;
        x.factors[k] = x.factors[k].then(u);
        x.factors[k + 1] = u.inverse_perm().then(x.factors[k + 1]);
    }
    renormalize(x);
    return x;
}

NormalForm nf_concat(const NormalForm& a, const NormalForm& b) {
    if (a.n != b.n) throw std::invalid_argument("ambient mismatch in nf_concat");
    NormalForm out = a;
    for (const Permutation& f : b.factors) out = nf_append(std::move(out), f);
    return out;
}

std::string render(const NormalForm& x) {
    if (x.factors.empty()) return "1";
    std::string out;
    for (std::size_t k = 0; k < x.factors.size(); ++k) {
        if (k > 0) out += "\xc2\xb7";  // U+00B7 middle dot
        out += render_word(word_of_simple(x.factors[k]));
    }
    return out;
}

PositiveWord word_of(const NormalForm& x) {
    PositiveWord w;
    w.ambient = x.n;
    for (const Permutation& f : x.factors) {
        PositiveWord fw = word_of_simple(f);
        w.indices.insert(w.indices.end(), fw.indices.begin(), fw.indices.end());
    }
    return w;
}

Permutation factor_at(const NormalForm& x, int d) {
    if (d < 1) throw std::invalid_argument("factor index must be at least 1");
    if (d > x.degree()) return Permutation(x.n);
    return x.factors[d - 1];
}

bool degree_bound_test(const PositiveWord& x, int n, int d) {
    if (d < 0) return false;
    PositiveWord copy = x;
    copy.ambient = n;
    if (max_index(copy) >= n)
        throw std::invalid_argument("word uses generators outside the given braid group");
    return normal_form(copy).degree() <= d;
}

PositiveWord left_gcd(const PositiveWord& x, const PositiveWord& y) {
    int n = std::max(x.ambient, y.ambient);
    PositiveWord out;
    out.ambient = n;
    PositiveWord px = x, py = y;
    px.ambient = py.ambient = n;
    NormalForm a = normal_form(px), b = normal_form(py);
    // Any common atom of two positive braids divides both head factors, so
    // stripping gcd(head, head) repeatedly exhausts the common divisor.
    while (!a.is_trivial() && !b.is_trivial()) {
        Permutation u = simple_gcd(a.factors[0], b.factors[0]);
        if (u.is_identity()) break;
        PositiveWord uw = word_of_simple(u);
        out.indices.insert(out.indices.end(), uw.indices.begin(), uw.indices.end());
        auto strip = [&u](NormalForm& nf) {
            nf.factors[0] = simple_left_quotient(u, nf.factors[0]);
            NormalForm fixed;
            fixed.n = nf.n;
            for (const Permutation& f : nf.factors) fixed = nf_append(std::move(fixed), f);
            nf = std::move(fixed);
        };
        strip(a);
        strip(b);
    }
    return out;
}

ReversingResult reverse_quotient(const PositiveWord& x, const PositiveWord& y) {
    int n = std::max(x.ambient, y.ambient);
    std::vector<Letter> word;
    word.reserve(x.indices.size() + y.indices.size());
    for (auto it = x.indices.rbegin(); it != x.indices.rend(); ++it) word.push_back({*it, -1});
    for (int i : y.indices) word.push_back({i, +1});

    long long budget = caps::reducer_steps().load();
    long long steps = 0;
    for (;;) {
        std::size_t p = word.size();
        for (std::size_t k = 0; k + 1 < word.size(); ++k) {
            if (word[k].sign < 0 && word[k + 1].sign > 0) {
                p = k;
                break;
            }
        }
        if (p == word.size()) break;
        if (++steps > budget)
            throw cap_exceeded("subword reversing exceeded the step budget");
        int i = word[p].index, j = word[p + 1].index;
        if (i == j) {
            word.erase(word.begin() + p, word.begin() + p + 2);
        } else if (std::abs(i - j) >= 2) {
            word[p] = {j, +1};
            word[p + 1] = {i, -1};
        } else {
            word[p] = {j, +1};
            word[p + 1] = {i, +1};
            word.insert(word.begin() + p + 2, {Letter{j, -1}, Letter{i, -1}});
        }
    }

    ReversingResult rr;
    rr.positive_part.ambient = n;
    rr.negative_part.ambient = n;
    for (const Letter& l : word)
        if (l.sign > 0) rr.positive_part.indices.push_back(l.index);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        if (it->sign < 0) rr.negative_part.indices.push_back(it->index);
    return rr;
}

PositiveWord right_lcm(const PositiveWord& x, const PositiveWord& y) {
    ReversingResult rr = reverse_quotient(x, y);
    return concat(x, rr.positive_part);
}

bool left_divides(const PositiveWord& x, const PositiveWord& y) {
    PositiveWord g = left_gcd(x, y);
    int n = std::max(x.ambient, y.ambient);
    PositiveWord px = x;
    g.ambient = px.ambient = n;
    return normal_form(g) == normal_form(px);
}

PositiveWord positive_left_quotient(const PositiveWord& a, const PositiveWord& x) {
    ReversingResult rr = reverse_quotient(a, x);
    if (!rr.negative_part.indices.empty())
        throw std::invalid_argument("positive_left_quotient: not a left divisor");
    return rr.positive_part;
}

PositiveWord reversed(const PositiveWord& w) {
    PositiveWord out;
    out.ambient = w.ambient;
    out.indices.assign(w.indices.rbegin(), w.indices.rend());
    return out;
}

bool atom_right_divides(int i, const PositiveWord& x) {
    NormalForm nf = normal_form(reversed(x));
    if (nf.is_trivial()) return false;
    if (i < 1 || i >= x.ambient) return false;
    return nf.factors[0].left_descent(i);
}

}  // namespace braids

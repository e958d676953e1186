#include "braids/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "braids/caps.hpp"

namespace braids {

namespace {

void check_letters(const BraidWord& w, int n) {
    for (const Letter& l : w.letters) {
        if (l.index < 1 || l.index >= n)
            throw std::invalid_argument("generator index out of range for " + std::to_string(n) +
                                        " strands");
    }
}

struct EdgeMaps {
    std::map<std::pair<int, int>, int> out;
    std::map<std::pair<int, int>, int> in;

    explicit EdgeMaps(const DivisorSet& d) {
        for (const DivisorSet::Edge& e : d.edges) {
            out[{e.from, e.label}] = e.to;
            in[{e.to, e.label}] = e.from;
        }
    }

    // Final vertex of the path, or -1 when it exits the graph.
    int walk(int from, const BraidWord& w) const {
        int cur = from;
        for (const Letter& l : w.letters) {
            const auto& dir = l.sign > 0 ? out : in;
            auto it = dir.find({cur, l.index});
            if (it == dir.end()) return -1;
            cur = it->second;
        }
        return cur;
    }
};

int vertex_of(const DivisorSet& divs, const PositiveWord& w) {
    PositiveWord copy = w;
    copy.ambient = divs.n;
    return divs.find(normal_form(copy));
}

}  // namespace

int DivisorSet::find(const NormalForm& x) const {
    auto it = index_of.find(render(x));
    return it == index_of.end() ? -1 : it->second;
}

DivisorSet divisors(const PositiveWord& z, int n) {
    PositiveWord base = z;
    base.ambient = n;
    if (max_index(base) >= n)
        throw std::invalid_argument("word uses generators outside the given braid group");

    DivisorSet ds;
    ds.base = base;
    ds.n = n;

    NormalForm zn = normal_form(base);
    const Permutation delta = Permutation::longest(n);
    bool delta_power = std::all_of(zn.factors.begin(), zn.factors.end(),
                                   [&delta](const Permutation& f) { return f == delta; });
    const int d = zn.degree();
    const std::size_t cap = caps::divisor_cap().load();

    NormalForm one;
    one.n = n;
    ds.elements.push_back(one);
    ds.index_of.emplace(render(one), 0);

    for (std::size_t qi = 0; qi < ds.elements.size(); ++qi) {
        NormalForm cur = ds.elements[qi];  // copy: the vector grows during the loop
        for (int i = 1; i < n; ++i) {
            NormalForm cand = nf_append(cur, Permutation::transposition(n, i));
            bool divides = delta_power ? cand.degree() <= d : left_divides(word_of(cand), base);
            if (!divides) continue;
            std::string key = render(cand);
            auto it = ds.index_of.find(key);
            int to;
            if (it != ds.index_of.end()) {
                to = it->second;
            } else {
                if (ds.elements.size() >= cap)
                    throw cap_exceeded("divisor enumeration exceeded the element budget");
                to = static_cast<int>(ds.elements.size());
                ds.elements.push_back(cand);
                ds.index_of.emplace(std::move(key), to);
            }
            ds.edges.push_back({static_cast<int>(qi), i, to});
        }
    }
    return ds;
}

bool is_drawn(const BraidWord& w, const PositiveWord& start, const DivisorSet& divs) {
    check_letters(w, divs.n);
    int v = vertex_of(divs, start);
    if (v < 0) throw std::invalid_argument("starting vertex is not a divisor of the base braid");
    return EdgeMaps(divs).walk(v, w) >= 0;
}

bool is_drawn(const BraidWord& w, const PositiveWord& start, const PositiveWord& z, int n) {
    return is_drawn(w, start, divisors(z, n));
}

OrderedEnumeration ordered_enumeration(const DivisorSet& divs) {
    OrderedEnumeration e;
    e.base = divs.base;
    e.n = divs.n;

    std::vector<PositiveWord> words;
    words.reserve(divs.elements.size());
    for (const NormalForm& nf : divs.elements) words.push_back(word_of(nf));

    std::vector<int> idx(words.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::map<std::pair<int, int>, bool> memo;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (a == b) return false;
        auto it = memo.find({a, b});
        if (it != memo.end()) return it->second;
        bool less = compare(words[a], words[b], divs.n) == Ordering::less;
        memo[{a, b}] = less;
        memo[{b, a}] = !less;  // divisors are pairwise distinct braids
        return less;
    });

    e.entries.reserve(idx.size());
    for (int k : idx) e.entries.push_back(std::move(words[k]));
    for (std::size_t k = 0; k + 1 < e.entries.size(); ++k)
        e.jumps.push_back(jump_height(e.entries[k], e.entries[k + 1], divs.n));
    return e;
}

OrderedEnumeration ordered_enumeration(const PositiveWord& z, int n) {
    return ordered_enumeration(divisors(z, n));
}

int height(const OrderedEnumeration& e, int r) {
    if (r < 1) throw std::invalid_argument("height index must be at least 1");
    int h = 1;
    for (int j : e.jumps)
        if (j >= r) ++h;
    return h;
}

int height(const PositiveWord& z, int n, int r) {
    return height(ordered_enumeration(z, n), r);
}

int complexity(const PositiveWord& z, int n) {
    if (z.indices.empty())
        throw std::invalid_argument("the trivial braid has no complexity");
    return height(z, n, max_index(z)) - 1;
}

std::vector<BraidWord> quotient_sequence(const OrderedEnumeration& e, const DivisorSet& divs) {
    std::vector<BraidWord> out;
    if (e.entries.empty()) return out;
    EdgeMaps maps(divs);
    int at = vertex_of(divs, e.entries.front());
    if (at < 0) throw std::invalid_argument("enumeration does not match the divisor set");

    for (std::size_t k = 1; k < e.entries.size(); ++k) {
        BraidWord diff =
            concat(inverse(to_braid_word(e.entries[k - 1])), to_braid_word(e.entries[k]));
        diff.ambient = divs.n;
        ReducedWord red = reduce_to_sigma_consistent(diff);
        if (red.polarity != Polarity::positive)
            throw std::logic_error("consecutive entries produced a non-positive quotient");
        int mains = 0;
        for (const Letter& l : red.word.letters) mains += l.index == red.main_index;
        if (mains != 1)
            throw std::logic_error("quotient word repeats its main generator");
        int next = maps.walk(at, red.word);
        if (next < 0)
            throw std::logic_error("quotient word is not drawn from its starting vertex");
        int expected = vertex_of(divs, e.entries[k]);
        if (next != expected)
            throw std::logic_error("quotient word does not reach the next entry");
        out.push_back(std::move(red.word));
        at = next;
    }
    return out;
}

std::vector<BraidWord> quotient_sequence(const PositiveWord& z, int n) {
    DivisorSet divs = divisors(z, n);
    return quotient_sequence(ordered_enumeration(divs), divs);
}

std::string to_string(Extremal e) {
    switch (e) {
        case Extremal::minimum: return "minimum";
        case Extremal::maximum: return "maximum";
        case Extremal::both: return "both";
        default: return "interior";
    }
}

namespace {

Extremal merge_extremal(bool is_min, bool is_max) {
    if (is_min && is_max) return Extremal::both;
    if (is_min) return Extremal::minimum;
    if (is_max) return Extremal::maximum;
    return Extremal::interior;
}

}  // namespace

Extremal classify_extremal(const NormalForm& x, int n, int d, int r) {
    if (n < 1 || d < 0 || r < 1) throw std::invalid_argument("bad classification parameters");
    if (x.n != n) throw std::invalid_argument("normal form has the wrong strand count");
    if (x.degree() > d)
        throw std::invalid_argument("braid does not divide the given power of Delta");
    if (d == 0) return Extremal::both;

    bool is_max = true;
    Permutation last = factor_at(x, d);
    for (int i = 1; i < r && is_max; ++i) is_max = last.right_descent(i);

    bool is_min = true;
    PositiveWord xw = word_of(x);
    for (int i = 1; i < r && is_min; ++i) is_min = !atom_right_divides(i, xw);

    return merge_extremal(is_min, is_max);
}

Extremal classify_extremal_general(const PositiveWord& x, const PositiveWord& z, int n, int r) {
    if (r < 1) throw std::invalid_argument("class index must be at least 1");
    PositiveWord xs = x, zs = z;
    xs.ambient = zs.ambient = n;
    if (!left_divides(xs, zs))
        throw std::invalid_argument("braid is not a divisor of the base");

    bool is_max = true;
    for (int i = 1; i < r && is_max; ++i) {
        PositiveWord extended = xs;
        extended.indices.push_back(i);
        is_max = !left_divides(extended, zs);
    }

    bool is_min = true;
    for (int i = 1; i < r && is_min; ++i) is_min = !atom_right_divides(i, xs);

    return merge_extremal(is_min, is_max);
}

namespace {

// Cross-checks a freshly built partition against the facts that define it;
// any failure is a logic error in the library, not bad input.
void certify_partition(const BrClassPartition& part, const DivisorSet& divs) {
    const OrderedEnumeration& e = part.enumeration;
    const int n = divs.n;
    const int count = static_cast<int>(e.entries.size());

    int expect = 0;
    for (const BrClassPartition::ClassRange& c : part.classes) {
        if (c.first != expect || c.last < c.first)
            throw std::logic_error("classes do not tile the enumeration");
        expect = c.last + 1;
    }
    if (expect != count) throw std::logic_error("classes do not tile the enumeration");

    NormalForm zn = normal_form(e.base);
    const Permutation delta = Permutation::longest(n);
    bool delta_power = std::all_of(zn.factors.begin(), zn.factors.end(),
                                   [&delta](const Permutation& f) { return f == delta; });

    for (const BrClassPartition::ClassRange& c : part.classes) {
        const PositiveWord& a = e.entries[c.first];
        for (int j = c.first; j <= c.last; ++j) {
            if (!left_divides(a, e.entries[j]))
                throw std::logic_error("class minimum does not divide a class member");
        }

        // Translation by the minimum must carry the class onto the full
        // divisor set of the quotient, preserving both orders.
        std::vector<PositiveWord> quots;
        std::set<std::string> renders;
        for (int j = c.first; j <= c.last; ++j) {
            PositiveWord q = positive_left_quotient(a, e.entries[j]);
            q.ambient = n;
            renders.insert(render(normal_form(q)));
            quots.push_back(std::move(q));
        }
        DivisorSet qd = divisors(quots.back(), n);
        if (qd.elements.size() != renders.size())
            throw std::logic_error("translated class has the wrong size");
        for (const NormalForm& nf : qd.elements) {
            if (renders.find(render(nf)) == renders.end())
                throw std::logic_error("translated class misses a divisor of the quotient");
        }
        for (std::size_t j = 0; j + 1 < quots.size(); ++j) {
            if (compare(quots[j], quots[j + 1], n) != Ordering::less)
                throw std::logic_error("translation does not preserve the braid order");
        }
        for (std::size_t j = 0; j < quots.size(); ++j) {
            for (std::size_t k = 0; k < quots.size(); ++k) {
                bool lhs = left_divides(e.entries[c.first + j], e.entries[c.first + k]);
                bool rhs = left_divides(quots[j], quots[k]);
                if (lhs != rhs)
                    throw std::logic_error("translation does not preserve divisibility");
            }
        }

        for (int j = c.first; j <= c.last; ++j) {
            Extremal expected =
                merge_extremal(j == c.first, j == c.last);
            if (classify_extremal_general(e.entries[j], e.base, n, part.r) != expected)
                throw std::logic_error("general extremal classifier disagrees with the order");
            if (delta_power &&
                classify_extremal(normal_form(e.entries[j]), n, zn.degree(), part.r) != expected)
                throw std::logic_error("extremal classifier disagrees with the order");
        }
    }
}

}  // namespace

BrClassPartition br_class_partition(const PositiveWord& z, int n, int r) {
    if (r < 1) throw std::invalid_argument("class index must be at least 1");
    DivisorSet divs = divisors(z, n);
    BrClassPartition part;
    part.r = r;
    part.enumeration = ordered_enumeration(divs);

    int first = 0;
    const int jumps = static_cast<int>(part.enumeration.jumps.size());
    for (int k = 0; k <= jumps; ++k) {
        if (k == jumps || part.enumeration.jumps[k] >= r) {
            part.classes.push_back({first, k});
            first = k + 1;
        }
    }

    certify_partition(part, divs);
    return part;
}

std::string to_dot(const DivisorSet& divs) {
    std::string out = "digraph divisors {\n";
    for (std::size_t k = 0; k < divs.elements.size(); ++k) {
        out += "  v" + std::to_string(k) + " [label=\"" +
               display_word(word_of(divs.elements[k])) + "\"];\n";
    }
    std::vector<DivisorSet::Edge> edges = divs.edges;
    std::sort(edges.begin(), edges.end(), [](const DivisorSet::Edge& a, const DivisorSet::Edge& b) {
        return std::tie(a.from, a.label, a.to) < std::tie(b.from, b.label, b.to);
    });
    for (const DivisorSet::Edge& e : edges) {
        out += "  v" + std::to_string(e.from) + " -> v" + std::to_string(e.to) + " [label=\"" +
               std::to_string(e.label) + "\"];\n";
    }
    out += "}\n";
    return out;
}

namespace {

nlohmann::ordered_json enumeration_json(const OrderedEnumeration& e) {
    nlohmann::ordered_json j;
    j["base"] = display_word(e.base);
    j["n"] = e.n;
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const PositiveWord& w : e.entries) entries.push_back(display_word(w));
    j["entries"] = std::move(entries);
    j["jumps"] = e.jumps;
    return j;
}

}  // namespace

std::string to_json(const OrderedEnumeration& e) { return enumeration_json(e).dump(2); }

std::string to_json(const OrderedEnumeration& e, const std::vector<BraidWord>& quotients) {
    nlohmann::ordered_json j = enumeration_json(e);
    nlohmann::ordered_json qs = nlohmann::ordered_json::array();
    for (const BraidWord& w : quotients) qs.push_back(display_word(w));
    j["quotients"] = std::move(qs);
    return j.dump(2);
}

}  // namespace braids

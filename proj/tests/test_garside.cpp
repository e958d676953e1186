#include <doctest.h>

#include <map>
#include <set>
#include <string>
#include <vector>

#include <braids/caps.hpp>
#include <braids/garside.hpp>
#include <braids/word.hpp>

#include "fixtures.hpp"
#include "oracle.hpp"

using namespace braids;

namespace {

PositiveWord pw(const std::string& digits, int n) {
    PositiveWord w{n, {}};
    for (char c : digits) w.indices.push_back(c - '0');
    return w;
}

std::string nf_render(const std::string& word, int n) {
    return render(normal_form(parse_positive_word(word, n)));
}

// Divisors of a positive braid according to the rewriting oracle alone:
// canonical forms of all prefixes of all equivalent words.
std::vector<std::string> oracle_divisors(const std::string& digits) {
    auto set = oracle::left_divisor_set(digits);
    return {set.begin(), set.end()};
}

}  // namespace

TEST_CASE("delta words") {
    CHECK(render_word(delta_word(3)) == "aba");
    CHECK(render_word(delta_word(4)) == "abcaba");
    CHECK(render_word(delta_word(1)) == "");
    CHECK_THROWS_AS(delta_word(0), std::invalid_argument);
    for (int n = 2; n <= 6; ++n) {
        PositiveWord d = delta_word(n);
        CHECK(static_cast<int>(d.indices.size()) == n * (n - 1) / 2);
        CHECK(permutation_of(d) == Permutation::longest(n));
    }
}

TEST_CASE("simple complement, gcd, quotient") {
    auto perm = [](const char* w) { return permutation_of(parse_positive_word(w, 3)); };
    CHECK(right_complement(perm("a")) == perm("ba"));
    CHECK(right_complement(perm("")) == Permutation::longest(3));
    CHECK(right_complement(Permutation::longest(3)).is_identity());
    CHECK(simple_gcd(perm("ab"), perm("a")) == perm("a"));
    CHECK(simple_gcd(perm("ab"), perm("ba")).is_identity());
    for (const Permutation& s : all_permutations(3)) {
        CHECK(simple_gcd(Permutation::longest(3), s) == s);
        CHECK(simple_gcd(s, s) == s);
        // s * right_complement(s) is the half twist
        CHECK(s.then(right_complement(s)) == Permutation::longest(3));
    }
    CHECK(simple_left_quotient(perm("a"), Permutation::longest(3)) == perm("ba"));
    CHECK_THROWS_AS(simple_left_quotient(perm("b"), perm("a")), std::invalid_argument);
}

TEST_CASE("simple divisibility matches the word oracle") {
    for (const Permutation& u : all_permutations(4))
        for (const Permutation& s : all_permutations(4)) {
            bool expected = oracle::left_divides(oracle::digits(word_of_simple(u)),
                                                 oracle::digits(word_of_simple(s)));
            CHECK(simple_left_divides(u, s) == expected);
        }
}

TEST_CASE("normal pairs of the three-strand monoid") {
    std::vector<Permutation> simples;
    for (const auto& w : fixtures::kM3Order)
        simples.push_back(permutation_of(parse_positive_word(w, 3)));
    for (std::size_t s = 0; s < simples.size(); ++s)
        for (std::size_t t = 0; t < simples.size(); ++t)
            CHECK(is_normal_pair(simples[s], simples[t]) == (fixtures::kM3[s][t] == 1));
}

TEST_CASE("normal form fixtures") {
    CHECK(nf_render("", 3) == "1");
    CHECK(nf_render("aba", 3) == "aba");
    CHECK(nf_render("bab", 3) == "aba");
    CHECK(nf_render("abab", 3) == "aba·b");
    CHECK(nf_render("aaba", 3) == "aba·b");
    CHECK(nf_render("abaa", 3) == "aba·a");
    CHECK(nf_render("aab", 3) == "a·ab");
    CHECK(nf_render("bba", 3) == "b·ba");
    CHECK(nf_render("baab", 3) == "ba·ab");
    // abcaba is Delta_4; the factor is re-spelled canonically
    CHECK(nf_render("abcaba", 4) == "abacba");
    CHECK(normal_form(power(delta_word(3), 2)) == delta_power_nf(3, 2));
    CHECK(render(delta_power_nf(3, 2)) == "aba·aba");
    CHECK(delta_power_nf(3, 0).is_trivial());
    CHECK_THROWS_AS(delta_power_nf(3, -1), std::invalid_argument);
}

TEST_CASE("normal form output is left-weighted and represents the input") {
    for (int n : {3, 4}) {
        std::vector<std::string> words{""};
        const int maxlen = (n == 3) ? 6 : 4;
        for (std::size_t k = 0; k < words.size(); ++k) {
            if (static_cast<int>(words[k].size()) >= maxlen) continue;
            for (int i = 1; i < n; ++i)
                words.push_back(words[k] + static_cast<char>('0' + i));
        }
        for (const auto& w : words) {
            NormalForm nf = normal_form(pw(w, n));
            for (const Permutation& f : nf.factors) CHECK(!f.is_identity());
            for (std::size_t k = 0; k + 1 < nf.factors.size(); ++k)
                CHECK(is_normal_pair(nf.factors[k], nf.factors[k + 1]));
            CHECK(oracle::equal_words(oracle::digits(word_of(nf)), w));
        }
    }
}

TEST_CASE("normal form separates braids exactly as the rewriting oracle") {
    std::vector<std::string> words{""};
    for (std::size_t k = 0; k < words.size(); ++k) {
        if (words[k].size() >= 6) continue;
        for (char c : {'1', '2'}) words.push_back(words[k] + c);
    }
    oracle::Memo memo;
    std::map<std::string, std::string> render_of_class;
    for (const auto& w : words) {
        const std::string& cls = memo.canon(w);
        std::string r = render(normal_form(pw(w, 3)));
        auto [it, fresh] = render_of_class.emplace(cls, r);
        if (!fresh) CHECK(it->second == r);
    }
    // distinct classes get distinct normal forms
    std::set<std::string> renders;
    for (const auto& [cls, r] : render_of_class) renders.insert(r);
    CHECK(renders.size() == render_of_class.size());
}

TEST_CASE("nf_append and nf_concat agree with normal_form") {
    std::vector<std::string> words{""};
    for (std::size_t k = 0; k < words.size(); ++k) {
        if (words[k].size() >= 4) continue;
        for (char c : {'1', '2'}) words.push_back(words[k] + c);
    }
    for (const auto& w : words) {
        NormalForm base = normal_form(pw(w, 3));
        for (const Permutation& s : all_permutations(3)) {
            PositiveWord ext = concat(pw(w, 3), word_of_simple(s));
            CHECK(nf_append(base, s) == normal_form(ext));
        }
        for (const auto& v : words) {
            NormalForm expect = normal_form(pw(w + v, 3));
            CHECK(nf_concat(base, normal_form(pw(v, 3))) == expect);
        }
    }
}

TEST_CASE("nf_of_simple") {
    CHECK(nf_of_simple(Permutation(3), 3).is_trivial());
    NormalForm nf = nf_of_simple(Permutation::longest(3), 3);
    REQUIRE(nf.degree() == 1);
    CHECK(nf.factors[0] == Permutation::longest(3));
}

TEST_CASE("factor_at pads with identities") {
    NormalForm nf = normal_form(parse_positive_word("abab", 3));
    REQUIRE(nf.degree() == 2);
    CHECK(factor_at(nf, 1) == Permutation::longest(3));
    CHECK(factor_at(nf, 2) == Permutation::transposition(3, 2));
    CHECK(factor_at(nf, 3).is_identity());
    CHECK_THROWS_AS(factor_at(nf, 0), std::invalid_argument);
}

TEST_CASE("degree bound test") {
    PositiveWord w = parse_positive_word("aaba", 3);
    CHECK(degree_bound_test(w, 3, 2));
    CHECK(!degree_bound_test(w, 3, 1));
    CHECK(!degree_bound_test(w, 3, -1));
    CHECK(degree_bound_test(PositiveWord{3, {}}, 3, 0));
    CHECK_THROWS_AS(degree_bound_test(parse_positive_word("c", 4), 3, 5),
                    std::invalid_argument);
}

TEST_CASE("degree bounds decide divisibility into half-twist powers") {
    const std::string delta = "121";
    for (int d = 0; d <= 3; ++d) {
        std::string target;
        for (int j = 0; j < d; ++j) target += delta;
        auto div_set = oracle::left_divisor_set(target);
        for (const auto& x : oracle_divisors("121121121")) {
            bool expected = div_set.count(oracle::canonical(x)) > 0;
            CHECK(degree_bound_test(pw(x, 3), 3, d) == expected);
            CHECK(left_divides(pw(x, 3), pw(target, 3)) == expected);
        }
    }
}

TEST_CASE("half twists have factorial many divisors") {
    CHECK(oracle_divisors("121").size() == 6);
    CHECK(oracle_divisors("123121").size() == 24);
    CHECK(oracle_divisors("121121").size() == 19);
}

TEST_CASE("left gcd fixtures") {
    PositiveWord g = left_gcd(parse_positive_word("abab", 3), parse_positive_word("baab", 3));
    CHECK(normal_form(g) == normal_form(parse_positive_word("ba", 3)));
    CHECK(left_gcd(parse_positive_word("ab", 3), PositiveWord{3, {}}).indices.empty());
    PositiveWord x = parse_positive_word("abab", 3);
    CHECK(normal_form(left_gcd(x, x)) == normal_form(x));
}

TEST_CASE("gcd and lcm are the lattice bounds on the divisors of the squared twist") {
    const auto members = oracle_divisors("121121");
    REQUIRE(members.size() == 19);
    std::map<std::string, std::set<std::string>> ldiv;
    for (const auto& m : members) ldiv[m] = oracle::left_divisor_set(m);
    auto divides = [&](const std::string& u, const std::string& canon_target) {
        return ldiv.at(canon_target).count(oracle::canonical(u)) > 0;
    };

    for (const auto& xs : members)
        for (const auto& ys : members) {
            PositiveWord x = pw(xs, 3), y = pw(ys, 3);
            std::string g = oracle::digits(left_gcd(x, y));
            CHECK(divides(g, xs));
            CHECK(divides(g, ys));
            std::string z = oracle::digits(right_lcm(x, y));
            std::string zc = oracle::canonical(z);
            CHECK(ldiv.count(zc) == 1);  // the lcm of two divisors stays a divisor
            CHECK(oracle::left_divides(xs, z));
            CHECK(oracle::left_divides(ys, z));
            auto gdiv = oracle::left_divisor_set(g);
            for (const auto& ms : members) {
                if (divides(ms, xs) && divides(ms, ys)) CHECK(gdiv.count(ms) == 1);
                if (oracle::left_divides(xs, ms) && oracle::left_divides(ys, ms))
                    CHECK(divides(z, ms));
            }
        }
}

TEST_CASE("gcd and lcm satisfy the lattice laws") {
    const auto members = oracle_divisors("121121");
    auto nf = [](const PositiveWord& w) {
        PositiveWord c = w;
        c.ambient = 3;
        return normal_form(c);
    };
    for (const auto& xs : members)
        for (const auto& ys : members) {
            PositiveWord x = pw(xs, 3), y = pw(ys, 3);
            CHECK(nf(left_gcd(x, y)) == nf(left_gcd(y, x)));
            CHECK(nf(right_lcm(x, y)) == nf(right_lcm(y, x)));
            CHECK(nf(left_gcd(x, x)) == nf(x));
            CHECK(nf(right_lcm(x, x)) == nf(x));
            CHECK(nf(left_gcd(x, right_lcm(x, y))) == nf(x));
            CHECK(nf(right_lcm(x, left_gcd(x, y))) == nf(x));
        }
    // associativity, on a subset to keep the run short
    std::vector<std::string> some(members.begin(), members.begin() + 10);
    for (const auto& xs : some)
        for (const auto& ys : some)
            for (const auto& zs : some) {
                PositiveWord x = pw(xs, 3), y = pw(ys, 3), z = pw(zs, 3);
                CHECK(nf(left_gcd(left_gcd(x, y), z)) == nf(left_gcd(x, left_gcd(y, z))));
                CHECK(nf(right_lcm(right_lcm(x, y), z)) == nf(right_lcm(x, right_lcm(y, z))));
            }
}

TEST_CASE("left divisibility fixtures") {
    auto p = [](const char* w) { return parse_positive_word(w, 3); };
    CHECK(left_divides(p("a"), p("ab")));
    CHECK(!left_divides(p("b"), p("ab")));
    CHECK(!left_divides(p("a"), p("ba")));
    CHECK(!left_divides(p("b"), p("aab")));
    CHECK(left_divides(p("b"), p("aaba")));  // aaba = abab = babb
}

TEST_CASE("subword reversing") {
    auto p = [](const char* w, int n) { return parse_positive_word(w, n); };
    ReversingResult rr = reverse_quotient(p("a", 3), p("b", 3));
    CHECK(render_word(rr.positive_part) == "ba");
    CHECK(render_word(rr.negative_part) == "ab");
    rr = reverse_quotient(p("a", 4), p("c", 4));
    CHECK(render_word(rr.positive_part) == "c");
    CHECK(render_word(rr.negative_part) == "a");
    CHECK(normal_form(right_lcm(p("a", 3), p("b", 3))) == normal_form(p("aba", 3)));
    CHECK(normal_form(right_lcm(p("a", 4), p("c", 4))) == normal_form(p("ca", 4)));

    // x * positive_part and y * negative_part spell the same braid
    std::vector<std::string> words{""};
    for (std::size_t k = 0; k < words.size(); ++k) {
        if (words[k].size() >= 5) continue;
        for (char c : {'1', '2'}) words.push_back(words[k] + c);
    }
    for (std::size_t a = 0; a < words.size(); a += 3)
        for (std::size_t b = 0; b < words.size(); b += 3) {
            PositiveWord x = pw(words[a], 3), y = pw(words[b], 3);
            ReversingResult r = reverse_quotient(x, y);
            CHECK(oracle::equal_words(words[a] + oracle::digits(r.positive_part),
                                      words[b] + oracle::digits(r.negative_part)));
        }
}

TEST_CASE("reversing respects the step budget") {
    const long long before = caps::reducer_steps().load();
    caps::reducer_steps().store(1);
    CHECK_THROWS_AS(reverse_quotient(parse_positive_word("ab", 3), parse_positive_word("ba", 3)),
                    cap_exceeded);
    caps::reducer_steps().store(before);
}

TEST_CASE("positive left quotient") {
    auto p = [](const char* w) { return parse_positive_word(w, 3); };
    PositiveWord q = positive_left_quotient(p("a"), p("ab"));
    CHECK(render_word(q) == "b");
    CHECK_THROWS_AS(positive_left_quotient(p("ab"), p("a")), std::invalid_argument);
    // ba · bb = babb = abab
    CHECK(normal_form(positive_left_quotient(p("ba"), p("abab"))) ==
          normal_form(p("bb")));
}

TEST_CASE("reversed words and right divisibility") {
    CHECK(render_word(reversed(parse_positive_word("abc", 4))) == "cba");
    CHECK(atom_right_divides(1, parse_positive_word("abaa", 3)));
    CHECK(atom_right_divides(2, parse_positive_word("abaa", 3)));
    CHECK(!atom_right_divides(2, parse_positive_word("aa", 3)));
    CHECK(!atom_right_divides(1, PositiveWord{3, {}}));
    for (const auto& xs : oracle_divisors("121121"))
        for (int i = 1; i <= 2; ++i) {
            std::string gen(1, static_cast<char>('0' + i));
            CHECK(atom_right_divides(i, pw(xs, 3)) == oracle::right_divides(gen, xs));
        }
}

TEST_CASE("renders and words of normal forms") {
    NormalForm nf = normal_form(parse_positive_word("abab", 3));
    CHECK(render(nf) == "aba·b");
    CHECK(render_word(word_of(nf)) == "abab");
    CHECK(render(NormalForm{3, {}}) == "1");
    CHECK(word_of(NormalForm{3, {}}).indices.empty());
    CHECK(normal_form(word_of(nf)) == nf);
}

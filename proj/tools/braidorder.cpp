// braidorder: command-line access to normal forms, the linear order on
// divisor sets, the counting routes, and the three-strand enumeration.
#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

#include <braids/caps.hpp>
#include <braids/counting.hpp>
#include <braids/garside.hpp>
#include <braids/lattice.hpp>
#include <braids/order.hpp>
#include <braids/pascal3.hpp>
#include <braids/reference_data.hpp>
#include <braids/word.hpp>

using namespace braids;

namespace {

void emit_json(const nlohmann::ordered_json& j) { std::cout << j.dump(2) << "\n"; }

void print_enumeration_text(const OrderedEnumeration& e,
                            const std::vector<BraidWord>* quotients) {
    std::cout << display_word(e.entries.front()) << "\n";
    for (std::size_t k = 1; k < e.entries.size(); ++k) {
        std::cout << "<_" << e.jumps[k - 1] << " " << display_word(e.entries[k]);
        if (quotients) std::cout << "  " << display_word((*quotients)[k - 1]);
        std::cout << "\n";
    }
}

int run_table1(int nmax, int dmax) {
    if (nmax < 2 || nmax > 6 || dmax < 0 || dmax > reference::kDMax)
        throw std::invalid_argument("reference table covers 2 <= n <= 6 and 0 <= d <= 6");
    int rows = 0, bad = 0;
    for (const reference::HeightRow& row : reference::kHeights) {
        if (row.n > nmax) continue;
        ++rows;
        bool ok = true;
        for (int d = 0; d <= dmax; ++d) {
            BigInt got = height_via_matrix(row.n, d, row.r);
            BigInt want(row.values[d]);
            if (got != want) {
                ok = false;
                std::cout << "FAIL table1 h_" << row.r << "(Delta_" << row.n << "^d) d=" << d
                          << " got=" << got.str() << " want=" << want.str() << "\n";
            }
        }
        if (ok)
            std::cout << "PASS table1 h_" << row.r << "(Delta_" << row.n << "^d)\n";
        else
            ++bad;
    }
    std::cout << "table1: " << (rows - bad) << "/" << rows << " rows match\n";
    return bad;
}

int run_pascal3(int dmax) {
    int bad = 0;
    for (int d = 0; d <= dmax; ++d) {
        PascalReport rep = verify_pascal(d);
        if (rep.all_pass) {
            std::cout << "PASS pascal3 d=" << d << "\n";
        } else {
            ++bad;
            for (const PascalCheck& c : rep.checks)
                if (!c.pass)
                    std::cout << "FAIL pascal3 d=" << d << " (" << c.id << ") " << c.detail
                              << "\n";
        }
    }
    std::cout << "pascal3: " << (dmax + 1 - bad) << "/" << (dmax + 1) << " degrees pass\n";
    return bad;
}

int run_crosscheck(int n, int dmax) {
    int bad = 0;
    for (int d = 0; d <= dmax; ++d) {
        PositiveWord z = power(delta_word(n), d);
        OrderedEnumeration e = ordered_enumeration(z, n);
        std::vector<int> pascal_jumps;
        if (n == 3)
            for (const BraidWord& w : w_sequence(3, d))
                pascal_jumps.push_back(main_generator_index(w, 3));
        bool ok = true;
        for (int r = 1; r < n; ++r) {
            BigInt lattice_h(height(e, r));
            BigInt matrix_h = height_via_matrix(n, d, r);
            BigInt pascal_h(-1);
            if (n == 3) {
                long long jumps = 0;
                for (int j : pascal_jumps)
                    if (j >= r) ++jumps;
                pascal_h = BigInt(1 + jumps);
            }
            if (lattice_h != matrix_h || (n == 3 && pascal_h != matrix_h)) {
                ok = false;
                std::cout << "FAIL crosscheck n=" << n << " d=" << d << " r=" << r
                          << " lattice=" << lattice_h.str() << " matrix=" << matrix_h.str();
                if (n == 3) std::cout << " pascal=" << pascal_h.str();
                std::cout << "\n";
            }
        }
        if (ok)
            std::cout << "PASS crosscheck n=" << n << " d=" << d << "\n";
        else
            ++bad;
    }
    std::cout << "crosscheck n=" << n << ": " << (dmax + 1 - bad) << "/" << (dmax + 1)
              << " degrees agree\n";
    return bad;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"normal forms, ordered divisor enumerations, and height counting "
                 "for positive braids"};
    app.require_subcommand(1);

    long long reducer_cap = caps::reducer_steps().load();
    std::size_t divisor_cap = caps::divisor_cap().load();
    int matrix_nmax = caps::matrix_nmax().load();
    app.add_option("--reducer-cap", reducer_cap, "step budget for handle reduction and reversing")
        ->envname("BRAIDORDER_REDUCER_CAP");
    app.add_option("--divisor-cap", divisor_cap, "largest divisor set that will be enumerated")
        ->envname("BRAIDORDER_DIVISOR_CAP");
    app.add_option("--matrix-nmax", matrix_nmax, "largest strand count for n! x n! matrices")
        ->envname("BRAIDORDER_MATRIX_NMAX");

    int n = 0, d = 1, r = 1;
    std::string format = "text";
    std::string word, other;
    bool quotients = false;

    CLI::App* query = app.add_subcommand("query", "evaluate a single operation");
    query->require_subcommand(1);
    CLI::App* q_nf = query->add_subcommand("nf", "left-greedy normal form of a positive word");
    q_nf->add_option("--n", n, "strand count")->required();
    q_nf->add_option("word", word, "positive word")->required();
    CLI::App* q_cmp = query->add_subcommand("compare", "order two braid words");
    q_cmp->add_option("--n", n, "strand count")->required();
    q_cmp->add_option("x", word, "left word")->required();
    q_cmp->add_option("y", other, "right word")->required();
    CLI::App* q_gcd = query->add_subcommand("gcd", "left gcd of two positive words");
    q_gcd->add_option("--n", n, "strand count")->required();
    q_gcd->add_option("x", word, "first word")->required();
    q_gcd->add_option("y", other, "second word")->required();
    CLI::App* q_lcm = query->add_subcommand("lcm", "right lcm of two positive words");
    q_lcm->add_option("--n", n, "strand count")->required();
    q_lcm->add_option("x", word, "first word")->required();
    q_lcm->add_option("y", other, "second word")->required();
    CLI::App* q_height = query->add_subcommand("height", "h_r(Delta_n^d) by the matrix route");
    q_height->add_option("--n", n, "strand count")->required();
    q_height->add_option("--d", d, "power of the half twist")->required();
    q_height->add_option("--r", r, "jump index")->required();
    CLI::App* q_cx = query->add_subcommand("complexity", "c(Delta_n^d) by the matrix route");
    q_cx->add_option("--n", n, "strand count")->required();
    q_cx->add_option("--d", d, "power of the half twist")->required();
    CLI::App* q_count = query->add_subcommand("count", "divisors of Delta_n^d with a given last factor");
    q_count->add_option("--n", n, "strand count")->required();
    q_count->add_option("--d", d, "power of the half twist")->required();
    q_count->add_option("word", word, "positive word for the last normal factor");
    for (CLI::App* q : {q_nf, q_cmp, q_gcd, q_lcm, q_height, q_cx, q_count})
        q->add_option("--format", format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));

    CLI::App* enumerate =
        app.add_subcommand("enumerate", "increasing enumeration of a divisor set");
    std::string spec;
    enumerate->add_option("spec", spec, "'delta' or an explicit positive word")->required();
    enumerate->add_option("--n", n, "strand count")->required();
    enumerate->add_option("--d", d, "power of the half twist (delta form only)");
    enumerate->add_flag("--quotients", quotients, "include the quotient word of each step");
    enumerate->add_option("--format", format, "text, json, or dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));

    CLI::App* verify = app.add_subcommand("verify", "re-derive published values and report");
    verify->require_subcommand(1);
    int nmax = 6, dmax = -1;
    CLI::App* v_table = verify->add_subcommand("table1", "height table against frozen values");
    v_table->add_option("--nmax", nmax, "largest strand count");
    v_table->add_option("--dmax", dmax, "largest power");
    CLI::App* v_pascal = verify->add_subcommand("pascal3", "three-strand triangle checks");
    v_pascal->add_option("--dmax", dmax, "largest power");
    CLI::App* v_cross = verify->add_subcommand("crosscheck", "lattice vs matrix vs enumeration");
    v_cross->add_option("--n", n, "strand count");
    v_cross->add_option("--dmax", dmax, "largest power");
    CLI::App* v_all = verify->add_subcommand("all", "every suite at its default bounds");

    CLI::App* pascal3 = app.add_subcommand("pascal3", "the explicit three-strand enumeration");
    pascal3->require_subcommand(1);
    CLI::App* p_emit = pascal3->add_subcommand("emit", "list the enumeration in order");
    p_emit->add_option("--d", d, "power of the half twist")->required();
    p_emit->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    CLI::App* p_verify = pascal3->add_subcommand("verify", "run the construction checks");
    p_verify->add_option("--d", d, "power of the half twist")->required();
    p_verify->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* table = app.add_subcommand("table", "height table for a range of parameters");
    table->add_option("--nmax", nmax, "largest strand count");
    table->add_option("--dmax", dmax, "largest power");
    table->add_option("--format", format, "csv or text")
        ->check(CLI::IsMember({"csv", "text"}));

    for (CLI::App* sub : {query, q_nf, q_cmp, q_gcd, q_lcm, q_height, q_cx, q_count,
                          enumerate, verify, v_table, v_pascal, v_cross, v_all, pascal3,
                          p_emit, p_verify, table})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    caps::reducer_steps().store(reducer_cap);
    caps::divisor_cap().store(divisor_cap);
    caps::matrix_nmax().store(matrix_nmax);

    try {
        if (*query) {
            nlohmann::ordered_json j;
            std::string result;
            if (*q_nf) {
                result = render(normal_form(parse_positive_word(word, n)));
                j = {{"op", "nf"}, {"n", n}, {"word", word}};
            } else if (*q_cmp) {
                result = to_string(compare(parse_word(word, n), parse_word(other, n), n));
                j = {{"op", "compare"}, {"n", n}, {"x", word}, {"y", other}};
            } else if (*q_gcd) {
                result = display_word(
                    left_gcd(parse_positive_word(word, n), parse_positive_word(other, n)));
                j = {{"op", "gcd"}, {"n", n}, {"x", word}, {"y", other}};
            } else if (*q_lcm) {
                result = display_word(
                    right_lcm(parse_positive_word(word, n), parse_positive_word(other, n)));
                j = {{"op", "lcm"}, {"n", n}, {"x", word}, {"y", other}};
            } else if (*q_height) {
                result = height_via_matrix(n, d, r).str();
                j = {{"op", "height"}, {"n", n}, {"d", d}, {"r", r}};
            } else if (*q_cx) {
                result = complexity_via_matrix(n, d).str();
                j = {{"op", "complexity"}, {"n", n}, {"d", d}};
            } else {
                Permutation t = permutation_of(parse_positive_word(word, n));
                result = count_last_factor(n, d, t).str();
                j = {{"op", "count"}, {"n", n}, {"d", d}, {"word", word}};
            }
            if (format == "json") {
                j["result"] = result;
                emit_json(j);
            } else {
                std::cout << result << "\n";
            }
        } else if (*enumerate) {
            PositiveWord z =
                spec == "delta" ? power(delta_word(n), d) : parse_positive_word(spec, n);
            DivisorSet divs = divisors(z, n);
            if (format == "dot") {
                std::cout << to_dot(divs);
            } else {
                OrderedEnumeration e = ordered_enumeration(divs);
                std::vector<BraidWord> quots;
                if (quotients) quots = quotient_sequence(e, divs);
                if (format == "json")
                    std::cout << (quotients ? to_json(e, quots) : to_json(e)) << "\n";
                else
                    print_enumeration_text(e, quotients ? &quots : nullptr);
            }
        } else if (*verify) {
            int bad = 0;
            if (*v_table) {
                bad = run_table1(nmax, dmax < 0 ? 6 : dmax);
            } else if (*v_pascal) {
                bad = run_pascal3(dmax < 0 ? 5 : dmax);
            } else if (*v_cross) {
                if (n == 0) n = 3;
                bad = run_crosscheck(n, dmax < 0 ? (n == 3 ? 4 : 2) : dmax);
            } else if (*v_all) {
                bad += run_table1(6, 6);
                bad += run_pascal3(5);
                bad += run_crosscheck(3, 4);
                bad += run_crosscheck(4, 2);
                std::cout << (bad == 0 ? "all suites pass" : "some suites fail") << "\n";
            }
            return bad == 0 ? 0 : 1;
        } else if (*pascal3) {
            if (*p_emit) {
                BraidSequence s = s_sequence(3, d);
                if (format == "json") {
                    std::cout << to_json(s) << "\n";
                } else {
                    for (const SEntry& e : s.entries)
                        std::cout << display_word(e.word) << "\t" << e.provenance << "\n";
                }
            } else {
                PascalReport rep = verify_pascal(d);
                if (format == "json") {
                    std::cout << to_json(rep) << "\n";
                } else {
                    for (const PascalCheck& c : rep.checks)
                        std::cout << (c.pass ? "PASS" : "FAIL") << " (" << c.id << ") "
                                  << c.detail << "\n";
                }
                return rep.all_pass ? 0 : 1;
            }
        } else if (*table) {
            Table1 t = table1(nmax, dmax < 0 ? 6 : dmax);
            std::cout << (format == "csv" ? to_csv(t) : to_text(t));
        }
    } catch (const cap_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

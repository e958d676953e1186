#include "braids/counting.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "braids/caps.hpp"
#include "braids/garside.hpp"

namespace braids {

int TransitionMatrix::index_of(const Permutation& p) const {
    auto it = std::lower_bound(simples.begin(), simples.end(), p);
    if (it == simples.end() || !(*it == p))
        throw std::invalid_argument("permutation is not indexed by this matrix");
    return static_cast<int>(it - simples.begin());
}

namespace {

TransitionMatrix build_matrix(int n, bool threaded) {
    if (n < 1) throw std::invalid_argument("strand count must be at least 1");
    if (n > caps::matrix_nmax().load())
        throw cap_exceeded("transition matrix size exceeds the configured bound");
    TransitionMatrix m;
    m.n = n;
    m.simples = all_permutations(n);
    m.size = static_cast<int>(m.simples.size());
    m.a.assign(static_cast<std::size_t>(m.size) * m.size, 0);
    const int N = m.size;
#pragma omp parallel for schedule(static) if (threaded)
    for (int s = 0; s < N; ++s) {
        for (int t = 0; t < N; ++t)
            m.a[static_cast<std::size_t>(s) * N + t] =
                is_normal_pair(m.simples[s], m.simples[t]) ? 1 : 0;
    }
    return m;
}

Permutation embedded_delta(int n, int r) {
    std::vector<int> img(n);
    for (int i = 1; i <= n; ++i) img[i - 1] = i <= r ? r + 1 - i : i;
    return Permutation::from_images(img);
}

}  // namespace

TransitionMatrix transition_matrix(int n) { return build_matrix(n, true); }
TransitionMatrix transition_matrix_serial(int n) { return build_matrix(n, false); }

const TransitionMatrix& cached_transition_matrix(int n) {
    static std::map<int, TransitionMatrix> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, transition_matrix(n)).first;
    return it->second;
}

std::vector<BigInt> vec_mat_product(const std::vector<BigInt>& v, const TransitionMatrix& m) {
    if (static_cast<int>(v.size()) != m.size)
        throw std::invalid_argument("vector length does not match the matrix");
    const int N = m.size;
    std::vector<BigInt> out(N);
#pragma omp parallel for schedule(static)
    for (int t = 0; t < N; ++t) {
        BigInt acc = 0;
        for (int s = 0; s < N; ++s)
            if (m.a[static_cast<std::size_t>(s) * N + t]) acc += v[s];
        out[t] = std::move(acc);
    }
    return out;
}

std::vector<BigInt> vec_mat_product_serial(const std::vector<BigInt>& v,
                                           const TransitionMatrix& m) {
    if (static_cast<int>(v.size()) != m.size)
        throw std::invalid_argument("vector length does not match the matrix");
    const int N = m.size;
    std::vector<BigInt> out(N);
    for (int t = 0; t < N; ++t) {
        BigInt acc = 0;
        for (int s = 0; s < N; ++s)
            if (m.a[static_cast<std::size_t>(s) * N + t]) acc += v[s];
        out[t] = std::move(acc);
    }
    return out;
}

BigInt count_last_factor(int n, int d, const Permutation& t) {
    if (d < 1) throw std::invalid_argument("sequence length must be at least 1");
    if (static_cast<int>(t.size()) != n)
        throw std::invalid_argument("permutation size does not match the strand count");
    const TransitionMatrix& m = cached_transition_matrix(n);
    std::vector<BigInt> v(m.size, 1);
    for (int k = 1; k < d; ++k) v = vec_mat_product(v, m);
    return v[m.index_of(t)];
}

BigInt height_via_matrix(int n, int d, int r) {
    if (n < 1 || d < 0 || r < 1 || r > n) throw std::invalid_argument("bad height parameters");
    const TransitionMatrix& m = cached_transition_matrix(n);
    std::vector<BigInt> v(m.size, 1);
    for (int k = 0; k < d; ++k) v = vec_mat_product(v, m);
    return v[m.index_of(embedded_delta(n, r))];
}

BigInt complexity_via_matrix(int n, int d) {
    if (n < 2 || d < 1) throw std::invalid_argument("bad complexity parameters");
    BigInt via_height = height_via_matrix(n, d, n - 1) - 1;
    BigInt via_count = count_last_factor(n, d + 1, embedded_delta(n, n - 1)) - 1;
    if (via_height != via_count)
        throw std::logic_error("complexity routes disagree");
    return via_height;
}

namespace {

BigInt pow2(int k) { return BigInt(1) << k; }

BigInt pow3(int k) {
    BigInt p = 1;
    for (int i = 0; i < k; ++i) p *= 3;
    return p;
}

BigInt factorial_quotient(int n, int i) {  // n!/i! for i <= n
    BigInt p = 1;
    for (int k = i + 1; k <= n; ++k) p *= k;
    return p;
}

// Tracks x = a + b*sqrt(6); one step multiplies by 3 + sqrt(6). The returned
// trace 2a is x plus its conjugate, always an integer.
BigInt conjugate_trace(BigInt a, BigInt b, int steps) {
    for (int k = 0; k < steps; ++k) {
        BigInt na = 3 * a + 6 * b;
        b = a + 3 * b;
        a = std::move(na);
    }
    return 2 * a;
}

BigInt exact_div(const BigInt& num, int den) {
    if (num % den != 0) throw std::logic_error("closed form lost integrality");
    return num / den;
}

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

BigInt closed_form_height(ClosedForm form, int p1, int p2) {
    switch (form) {
        case ClosedForm::h1_delta3:
            require(p1 >= 0, "exponent must be nonnegative");
            return 8 * pow2(p1) - 3 * p1 - 7;
        case ClosedForm::h2_delta3:
            require(p1 >= 0, "exponent must be nonnegative");
            return 2 * pow2(p1) - 1;
        case ClosedForm::h1_delta4:
            require(p1 >= 0, "exponent must be nonnegative");
            return exact_div(3 * conjugate_trace(32, 13, p1) - 512 * pow2(p1) + 120 * p1 + 340,
                             20);
        case ClosedForm::h2_delta4:
            require(p1 >= 0, "exponent must be nonnegative");
            return exact_div(conjugate_trace(32, 13, p1) - 64 * pow2(p1) + 20, 20);
        case ClosedForm::h3_delta4:
            require(p1 >= 0, "exponent must be nonnegative");
            return exact_div(conjugate_trace(4, 1, p1) + 32 * pow2(p1) - 20, 20);
        case ClosedForm::hr_delta:
            require(p1 >= 1 && p2 >= 1 && p2 <= p1, "need 1 <= r <= n");
            return factorial_quotient(p1, p2);
        case ClosedForm::h_top_delta2:
            require(p1 >= 2, "strand count must be at least 2");
            return pow2(p1) - 1;
        case ClosedForm::h_subtop_delta2:
            require(p1 >= 3, "strand count must be at least 3");
            return 2 * pow3(p1) - BigInt(p1 + 6) * pow2(p1 - 1) + 1;
        case ClosedForm::h_top_delta3: {
            require(p1 >= 1, "strand count must be at least 1");
            BigInt sum = 0;
            for (int i = 0; i < p1; ++i) sum += factorial_quotient(p1, i);
            return sum;
        }
        case ClosedForm::rec_h1_delta3: {
            require(p1 >= 0, "exponent must be nonnegative");
            BigInt h = 1;
            for (int k = 1; k <= p1; ++k) h = 2 * h + 3 * k + 1;
            return h;
        }
        case ClosedForm::rec_h1_delta4: {
            require(p1 >= 0, "exponent must be nonnegative");
            if (p1 == 0) return 1;
            BigInt prev = 1, cur = 24;
            for (int k = 2; k <= p1; ++k) {
                BigInt next = 6 * cur - 3 * prev + 32 * pow2(k) - 12 * k - 34;
                prev = std::move(cur);
                cur = std::move(next);
            }
            return cur;
        }
    }
    throw std::invalid_argument("unknown closed form");
}

BigInt carlitz_recurrence_h1_delta_squared(int n) {
    if (n < 0) throw std::invalid_argument("strand count must be nonnegative");
    std::vector<std::vector<BigInt>> binom(n + 1);
    for (int m = 0; m <= n; ++m) {
        binom[m].assign(m + 1, 1);
        for (int i = 1; i < m; ++i) binom[m][i] = binom[m - 1][i - 1] + binom[m - 1][i];
    }
    std::vector<BigInt> h(n + 1);
    h[0] = 1;
    for (int m = 1; m <= n; ++m) {
        BigInt acc = 0;
        for (int i = 0; i < m; ++i) {
            BigInt term = binom[m][i] * binom[m][i] * h[i];
            if ((m + i + 1) % 2 == 0)
                acc += term;
            else
                acc -= term;
        }
        h[m] = std::move(acc);
    }
    return h[n];
}

Table1 table1(int n_max, int d_max) {
    if (n_max < 1 || d_max < 0) throw std::invalid_argument("bad table bounds");
    Table1 t;
    t.n_max = n_max;
    t.d_max = d_max;
    if (n_max == 1) {
        t.rows.push_back({1, 1, std::vector<BigInt>(d_max + 1, 1)});
        return t;
    }
    for (int n = 2; n <= n_max; ++n) {
        const TransitionMatrix& m = cached_transition_matrix(n);
        std::vector<int> delta_index;
        for (int r = 1; r < n; ++r) delta_index.push_back(m.index_of(embedded_delta(n, r)));

        std::vector<Table1::Row> rows;
        for (int r = 1; r < n; ++r) rows.push_back({n, r, {}});
        std::vector<BigInt> v(m.size, 1);
        for (int d = 0; d <= d_max; ++d) {
            if (d > 0) v = vec_mat_product(v, m);
            for (int r = 1; r < n; ++r) rows[r - 1].values.push_back(v[delta_index[r - 1]]);
        }
        for (Table1::Row& row : rows) t.rows.push_back(std::move(row));
    }
    return t;
}

std::string to_csv(const Table1& t) {
    std::string out = "r\\d";
    for (int d = 0; d <= t.d_max; ++d) out += "," + std::to_string(d);
    out += "\n";
    for (const Table1::Row& row : t.rows) {
        out += "h_" + std::to_string(row.r) + "(Delta_" + std::to_string(row.n) + "^d)";
        for (const BigInt& v : row.values) out += "," + v.str();
        out += "\n";
    }
    return out;
}

namespace {

std::string grouped(const BigInt& v) {
    std::string s = v.str();
    if (s.size() <= 3) return s;
    std::size_t lead = s.size() % 3;
    if (lead == 0) lead = 3;
    std::string out = s.substr(0, lead);
    for (std::size_t p = lead; p < s.size(); p += 3) out += " " + s.substr(p, 3);
    return out;
}

// Byte length minus one per Delta, which occupies two bytes but one column.
std::size_t display_width(const std::string& s) {
    std::size_t extra = 0;
    for (std::size_t p = 0; p + 1 < s.size(); ++p)
        if (static_cast<unsigned char>(s[p]) == 0xce && static_cast<unsigned char>(s[p + 1]) == 0x94)
            ++extra;
    return s.size() - extra;
}

}  // namespace

std::string to_text(const Table1& t) {
    const std::string head = "h_r(Δ_n^d)";
    std::vector<std::string> labels;
    labels.reserve(t.rows.size());
    std::size_t label_width = display_width(head);
    for (const Table1::Row& row : t.rows) {
        labels.push_back("h_" + std::to_string(row.r) + "(Δ_" + std::to_string(row.n) +
                         "^d)");
        label_width = std::max(label_width, display_width(labels.back()));
    }

    std::vector<std::size_t> col_width(t.d_max + 1);
    std::vector<std::vector<std::string>> cells(t.rows.size());
    for (int d = 0; d <= t.d_max; ++d) col_width[d] = std::to_string(d).size();
    for (std::size_t k = 0; k < t.rows.size(); ++k) {
        for (int d = 0; d <= t.d_max; ++d) {
            cells[k].push_back(grouped(t.rows[k].values[d]));
            col_width[d] = std::max(col_width[d], cells[k].back().size());
        }
    }

    auto pad_left = [](const std::string& s, std::size_t width, std::size_t shown) {
        return std::string(width - shown, ' ') + s;
    };

    std::string out = head + std::string(label_width - display_width(head), ' ');
    for (int d = 0; d <= t.d_max; ++d) {
        std::string h = std::to_string(d);
        out += "  " + pad_left(h, col_width[d], h.size());
    }
    out += "\n";
    for (std::size_t k = 0; k < t.rows.size(); ++k) {
        out += labels[k] + std::string(label_width - display_width(labels[k]), ' ');
        for (int d = 0; d <= t.d_max; ++d)
            out += "  " + pad_left(cells[k][d], col_width[d], cells[k][d].size());
        out += "\n";
    }
    return out;
}

}  // namespace braids

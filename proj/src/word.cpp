#include "braids/word.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "braids/caps.hpp"

namespace braids {

BraidWord to_braid_word(const PositiveWord& w) {
    BraidWord out;
    out.ambient = w.ambient;
    out.letters.reserve(w.indices.size());
    for (int i : w.indices) out.letters.push_back({i, +1});
    return out;
}

PositiveWord to_positive(const BraidWord& w) {
    PositiveWord out;
    out.ambient = w.ambient;
    out.indices.reserve(w.letters.size());
    for (const Letter& l : w.letters) {
        if (l.sign < 0)
            throw std::invalid_argument("word is not positive: " + render_word(w));
        out.indices.push_back(l.index);
    }
    return out;
}

bool is_positive(const BraidWord& w) {
    return std::all_of(w.letters.begin(), w.letters.end(),
                       [](const Letter& l) { return l.sign > 0; });
}

namespace {

std::vector<Letter> parse_letters(const std::string& text) {
    std::vector<Letter> letters;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        // 's'/'S' followed by digits is the numeric spelling; a bare 's' or
        // 'S' falls through to the letter form below.
        if ((c == 's' || c == 'S') && i + 1 < text.size() &&
            std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
            int sign = (c == 's') ? +1 : -1;
            std::size_t j = i + 1;
            long value = 0;
            std::size_t digits = 0;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
                value = value * 10 + (text[j] - '0');
                ++digits;
                if (digits > 6) throw parse_error("generator index too large");
                ++j;
            }
            if (value < 1) throw parse_error("generator index must be at least 1");
            letters.push_back({static_cast<int>(value), sign});
            i = j;
            continue;
        }
        if (c >= 'a' && c <= 'y') {
            letters.push_back({c - 'a' + 1, +1});
            ++i;
            continue;
        }
        if (c >= 'A' && c <= 'Y') {
            letters.push_back({c - 'A' + 1, -1});
            ++i;
            continue;
        }
        throw parse_error(std::string("unexpected character '") + c + "' in braid word");
    }
    return letters;
}

void check_indices(const std::vector<Letter>& letters, int n) {
    for (const Letter& l : letters) {
        if (l.index >= n)
            throw parse_error("generator index " + std::to_string(l.index) +
                              " out of range for " + std::to_string(n) + " strands");
    }
}

void append_letter(std::string& out, int index, int sign) {
    if (index <= 25) {
        out += static_cast<char>((sign > 0 ? 'a' : 'A') + index - 1);
    } else {
        out += (sign > 0 ? 's' : 'S');
        out += std::to_string(index);
    }
}

}  // namespace

BraidWord parse_word(const std::string& text, int n) {
    if (n < 1) throw std::invalid_argument("strand count must be at least 1");
    BraidWord w;
    w.ambient = n;
    w.letters = parse_letters(text);
    check_indices(w.letters, n);
    return w;
}

BraidWord parse_word(const std::string& text) {
    BraidWord w;
    w.letters = parse_letters(text);
    int m = 0;
    for (const Letter& l : w.letters) m = std::max(m, l.index);
    w.ambient = m + 1 > 1 ? m + 1 : 1;
    return w;
}

PositiveWord parse_positive_word(const std::string& text, int n) {
    BraidWord w = parse_word(text, n);
    if (!is_positive(w)) throw parse_error("expected a positive word: " + text);
    return to_positive(w);
}

std::string render_word(const BraidWord& w) {
    std::string out;
    for (const Letter& l : w.letters) append_letter(out, l.index, l.sign);
    return out;
}

std::string render_word(const PositiveWord& w) {
    std::string out;
    for (int i : w.indices) append_letter(out, i, +1);
    return out;
}

std::string display_word(const BraidWord& w) {
    return w.letters.empty() ? "1" : render_word(w);
}

std::string display_word(const PositiveWord& w) {
    return w.indices.empty() ? "1" : render_word(w);
}

BraidWord flip(const BraidWord& w, int n) {
    BraidWord out;
    out.ambient = n;
    out.letters.reserve(w.letters.size());
    for (const Letter& l : w.letters) {
        if (l.index < 1 || l.index >= n)
            throw std::invalid_argument("flip: index " + std::to_string(l.index) +
                                        " out of range for " + std::to_string(n) + " strands");
        out.letters.push_back({n - l.index, l.sign});
    }
    return out;
}

PositiveWord flip(const PositiveWord& w, int n) {
    return to_positive(flip(to_braid_word(w), n));
}

BraidWord inverse(const BraidWord& w) {
    BraidWord out;
    out.ambient = w.ambient;
    out.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        out.letters.push_back({it->index, -it->sign});
    return out;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
    BraidWord out;
    out.ambient = std::max(a.ambient, b.ambient);
    out.letters = a.letters;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
}

PositiveWord concat(const PositiveWord& a, const PositiveWord& b) {
    PositiveWord out;
    out.ambient = std::max(a.ambient, b.ambient);
    out.indices = a.indices;
    out.indices.insert(out.indices.end(), b.indices.begin(), b.indices.end());
    return out;
}

PositiveWord power(const PositiveWord& w, int k) {
    if (k < 0) throw std::invalid_argument("power: negative exponent");
    PositiveWord out;
    out.ambient = w.ambient;
    out.indices.reserve(w.indices.size() * static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j)
        out.indices.insert(out.indices.end(), w.indices.begin(), w.indices.end());
    return out;
}

int max_index(const BraidWord& w) {
    int m = 0;
    for (const Letter& l : w.letters) m = std::max(m, l.index);
    return m;
}

int max_index(const PositiveWord& w) {
    int m = 0;
    for (int i : w.indices) m = std::max(m, i);
    return m;
}

}  // namespace braids

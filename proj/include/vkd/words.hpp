#ifndef VKD_WORDS_HPP
#define VKD_WORDS_HPP

#include "core.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace vkd {

struct Letter {
    int gen = 1;  // 1-based generator index
    int sign = 1; // +1 or -1

    Letter inv() const { return {gen, -sign}; }
    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

inline Word inverse(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inv());
    return out;
}

inline Word concat(const Word& u, const Word& v) {
    Word out = u;
    out.insert(out.end(), v.begin(), v.end());
    return out;
}

inline Word power(int gen, long long e) {
    Word out;
    int s = e < 0 ? -1 : 1;
    for (long long t = 0; t < (e < 0 ? -e : e); ++t) out.push_back({gen, s});
    return out;
}

inline Word free_reduce(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (const Letter& x : w) {
        if (!out.empty() && out.back() == x.inv())
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

inline bool is_reduced(const Word& w) {
    for (std::size_t t = 1; t < w.size(); ++t)
        if (w[t] == w[t - 1].inv()) return false;
    return true;
}

// W(i,j): 1-based start, length j.
inline Word subword(const Word& w, std::size_t i, std::size_t j) {
    if (i < 1 || (j > 0 && i + j - 1 > w.size()) || (j == 0 && i > w.size() + 1))
        throw Error(ErrorCode::window_out_of_range,
                    "window (" + std::to_string(i) + "," + std::to_string(j) + ") in word of length " +
                        std::to_string(w.size()));
    return Word(w.begin() + static_cast<long>(i - 1), w.begin() + static_cast<long>(i - 1 + j));
}

inline std::size_t count_gen(const Word& w, int gen) {
    return static_cast<std::size_t>(
        std::count_if(w.begin(), w.end(), [gen](const Letter& x) { return x.gen == gen; }));
}

inline long long exponent_sum(const Word& w, int gen) {
    long long s = 0;
    for (const Letter& x : w)
        if (x.gen == gen) s += x.sign;
    return s;
}

inline Word cyclic_shift(const Word& w, std::size_t k) {
    if (w.empty()) return w;
    k %= w.size();
    Word out(w.begin() + static_cast<long>(k), w.end());
    out.insert(out.end(), w.begin(), w.begin() + static_cast<long>(k));
    return out;
}

// ---- presentations ----

struct ExponentSet {
    enum class Kind { zero, exactly, multiples };
    Kind kind = Kind::zero;
    long long n = 0;

    static ExponentSet zero() { return {}; }
    static ExponentSet exactly(long long n) { return {Kind::exactly, n}; }
    static ExponentSet multiples(long long n) { return {Kind::multiples, n}; }

    // Whether a face boundary may read a^k, k > 0.
    bool admits(long long k) const {
        switch (kind) {
        case Kind::zero: return false;
        case Kind::exactly: return k == n;
        case Kind::multiples: return k > 0 && k % n == 0;
        }
        return false;
    }
    // Order of the generator in the group; 0 means infinite.
    long long order() const { return kind == Kind::zero ? 0 : n; }

    friend bool operator==(const ExponentSet&, const ExponentSet&) = default;
};

struct CyclicProducts {
    std::vector<std::string> names;
    std::vector<ExponentSet> sets;
    int m() const { return static_cast<int>(sets.size()); }
};

struct BaumslagSolitar {
    std::vector<std::string> names;
    long long n1 = 1;
    long long n2 = 1;
    int m() const { return static_cast<int>(names.size()); }
};

using Presentation = std::variant<CyclicProducts, BaumslagSolitar>;

inline std::vector<std::string> default_names(int m) {
    std::vector<std::string> out;
    if (m <= 26)
        for (int t = 0; t < m; ++t) out.emplace_back(1, static_cast<char>('a' + t));
    else
        for (int t = 0; t < m; ++t) out.push_back("x" + std::to_string(t + 1));
    return out;
}

inline CyclicProducts uniform_cyclic(int m, ExponentSet e, std::vector<std::string> names = {}) {
    if (names.empty()) names = default_names(m);
    return CyclicProducts{std::move(names), std::vector<ExponentSet>(static_cast<std::size_t>(m), e)};
}

inline BaumslagSolitar baumslag_solitar(long long n1, long long n2, int m = 2) {
    std::vector<std::string> names;
    for (int t = 1; t <= m; ++t) names.push_back("a" + std::to_string(t));
    return BaumslagSolitar{std::move(names), n1, n2};
}

inline const std::vector<std::string>& generator_names(const Presentation& p) {
    return std::visit([](const auto& q) -> const std::vector<std::string>& { return q.names; }, p);
}

inline int alphabet_size(const Presentation& p) {
    return std::visit([](const auto& q) { return q.m(); }, p);
}

inline void check_presentation(const Presentation& p) {
    if (const auto* c = std::get_if<CyclicProducts>(&p)) {
        if (c->names.size() != c->sets.size())
            throw Error(ErrorCode::input, "presentation needs one exponent set per generator");
        for (const auto& e : c->sets)
            if (e.kind != ExponentSet::Kind::zero && e.n < 1)
                throw Error(ErrorCode::input, "exponent set needs n >= 1");
    } else {
        const auto& b = std::get<BaumslagSolitar>(p);
        if (b.names.size() < 2) throw Error(ErrorCode::input, "Baumslag-Solitar needs at least two generators");
        if (b.n1 == 0 || b.n2 == 0) throw Error(ErrorCode::input, "n1 and n2 must be nonzero");
    }
}

inline void check_word(const Word& w, int m) {
    for (const Letter& x : w)
        if (x.gen < 1 || x.gen > m || (x.sign != 1 && x.sign != -1))
            throw Error(ErrorCode::unknown_generator, "letter outside the alphabet");
}

// ---- text syntax ----

namespace detail {
inline std::string lower(std::string s) {
    for (char& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    return s;
}
inline std::string upper(std::string s) {
    for (char& ch : s) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    return s;
}
} // namespace detail

inline Word parse_word(std::string_view text, const std::vector<std::string>& names) {
    Word out;
    std::size_t pos = 0;
    const std::size_t n = text.size();
    while (pos < n) {
        if (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == '*' || text[pos] == '.') {
            ++pos;
            continue;
        }
        // longest matching name, lower case for positive letters, upper case for inverses
        int gen = 0, sign = 1;
        std::size_t len = 0;
        for (std::size_t g = 0; g < names.size(); ++g) {
            const std::string& nm = names[g];
            if (nm.size() <= len || pos + nm.size() > n) continue;
            std::string_view piece = text.substr(pos, nm.size());
            if (piece == nm) {
                gen = static_cast<int>(g) + 1, sign = 1, len = nm.size();
            } else if (detail::upper(nm) != nm && piece == detail::upper(nm)) {
                gen = static_cast<int>(g) + 1, sign = -1, len = nm.size();
            }
        }
        if (gen == 0) {
            std::size_t end = pos;
            while (end < n && std::isalnum(static_cast<unsigned char>(text[end]))) ++end;
            throw Error(ErrorCode::unknown_generator,
                        "'" + std::string(text.substr(pos, std::max<std::size_t>(end - pos, 1))) + "'");
        }
        pos += len;
        long long e = 1;
        if (pos < n && text[pos] == '^') {
            ++pos;
            std::size_t start = pos;
            if (pos < n && (text[pos] == '-' || text[pos] == '+')) ++pos;
            std::size_t digits = pos;
            while (pos < n && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == digits || pos - digits > 9)
                throw Error(ErrorCode::malformed_exponent, "'" + std::string(text.substr(start, pos - start + 1)) + "'");
            e = std::stoll(std::string(text.substr(start, pos - start)));
        }
        Word p = power(gen, sign * e);
        out.insert(out.end(), p.begin(), p.end());
    }
    return out;
}

inline Word parse_word(std::string_view text, const Presentation& p) {
    return parse_word(text, generator_names(p));
}

// Lower-case letters seen in the text, sorted; used when no presentation is given.
inline std::vector<std::string> infer_names(std::string_view text) {
    std::set<char> seen;
    for (char ch : text)
        if (std::isalpha(static_cast<unsigned char>(ch)))
            seen.insert(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    std::vector<std::string> out;
    for (char ch : seen) out.emplace_back(1, ch);
    return out;
}

inline std::string format_letter(const Letter& x, const std::vector<std::string>& names) {
    const std::string& nm = names.at(static_cast<std::size_t>(x.gen - 1));
    if (x.sign > 0) return nm;
    std::string up = detail::upper(nm);
    return up != nm ? up : nm + "^-1";
}

inline std::string format_word(const Word& w, const std::vector<std::string>& names) {
    std::string out;
    for (const Letter& x : w) {
        if (!out.empty()) out += ' ';
        out += format_letter(x, names);
    }
    return out;
}

inline std::string format_word(const Word& w, const Presentation& p) {
    return format_word(w, generator_names(p));
}

} // namespace vkd

#endif

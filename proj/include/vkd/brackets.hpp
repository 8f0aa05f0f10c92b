#ifndef VKD_BRACKETS_HPP
#define VKD_BRACKETS_HPP

#include "diagram.hpp"

#include <cmath>
#include <functional>
#include <istream>

namespace vkd {

// (b1..b6); PB1 iff b3 == 0.
struct PseudoBracketG2 {
    long long b[6] = {0, 0, 0, 0, 0, 0};
    bool pb1() const { return b[2] == 0; }
    friend bool operator==(const PseudoBracketG2&, const PseudoBracketG2&) = default;
};

struct PseudoBracketBS {
    long long b1 = 0, b2 = 0;
    BigInt b3 = 0, b4 = 0;
    friend bool operator==(const PseudoBracketBS&, const PseudoBracketBS&) = default;
};

template <class PB>
struct PseudoBracketSystem {
    std::vector<PB> brackets; // sorted by arc
};

using SystemG2 = PseudoBracketSystem<PseudoBracketG2>;
using SystemBS = PseudoBracketSystem<PseudoBracketBS>;

inline long long lo(const PseudoBracketG2& b) { return b.b[0]; }
inline long long hi(const PseudoBracketG2& b) { return b.b[1]; }
inline long long lo(const PseudoBracketBS& b) { return b.b1; }
inline long long hi(const PseudoBracketBS& b) { return b.b2; }

struct ElemOp {
    enum class Kind { add, ext1l, ext1r, ext2l, ext2r, ext2, ext3, turn, merge };
    Kind kind = Kind::add;
    long long x = 0, y = 0;   // target arc; add uses x only
    long long x2 = 0, y2 = 0; // right target of a merge
    int gen = 0;              // turn
    long long k = 0;          // turn face length, 0 = smallest member of E_gen

    friend bool operator==(const ElemOp&, const ElemOp&) = default;

    static ElemOp add(long long v) { return {Kind::add, v, v}; }
    static ElemOp unary(Kind kd, long long x, long long y) { return {kd, x, y}; }
    static ElemOp turn(long long x, long long y, int gen, long long k = 0) { return {Kind::turn, x, y, 0, 0, gen, k}; }
    static ElemOp merge(long long x, long long y, long long x2, long long y2) { return {Kind::merge, x, y, x2, y2}; }
};

inline std::string format_op(const ElemOp& op) {
    auto arc = [&] { return std::to_string(op.x) + " " + std::to_string(op.y); };
    switch (op.kind) {
    case ElemOp::Kind::add: return "add " + std::to_string(op.x);
    case ElemOp::Kind::ext1l: return "ext1l " + arc();
    case ElemOp::Kind::ext1r: return "ext1r " + arc();
    case ElemOp::Kind::ext2l: return "ext2l " + arc();
    case ElemOp::Kind::ext2r: return "ext2r " + arc();
    case ElemOp::Kind::ext2: return "ext2 " + arc();
    case ElemOp::Kind::ext3: return "ext3 " + arc();
    case ElemOp::Kind::turn:
        return "turn " + arc() + " " + std::to_string(op.gen) + (op.k ? " " + std::to_string(op.k) : "");
    case ElemOp::Kind::merge: return "merge " + arc() + " " + std::to_string(op.x2) + " " + std::to_string(op.y2);
    }
    return "";
}

inline std::string format_ops(const std::vector<ElemOp>& ops) {
    std::string out;
    for (const auto& op : ops) out += format_op(op) + "\n";
    return out;
}

inline std::vector<ElemOp> parse_ops(std::istream& in) {
    std::vector<ElemOp> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::string name;
        if (!(ls >> name)) continue;
        std::vector<long long> a;
        long long v;
        while (ls >> v) a.push_back(v);
        if (!ls.eof()) throw Error(ErrorCode::input, "certificate line " + std::to_string(lineno) + ": bad number");
        auto need = [&](std::size_t lo_n, std::size_t hi_n) {
            if (a.size() < lo_n || a.size() > hi_n)
                throw Error(ErrorCode::input, "certificate line " + std::to_string(lineno) + ": wrong arity for " + name);
        };
        ElemOp op;
        if (name == "add") {
            need(1, 1);
            op = ElemOp::add(a[0]);
        } else if (name == "merge") {
            need(4, 4);
            op = ElemOp::merge(a[0], a[1], a[2], a[3]);
        } else if (name == "turn") {
            need(3, 4);
            op = ElemOp::turn(a[0], a[1], static_cast<int>(a[2]), a.size() == 4 ? a[3] : 0);
        } else {
            static const std::map<std::string, ElemOp::Kind> unary = {
                {"ext1l", ElemOp::Kind::ext1l}, {"ext1r", ElemOp::Kind::ext1r}, {"ext2l", ElemOp::Kind::ext2l},
                {"ext2r", ElemOp::Kind::ext2r}, {"ext2", ElemOp::Kind::ext2},   {"ext3", ElemOp::Kind::ext3}};
            auto it = unary.find(name);
            if (it == unary.end()) throw Error(ErrorCode::input, "certificate line " + std::to_string(lineno) + ": unknown op " + name);
            need(2, 2);
            op = ElemOp::unary(it->second, a[0], a[1]);
        }
        out.push_back(op);
    }
    return out;
}

// ---- size bounds ----

struct SizeBound {
    long long k1 = 0;
    long long k2 = 0;
};

inline double bound_constant() { return 1.0 / std::log2(6.0 / 5.0); }

inline long long log_bound(long long x) {
    double lg = x > 0 ? std::log2(static_cast<double>(x)) : 0.0;
    return static_cast<long long>(std::ceil(bound_constant() * (lg + 1.0) - 1e-12));
}

inline SizeBound default_size_bound(const Word& w, const Presentation& p) {
    long long n = static_cast<long long>(w.size());
    if (std::holds_alternative<CyclicProducts>(p)) return {11 * n, log_bound(n)};
    long long bar = n - static_cast<long long>(count_gen(w, 1));
    return {7 * n, log_bound(bar)};
}

// ---- applying operations ----

namespace detail {

template <class PB>
std::size_t find_target(const std::vector<PB>& B, long long x, long long y) {
    for (std::size_t t = 0; t < B.size(); ++t)
        if (lo(B[t]) == x && hi(B[t]) == y) return t;
    throw Error(ErrorCode::target_missing, "no bracket on arc (" + std::to_string(x) + "," + std::to_string(y) + ")");
}

template <class PB>
void check_system(std::vector<PB>& B, long long n) {
    std::sort(B.begin(), B.end(), [](const PB& a, const PB& b) {
        return lo(a) != lo(b) ? lo(a) < lo(b) : hi(a) < hi(b);
    });
    for (std::size_t t = 0; t < B.size(); ++t) {
        if (lo(B[t]) < 0 || hi(B[t]) > n || lo(B[t]) > hi(B[t]))
            throw Error(ErrorCode::side_condition_violated, "arc outside the word");
        if (t > 0) {
            const PB& a = B[t - 1];
            const PB& b = B[t];
            if (hi(a) > lo(b) || (lo(a) == lo(b) && hi(a) == hi(b)))
                throw Error(ErrorCode::overlap_created, "arcs (" + std::to_string(lo(a)) + "," + std::to_string(hi(a)) +
                                                            ") and (" + std::to_string(lo(b)) + "," +
                                                            std::to_string(hi(b)) + ")");
        }
    }
}

[[noreturn]] inline void violated(const std::string& what) { throw Error(ErrorCode::side_condition_violated, what); }

inline Letter letter_at(const Word& w, long long pos) { return w[static_cast<std::size_t>(pos - 1)]; }

} // namespace detail

inline void check_g2_bracket(const PseudoBracketG2& b, const CyclicProducts& p, long long n) {
    const long long* v = b.b;
    if (v[5] < 0 || v[5] > n) detail::violated("b(6) out of range");
    if (v[2] == 0) {
        if (v[3] != 0 || v[4] != 0) detail::violated("PB1 needs b(4) = b(5) = 0");
        return;
    }
    if (v[2] < 1 || v[2] > p.m()) detail::violated("b(3) is not a generator");
    if (!p.sets[static_cast<std::size_t>(v[2] - 1)].admits(v[3]) || v[3] > n) detail::violated("b(4) not in E");
    if (!(-v[3] < v[4] && v[4] < v[3])) detail::violated("|b(5)| >= b(4)");
}

inline SystemG2 apply_op(const SystemG2& S, const ElemOp& op, const Word& w, const CyclicProducts& p) {
    const long long n = static_cast<long long>(w.size());
    std::vector<PseudoBracketG2> B = S.brackets;
    using K = ElemOp::Kind;
    switch (op.kind) {
    case K::add: {
        if (op.x < 0 || op.x > n) detail::violated("vertex outside the word");
        PseudoBracketG2 b;
        b.b[0] = b.b[1] = op.x;
        B.push_back(b);
        break;
    }
    case K::ext1l:
    case K::ext2l:
    case K::ext1r:
    case K::ext2r: {
        std::size_t t = detail::find_target(B, op.x, op.y);
        PseudoBracketG2& b = B[t];
        bool left = op.kind == K::ext1l || op.kind == K::ext2l;
        if (b.pb1()) detail::violated("extension of type 1/2 needs a PB2 bracket");
        long long pos = left ? b.b[0] : b.b[1] + 1;
        if (pos < 1 || pos > n) detail::violated("no letter beyond the arc");
        Letter e = detail::letter_at(w, pos);
        if (e.gen != b.b[2]) detail::violated("letter is not a power of a_b(3)");
        long long b5 = b.b[4];
        if (e.sign * b5 < 0) detail::violated("sign of b(5) disagrees with the letter");
        long long a5 = b5 < 0 ? -b5 : b5;
        bool type1 = op.kind == K::ext1l || op.kind == K::ext1r;
        if (type1 && a5 > b.b[3] - 2) detail::violated("type 1 needs |b(5)| <= b(4) - 2");
        if (!type1 && a5 != b.b[3] - 1) detail::violated("type 2 needs |b(5)| = b(4) - 1");
        if (left) --b.b[0]; else ++b.b[1];
        if (type1) {
            b.b[4] += e.sign;
        } else {
            b.b[2] = b.b[3] = b.b[4] = 0;
            ++b.b[5];
        }
        break;
    }
    case K::ext3: {
        std::size_t t = detail::find_target(B, op.x, op.y);
        PseudoBracketG2& b = B[t];
        if (!b.pb1()) detail::violated("extension of type 3 needs a PB1 bracket");
        if (b.b[0] < 1 || b.b[1] + 1 > n) detail::violated("no letters around the arc");
        if (detail::letter_at(w, b.b[0]) != detail::letter_at(w, b.b[1] + 1).inv())
            detail::violated("letters around the arc are not mutually inverse");
        --b.b[0];
        ++b.b[1];
        break;
    }
    case K::turn: {
        std::size_t t = detail::find_target(B, op.x, op.y);
        PseudoBracketG2& b = B[t];
        if (!b.pb1()) detail::violated("turn needs a PB1 bracket");
        if (op.gen < 1 || op.gen > p.m()) detail::violated("turn generator outside the alphabet");
        const ExponentSet& E = p.sets[static_cast<std::size_t>(op.gen - 1)];
        if (E.kind == ExponentSet::Kind::zero) detail::violated("turn needs E_j != {0}");
        long long k = op.k ? op.k : E.n;
        if (!E.admits(k) || k > n) detail::violated("turn length not in E_j or above |W|");
        b.b[2] = op.gen;
        b.b[3] = k;
        break;
    }
    case K::ext2: detail::violated("ext2 without side belongs to Baumslag-Solitar certificates");
    case K::merge: {
        std::size_t t1 = detail::find_target(B, op.x, op.y);
        std::size_t t2 = detail::find_target(B, op.x2, op.y2);
        const PseudoBracketG2 b = B[t1], c = B[t2];
        if (t1 == t2) detail::violated("merge needs two brackets");
        if (b.b[1] != c.b[0]) detail::violated("merged arcs are not adjacent");
        if (!b.pb1() && !c.pb1()) detail::violated("merge needs a PB1 bracket");
        PseudoBracketG2 r;
        r.b[0] = b.b[0];
        r.b[1] = c.b[1];
        for (int q = 2; q < 6; ++q) r.b[q] = b.b[q] + c.b[q];
        B.erase(B.begin() + static_cast<long>(std::max(t1, t2)));
        B.erase(B.begin() + static_cast<long>(std::min(t1, t2)));
        B.push_back(r);
        break;
    }
    }
    for (const auto& b : B) check_g2_bracket(b, p, n);
    detail::check_system(B, n);
    return SystemG2{std::move(B)};
}

inline SystemBS apply_op(const SystemBS& S, const ElemOp& op, const Word& w, const BaumslagSolitar& p) {
    const long long n = static_cast<long long>(w.size());
    std::vector<PseudoBracketBS> B = S.brackets;
    using K = ElemOp::Kind;
    switch (op.kind) {
    case K::add: {
        if (op.x < 0 || op.x > n) detail::violated("vertex outside the word");
        PseudoBracketBS b;
        b.b1 = b.b2 = op.x;
        B.push_back(b);
        break;
    }
    case K::ext1l:
    case K::ext1r: {
        std::size_t t = detail::find_target(B, op.x, op.y);
        PseudoBracketBS& b = B[t];
        bool left = op.kind == K::ext1l;
        long long pos = left ? b.b1 : b.b2 + 1;
        if (pos < 1 || pos > n) detail::violated("no letter beyond the arc");
        Letter e = detail::letter_at(w, pos);
        if (e.gen != 1) detail::violated("type 1 extension needs an a1 letter");
        if (left) --b.b1; else ++b.b2;
        b.b3 += e.sign;
        break;
    }
    case K::ext2:
    case K::ext3: {
        std::size_t t = detail::find_target(B, op.x, op.y);
        PseudoBracketBS& b = B[t];
        if (b.b1 < 1 || b.b2 + 1 > n) detail::violated("no letters around the arc");
        Letter e1 = detail::letter_at(w, b.b1), e2 = detail::letter_at(w, b.b2 + 1);
        if (e1 != e2.inv()) detail::violated("letters around the arc are not mutually inverse");
        if (op.kind == K::ext3) {
            if (e1.gen == 1) detail::violated("type 3 extension needs a letter other than a1");
            if (b.b3 != 0) detail::violated("type 3 extension needs b(3) = 0");
        } else {
            if (e1.gen != 2) detail::violated("type 2 extension needs a2 letters");
            if (b.b3 == 0) detail::violated("type 2 extension needs b(3) != 0");
            BigInt base = e1.sign > 0 ? BigInt(p.n1) : BigInt(p.n2);
            BigInt other = e1.sign > 0 ? BigInt(p.n2) : BigInt(p.n1);
            if (b.b3 % base != 0) detail::violated("b(3) not divisible by n_i(eps)");
            BigInt q = b.b3 / base;
            b.b4 += q < 0 ? BigInt(-q) : q;
            b.b3 = q * other;
        }
        --b.b1;
        ++b.b2;
        break;
    }
    case K::merge: {
        std::size_t t1 = detail::find_target(B, op.x, op.y);
        std::size_t t2 = detail::find_target(B, op.x2, op.y2);
        if (t1 == t2) detail::violated("merge needs two brackets");
        const PseudoBracketBS b = B[t1], c = B[t2];
        if (b.b2 != c.b1) detail::violated("merged arcs are not adjacent");
        PseudoBracketBS r{b.b1, c.b2, b.b3 + c.b3, b.b4 + c.b4};
        B.erase(B.begin() + static_cast<long>(std::max(t1, t2)));
        B.erase(B.begin() + static_cast<long>(std::min(t1, t2)));
        B.push_back(r);
        break;
    }
    default: detail::violated("operation not defined for Baumslag-Solitar certificates");
    }
    detail::check_system(B, n);
    return SystemBS{std::move(B)};
}

struct FinalStats {
    bool accepted = false;
    Cost faces = Cost::infinite();
    long long max_concurrent = 0;
};

inline FinalStats verify_sequence(const Word& w, const Presentation& p, const std::vector<ElemOp>& ops) {
    FinalStats st;
    const long long n = static_cast<long long>(w.size());
    auto run = [&](auto sys, const auto& pres) {
        for (std::size_t t = 0; t < ops.size(); ++t) {
            try {
                sys = apply_op(sys, ops[t], w, pres);
            } catch (const Error& e) {
                throw Error(e.code(), "step " + std::to_string(t + 1) + " (" + format_op(ops[t]) + "): " + e.what());
            }
            st.max_concurrent = std::max<long long>(st.max_concurrent, static_cast<long long>(sys.brackets.size()));
        }
        return sys;
    };
    if (const auto* c = std::get_if<CyclicProducts>(&p)) {
        SystemG2 s = run(SystemG2{}, *c);
        if (s.brackets.size() == 1) {
            const auto& b = s.brackets[0];
            if (b.b[0] == 0 && b.b[1] == n && b.pb1()) st.accepted = true, st.faces = Cost(b.b[5]);
        }
    } else {
        SystemBS s = run(SystemBS{}, std::get<BaumslagSolitar>(p));
        if (s.brackets.size() == 1) {
            const auto& b = s.brackets[0];
            if (b.b1 == 0 && b.b2 == n && b.b3 == 0) st.accepted = true, st.faces = Cost(b.b4);
        }
    }
    return st;
}

// ---- diagrams from accepted sequences ----

namespace detail {

// Arc darts p followed by pending darts close the boundary of a bracket's diagram.
struct Part {
    std::vector<int> p, pend;
};

inline std::vector<int> cat(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

} // namespace detail

inline Diagram build_diagram(const Word& w, const Presentation& pres, const std::vector<ElemOp>& ops) {
    FinalStats st = verify_sequence(w, pres, ops);
    if (!st.accepted) throw Error(ErrorCode::sequence_rejected, "sequence does not reach a final system");
    const bool bs = std::holds_alternative<BaumslagSolitar>(pres);
    DiagramBuilder B{pres};
    std::map<std::pair<long long, long long>, detail::Part> parts;
    // replay brackets alongside the parts so side data (b3) is at hand
    SystemG2 sg;
    SystemBS sb;
    auto take = [&](long long x, long long y) {
        auto it = parts.find({x, y});
        detail::Part pt = std::move(it->second);
        parts.erase(it);
        return pt;
    };
    auto bs_b3 = [&](long long x, long long y) -> BigInt {
        return sb.brackets[detail::find_target(sb.brackets, x, y)].b3;
    };
    using K = ElemOp::Kind;
    for (const ElemOp& op : ops) {
        BigInt b3, c3;
        if (bs && op.kind != K::add) b3 = bs_b3(op.x, op.y);
        if (bs && op.kind == K::merge) c3 = bs_b3(op.x2, op.y2);
        switch (op.kind) {
        case K::add: parts[{op.x, op.x}] = {}; break;
        case K::turn: break;
        case K::ext1l:
        case K::ext2l: {
            detail::Part pt = take(op.x, op.y);
            Letter e = detail::letter_at(w, op.x);
            int sg3 = b3 > 0 ? 1 : (b3 < 0 ? -1 : 0);
            if (bs && sg3 * e.sign < 0) {
                pt.p.insert(pt.p.begin(), pt.pend.back());
                pt.pend.pop_back();
            } else {
                int f = B.edge(e);
                pt.p.insert(pt.p.begin(), f);
                pt.pend.push_back(B.inv(f));
            }
            if (op.kind == K::ext2l) {
                B.face(pt.pend);
                pt.pend.clear();
            }
            parts[{op.x - 1, op.y}] = std::move(pt);
            break;
        }
        case K::ext1r:
        case K::ext2r: {
            detail::Part pt = take(op.x, op.y);
            Letter e = detail::letter_at(w, op.y + 1);
            int sg3 = b3 > 0 ? 1 : (b3 < 0 ? -1 : 0);
            if (bs && sg3 * e.sign < 0) {
                pt.p.push_back(pt.pend.front());
                pt.pend.erase(pt.pend.begin());
            } else {
                int f = B.edge(e);
                pt.p.push_back(f);
                pt.pend.insert(pt.pend.begin(), B.inv(f));
            }
            if (op.kind == K::ext2r) {
                B.face(pt.pend);
                pt.pend.clear();
            }
            parts[{op.x, op.y + 1}] = std::move(pt);
            break;
        }
        case K::ext3: {
            detail::Part pt = take(op.x, op.y);
            int f = B.edge(detail::letter_at(w, op.x));
            pt.p.insert(pt.p.begin(), f);
            pt.p.push_back(B.inv(f));
            parts[{op.x - 1, op.y + 1}] = std::move(pt);
            break;
        }
        case K::ext2: {
            // attach an a2-band of k faces along the pending a1-path
            const auto& P = std::get<BaumslagSolitar>(pres);
            detail::Part pt = take(op.x, op.y);
            const Letter e1 = detail::letter_at(w, op.x);
            const long long base = e1.sign > 0 ? P.n1 : P.n2;
            const long long other = e1.sign > 0 ? P.n2 : P.n1;
            const long long Bn = base < 0 ? -base : base, T = other < 0 ? -other : other;
            const BigInt b3n = b3 / base * other;
            const int s_new = b3n > 0 ? 1 : -1;
            const long long k = static_cast<long long>(pt.pend.size()) / Bn;
            std::vector<int> rung(static_cast<std::size_t>(k + 1));
            for (auto& r : rung) r = B.edge(e1); // top to bottom, label a2^eps
            std::vector<int> outer(static_cast<std::size_t>(k * T)), inner(static_cast<std::size_t>(k * T));
            for (long long q = 0; q < k * T; ++q) {
                int f = B.edge(Letter{1, -s_new}); // from y_q to y_{q+1}
                outer[static_cast<std::size_t>(q)] = f;
                inner[static_cast<std::size_t>(q)] = B.inv(f);
            }
            for (long long i = 1; i <= k; ++i) {
                std::vector<int> cyc(pt.pend.begin() + (i - 1) * Bn, pt.pend.begin() + i * Bn);
                cyc.push_back(B.inv(rung[static_cast<std::size_t>(i)]));
                for (long long q = i * T; q > (i - 1) * T; --q) cyc.push_back(inner[static_cast<std::size_t>(q - 1)]);
                cyc.push_back(rung[static_cast<std::size_t>(i - 1)]);
                B.face(std::move(cyc));
            }
            detail::Part np;
            np.p.push_back(rung[static_cast<std::size_t>(k)]);
            np.p.insert(np.p.end(), pt.p.begin(), pt.p.end());
            np.p.push_back(B.inv(rung[0]));
            np.pend = outer;
            parts[{op.x - 1, op.y + 1}] = std::move(np);
            break;
        }
        case K::merge: {
            detail::Part b = take(op.x, op.y), c = take(op.x2, op.y2);
            detail::Part r;
            r.p = detail::cat(b.p, c.p);
            if (bs && ((b3 > 0 && c3 < 0) || (b3 < 0 && c3 > 0))) {
                std::size_t t = std::min(b.pend.size(), c.pend.size());
                for (std::size_t q = 1; q <= t; ++q) {
                    int xo = c.pend[c.pend.size() - q], yo = b.pend[q - 1];
                    B.fold(B.inv(xo), B.inv(yo));
                }
                r.pend.assign(c.pend.begin(), c.pend.end() - static_cast<long>(t));
                r.pend.insert(r.pend.end(), b.pend.begin() + static_cast<long>(t), b.pend.end());
            } else {
                r.pend = detail::cat(c.pend, b.pend);
            }
            parts[{op.x, op.y2}] = std::move(r);
            break;
        }
        }
        if (bs)
            sb = apply_op(sb, op, w, std::get<BaumslagSolitar>(pres));
        else
            sg = apply_op(sg, op, w, std::get<CyclicProducts>(pres));
    }
    detail::Part fin = std::move(parts.begin()->second);
    return B.finish(std::move(fin.p));
}

// ---- derivation trees ----

// A node's op applies after its children; a merge has children {left, right}.
struct DerivNode {
    ElemOp op;
    std::vector<int> kids;
};

// Post-order with the child of larger register need first, which keeps the
// number of simultaneously live brackets at the Strahler number of the tree.
inline std::vector<ElemOp> linearize(const std::vector<DerivNode>& tree, int root) {
    std::vector<int> need(tree.size(), 0);
    std::function<int(int)> calc = [&](int v) -> int {
        const DerivNode& nd = tree[static_cast<std::size_t>(v)];
        int r = 1;
        if (nd.kids.size() == 1) r = calc(nd.kids[0]);
        if (nd.kids.size() == 2) {
            int a = calc(nd.kids[0]), b = calc(nd.kids[1]);
            r = a == b ? a + 1 : std::max(a, b);
        }
        return need[static_cast<std::size_t>(v)] = r;
    };
    calc(root);
    std::vector<ElemOp> out;
    // explicit stack: (node, expanded)
    std::vector<std::pair<int, bool>> st{{root, false}};
    while (!st.empty()) {
        auto [v, done] = st.back();
        st.pop_back();
        const DerivNode& nd = tree[static_cast<std::size_t>(v)];
        if (done) {
            out.push_back(nd.op);
            continue;
        }
        st.push_back({v, true});
        if (nd.kids.size() == 1) st.push_back({nd.kids[0], false});
        if (nd.kids.size() == 2) {
            int a = nd.kids[0], b = nd.kids[1];
            if (need[static_cast<std::size_t>(a)] < need[static_cast<std::size_t>(b)]) std::swap(a, b);
            st.push_back({b, false}); // runs second
            st.push_back({a, false}); // runs first
        }
    }
    return out;
}

} // namespace vkd

#endif

#ifndef VKD_DP_BS_HPP
#define VKD_DP_BS_HPP

#include "brackets.hpp"

namespace vkd {

struct LambdaMu {
    std::optional<BigInt> lambda; // nullopt = infinite
    Cost mu3 = Cost::infinite();
};

struct BsChoice {
    enum class Kind { infinite, base, split, pinch };
    Kind kind = Kind::infinite;
    int cut = 0;              // split: length of the left part
    int gen = 0, delta = 0;   // pinch letter a_gen^delta
    int u1 = 0, u3 = 0;       // lengths of the a1-only prefix and suffix
};

// Windows W(i,j) are finalized in order of their count of letters other than a1.
template <class Int>
class BsDp {
public:
    BsDp(const Word& w, const BaumslagSolitar& p) : w_(w), p_(p) {
        check_presentation(p);
        check_word(w, p.m());
        n_ = static_cast<int>(w.size());
        run();
    }

    int size() const { return n_; }
    bool finite(int i, int j) const { return at(i, j).fin; }
    Int lambda(int i, int j) const { return at(i, j).lam; }
    Int mu(int i, int j) const { return at(i, j).mu; }
    const BsChoice& choice(int i, int j) const { return at(i, j).ch; }

    LambdaMu result() const {
        const Cell& c = at(1, n_);
        if (!c.fin) return {};
        return {BigInt(c.lam), Cost(BigInt(c.mu))};
    }

    // Operational sequence realizing the window (1,|W|) as a single bracket.
    std::vector<ElemOp> ops() const {
        if (!at(1, n_).fin) throw Error(ErrorCode::not_trivial_in_group, "word is not a power of a1");
        std::vector<DerivNode> tree;
        int root = derive(tree, 0, n_);
        return linearize(tree, root);
    }

private:
    struct Cell {
        bool fin = false;
        Int lam = 0, mu = 0;
        BsChoice ch;
    };

    const Cell& at(int i, int j) const {
        if (i < 1 || j < 0 || i - 1 + j > n_) throw Error(ErrorCode::window_out_of_range, "BS window");
        return cells_[index(i - 1, j)];
    }
    std::size_t index(int s, int j) const { return static_cast<std::size_t>(s) * static_cast<std::size_t>(n_ + 1) + static_cast<std::size_t>(j); }
    int abar(int s, int j) const { return bar_[static_cast<std::size_t>(s + j)] - bar_[static_cast<std::size_t>(s)]; }
    long long a1sum(int s, int j) const { return sum_[static_cast<std::size_t>(s + j)] - sum_[static_cast<std::size_t>(s)]; }

    void run() {
        cells_.assign(static_cast<std::size_t>(n_ + 1) * static_cast<std::size_t>(n_ + 1), Cell{});
        bar_.assign(static_cast<std::size_t>(n_ + 1), 0);
        sum_.assign(static_cast<std::size_t>(n_ + 1), 0);
        for (int t = 0; t < n_; ++t) {
            const Letter& x = w_[static_cast<std::size_t>(t)];
            bar_[static_cast<std::size_t>(t + 1)] = bar_[static_cast<std::size_t>(t)] + (x.gen != 1);
            sum_[static_cast<std::size_t>(t + 1)] = sum_[static_cast<std::size_t>(t)] + (x.gen == 1 ? x.sign : 0);
        }
        std::vector<std::pair<int, int>> order;
        for (int j = 0; j <= n_; ++j)
            for (int s = 0; s + j <= n_; ++s) order.push_back({s, j});
        std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
            return abar(a.first, a.second) < abar(b.first, b.second);
        });
        for (auto [s, j] : order) cells_[index(s, j)] = compute(s, j);
    }

    const Cell& get(int s, int j) const { return cells_[index(s, j)]; }

    Cell compute(int s, int j) const {
        Cell out;
        if (abar(s, j) == 0) {
            out.fin = true;
            out.lam = Int(a1sum(s, j));
            out.ch.kind = BsChoice::Kind::base;
            return out;
        }
        auto take = [&](const Int& lam, const Int& mu, const BsChoice& ch) {
            if (!out.fin || mu < out.mu) out.fin = true, out.lam = lam, out.mu = mu, out.ch = ch;
        };
        // pinch first so that it wins ties
        int u1 = 0;
        while (u1 < j && w_[static_cast<std::size_t>(s + u1)].gen == 1) ++u1;
        int u3 = 0;
        while (u3 < j && w_[static_cast<std::size_t>(s + j - 1 - u3)].gen == 1) ++u3;
        const Letter first = w_[static_cast<std::size_t>(s + u1)];
        const int lastpos = j - 1 - u3;
        if (lastpos > u1 && w_[static_cast<std::size_t>(s + lastpos)] == first.inv()) {
            const int is = s + u1 + 1, ij = lastpos - u1 - 1;
            const Cell& in = get(is, ij);
            const Int outer = Int(a1sum(s, u1) + a1sum(s + lastpos + 1, u3));
            if (in.fin) {
                BsChoice ch{BsChoice::Kind::pinch, 0, first.gen, first.sign, u1, u3};
                if (first.gen > 2) {
                    if (in.lam == 0) take(outer, in.mu, ch);
                } else {
                    const Int base = Int(first.sign > 0 ? p_.n1 : p_.n2);
                    const Int other = Int(first.sign > 0 ? p_.n2 : p_.n1);
                    if (in.lam % base == 0) {
                        Int q = in.lam / base;
                        take(outer + q * other, in.mu + (q < 0 ? Int(-q) : q), ch);
                    }
                }
            }
        }
        for (int c = 1; c < j; ++c) {
            if (abar(s, c) == 0 || abar(s + c, j - c) == 0) continue;
            const Cell& a = get(s, c);
            const Cell& b = get(s + c, j - c);
            if (!a.fin || !b.fin) continue;
            take(a.lam + b.lam, a.mu + b.mu, BsChoice{BsChoice::Kind::split, c});
        }
        return out;
    }

    // Bracket for vertices [s, s+j] of the word.
    int derive(std::vector<DerivNode>& tree, int s, int j) const {
        auto push = [&](ElemOp op, std::vector<int> kids) {
            tree.push_back({op, std::move(kids)});
            return static_cast<int>(tree.size()) - 1;
        };
        const Cell& c = get(s, j);
        switch (c.ch.kind) {
        case BsChoice::Kind::infinite: throw Error(ErrorCode::not_trivial_in_group, "window has no bracket");
        case BsChoice::Kind::base: {
            int v = push(ElemOp::add(s), {});
            for (int t = 0; t < j; ++t) v = push(ElemOp::unary(ElemOp::Kind::ext1r, s, s + t), {v});
            return v;
        }
        case BsChoice::Kind::split: {
            int a = derive(tree, s, c.ch.cut);
            int b = derive(tree, s + c.ch.cut, j - c.ch.cut);
            return push(ElemOp::merge(s, s + c.ch.cut, s + c.ch.cut, s + j), {a, b});
        }
        case BsChoice::Kind::pinch: break;
        }
        const int is = s + c.ch.u1 + 1, ij = j - c.ch.u1 - c.ch.u3 - 2;
        int v = ij == 0 ? push(ElemOp::add(is), {}) : derive(tree, is, ij);
        const Cell& in = get(is, ij);
        auto kind = c.ch.gen == 2 && in.lam != 0 ? ElemOp::Kind::ext2 : ElemOp::Kind::ext3;
        v = push(ElemOp::unary(kind, is, is + ij), {v});
        long long x = is - 1, y = is + ij + 1;
        for (int t = 0; t < c.ch.u1; ++t, --x) v = push(ElemOp::unary(ElemOp::Kind::ext1l, x, y), {v});
        for (int t = 0; t < c.ch.u3; ++t, ++y) v = push(ElemOp::unary(ElemOp::Kind::ext1r, x, y), {v});
        return v;
    }

    const Word& w_;
    BaumslagSolitar p_;
    int n_ = 0;
    std::vector<int> bar_;
    std::vector<long long> sum_;
    std::vector<Cell> cells_;
};

inline bool unit_bs(const BaumslagSolitar& p) {
    return (p.n1 == 1 || p.n1 == -1) && (p.n2 == 1 || p.n2 == -1);
}

// lambda stays bounded by |W| when |n1| = |n2| = 1, so machine integers suffice there.
inline LambdaMu lambda_mu(const Word& w, const BaumslagSolitar& p) {
    if (unit_bs(p)) return BsDp<long long>(w, p).result();
    return BsDp<BigInt>(w, p).result();
}

inline Cost mu3(const Word& w, const BaumslagSolitar& p) {
    LambdaMu r = lambda_mu(w, p);
    if (!r.lambda || *r.lambda != 0) return Cost::infinite();
    return r.mu3;
}

inline bool bounded_wp_bs(const Word& w, const Cost& n, const BaumslagSolitar& p) {
    Cost c = mu3(w, p);
    return c.is_finite() && c <= n;
}

inline bool precise_wp_bs(const Word& w, const Cost& n, const BaumslagSolitar& p) {
    Cost c = mu3(w, p);
    return c.is_finite() && c == n;
}

inline std::vector<ElemOp> certificate_bs(const Word& w, const BaumslagSolitar& p) {
    if (mu3(w, p).is_infinite()) throw Error(ErrorCode::not_trivial_in_group, "word is not trivial in the group");
    if (unit_bs(p)) return BsDp<long long>(w, p).ops();
    return BsDp<BigInt>(w, p).ops();
}

inline Diagram minimal_diagram_bs(const Word& w, const BaumslagSolitar& p) {
    return build_diagram(w, p, certificate_bs(w, p));
}

inline long long quadratic_face_bound(const Word& w, const BaumslagSolitar& p) {
    long long a = p.n1 < 0 ? -p.n1 : p.n1, b = p.n2 < 0 ? -p.n2 : p.n2;
    if (a != b) throw Error(ErrorCode::precondition_violated, "quadratic face bound needs |n1| = |n2|");
    long long n = static_cast<long long>(w.size());
    return n * n / (4 * a);
}

} // namespace vkd

#endif

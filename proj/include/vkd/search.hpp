#ifndef VKD_SEARCH_HPP
#define VKD_SEARCH_HPP

#include "brackets.hpp"

#include <array>
#include <queue>

namespace vkd {

struct SearchHit {
    Cost faces;
    std::vector<ElemOp> ops;
    long long peak = 0;         // max concurrent brackets of the witness
    bool within_bound = false;  // witness respects the requested SizeBound
    long long nodes = 0;
};

struct SearchOptions {
    long long node_budget = 10'000'000;
};

namespace detail {

// Uniform-cost closure over single pseudobrackets. A state is a bracket
// without its face counter; merging two finalized states costs the sum of
// their counters, so states settle in nondecreasing cost order as in
// Dijkstra/Knuth. The derivation of each state is kept to rebuild a witness.
class BracketClosure {
public:
    using Key = std::array<long long, 5>; // x, y, then flavor-specific data

    struct How {
        enum Kind { add, unary, merge } kind = add;
        ElemOp op;
        int a = -1, b = -1; // child state ids
    };

    BracketClosure(const Word& w, const Presentation& p, SearchOptions opt) : w_(w), p_(p), opt_(opt) {
        n_ = static_cast<long long>(w.size());
        bs_ = std::holds_alternative<BaumslagSolitar>(p);
        ends_at_.resize(static_cast<std::size_t>(n_ + 1));
        starts_at_.resize(static_cast<std::size_t>(n_ + 1));
    }

    // Runs until stop(key) holds for a popped state; returns its id or -1.
    template <class Stop>
    int run(Stop stop) {
        for (long long v = 0; v <= n_; ++v) offer({v, v, 0, 0, 0}, 0, How{How::add, ElemOp::add(v)});
        while (!pq_.empty()) {
            auto [c, id] = pq_.top();
            pq_.pop();
            if (done_[static_cast<std::size_t>(id)]) continue;
            if (c != cost_[static_cast<std::size_t>(id)]) continue;
            done_[static_cast<std::size_t>(id)] = true;
            if (++nodes_ > opt_.node_budget)
                throw Error(ErrorCode::budget_exceeded, "bracket search exceeded " + std::to_string(opt_.node_budget) + " nodes");
            const Key k = keys_[static_cast<std::size_t>(id)];
            if (stop(k)) return id;
            expand(id, k, c);
        }
        return -1;
    }

    const Key& key(int id) const { return keys_[static_cast<std::size_t>(id)]; }
    long long cost(int id) const { return cost_[static_cast<std::size_t>(id)]; }
    long long nodes() const { return nodes_; }

    std::vector<ElemOp> witness(int root) const {
        std::vector<DerivNode> tree;
        std::function<int(int)> emit = [&](int id) -> int {
            const How& h = how_[static_cast<std::size_t>(id)];
            DerivNode nd{h.op, {}};
            if (h.kind == How::unary) nd.kids = {emit(h.a)};
            if (h.kind == How::merge) nd.kids = {emit(h.a), emit(h.b)};
            tree.push_back(nd);
            return static_cast<int>(tree.size()) - 1;
        };
        int r = emit(root);
        return linearize(tree, r);
    }

private:
    Letter at(long long pos) const { return w_[static_cast<std::size_t>(pos - 1)]; }

    void offer(const Key& k, long long c, How h) {
        auto [it, fresh] = ids_.try_emplace(k, static_cast<int>(keys_.size()));
        int id = it->second;
        if (fresh) {
            keys_.push_back(k);
            cost_.push_back(c);
            how_.push_back(h);
            done_.push_back(false);
        } else {
            if (done_[static_cast<std::size_t>(id)] || c >= cost_[static_cast<std::size_t>(id)]) return;
            cost_[static_cast<std::size_t>(id)] = c;
            how_[static_cast<std::size_t>(id)] = h;
        }
        pq_.push({c, id});
    }

    void unary(int id, const Key& from, ElemOp::Kind kd, const Key& to, long long c) {
        offer(to, c, How{How::unary, ElemOp::unary(kd, from[0], from[1]), id});
    }

    void expand(int id, const Key& k, long long c) {
        if (bs_)
            expand_bs(id, k, c);
        else
            expand_g2(id, k, c);
        const long long x = k[0], y = k[1];
        if (x == y) return; // zero-length merges change nothing
        // as left part
        for (int o : starts_at_[static_cast<std::size_t>(y)]) merge(id, o);
        // as right part
        for (int o : ends_at_[static_cast<std::size_t>(x)]) merge(o, id);
        starts_at_[static_cast<std::size_t>(x)].push_back(id);
        ends_at_[static_cast<std::size_t>(y)].push_back(id);
    }

    void merge(int l, int r) {
        const Key& a = keys_[static_cast<std::size_t>(l)];
        const Key& b = keys_[static_cast<std::size_t>(r)];
        Key out{a[0], b[1], 0, 0, 0};
        if (bs_) {
            out[2] = a[2] + b[2];
        } else {
            if (a[2] != 0 && b[2] != 0) return;
            for (int q = 2; q < 5; ++q) out[q] = a[q] + b[q];
        }
        offer(out, cost_[static_cast<std::size_t>(l)] + cost_[static_cast<std::size_t>(r)],
              How{How::merge, ElemOp::merge(a[0], a[1], b[0], b[1]), l, r});
    }

    void expand_g2(int id, const Key& k, long long c) {
        const auto& P = std::get<CyclicProducts>(p_);
        const long long x = k[0], y = k[1], g = k[2], len = k[3], e = k[4];
        using K = ElemOp::Kind;
        if (g == 0) {
            if (x >= 1 && y < n_ && at(x) == at(y + 1).inv()) unary(id, k, K::ext3, {x - 1, y + 1, 0, 0, 0}, c);
            for (int j = 1; j <= P.m(); ++j) {
                const ExponentSet& E = P.sets[static_cast<std::size_t>(j - 1)];
                if (E.kind == ExponentSet::Kind::zero) continue;
                for (long long t = E.n; t <= n_; t += E.n) {
                    if (!E.admits(t)) break;
                    offer({x, y, j, t, 0}, c, How{How::unary, ElemOp::turn(x, y, j, t == E.n ? 0 : t), id});
                }
            }
            return;
        }
        auto side = [&](long long pos, bool left) {
            if (pos < 1 || pos > n_) return;
            Letter l = at(pos);
            if (l.gen != g || l.sign * e < 0) return;
            long long ae = e < 0 ? -e : e;
            long long nx = left ? x - 1 : x, ny = left ? y : y + 1;
            if (ae <= len - 2) unary(id, k, left ? K::ext1l : K::ext1r, {nx, ny, g, len, e + l.sign}, c);
            if (ae == len - 1) unary(id, k, left ? K::ext2l : K::ext2r, {nx, ny, 0, 0, 0}, c + 1);
        };
        side(x, true);
        side(y + 1, false);
    }

    void expand_bs(int id, const Key& k, long long c) {
        const auto& P = std::get<BaumslagSolitar>(p_);
        const long long x = k[0], y = k[1], b3 = k[2];
        using K = ElemOp::Kind;
        if (x >= 1 && at(x).gen == 1) unary(id, k, K::ext1l, {x - 1, y, b3 + at(x).sign, 0, 0}, c);
        if (y < n_ && at(y + 1).gen == 1) unary(id, k, K::ext1r, {x, y + 1, b3 + at(y + 1).sign, 0, 0}, c);
        if (x < 1 || y >= n_) return;
        Letter e = at(x);
        if (e != at(y + 1).inv() || e.gen == 1) return;
        if (e.gen > 2 || b3 == 0) {
            if (b3 == 0) unary(id, k, K::ext3, {x - 1, y + 1, 0, 0, 0}, c);
            return;
        }
        long long base = e.sign > 0 ? P.n1 : P.n2, other = e.sign > 0 ? P.n2 : P.n1;
        if (b3 % base != 0) return;
        long long q = b3 / base, nb;
        if (__builtin_mul_overflow(q, other, &nb))
            throw Error(ErrorCode::budget_exceeded, "bracket exponent overflow in search");
        unary(id, k, K::ext2, {x - 1, y + 1, nb, 0, 0}, c + (q < 0 ? -q : q));
    }

    const Word& w_;
    const Presentation& p_;
    SearchOptions opt_;
    long long n_ = 0;
    bool bs_ = false;
    long long nodes_ = 0;
    std::map<Key, int> ids_;
    std::vector<Key> keys_;
    std::vector<long long> cost_;
    std::vector<How> how_;
    std::vector<char> done_;
    std::vector<std::vector<int>> ends_at_, starts_at_;
    using Entry = std::pair<long long, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq_;
};

} // namespace detail

// Minimal faces over accepted operational sequences; nullopt when none exists.
inline std::optional<SearchHit> search_min_faces(const Word& w, const Presentation& p, const SizeBound& bound,
                                                 SearchOptions opt = {}) {
    check_word(w, alphabet_size(p));
    const long long n = static_cast<long long>(w.size());
    detail::BracketClosure cl(w, p, opt);
    int id = cl.run([n](const detail::BracketClosure::Key& k) {
        return k[0] == 0 && k[1] == n && k[2] == 0 && k[3] == 0 && k[4] == 0;
    });
    if (id < 0) return std::nullopt;
    SearchHit hit;
    hit.faces = Cost(cl.cost(id));
    hit.ops = cl.witness(id);
    hit.nodes = cl.nodes();
    FinalStats st = verify_sequence(w, p, hit.ops);
    if (!st.accepted || st.faces != hit.faces)
        throw Error(ErrorCode::sequence_rejected, "internal: search witness failed verification");
    hit.peak = st.max_concurrent;
    hit.within_bound = static_cast<long long>(hit.ops.size()) <= bound.k1 && hit.peak <= bound.k2;
    return hit;
}

struct SearchLambdaMu {
    BigInt lambda = 0;
    Cost mu3;
};

// Cheapest full-arc BS bracket: its b(3) is lambda, its b(4) the face count.
inline std::optional<SearchLambdaMu> search_lambda_mu(const Word& w, const BaumslagSolitar& p, SearchOptions opt = {}) {
    Presentation pres = p;
    check_word(w, p.m());
    const long long n = static_cast<long long>(w.size());
    detail::BracketClosure cl(w, pres, opt);
    int id = cl.run([n](const detail::BracketClosure::Key& k) { return k[0] == 0 && k[1] == n; });
    if (id < 0) return std::nullopt;
    return SearchLambdaMu{BigInt(cl.key(id)[2]), Cost(cl.cost(id))};
}

} // namespace vkd

#endif

#ifndef VKD_DP_CYCLIC_HPP
#define VKD_DP_CYCLIC_HPP

#include "diagram.hpp"

#include <cstdint>
#include <limits>

namespace vkd {

// Free product normal form: a stack of syllables (generator, exponent), with
// exponents reduced modulo the generator's order.
class SyllableStack {
public:
    explicit SyllableStack(const CyclicProducts& p) : p_(&p) {}

    void push(int gen, long long e) {
        e = reduce(gen, e);
        if (e == 0) return;
        if (!st_.empty() && st_.back().first == gen) {
            long long x = reduce(gen, st_.back().second + e);
            if (x == 0)
                st_.pop_back();
            else
                st_.back().second = x;
        } else {
            st_.push_back({gen, e});
        }
    }
    void push(Letter x) { push(x.gen, x.sign); }

    long long reduce(int gen, long long e) const {
        long long n = p_->sets[static_cast<std::size_t>(gen - 1)].order();
        return n == 0 ? e : ((e % n) + n) % n;
    }

    std::size_t size() const { return st_.size(); }
    const std::pair<int, long long>& top() const { return st_.back(); }

private:
    const CyclicProducts* p_;
    std::vector<std::pair<int, long long>> st_;
};

inline bool is_trivial_cyclic(const Word& w, const CyclicProducts& p) {
    SyllableStack st(p);
    for (const Letter& x : w) st.push(x);
    return st.size() == 0;
}

inline bool has_property_E(const Word& w) {
    if (w.empty()) return false;
    return w.front() != w.back().inv() && w.front() != w.back();
}

// ---- cost policies ----

struct FaceCountCost {
    using value_type = std::uint32_t;
    static constexpr value_type inf = std::numeric_limits<value_type>::max();

    value_type zero() const { return 0; }
    value_type infinite() const { return inf; }
    bool is_inf(value_type v) const { return v == inf; }
    value_type add(value_type a, value_type b) const { return (a == inf || b == inf) ? inf : a + b; }
    bool less(value_type a, value_type b) const { return a < b; }
    value_type faces(int, long long, long long count) const { return static_cast<value_type>(count); }
};

// Lexicographic tuples of face statistics; an empty vector is infinity.
struct LexCost {
    TauSpec tau;
    using value_type = std::vector<long long>;

    value_type zero() const { return value_type(tau.size(), 0); }
    value_type infinite() const { return {}; }
    bool is_inf(const value_type& v) const { return v.empty(); }
    value_type add(const value_type& a, const value_type& b) const {
        if (a.empty() || b.empty()) return {};
        value_type out(a.size());
        for (std::size_t t = 0; t < a.size(); ++t) out[t] = a[t] + b[t];
        return out;
    }
    bool less(const value_type& a, const value_type& b) const {
        if (b.empty()) return !a.empty();
        if (a.empty()) return false;
        return a < b;
    }
    value_type faces(int gen, long long len, long long count) const {
        value_type out(tau.size());
        for (std::size_t t = 0; t < tau.size(); ++t) out[t] = count * tau[t].value(gen, len, len);
        return out;
    }
};

// W[i,j,k,l] = W(i,j) a_k^l, 1-based i.
struct ParamKey {
    int i = 1;
    int j = 0;
    int k = 1;
    long long l = 0;
    friend bool operator==(const ParamKey&, const ParamKey&) = default;
};

struct SplitChoice {
    enum class Kind { infinite, empty, leaf, split, peel, rotate };
    Kind kind = Kind::infinite;
    long long cut = 0;  // split: length of U1
    ParamKey u1, u2;    // split: U = U1 U2
    ParamKey inner;     // peel: U = b inner b^-1; rotate: U = b V b with inner = V b^2
};

template <class Policy = FaceCountCost>
class CyclicDp {
public:
    using value_type = typename Policy::value_type;

    CyclicDp(Word w, CyclicProducts p, Policy pol = {})
        : w_(std::move(w)), p_(std::move(p)), pol_(std::move(pol)), N_(static_cast<int>(w_.size())), m_(p_.m()) {
        check_word(w_, m_);
        init();
        run();
    }

    const Word& word() const { return w_; }
    const CyclicProducts& presentation() const { return p_; }
    const Policy& policy() const { return pol_; }
    std::size_t entries() const { return table_.size(); }

    value_type total() const { return N_ == 0 ? pol_.zero() : get(0, N_, 1, 0); }

    value_type cost(const ParamKey& key) const {
        check_key(key);
        return get(key.i - 1, key.j, key.k, key.l);
    }

    bool trivial(const ParamKey& key) const {
        check_key(key);
        return triv(key.i - 1, key.j, key.k, key.l);
    }

    // Backpointer of an entry, recomputed with the same tie-breaking as the fill.
    SplitChoice choice(const ParamKey& key) const {
        check_key(key);
        return decide(key.i - 1, key.j, key.k, key.l, nullptr);
    }

    Diagram diagram() const {
        if (pol_.is_inf(total())) throw Error(ErrorCode::not_trivial_in_group, "word is not trivial in the group");
        DiagramBuilder b{Presentation{p_}};
        std::vector<int> bd = N_ == 0 ? std::vector<int>{} : build(b, 0, N_, 1, 0);
        return b.finish(std::move(bd));
    }

private:
    Word w_;
    CyclicProducts p_;
    Policy pol_;
    int N_, m_;
    std::vector<std::vector<int>> pre_;       // pre_[k][t]: letters of a_k in w[0,t)
    std::vector<std::uint8_t> nf_kind_;       // 0 empty, 1 one syllable, 2 longer
    std::vector<int> nf_gen_;
    std::vector<long long> nf_exp_;
    std::vector<std::vector<int>> triv_pre_;  // lengths c >= 1 with W(s,c) trivial
    std::vector<std::size_t> zero_off_, k_off_;
    std::vector<value_type> table_;

    std::size_t win(int s, int j) const { return static_cast<std::size_t>(s) * static_cast<std::size_t>(N_ + 1) + static_cast<std::size_t>(j); }
    long long lmax(int s, int j, int k) const {
        const auto& pk = pre_[static_cast<std::size_t>(k)];
        return pk[static_cast<std::size_t>(N_)] - (pk[static_cast<std::size_t>(s + j)] - pk[static_cast<std::size_t>(s)]);
    }

    void check_key(const ParamKey& key) const {
        bool ok = key.k >= 1 && key.k <= m_ && key.j >= 0 && key.j + (key.l < 0 ? -key.l : key.l) >= 1;
        if (ok && key.j > 0) ok = key.i >= 1 && key.i + key.j - 1 <= N_;
        if (ok) {
            int s = key.j > 0 ? key.i - 1 : 0;
            ok = (key.l < 0 ? -key.l : key.l) <= lmax(s, key.j, key.k);
        }
        if (!ok) throw Error(ErrorCode::window_out_of_range, "parameterized word out of range");
    }

    long long red(int k, long long e) const {
        long long n = p_.sets[static_cast<std::size_t>(k - 1)].order();
        return n == 0 ? e : ((e % n) + n) % n;
    }

    void init() {
        const std::size_t W = static_cast<std::size_t>(N_ + 1);
        pre_.assign(static_cast<std::size_t>(m_ + 1), std::vector<int>(W, 0));
        for (int t = 0; t < N_; ++t)
            for (int k = 1; k <= m_; ++k)
                pre_[static_cast<std::size_t>(k)][static_cast<std::size_t>(t + 1)] =
                    pre_[static_cast<std::size_t>(k)][static_cast<std::size_t>(t)] + (w_[static_cast<std::size_t>(t)].gen == k);

        nf_kind_.assign(W * W, 0);
        nf_gen_.assign(W * W, 0);
        nf_exp_.assign(W * W, 0);
        triv_pre_.assign(static_cast<std::size_t>(N_), {});
        for (int s = 0; s < N_; ++s) {
            SyllableStack st(p_);
            for (int j = 1; s + j <= N_; ++j) {
                st.push(w_[static_cast<std::size_t>(s + j - 1)]);
                std::size_t x = win(s, j);
                if (st.size() == 0) {
                    nf_kind_[x] = 0;
                    triv_pre_[static_cast<std::size_t>(s)].push_back(j);
                } else if (st.size() == 1) {
                    nf_kind_[x] = 1;
                    nf_gen_[x] = st.top().first;
                    nf_exp_[x] = st.top().second;
                } else {
                    nf_kind_[x] = 2;
                }
            }
        }

        zero_off_.assign(W * W, 0);
        k_off_.assign(W * W * static_cast<std::size_t>(m_), 0);
        std::size_t total = 0;
        for (int s = 0; s < N_; ++s)
            for (int j = 1; s + j <= N_; ++j) {
                zero_off_[win(s, j)] = total++;
                for (int k = 1; k <= m_; ++k) {
                    k_off_[win(s, j) * static_cast<std::size_t>(m_) + static_cast<std::size_t>(k - 1)] = total;
                    total += 2 * static_cast<std::size_t>(lmax(s, j, k));
                }
            }
        table_.assign(total, pol_.infinite());
    }

    std::size_t cell(int s, int j, int k, long long l) const {
        if (l == 0) return zero_off_[win(s, j)];
        std::size_t base = k_off_[win(s, j) * static_cast<std::size_t>(m_) + static_cast<std::size_t>(k - 1)];
        return base + 2 * static_cast<std::size_t>((l < 0 ? -l : l) - 1) + (l < 0 ? 1 : 0);
    }

    value_type bare(int k, long long l) const {
        if (l == 0) return pol_.zero();
        const ExponentSet& e = p_.sets[static_cast<std::size_t>(k - 1)];
        long long a = l < 0 ? -l : l;
        if (e.kind == ExponentSet::Kind::zero || a % e.n != 0) return pol_.infinite();
        if (e.kind == ExponentSet::Kind::multiples) return pol_.faces(k, a, 1);
        return pol_.faces(k, e.n, a / e.n);
    }

    value_type get(int s, int j, int k, long long l) const {
        if (j == 0) return bare(k, l);
        return table_[cell(s, j, k, l)];
    }

    bool triv(int s, int j, int k, long long l) const {
        if (j == 0) return red(k, l) == 0;
        std::size_t x = win(s, j);
        switch (nf_kind_[x]) {
        case 0: return red(k, l) == 0;
        case 1: return nf_gen_[x] == k && red(k, nf_exp_[x] + l) == 0;
        default: return false;
        }
    }

    void run() {
        for (int j = 1; j <= N_; ++j) {
            for (long long a = 0; a <= N_ - j; ++a) {
                for (int s = 0; s + j <= N_; ++s) {
                    if (a == 0) {
                        table_[cell(s, j, 1, 0)] = compute(s, j, 1, 0);
                        continue;
                    }
                    for (int k = 1; k <= m_; ++k) {
                        if (a > lmax(s, j, k)) continue;
                        table_[cell(s, j, k, a)] = compute(s, j, k, a);
                        table_[cell(s, j, k, -a)] = compute(s, j, k, -a);
                    }
                }
            }
        }
    }

    value_type compute(int s, int j, int k, long long l) const {
        value_type v;
        decide(s, j, k, l, &v);
        return v;
    }

    // Case analysis for W(s,j) a_k^l with j >= 1. Writes the cost to *out when
    // given; returns the backpointer.
    SplitChoice decide(int s, int j, int k, long long l, value_type* out) const {
        SplitChoice ch;
        auto set = [&](value_type v) {
            if (out) *out = std::move(v);
        };
        if (j == 0) {
            value_type v = bare(k, l);
            ch.kind = pol_.is_inf(v) ? SplitChoice::Kind::infinite : (l == 0 ? SplitChoice::Kind::empty : SplitChoice::Kind::leaf);
            set(std::move(v));
            return ch;
        }
        if (!triv(s, j, k, l)) {
            set(pol_.infinite());
            return ch;
        }
        const Letter first = w_[static_cast<std::size_t>(s)];
        if (j == 1 && l == 0) {
            value_type v = bare(first.gen, first.sign);
            ch.kind = pol_.is_inf(v) ? SplitChoice::Kind::infinite : SplitChoice::Kind::leaf;
            set(std::move(v));
            return ch;
        }
        const int sg = l > 0 ? 1 : -1;
        const Letter last = l != 0 ? Letter{k, sg} : w_[static_cast<std::size_t>(s + j - 1)];
        const int i1 = s + 1;
        if (first == last.inv()) {
            ch.kind = SplitChoice::Kind::peel;
            if (l == 0) {
                ch.inner = ParamKey{i1 + 1, j - 2, k, 0};
                if (j == 2) {
                    set(pol_.zero());
                    return ch;
                }
                set(get(s + 1, j - 2, k, 0));
            } else {
                ch.inner = ParamKey{i1 + 1, j - 1, k, l - sg};
                set(get(s + 1, j - 1, k, l - sg));
            }
            return ch;
        }
        if (first == last) {
            ch.kind = SplitChoice::Kind::rotate;
            if (l == 0) {
                ch.inner = ParamKey{i1 + 1, j - 1, first.gen, first.sign};
                set(get(s + 1, j - 1, first.gen, first.sign));
            } else {
                ch.inner = ParamKey{i1 + 1, j - 1, k, l + sg};
                set(get(s + 1, j - 1, k, l + sg));
            }
            return ch;
        }
        // property (E): minimum over all factorizations U1 U2
        value_type best = pol_.infinite();
        ch.kind = SplitChoice::Kind::infinite;
        for (int c : triv_pre_[static_cast<std::size_t>(s)]) {
            if (c > j || (c == j && l == 0)) break;
            value_type v = pol_.add(get(s, c, k, 0), get(s + c, j - c, k, l));
            if (pol_.less(v, best)) {
                best = std::move(v);
                ch.kind = SplitChoice::Kind::split;
                ch.cut = c;
                ch.u1 = ParamKey{i1, c, k, 0};
                ch.u2 = ParamKey{i1 + c, j - c, k, l};
            }
        }
        const long long a = l < 0 ? -l : l;
        for (long long a1 = 1; a1 < a; ++a1) {
            long long l1 = sg * a1;
            if (!triv(s, j, k, l1)) continue;
            value_type v = pol_.add(get(s, j, k, l1), bare(k, l - l1));
            if (pol_.less(v, best)) {
                best = std::move(v);
                ch.kind = SplitChoice::Kind::split;
                ch.cut = j + a1;
                ch.u1 = ParamKey{i1, j, k, l1};
                ch.u2 = ParamKey{1, 0, k, l - l1};
            }
        }
        set(std::move(best));
        return ch;
    }

    std::vector<int> bare_diagram(DiagramBuilder& b, int k, long long l) const {
        std::vector<int> out;
        if (l == 0) return out;
        const ExponentSet& e = p_.sets[static_cast<std::size_t>(k - 1)];
        Letter x{k, l > 0 ? 1 : -1};
        long long a = l < 0 ? -l : l;
        if (e.kind == ExponentSet::Kind::multiples) return polygon(b, x, a);
        for (long long t = 0; t < a / e.n; ++t) {
            std::vector<int> piece = polygon(b, x, e.n);
            out.insert(out.end(), piece.begin(), piece.end());
        }
        return out;
    }

    std::vector<int> build(DiagramBuilder& b, int s, int j, int k, long long l) const {
        if (j == 0) return bare_diagram(b, k, l);
        SplitChoice ch = decide(s, j, k, l, nullptr);
        switch (ch.kind) {
        case SplitChoice::Kind::infinite:
            throw Error(ErrorCode::not_trivial_in_group, "subword has no diagram");
        case SplitChoice::Kind::empty: return {};
        case SplitChoice::Kind::leaf: {
            const Letter x = w_[static_cast<std::size_t>(s)];
            return bare_diagram(b, x.gen, x.sign);
        }
        case SplitChoice::Kind::peel: {
            std::vector<int> in = ch.inner.j + (ch.inner.l < 0 ? -ch.inner.l : ch.inner.l) == 0
                                      ? std::vector<int>{}
                                      : build(b, ch.inner.i - 1, ch.inner.j, ch.inner.k, ch.inner.l);
            int f = b.edge(w_[static_cast<std::size_t>(s)]);
            std::vector<int> out{f};
            out.insert(out.end(), in.begin(), in.end());
            out.push_back(b.inv(f));
            return out;
        }
        case SplitChoice::Kind::rotate: {
            std::vector<int> in = build(b, ch.inner.i - 1, ch.inner.j, ch.inner.k, ch.inner.l);
            std::vector<int> out{in.back()};
            out.insert(out.end(), in.begin(), in.end() - 2);
            out.push_back(in[in.size() - 2]);
            return out;
        }
        case SplitChoice::Kind::split: {
            std::vector<int> out = build(b, ch.u1.i - 1, ch.u1.j, ch.u1.k, ch.u1.l);
            std::vector<int> rest = build(b, ch.u2.j == 0 ? 0 : ch.u2.i - 1, ch.u2.j, ch.u2.k, ch.u2.l);
            out.insert(out.end(), rest.begin(), rest.end());
            return out;
        }
        }
        return {};
    }
};

// ---- public operations ----

inline Cost to_cost(std::uint32_t v) { return v == FaceCountCost::inf ? Cost::infinite() : Cost(static_cast<long long>(v)); }

inline Cost mu2(const Word& w, const CyclicProducts& p) { return to_cost(CyclicDp<>(w, p).total()); }

inline bool bounded_wp(const Word& w, const Cost& n, const CyclicProducts& p) {
    Cost c = mu2(w, p);
    return c.is_finite() && c <= n;
}

inline bool precise_wp(const Word& w, const Cost& n, const CyclicProducts& p) {
    Cost c = mu2(w, p);
    return c.is_finite() && c == n;
}

inline Cost width(const Word& w, int m) { return mu2(w, uniform_cyclic(m, ExponentSet::multiples(1))); }

inline Cost spelling_length(const Word& w, int m) { return mu2(w, uniform_cyclic(m, ExponentSet::exactly(1))); }

inline Diagram minimal_diagram_cyclic(const Word& w, const CyclicProducts& p) { return CyclicDp<>(w, p).diagram(); }

inline std::pair<std::vector<long long>, Diagram> mu2_lex(const Word& w, const CyclicProducts& p, const TauSpec& tau) {
    if (tau.empty() || tau[0].kind != Selector::Kind::face_count || tau[0].sign != 1)
        throw Error(ErrorCode::precondition_violated, "tau must start with faces");
    CyclicDp<LexCost> dp(w, p, LexCost{tau});
    return {dp.total(), dp.diagram()};
}

} // namespace vkd

#endif

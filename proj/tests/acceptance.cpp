// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace vkd;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

const std::vector<std::string> ab = {"a", "b"};
const std::vector<std::string> a12 = {"a1", "a2"};

struct G2Family {
    std::string name;
    CyclicProducts p;
};

std::vector<G2Family> g2_families() {
    return {{"trivial", uniform_cyclic(2, ExponentSet::exactly(1))},
            {"exactly2", uniform_cyclic(2, ExponentSet::exactly(2))},
            {"multiples2", uniform_cyclic(2, ExponentSet::multiples(2))}};
}

struct BsFamily {
    std::string name;
    BaumslagSolitar p;
};

std::vector<BsFamily> bs_families() { return {{"BS(1,2)", baumslag_solitar(1, 2)}, {"BS(1,1)", baumslag_solitar(1, 1)}}; }

// Words solved along the way, rechecked for diagram soundness.
std::vector<std::pair<Word, CyclicProducts>> g2_corpus;
std::vector<std::pair<Word, BaumslagSolitar>> bs_corpus;

Outcome criterion1() {
    Outcome out;
    auto t0 = Clock::now();
    std::ostringstream msg;
    for (const auto& fam : g2_families()) {
        auto dist = oracle::conjugate_distances(fam.p, 10);
        long long mismatches = 0, finite = 0;
        for (const auto& k : oracle::reduced_words(2, 8)) {
            Word w = oracle::unkey(k);
            Cost c = mu2(w, fam.p);
            auto it = dist.find(k);
            Cost o = it == dist.end() ? Cost::infinite() : Cost(it->second);
            if (c != o) {
                if (mismatches == 0) msg << " first mismatch " << fam.name << " " << k << " dp=" << c << " oracle=" << o << ";";
                ++mismatches;
            }
            if (c.is_finite()) {
                ++finite;
                g2_corpus.emplace_back(w, fam.p);
            }
        }
        if (mismatches) out.ok = false;
        msg << " " << fam.name << ": " << finite << " finite, " << mismatches << " mismatches;";
    }
    double s = seconds_since(t0);
    if (s >= 600) out.ok = false;
    msg << " " << s << " s";
    out.detail = "mu2 vs conjugate enumeration, words <= 8:" + msg.str();
    return out;
}

template <class P>
bool search_case(const Word& w, const P& p, Cost expected, std::ostringstream& msg, long long& worst_slack) {
    auto hit = search_min_faces(w, Presentation{p}, default_size_bound(w, Presentation{p}));
    long long cap = log_bound(static_cast<long long>(w.size())) + 1;
    if (!hit || hit->faces != expected || hit->peak > cap) {
        msg << " mismatch on " << format_word(w, generator_names(Presentation{p})) << ";";
        return false;
    }
    worst_slack = std::min(worst_slack, cap - hit->peak);
    FinalStats st = verify_sequence(w, Presentation{p}, hit->ops);
    Diagram d = build_diagram(w, Presentation{p}, hit->ops);
    if (!st.accepted || st.faces != expected || !validate(d, Presentation{p}).empty() || boundary_word(d) != w ||
        Cost(d.face_count()) != expected) {
        msg << " bad certificate on " << format_word(w, generator_names(Presentation{p})) << ";";
        return false;
    }
    return true;
}

Outcome criterion2() {
    Outcome out;
    std::ostringstream msg;
    std::mt19937_64 rng(2);
    long long slack = 1 << 30;
    for (const auto& fam : g2_families()) {
        int bad = 0;
        for (int t = 0; t < 200; ++t) {
            Word w = oracle::random_trivial_word(fam.p, rng, 12);
            g2_corpus.emplace_back(w, fam.p);
            bad += !search_case(w, fam.p, mu2(w, fam.p), msg, slack);
        }
        msg << " " << fam.name << " " << bad << " failures;";
        out.ok = out.ok && bad == 0;
    }
    for (const auto& fam : bs_families()) {
        int bad = 0;
        for (int t = 0; t < 200; ++t) {
            Word w = oracle::random_trivial_word(fam.p, rng, 12);
            bs_corpus.emplace_back(w, fam.p);
            bad += !search_case(w, fam.p, mu3(w, fam.p), msg, slack);
        }
        msg << " " << fam.name << " " << bad << " failures;";
        out.ok = out.ok && bad == 0;
    }
    msg << " min peak slack " << slack;
    out.detail = "bracket search equals the DP on 200 words per family:" + msg.str();
    return out;
}

Outcome criterion3() {
    Outcome out;
    auto p = uniform_cyclic(2, ExponentSet::exactly(1));
    Word comm = parse_word("a b A B", ab);
    out.ok = mu2(comm, p) == Cost(2) && width(comm, 2) == Cost(2);
    for (long long k = 1; k <= 20; ++k) {
        Word w = power(1, k);
        out.ok = out.ok && width(w, 2) == Cost(1) && spelling_length(w, 2) == Cost(k);
    }
    out.detail = "mu2(aba^-1b^-1) = " + mu2(comm, p).str() + ", width = " + width(comm, 2).str() +
                 ", width(a^k) = 1 and spelling_length(a^k) = k for k <= 20";
    return out;
}

Outcome criterion4() {
    Outcome out;
    std::ostringstream msg;
    auto bs12 = baumslag_solitar(1, 2);
    Cost m1 = mu3(parse_word("a2 a1 A2 A1 A1", a12), bs12);
    Cost m3 = mu3(parse_word("a2 a2 a1 A2 A2 a1^-4", a12), bs12);
    out.ok = m1 == Cost(1) && m3 == Cost(3);
    msg << "mu3 = " << m1 << " and " << m3 << ";";

    std::mt19937_64 rng(4);
    int additive_bad = 0;
    for (int t = 0; t < 1000; ++t) {
        auto [u, lu] = oracle::random_a1_power(bs12, rng, 12);
        auto [v, lv] = oracle::random_a1_power(bs12, rng, 12);
        auto ru = lambda_mu(u, bs12), rv = lambda_mu(v, bs12), ruv = lambda_mu(concat(u, v), bs12);
        bool good = ru.lambda && rv.lambda && ruv.lambda && *ru.lambda == lu && *rv.lambda == lv && *ruv.lambda == lu + lv;
        additive_bad += !good;
    }
    out.ok = out.ok && additive_bad == 0;
    msg << " lambda additivity failures " << additive_bad << "/1000;";

    // BS(1,1) corpus: every reduced word of length <= 10 with zero exponent sums, plus the random words above.
    auto bs11 = baumslag_solitar(1, 1);
    long long checked = 0, over = 0;
    auto check = [&](const Word& w) {
        ++checked;
        Cost c = mu3(w, bs11);
        if (!c.is_finite() || !(c <= Cost(quadratic_face_bound(w, bs11)))) ++over;
    };
    for (const auto& k : oracle::reduced_words(2, 10)) {
        Word w = oracle::unkey(k);
        if (w.empty() || exponent_sum(w, 1) != 0 || exponent_sum(w, 2) != 0) continue;
        check(w);
        if (w.size() <= 8) bs_corpus.emplace_back(w, bs11);
    }
    for (const auto& [w, p] : bs_corpus)
        if (p.n1 == 1 && p.n2 == 1) check(w);
    out.ok = out.ok && over == 0;
    msg << " quadratic bound violations " << over << "/" << checked << " BS(1,1) words";
    out.detail = msg.str();
    return out;
}

Outcome criterion5() {
    Outcome out;
    long long bad = 0, g2 = 0, bs = 0;
    std::ostringstream msg;
    for (const auto& [w, p] : g2_corpus) {
        Diagram d = minimal_diagram_cyclic(w, p);
        ++g2;
        if (!validate(d, p).empty() || boundary_word(d) != w || Cost(d.face_count()) != mu2(w, p) || !check_property_A(d)) {
            if (bad == 0) msg << " first failure " << format_word(w, ab) << ";";
            ++bad;
        }
    }
    for (const auto& [w, p] : bs_corpus) {
        Diagram d = minimal_diagram_bs(w, p);
        ++bs;
        bool good = validate(d, p).empty() && boundary_word(d) == w && Cost(d.face_count()) == mu3(w, p) && check_reduced(d);
        FinalStats st = verify_sequence(w, p, certificate_bs(w, p));
        good = good && st.accepted && st.faces == mu3(w, p);
        for (const auto& band : a2_bands(d)) good = good && band_labels_ok(d, band);
        if (!good) {
            if (bad == 0) msg << " first failure " << format_word(w, a12) << ";";
            ++bad;
        }
    }
    out.ok = bad == 0;
    out.detail = "diagrams for " + std::to_string(g2) + " G2 and " + std::to_string(bs) + " BS words, " + std::to_string(bad) +
                 " violations;" + msg.str();
    return out;
}

// Number of type 2 moves, or -1 if the replay does not end at the start point.
long long replay(const LatticePath& c) {
    LatticePath cur = c;
    long long t2 = 0;
    for (const auto& mv : homotopy_sequence(c)) {
        cur = apply_eh(cur, mv);
        t2 += mv.kind == EhMove::Kind::type2;
    }
    return cur.steps.empty() && cur.start == c.start ? t2 : -1;
}

Outcome criterion6() {
    Outcome out;
    long long paths = 0, bad = 0, simple = 0;
    std::string first;
    auto check = [&](const LatticePath& c) {
        ++paths;
        long long w = winding_area(c);
        bool good = m2(c, M2Engine::dp) == Cost(w) && replay(c) == w;
        if (oracle::is_simple(c)) {
            ++simple;
            good = good && shoelace_simple(c) == w;
        }
        if (!good) {
            if (bad == 0) first = format_path(c);
            ++bad;
        }
    };
    for (int len = 0; len <= 12; len += 2) oracle::for_each_closed_path(len, check);
    std::mt19937_64 rng(6);
    for (int t = 0; t < 500; ++t) check(oracle::random_closed_path(rng, 40));
    out.ok = bad == 0;
    out.detail = std::to_string(paths) + " closed paths (" + std::to_string(simple) + " simple), " + std::to_string(bad) +
                 " failures" + (first.empty() ? "" : "; first " + first);
    return out;
}

Outcome criterion7() {
    Outcome out;
    PolyCurve tri{{{0, 0}, {3, 0}, {0, 3}}};
    const Rational exact(9, 2);
    std::ostringstream msg;
    bool within = true, reached_zero = false;
    Rational prev_err = -1;
    bool nonincreasing = true;
    for (long long M : {1, 2, 4, 8, 16}) {
        Rational a = approx_area(tri, M);
        Rational err = a > exact ? a - exact : exact - a;
        within = within && err <= Rational(2 * t_length(tri, 1), M);
        if (prev_err >= 0 && err > prev_err) nonincreasing = false;
        prev_err = err;
        reached_zero = reached_zero || err == 0;
        msg << " M=" << M << " err=" << err;
    }
    out.ok = within && nonincreasing && reached_zero;
    msg << "; bound " << (within ? "holds" : "violated") << ", errors " << (nonincreasing ? "nonincreasing" : "increase")
        << ", zero error " << (reached_zero ? "reached" : "not reached by M=16");
    out.detail = "triangle approximation:" + msg.str();
    return out;
}

Outcome criterion8() {
    Outcome out;
    PrimeCurve pc = gen_prime_curve(5);
    // primes by trial division, then the closed form
    Rational expected = 0;
    for (long long q = 2; q <= 5; ++q) {
        bool prime = true;
        for (long long d = 2; d * d <= q; ++d) prime = prime && q % d != 0;
        if (prime) expected += Rational(1, q) + Rational(q - 2, 2);
    }
    long long T = t_length(pc.curve, 1);
    AreaResult r = area_with_denominator(pc.curve, 30, 2);
    out.ok = T == 23 && r.area == expected && expected == Rational(91, 30);
    std::ostringstream msg;
    msg << "|c|_T = " << T << ", area = " << r.area << " with M = " << r.M << ", closed form " << expected;
    out.detail = msg.str();
    return out;
}

Outcome criterion9() {
    Outcome out;
    Rational tri = tri_hex_area({{0, 0}, {1, 0}, {0, 1}}, Tessellation::triangular);
    Rational hex = tri_hex_area({{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}, Tessellation::hexagonal);
    Rational rho = tri_hex_area({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, Tessellation::triangular);
    out.ok = tri == 1 && hex == 1 && rho == 2;
    std::ostringstream msg;
    msg << "triangle " << tri << ", hexagon " << hex << ", rhombus " << rho;
    out.detail = msg.str();
    return out;
}

// Random trivial word of exactly n letters over the trivial-killing presentation.
Word trivial_word_of_length(std::mt19937_64& rng, std::size_t n) {
    Word w;
    while (w.size() != n) {
        Word t = oracle::random_word(rng, 2, static_cast<int>(rng() % 4));
        Word c = concat(concat(t, oracle::random_word(rng, 2, 1)), inverse(t));
        Word next = w;
        next.insert(next.begin() + static_cast<long>(rng() % (w.size() + 1)), c.begin(), c.end());
        next = free_reduce(next);
        if (next.size() <= n) w = next;
    }
    return w;
}

Outcome criterion10() {
    Outcome out;
    auto p = uniform_cyclic(2, ExponentSet::exactly(1));
    std::mt19937_64 rng(10);
    std::vector<double> times;
    std::ostringstream msg;
    for (std::size_t n : {64u, 128u, 256u}) {
        Word w = trivial_word_of_length(rng, n);
        double best = 1e300;
        int reps = n >= 256 ? 1 : 3;
        for (int r = 0; r < reps; ++r) {
            auto t0 = Clock::now();
            Cost c = mu2(w, p);
            best = std::min(best, seconds_since(t0));
            out.ok = out.ok && c.is_finite();
        }
        times.push_back(best);
        msg << " |W|=" << n << ": " << best << " s;";
    }
    for (std::size_t i = 1; i < times.size(); ++i) {
        double ratio = times[i] / times[i - 1];
        msg << " ratio " << ratio << ";";
        out.ok = out.ok && ratio <= 24;
    }
    out.ok = out.ok && times.back() < 60;
    out.detail = "mu2 scaling:" + msg.str();
    return out;
}

} // namespace

int main() {
    std::vector<std::function<Outcome()>> criteria = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                                      criterion6, criterion7, criterion8, criterion9, criterion10};
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.ok;
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << o.detail << std::endl;
    }
    return failed == 0 ? 0 : 1;
}

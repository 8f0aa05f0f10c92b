#ifndef VKD_POLYGON_HPP
#define VKD_POLYGON_HPP

#include "lattice.hpp"

#include <numeric>

namespace vkd {

// Closed polygonal curve; the segment from the last vertex back to the first is implied.
struct PolyCurve {
    std::vector<Point> vertices;
};

inline void check_curve(const PolyCurve& c) {
    const auto& v = c.vertices;
    for (std::size_t t = 0; t < v.size(); ++t)
        if (v[t] == v[(t + 1) % v.size()] && v.size() > 1) throw Error(ErrorCode::input, "consecutive curve vertices coincide");
}

inline long long segment_t_length(Point a, Point b, long long M = 1) {
    long long dx = std::abs(b.x - a.x) * M, dy = std::abs(b.y - a.y) * M;
    if (dx == 0 || dy == 0) return dx + dy;
    return dx + dy - std::gcd(dx, dy);
}

inline long long t_length(const PolyCurve& c, long long M = 1) {
    if (M < 1) throw Error(ErrorCode::precondition_violated, "refinement M must be >= 1");
    check_curve(c);
    long long s = 0;
    const auto& v = c.vertices;
    for (std::size_t t = 0; t < v.size(); ++t) s += segment_t_length(v[t], v[(t + 1) % v.size()], M);
    return s;
}

// Boundary path of the refined cells meeting the segment in more than a point,
// taken on the left of the direction of travel. Coordinates are scaled by M.
inline std::string staircase_steps(Point a, Point b, long long M = 1) {
    const long long dx = (b.x - a.x) * M, dy = (b.y - a.y) * M;
    const long long A = std::abs(dx), B = std::abs(dy);
    const char ex = dx >= 0 ? 'E' : 'W', ny = dy >= 0 ? 'N' : 'S';
    if (A == 0) return std::string(static_cast<std::size_t>(B), ny);
    if (B == 0) return std::string(static_cast<std::size_t>(A), ex);
    std::string out;
    out.reserve(static_cast<std::size_t>(A + B));
    // In the frame where the segment runs from (0,0) to (A,B), the left side is
    // the upper path exactly when the frame change preserves orientation.
    const bool upper = (dx > 0) == (dy > 0);
    long long h = 0;
    for (long long i = 0; i < A; ++i) {
        long long target = upper ? (B * (i + 1) + A - 1) / A : (B * i) / A;
        out.append(static_cast<std::size_t>(target - h), ny);
        h = target;
        out.push_back(ex);
    }
    out.append(static_cast<std::size_t>(B - h), ny);
    return out;
}

inline LatticePath staircase(Point a, Point b, long long M = 1) {
    return LatticePath{{a.x * M, a.y * M}, staircase_steps(a, b, M)};
}

inline LatticePath approx_path(const PolyCurve& c, long long M = 1) {
    if (M < 1) throw Error(ErrorCode::precondition_violated, "refinement M must be >= 1");
    check_curve(c);
    LatticePath out;
    if (c.vertices.empty()) return out;
    out.start = {c.vertices[0].x * M, c.vertices[0].y * M};
    const auto& v = c.vertices;
    for (std::size_t t = 0; t < v.size(); ++t) out.steps += staircase_steps(v[t], v[(t + 1) % v.size()], M);
    return out;
}

inline Rational approx_area(const PolyCurve& c, long long M = 1, M2Engine engine = M2Engine::winding) {
    Cost a = m2(approx_path(c, M), engine);
    return Rational(a.value()) / Rational(BigInt(M) * M);
}

struct AreaResult {
    Rational area;
    BigInt M;
    bool escape_hatch = false; // M was supplied by the caller
};

// Steps of the refined approximating path above which we refuse to build it.
inline constexpr long long max_approx_steps = 400'000'000;

inline AreaResult area_with_denominator(const PolyCurve& c, long long L, long long n, long long M_override = 0) {
    if (L < 1 || n < 1) throw Error(ErrorCode::precondition_violated, "need L >= 1 and n >= 1");
    const long long T = t_length(c, 1);
    const BigInt Tn = ipow(BigInt(T), static_cast<unsigned>(n));
    if (!(BigInt(2) * L < Tn))
        throw Error(ErrorCode::precondition_violated, "L = " + std::to_string(L) + " is not below |c|_T^n / 2 = " + Tn.str() + "/2");
    AreaResult r;
    if (M_override > 0) {
        // error of the approximation is at most 2|c|_T/M, which must stay below 1/(2L)
        if (!(BigInt(4) * L * T < M_override))
            throw Error(ErrorCode::precondition_violated, "supplied M does not certify an error below 1/(2L)");
        r.M = M_override;
        r.escape_hatch = true;
    } else {
        r.M = ipow(BigInt(T), static_cast<unsigned>(n + 2));
    }
    long long span = 0;
    for (std::size_t t = 0; t < c.vertices.size(); ++t) {
        Point a = c.vertices[t], b = c.vertices[(t + 1) % c.vertices.size()];
        span += std::abs(b.x - a.x) + std::abs(b.y - a.y);
    }
    if (r.M * span > max_approx_steps)
        throw Error(ErrorCode::budget_exceeded, "refinement M = " + r.M.str() + " is too large; pass a smaller certified M");
    Rational approx = approx_area(c, static_cast<long long>(r.M));
    BigInt k = floor_rational(approx * L + Rational(1, 2));
    r.area = Rational(k, L);
    return r;
}

// Exact area when intersection points of nonparallel segments have coordinates in (1/K)Z.
inline Rational area_K(const PolyCurve& c, long long K, long long M_override = 0) {
    if (K < 1) throw Error(ErrorCode::precondition_violated, "K must be >= 1");
    const long long T = t_length(c, 1);
    if (T <= 2) return Rational(0);
    const long long L = 2 * K * K;
    long long n = 1;
    BigInt Tn = T;
    while (!(Tn > 4 * K * K)) Tn *= T, ++n;
    return area_with_denominator(c, L, n, M_override).area;
}

// Segment slopes bounded by K reduce to intersection denominators dividing (2K^2)!.
inline long long coefficient_bound_K(long long K) {
    long long f = 1;
    for (long long t = 2; t <= 2 * K * K; ++t) {
        if (__builtin_mul_overflow(f, t, &f)) throw Error(ErrorCode::budget_exceeded, "(2K^2)! overflows");
    }
    return f;
}

// ---- triangular and hexagonal tessellations ----

enum class Tessellation { triangular, hexagonal };

// Axial coordinates: the six neighbours of (q,r) are (q+-1,r), (q,r+-1), (q+1,r-1), (q-1,r+1).
inline Point axial_to_square(Point a) { return {a.x + a.y, a.y}; }

inline bool is_hex_center(Point a) { return ((a.x - a.y) % 3 + 3) % 3 == 0; }

inline Rational tri_hex_area(const std::vector<Point>& path, Tessellation t) {
    std::vector<Point> q = path;
    if (q.size() > 1 && q.front() == q.back()) q.pop_back();
    for (std::size_t i = 0; i < q.size(); ++i) {
        Point a = q[i], b = q[(i + 1) % q.size()];
        long long dq = b.x - a.x, dr = b.y - a.y;
        bool adj = (std::abs(dq) + std::abs(dr) == 1) || (dq == 1 && dr == -1) || (dq == -1 && dr == 1);
        if (!adj) throw Error(ErrorCode::path_not_on_tessellation, "consecutive vertices are not adjacent");
        if (t == Tessellation::hexagonal && is_hex_center(a))
            throw Error(ErrorCode::path_not_on_tessellation, "vertex is a hexagon centre");
    }
    if (q.size() < 3) return Rational(0);
    PolyCurve img;
    for (Point a : q) img.vertices.push_back(axial_to_square(a));
    // each image triangle has area 1/2 and stands for one unit triangle
    Rational tri = 2 * area_K(img, 1);
    return t == Tessellation::triangular ? tri : tri / 6;
}

// ---- the prime curve ----

struct PrimeCurve {
    PolyCurve curve;
    std::vector<long long> primes;
    long long expected_t_length = 0;
    Rational expected_area;
};

inline std::vector<long long> primes_up_to(long long n) {
    std::vector<long long> out;
    std::vector<char> comp(static_cast<std::size_t>(std::max<long long>(n + 1, 2)), 0);
    for (long long p = 2; p <= n; ++p) {
        if (comp[static_cast<std::size_t>(p)]) continue;
        out.push_back(p);
        for (long long q = p * p; q <= n; q += p) comp[static_cast<std::size_t>(q)] = 1;
    }
    return out;
}

inline PrimeCurve gen_prime_curve(long long n) {
    if (n < 2) throw Error(ErrorCode::precondition_violated, "prime curve needs n >= 2");
    PrimeCurve pc;
    pc.primes = primes_up_to(n);
    Point p{0, 0};
    long long sum = 0;
    Rational inv_sum = 0;
    for (long long pr : pc.primes) {
        pc.curve.vertices.push_back(p);
        p.y += 1;
        pc.curve.vertices.push_back(p);
        p.x -= 1;
        pc.curve.vertices.push_back(p);
        p.x += pr;
        p.y -= 1;
        sum += pr;
        inv_sum += Rational(1, pr);
    }
    pc.curve.vertices.push_back(p);
    const long long l = static_cast<long long>(pc.primes.size());
    pc.expected_t_length = l + 2 * sum;
    pc.expected_area = inv_sum + Rational(sum - 2 * l, 2);
    return pc;
}

} // namespace vkd

#endif

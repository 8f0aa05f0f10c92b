#include "oracles.hpp"

#include <catch_amalgamated.hpp>

using namespace vkd;

namespace {

PolyCurve C(std::vector<Point> v) { return PolyCurve{std::move(v)}; }

const PolyCurve unit_square = C({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
const PolyCurve triangle = C({{0, 0}, {3, 0}, {0, 3}});

// M-cells lying inside x, y >= 0, x + y <= 3, in units of 1/M^2.
Rational cells_inside_triangle(long long M) {
    long long count = 0;
    for (long long i = 0; i < 3 * M; ++i)
        for (long long j = 0; j < 3 * M; ++j)
            if (i + j + 2 <= 3 * M) ++count;
    return Rational(count, M * M);
}

// Twice the area between a segment and its staircase, from the closed polygon
// staircase followed by the segment backwards.
long long twice_gap(Point a, Point b) {
    auto pts = path_points(staircase(a, b));
    long long s = oracle::twice_signed_area(pts);
    return s < 0 ? -s : s;
}

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::input;
}

} // namespace

TEST_CASE("tessellation length of segments", "[polygon]") {
    CHECK(segment_t_length({0, 0}, {3, 0}) == 3);
    CHECK(segment_t_length({0, 0}, {1, 1}) == 1);
    CHECK(segment_t_length({0, 0}, {2, 1}) == 2);
    CHECK(segment_t_length({0, 0}, {2, 2}, 3) == 6);
    CHECK(t_length(unit_square, 1) == 4);
    CHECK(t_length(triangle, 1) == 9);
    CHECK(t_length(triangle, 4) == 36);
    CHECK(code_of([] { t_length(unit_square, 0); }) == ErrorCode::precondition_violated);

    std::mt19937_64 rng(97);
    for (int t = 0; t < 500; ++t) {
        Point a{static_cast<long long>(rng() % 21) - 10, static_cast<long long>(rng() % 21) - 10};
        Point b{static_cast<long long>(rng() % 21) - 10, static_cast<long long>(rng() % 21) - 10};
        if (a == b) continue;
        long long dx = std::abs(b.x - a.x), dy = std::abs(b.y - a.y), len = segment_t_length(a, b);
        CHECK(std::max(dx, dy) <= len);
        CHECK(len <= 2 * std::max(dx, dy));
        // the staircase bounds the cells the segment crosses
        CHECK(static_cast<long long>(staircase_steps(a, b).size()) == dx + dy);
        CHECK(twice_gap(a, b) <= 2 * len);
    }
}

TEST_CASE("staircases", "[polygon]") {
    CHECK(staircase({0, 0}, {3, 0}).steps == "EEE");
    CHECK(staircase({0, 0}, {0, -2}).steps == "SS");
    CHECK(staircase({0, 0}, {1, 1}).steps == "NE");
    CHECK(staircase({1, 1}, {0, 0}).steps == "SW");
    CHECK(staircase({1, 0}, {0, 1}).steps == "WN");
    CHECK(staircase({0, 0}, {1, 1}, 2).steps == "NENE");
    CHECK(staircase({0, 0}, {2, 1}).steps == "NEE");
    CHECK(staircase({1, 1}, {2, 3}, 2).start == Point{2, 2});

    // the staircase lies on the left of the direction of travel
    std::mt19937_64 rng(101);
    for (int t = 0; t < 300; ++t) {
        Point a{static_cast<long long>(rng() % 11) - 5, static_cast<long long>(rng() % 11) - 5};
        Point b{static_cast<long long>(rng() % 11) - 5, static_cast<long long>(rng() % 11) - 5};
        if (a == b) continue;
        for (Point q : path_points(staircase(a, b))) {
            long long cross = (b.x - a.x) * (q.y - a.y) - (b.y - a.y) * (q.x - a.x);
            CHECK(cross >= 0);
        }
    }
}

TEST_CASE("approximating paths", "[polygon]") {
    PolyCurve rect = C({{0, 0}, {2, 0}, {2, 3}, {0, 3}});
    CHECK(approx_path(rect, 1).steps == "EENNNWWSSS");
    CHECK(approx_path(rect, 2).steps == "EEEENNNNNNWWWWSSSSSS");
    LatticePath tri = approx_path(C({{0, 0}, {1, 0}, {0, 1}}), 1);
    CHECK(is_closed(tri));
    CHECK(tri.steps == "EWNS");

    std::mt19937_64 rng(103);
    for (int t = 0; t < 100; ++t) {
        PolyCurve c;
        int k = 3 + static_cast<int>(rng() % 4);
        for (int i = 0; i < k; ++i) {
            Point p{static_cast<long long>(rng() % 9) - 4, static_cast<long long>(rng() % 9) - 4};
            if (c.vertices.empty() || c.vertices.back() != p) c.vertices.push_back(p);
        }
        if (c.vertices.size() > 1 && c.vertices.front() == c.vertices.back()) c.vertices.pop_back();
        long long M = 1 + static_cast<long long>(rng() % 4);
        CHECK(is_closed(approx_path(c, M)));
    }
}

TEST_CASE("approximate areas", "[polygon]") {
    CHECK(approx_area(unit_square, 1) == 1);
    CHECK(approx_area(unit_square, 4) == 1);
    CHECK(approx_area(unit_square, 3, M2Engine::dp) == 1);
    const Rational exact(9, 2);
    for (long long M : {1, 2, 4, 8, 16}) {
        Rational a = approx_area(triangle, M);
        CHECK(a == cells_inside_triangle(M));
        Rational err = a > exact ? a - exact : exact - a;
        CHECK(err <= Rational(2 * t_length(triangle, 1), M));
    }
    CHECK(approx_area(triangle, 2, M2Engine::dp) == approx_area(triangle, 2));
}

TEST_CASE("area with a known denominator", "[polygon]") {
    PolyCurve rect = C({{0, 0}, {2, 0}, {2, 3}, {0, 3}});
    AreaResult r = area_with_denominator(rect, 1, 1);
    CHECK(r.area == 6);
    CHECK(r.M == 1000);
    CHECK_FALSE(r.escape_hatch);

    PrimeCurve pc = gen_prime_curve(5);
    AreaResult p = area_with_denominator(pc.curve, 30, 2, 2761);
    CHECK(p.escape_hatch);
    CHECK(p.area == Rational(91, 30));

    CHECK(code_of([&] { area_with_denominator(rect, 5, 1); }) == ErrorCode::precondition_violated);
    CHECK(code_of([&] { area_with_denominator(pc.curve, 30, 2, 2760); }) == ErrorCode::precondition_violated);
    CHECK(code_of([&] { area_with_denominator(pc.curve, 30, 5); }) == ErrorCode::budget_exceeded);
    CHECK(code_of([&] { area_with_denominator(rect, 0, 1); }) == ErrorCode::precondition_violated);
}

TEST_CASE("K-bounded areas", "[polygon]") {
    CHECK(area_K(unit_square, 1) == 1);
    CHECK(area_K(C({{0, 0}, {2, 0}, {2, 3}, {0, 3}}), 1) == 6);
    CHECK(area_K(C({{0, 0}, {2, 0}, {0, 1}}), 1) == 1);
    CHECK(area_K(C({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}, {1, 0}, {1, 1}, {0, 1}}), 1) == 2);
    // two triangles of area 1/4 meeting at (1/2, 1/2)
    CHECK(area_K(C({{0, 0}, {1, 1}, {1, 0}, {0, 1}}), 2) == Rational(1, 2));
    CHECK(area_K(C({{0, 0}, {3, 0}}), 1) == 0);
    CHECK(coefficient_bound_K(1) == 2);
    CHECK(coefficient_bound_K(2) == 40320);

    // lattice polygons agree with the shoelace formula
    std::mt19937_64 rng(107);
    int tried = 0;
    while (tried < 15) {
        LatticePath c = oracle::random_closed_path(rng, 12);
        if (!oracle::is_simple(c) || c.steps.size() < 4) continue;
        ++tried;
        auto pts = path_points(c);
        pts.pop_back();
        PolyCurve pc;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            // drop collinear interior vertices so that consecutive points differ in direction
            Point prev = pts[(i + pts.size() - 1) % pts.size()], next = pts[(i + 1) % pts.size()];
            if ((pts[i].x - prev.x) * (next.y - pts[i].y) == (pts[i].y - prev.y) * (next.x - pts[i].x)) continue;
            pc.vertices.push_back(pts[i]);
        }
        long long twice = oracle::twice_signed_area(pc.vertices);
        CHECK(area_K(pc, 1) == Rational(twice < 0 ? -twice : twice, 2));
    }
}

TEST_CASE("triangular and hexagonal tessellations", "[polygon]") {
    using T = Tessellation;
    CHECK(tri_hex_area({{0, 0}, {1, 0}, {0, 1}}, T::triangular) == 1);
    CHECK(tri_hex_area({{1, 0}, {0, 1}, {1, 1}}, T::triangular) == 1);
    CHECK(tri_hex_area({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, T::triangular) == 2);
    CHECK(tri_hex_area({{0, 0}, {1, 0}, {2, 0}, {1, 1}, {0, 2}, {0, 1}}, T::triangular) == 4);
    // two triangles joined at a vertex
    CHECK(tri_hex_area({{0, 0}, {1, 0}, {0, 1}, {0, 0}, {-1, 0}, {0, -1}}, T::triangular) == 2);
    CHECK(tri_hex_area({{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}, T::hexagonal) == 1);
    CHECK(tri_hex_area({{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}, {1, 0}}, T::hexagonal) == 1);
    CHECK(tri_hex_area({{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}, T::triangular) == 6);
    CHECK(code_of([] { tri_hex_area({{0, 0}, {2, 0}, {0, 1}}, T::triangular); }) == ErrorCode::path_not_on_tessellation);
    CHECK(code_of([] { tri_hex_area({{0, 0}, {1, 0}, {0, 1}}, T::hexagonal); }) == ErrorCode::path_not_on_tessellation);
    CHECK(code_of([] { tri_hex_area({{0, 0}, {1, 1}, {0, 1}}, T::triangular); }) == ErrorCode::path_not_on_tessellation);
}

TEST_CASE("prime curves", "[polygon]") {
    PrimeCurve pc = gen_prime_curve(5);
    CHECK(pc.primes == std::vector<long long>{2, 3, 5});
    CHECK(pc.curve.vertices.size() == 10);
    CHECK(pc.expected_t_length == 23);
    CHECK(t_length(pc.curve, 1) == 23);
    CHECK(pc.expected_area == Rational(1, 2) + Rational(1, 3) + Rational(1, 5) + Rational(0 + 1 + 3, 2));
    CHECK(pc.expected_area == Rational(91, 30));
    Rational prev_den = 1;
    for (long long n : {5, 7, 11, 13}) {
        PrimeCurve q = gen_prime_curve(n);
        CHECK(t_length(q.curve, 1) == q.expected_t_length);
        CHECK(q.expected_t_length < (n + 1) * (n + 1));
        Rational den = Rational(boost::multiprecision::denominator(q.expected_area));
        CHECK(den > prev_den);
        prev_den = den;
    }
    CHECK(boost::multiprecision::denominator(gen_prime_curve(7).expected_area) == 105);
    CHECK(boost::multiprecision::denominator(gen_prime_curve(11).expected_area) == 2310);
    CHECK(code_of([] { gen_prime_curve(1); }) == ErrorCode::precondition_violated);
}

#ifndef VKD_LATTICE_HPP
#define VKD_LATTICE_HPP

#include "dp_bs.hpp"

namespace vkd {

struct Point {
    long long x = 0, y = 0;
    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
};

// Steps are the characters E, N, W, S.
struct LatticePath {
    Point start;
    std::string steps;
    friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

inline Point step_delta(char s) {
    switch (s) {
    case 'E': return {1, 0};
    case 'W': return {-1, 0};
    case 'N': return {0, 1};
    case 'S': return {0, -1};
    }
    throw Error(ErrorCode::input, std::string("bad step '") + s + "'");
}

inline char step_inverse(char s) {
    switch (s) {
    case 'E': return 'W';
    case 'W': return 'E';
    case 'N': return 'S';
    case 'S': return 'N';
    }
    throw Error(ErrorCode::input, std::string("bad step '") + s + "'");
}

inline std::string steps_inverse(const std::string& s) {
    std::string out(s.rbegin(), s.rend());
    for (char& ch : out) ch = step_inverse(ch);
    return out;
}

inline std::vector<Point> path_points(const LatticePath& c) {
    std::vector<Point> pts{c.start};
    for (char s : c.steps) {
        Point d = step_delta(s);
        pts.push_back({pts.back().x + d.x, pts.back().y + d.y});
    }
    return pts;
}

inline bool is_closed(const LatticePath& c) { return path_points(c).back() == c.start; }

inline void require_closed(const LatticePath& c) {
    if (!is_closed(c)) throw Error(ErrorCode::path_not_closed, "path does not return to its start");
}

// "x y : ENWS..."
inline LatticePath parse_path(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::input, "path needs 'x y : steps'");
    std::istringstream head(text.substr(0, colon));
    LatticePath c;
    if (!(head >> c.start.x >> c.start.y)) throw Error(ErrorCode::input, "path start must be two integers");
    std::string extra;
    if (head >> extra) throw Error(ErrorCode::input, "unexpected '" + extra + "' before ':'");
    for (char ch : text.substr(colon + 1)) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        char up = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        step_delta(up);
        c.steps.push_back(up);
    }
    return c;
}

inline std::string format_path(const LatticePath& c) {
    return std::to_string(c.start.x) + " " + std::to_string(c.start.y) + " : " + c.steps;
}

inline BaumslagSolitar lattice_presentation() { return baumslag_solitar(1, 1); }

inline Word label_path(const LatticePath& c) {
    Word w;
    for (char s : c.steps) {
        switch (s) {
        case 'E': w.push_back({1, 1}); break;
        case 'W': w.push_back({1, -1}); break;
        case 'N': w.push_back({2, 1}); break;
        case 'S': w.push_back({2, -1}); break;
        default: step_delta(s);
        }
    }
    return w;
}

// Sum over unit cells of |winding number|, swept row by row over the
// vertical edges the path crosses.
inline long long winding_area(const LatticePath& c) {
    require_closed(c);
    struct Cross {
        long long row, x, d;
    };
    std::vector<Cross> cross;
    Point p = c.start;
    for (char s : c.steps) {
        if (s == 'N') cross.push_back({p.y, p.x, 1});
        if (s == 'S') cross.push_back({p.y - 1, p.x, -1});
        Point d = step_delta(s);
        p = {p.x + d.x, p.y + d.y};
    }
    std::sort(cross.begin(), cross.end(), [](const Cross& a, const Cross& b) {
        return a.row != b.row ? a.row < b.row : a.x < b.x;
    });
    long long area = 0, acc = 0;
    for (std::size_t t = 0; t < cross.size(); ++t) {
        if (t == 0 || cross[t].row != cross[t - 1].row) acc = 0;
        acc += cross[t].d;
        if (t + 1 < cross.size() && cross[t + 1].row == cross[t].row)
            area += (acc < 0 ? -acc : acc) * (cross[t + 1].x - cross[t].x);
    }
    return area;
}

inline long long shoelace_simple(const LatticePath& c) {
    require_closed(c);
    std::vector<Point> pts = path_points(c);
    std::set<Point> seen(pts.begin(), pts.end() - 1);
    if (seen.size() != pts.size() - 1) throw Error(ErrorCode::path_not_simple, "path revisits a vertex");
    long long twice = 0;
    for (std::size_t t = 0; t + 1 < pts.size(); ++t) twice += pts[t].x * pts[t + 1].y - pts[t + 1].x * pts[t].y;
    return (twice < 0 ? -twice : twice) / 2;
}

enum class M2Engine { winding, dp };

inline Cost m2(const LatticePath& c, M2Engine engine = M2Engine::winding) {
    require_closed(c);
    if (engine == M2Engine::winding) return Cost(winding_area(c));
    return mu3(label_path(c), lattice_presentation());
}

// ---- elementary homotopies ----

struct EhMove {
    enum class Kind { type1, type2 };
    Kind kind = Kind::type1;
    long long pos = 0;          // 0-based step index in the current path
    Point cell;                 // type 2: lower-left corner of the unit square
    long long ulen = 0;         // type 2: |u|
    std::string repl;           // type 2: the steps replacing u
    friend bool operator==(const EhMove&, const EhMove&) = default;

    static EhMove t1(long long pos) { return {Kind::type1, pos, {}, 0, {}}; }
};

inline std::string format_move(const EhMove& mv) {
    if (mv.kind == EhMove::Kind::type1) return "t1 " + std::to_string(mv.pos);
    return "t2 " + std::to_string(mv.pos) + " " + std::to_string(mv.cell.x) + " " + std::to_string(mv.cell.y) + " " +
           std::to_string(mv.ulen) + " " + (mv.repl.empty() ? "-" : mv.repl);
}

inline EhMove parse_move(const std::string& line) {
    std::istringstream ls(line);
    std::string kind;
    EhMove mv;
    ls >> kind;
    if (kind == "t1") {
        if (!(ls >> mv.pos)) throw Error(ErrorCode::input, "t1 needs a position");
    } else if (kind == "t2") {
        mv.kind = EhMove::Kind::type2;
        if (!(ls >> mv.pos >> mv.cell.x >> mv.cell.y >> mv.ulen >> mv.repl)) throw Error(ErrorCode::input, "t2 needs pos cx cy ulen repl");
        if (mv.repl == "-") mv.repl.clear();
    } else {
        throw Error(ErrorCode::input, "unknown move '" + kind + "'");
    }
    return mv;
}

inline LatticePath apply_eh(const LatticePath& c, const EhMove& mv) {
    const long long n = static_cast<long long>(c.steps.size());
    LatticePath out = c;
    if (mv.kind == EhMove::Kind::type1) {
        if (mv.pos < 0 || mv.pos + 1 >= n) throw Error(ErrorCode::pattern_mismatch, "t1 position out of range");
        std::size_t q = static_cast<std::size_t>(mv.pos);
        if (c.steps[q + 1] != step_inverse(c.steps[q])) throw Error(ErrorCode::pattern_mismatch, "t1 site is not a backtrack");
        out.steps.erase(q, 2);
        return out;
    }
    if (mv.pos < 0 || mv.ulen < 0 || mv.pos + mv.ulen > n) throw Error(ErrorCode::pattern_mismatch, "t2 window out of range");
    if (mv.ulen + static_cast<long long>(mv.repl.size()) != 4) throw Error(ErrorCode::pattern_mismatch, "|u| + |v| must be 4");
    std::vector<Point> pts = path_points(c);
    // u followed by the inverse of the replacement must run once around the cell
    std::string loop = c.steps.substr(static_cast<std::size_t>(mv.pos), static_cast<std::size_t>(mv.ulen)) + steps_inverse(mv.repl);
    Point p = pts[static_cast<std::size_t>(mv.pos)];
    std::set<Point> corners;
    for (char s : loop) {
        corners.insert(p);
        Point d = step_delta(s);
        p = {p.x + d.x, p.y + d.y};
        if (p.x < mv.cell.x || p.x > mv.cell.x + 1 || p.y < mv.cell.y || p.y > mv.cell.y + 1)
            throw Error(ErrorCode::pattern_mismatch, "t2 path leaves the named cell");
    }
    if (p != pts[static_cast<std::size_t>(mv.pos)] || corners.size() != 4)
        throw Error(ErrorCode::pattern_mismatch, "u v is not the boundary of the cell");
    out.steps.replace(static_cast<std::size_t>(mv.pos), static_cast<std::size_t>(mv.ulen), mv.repl);
    return out;
}

// Replays the minimal BS(1,1) certificate of the path. Each bracket (x,y,b3,b4)
// stands for its arc having been homotoped to the horizontal path a1^b3.
inline std::vector<EhMove> homotopy_sequence(const LatticePath& c) {
    require_closed(c);
    const Word w = label_path(c);
    const BaumslagSolitar P = lattice_presentation();
    const std::vector<ElemOp> ops = certificate_bs(w, P);
    std::map<long long, std::pair<long long, long long>> br; // x -> (y, b3)
    std::vector<EhMove> out;
    LatticePath cur = c;
    auto offset = [&](long long x) {
        long long off = x;
        for (const auto& [bx, v] : br) {
            if (bx >= x) break;
            long long b3 = v.second < 0 ? -v.second : v.second;
            off -= (v.first - bx) - b3;
        }
        return off;
    };
    auto emit = [&](EhMove mv) {
        cur = apply_eh(cur, mv);
        out.push_back(mv);
    };
    auto t1 = [&](long long pos) { emit(EhMove::t1(pos)); };
    auto sgn = [](long long v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); };
    using K = ElemOp::Kind;
    for (const ElemOp& op : ops) {
        switch (op.kind) {
        case K::add: br[op.x] = {op.x, 0}; break;
        case K::ext1l: {
            auto [y, b3] = br.at(op.x);
            br.erase(op.x);
            int s = w[static_cast<std::size_t>(op.x - 1)].sign;
            br[op.x - 1] = {y, b3 + s};
            if (sgn(b3) == -s) t1(offset(op.x - 1));
            break;
        }
        case K::ext1r: {
            auto& v = br.at(op.x);
            int s = w[static_cast<std::size_t>(op.y)].sign;
            long long b3 = v.second;
            v = {op.y + 1, b3 + s};
            if (sgn(b3) == -s) t1(offset(op.x) + (b3 < 0 ? -b3 : b3) - 1);
            break;
        }
        case K::ext3: {
            auto [y, b3] = br.at(op.x);
            br.erase(op.x);
            br[op.x - 1] = {y + 1, b3};
            t1(offset(op.x - 1));
            break;
        }
        case K::ext2: {
            auto [y, b3] = br.at(op.x);
            br.erase(op.x);
            br[op.x - 1] = {y + 1, b3};
            long long pos = offset(op.x - 1);
            std::vector<Point> pts = path_points(cur);
            const char up = cur.steps[static_cast<std::size_t>(pos)], down = step_inverse(up);
            const char hx = b3 > 0 ? 'E' : 'W';
            const long long dy = step_delta(up).y, dx = step_delta(hx).x;
            Point base = pts[static_cast<std::size_t>(pos)];
            long long r = b3 < 0 ? -b3 : b3;
            auto cell_of = [&](long long col) {
                // column col of the band: between base.x + col*dx and base.x + (col+1)*dx
                long long cx = dx > 0 ? base.x + col : base.x - col - 1;
                long long cy = dy > 0 ? base.y : base.y - 1;
                return Point{cx, cy};
            };
            for (; r >= 2; --r) {
                EhMove mv{EhMove::Kind::type2, pos + r, cell_of(r - 1), 2, std::string{down, hx}};
                emit(mv);
            }
            emit(EhMove{EhMove::Kind::type2, pos, cell_of(0), 3, std::string(1, hx)});
            break;
        }
        case K::merge: {
            auto [y1, b3] = br.at(op.x);
            auto [y2, c3] = br.at(op.x2);
            long long at = offset(op.x) + (b3 < 0 ? -b3 : b3);
            br.erase(op.x2);
            br[op.x] = {y2, b3 + c3};
            if (sgn(b3) * sgn(c3) < 0) {
                long long t = std::min(b3 < 0 ? -b3 : b3, c3 < 0 ? -c3 : c3);
                for (long long q = 1; q <= t; ++q) t1(at - q);
            }
            break;
        }
        default: throw Error(ErrorCode::sequence_rejected, "unexpected op in BS certificate");
        }
    }
    if (!cur.steps.empty()) throw Error(ErrorCode::sequence_rejected, "internal: homotopy did not reach a point");
    return out;
}

} // namespace vkd

#endif

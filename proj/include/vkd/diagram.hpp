#ifndef VKD_DIAGRAM_HPP
#define VKD_DIAGRAM_HPP

#include "words.hpp"

#include <json.hpp>

#include <map>
#include <numeric>
#include <sstream>

namespace vkd {

// ---- face statistics ----

struct Selector {
    enum class Kind { face_count, faces_with_label, boundary_length_sum };
    Kind kind = Kind::face_count;
    int sign = 1;       // -1 turns minimization into maximization
    int gen = 0;        // faces_with_label
    long long exp = 0;  // faces_with_label; 0 matches any exponent
    long long k1 = 0, k2 = 0;

    // Contribution of one face whose label contains `len` letters of `face_gen`
    // and has boundary length `perimeter`.
    long long value(int face_gen, long long len, long long perimeter) const {
        long long v = 0;
        switch (kind) {
        case Kind::face_count: v = 1; break;
        case Kind::faces_with_label: v = (face_gen == gen && (exp == 0 || exp == len)) ? 1 : 0; break;
        case Kind::boundary_length_sum: v = (k1 <= perimeter && perimeter <= k2) ? perimeter : 0; break;
        }
        return sign * v;
    }
};

using TauSpec = std::vector<Selector>;

// Syntax: comma separated, each one of
//   faces | label:<gen>[:<exp>] | len:<k1>:<k2>, optionally prefixed by '-'.
inline TauSpec parse_tau(const std::string& text, const std::vector<std::string>& names) {
    TauSpec out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.erase(item.begin());
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.pop_back();
        if (item.empty()) continue;
        Selector s;
        if (item[0] == '-') s.sign = -1, item.erase(item.begin());
        std::vector<std::string> parts;
        std::stringstream is(item);
        std::string part;
        while (std::getline(is, part, ':')) parts.push_back(part);
        auto num = [&](const std::string& t) {
            try {
                std::size_t used = 0;
                long long v = std::stoll(t, &used);
                if (used != t.size()) throw std::invalid_argument(t);
                return v;
            } catch (const std::exception&) {
                throw Error(ErrorCode::input, "bad number in tau spec: '" + t + "'");
            }
        };
        if (parts.size() == 1 && parts[0] == "faces") {
            s.kind = Selector::Kind::face_count;
        } else if (!parts.empty() && parts[0] == "label" && (parts.size() == 2 || parts.size() == 3)) {
            s.kind = Selector::Kind::faces_with_label;
            auto it = std::find(names.begin(), names.end(), parts[1]);
            if (it == names.end()) throw Error(ErrorCode::unknown_generator, "'" + parts[1] + "' in tau spec");
            s.gen = static_cast<int>(it - names.begin()) + 1;
            if (parts.size() == 3 && parts[2] != "*") s.exp = num(parts[2]);
        } else if (!parts.empty() && parts[0] == "len" && parts.size() == 3) {
            s.kind = Selector::Kind::boundary_length_sum;
            s.k1 = num(parts[1]);
            s.k2 = num(parts[2]);
        } else {
            throw Error(ErrorCode::input, "bad tau selector '" + item + "'");
        }
        out.push_back(s);
    }
    if (out.empty() || out[0].kind != Selector::Kind::face_count || out[0].sign != 1)
        throw Error(ErrorCode::precondition_violated, "tau must start with faces");
    return out;
}

// ---- combinatorial map ----

struct Dart {
    int inv = -1;
    Letter label;
};

struct Band {
    std::vector<int> faces;   // in chain order
    std::vector<int> f1, s1;  // standard boundary f1 s1 f2 s2, as dart lists
    std::vector<int> f2, s2;
    int gen = 2;
};

class Diagram {
public:
    std::vector<Dart> darts;
    std::vector<std::vector<int>> faces;
    std::vector<int> boundary; // boundary cycle, listed from the basepoint
    Presentation pres;

    int face_count() const { return static_cast<int>(faces.size()); }
    int edge_count() const { return static_cast<int>(darts.size() / 2); }

    // Successor of every dart inside its own cycle (face or boundary).
    std::vector<int> successors() const {
        std::vector<int> succ(darts.size(), -1);
        auto fill = [&](const std::vector<int>& cyc) {
            for (std::size_t t = 0; t < cyc.size(); ++t) succ[static_cast<std::size_t>(cyc[t])] = cyc[(t + 1) % cyc.size()];
        };
        for (const auto& f : faces) fill(f);
        fill(boundary);
        return succ;
    }

    // Vertex id of each dart's origin: orbits of d -> succ(inv d), numbered by
    // first visit along the boundary, then along faces in order.
    std::vector<int> vertices(int* count = nullptr) const {
        std::vector<int> vert(darts.size(), -1);
        std::vector<int> succ = successors();
        int next = 0;
        auto visit = [&](int d) {
            if (vert[static_cast<std::size_t>(d)] >= 0) return;
            int x = d;
            for (std::size_t guard = 0; guard <= darts.size(); ++guard) {
                vert[static_cast<std::size_t>(x)] = next;
                int y = darts[static_cast<std::size_t>(x)].inv;
                if (y < 0 || succ[static_cast<std::size_t>(y)] < 0) break;
                x = succ[static_cast<std::size_t>(y)];
                if (x == d) break;
            }
            ++next;
        };
        for (int d : boundary) visit(d);
        for (const auto& f : faces)
            for (int d : f) visit(d);
        for (std::size_t d = 0; d < darts.size(); ++d) visit(static_cast<int>(d));
        if (count) *count = darts.empty() ? 1 : next;
        return vert;
    }

    Word face_label(int f) const {
        Word w;
        for (int d : faces[static_cast<std::size_t>(f)]) w.push_back(darts[static_cast<std::size_t>(d)].label);
        return w;
    }
};

// Reads the boundary from the first boundary dart leaving `basepoint`
// (a vertex id); -1 means the stored basepoint.
inline Word boundary_word(const Diagram& d, int basepoint = -1) {
    Word w;
    if (d.boundary.empty()) {
        if (basepoint > 0) throw Error(ErrorCode::basepoint_not_on_boundary, "vertex " + std::to_string(basepoint));
        return w;
    }
    std::size_t start = 0;
    if (basepoint >= 0) {
        std::vector<int> vert = d.vertices();
        bool found = false;
        for (std::size_t t = 0; t < d.boundary.size() && !found; ++t)
            if (vert[static_cast<std::size_t>(d.boundary[t])] == basepoint) start = t, found = true;
        if (!found) throw Error(ErrorCode::basepoint_not_on_boundary, "vertex " + std::to_string(basepoint));
    }
    for (std::size_t t = 0; t < d.boundary.size(); ++t)
        w.push_back(d.darts[static_cast<std::size_t>(d.boundary[(start + t) % d.boundary.size()])].label);
    return w;
}

inline bool check_property_A(const Diagram& d) {
    std::vector<char> on_boundary(d.darts.size(), 0);
    for (int x : d.boundary) on_boundary[static_cast<std::size_t>(x)] = 1;
    for (const auto& f : d.faces)
        for (int x : f)
            if (!on_boundary[static_cast<std::size_t>(d.darts[static_cast<std::size_t>(x)].inv)]) return false;
    return true;
}

namespace detail {

// Whether `w`, read cyclically, is a cyclic permutation of r or r^-1.
inline bool cyclic_match(const Word& w, const Word& r) {
    if (w.size() != r.size()) return false;
    if (w.empty()) return true;
    Word ri = inverse(r);
    for (std::size_t s = 0; s < r.size(); ++s) {
        bool a = true, b = true;
        for (std::size_t t = 0; t < w.size() && (a || b); ++t) {
            a = a && w[t] == r[(s + t) % r.size()];
            b = b && w[t] == ri[(s + t) % r.size()];
        }
        if (a || b) return true;
    }
    return false;
}

inline Word bs_relator(const BaumslagSolitar& p) {
    Word r{{2, 1}};
    Word x = power(1, p.n1);
    r.insert(r.end(), x.begin(), x.end());
    r.push_back({2, -1});
    x = power(1, -p.n2);
    r.insert(r.end(), x.begin(), x.end());
    return r;
}

inline bool is_relator_label(const Word& w, const Presentation& p) {
    if (w.empty()) return false;
    if (const auto* c = std::get_if<CyclicProducts>(&p)) {
        for (const Letter& x : w)
            if (x != w[0]) return false;
        if (w[0].gen < 1 || w[0].gen > c->m()) return false;
        return c->sets[static_cast<std::size_t>(w[0].gen - 1)].admits(static_cast<long long>(w.size()));
    }
    return cyclic_match(w, bs_relator(std::get<BaumslagSolitar>(p)));
}

} // namespace detail

inline std::vector<std::string> validate(const Diagram& d, const Presentation& p) {
    std::vector<std::string> out;
    const std::size_t n = d.darts.size();
    bool inv_ok = n % 2 == 0;
    for (std::size_t x = 0; x < n && inv_ok; ++x) {
        int y = d.darts[x].inv;
        if (y < 0 || static_cast<std::size_t>(y) >= n || static_cast<std::size_t>(y) == x ||
            d.darts[static_cast<std::size_t>(y)].inv != static_cast<int>(x) ||
            d.darts[static_cast<std::size_t>(y)].label != d.darts[x].label.inv())
            inv_ok = false;
    }
    if (!inv_ok) {
        out.push_back("label-involution");
        return out;
    }
    int m = alphabet_size(p);
    for (const Dart& x : d.darts)
        if (x.label.gen < 1 || x.label.gen > m) {
            out.push_back("label-outside-alphabet");
            return out;
        }
    std::vector<int> seen(n, 0);
    for (const auto& f : d.faces)
        for (int x : f)
            if (x < 0 || static_cast<std::size_t>(x) >= n) {
                out.push_back("dart-out-of-range");
                return out;
            } else {
                ++seen[static_cast<std::size_t>(x)];
            }
    for (int x : d.boundary)
        if (x < 0 || static_cast<std::size_t>(x) >= n) {
            out.push_back("dart-out-of-range");
            return out;
        } else {
            ++seen[static_cast<std::size_t>(x)];
        }
    if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; })) {
        out.push_back("dart-cover");
        return out;
    }
    for (std::size_t f = 0; f < d.faces.size(); ++f) {
        if (d.faces[f].empty() || !detail::is_relator_label(d.face_label(static_cast<int>(f)), p)) {
            out.push_back("bad-face-label");
            break;
        }
    }
    // connectivity through edges, then Euler characteristic of a disk
    int V = 0;
    std::vector<int> vert = d.vertices(&V);
    std::vector<int> parent(static_cast<std::size_t>(V));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[static_cast<std::size_t>(a)] != a)
            a = parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
        return a;
    };
    int comps = V;
    for (std::size_t x = 0; x < n; ++x) {
        int a = find(vert[x]), b = find(vert[static_cast<std::size_t>(d.darts[x].inv)]);
        if (a != b) parent[static_cast<std::size_t>(a)] = b, --comps;
    }
    if (comps != 1) out.push_back("disconnected");
    if (V - d.edge_count() + d.face_count() != 1) out.push_back("euler");
    if (n > 0 && d.boundary.empty()) out.push_back("boundary-missing");
    return out;
}

// No two faces sharing a vertex read mutually inverse labels from it.
inline bool check_reduced(const Diagram& d) {
    std::vector<int> vert = d.vertices();
    std::map<int, std::vector<std::pair<int, std::size_t>>> at; // vertex -> (face, offset)
    for (std::size_t f = 0; f < d.faces.size(); ++f)
        for (std::size_t t = 0; t < d.faces[f].size(); ++t)
            at[vert[static_cast<std::size_t>(d.faces[f][t])]].push_back({static_cast<int>(f), t});
    for (const auto& [v, occ] : at) {
        for (std::size_t a = 0; a < occ.size(); ++a)
            for (std::size_t b = 0; b < occ.size(); ++b) {
                if (occ[a].first == occ[b].first) continue;
                const auto& F1 = d.faces[static_cast<std::size_t>(occ[a].first)];
                const auto& F2 = d.faces[static_cast<std::size_t>(occ[b].first)];
                if (F1.size() != F2.size()) continue;
                const std::size_t L = F1.size();
                bool mirror = true;
                for (std::size_t t = 0; t < L && mirror; ++t) {
                    Letter x = d.darts[static_cast<std::size_t>(F1[(occ[a].second + t) % L])].label;
                    Letter y = d.darts[static_cast<std::size_t>(F2[(occ[b].second + L - 1 - t) % L])].label;
                    mirror = x == y.inv();
                }
                if (mirror) return false;
            }
    }
    return true;
}

struct DiagramStats {
    std::vector<long long> tau;
    std::map<int, int> vertex_degree;      // degree -> number of vertices
    std::map<int, int> vertex_face_degree; // face incidences -> number of vertices
};

inline void face_profile(const Diagram& d, int f, int& gen, long long& len) {
    const auto& cyc = d.faces[static_cast<std::size_t>(f)];
    gen = d.darts[static_cast<std::size_t>(cyc[0])].label.gen;
    len = 0;
    for (int x : cyc) len += d.darts[static_cast<std::size_t>(x)].label.gen == gen;
}

inline DiagramStats statistics(const Diagram& d, const TauSpec& spec) {
    DiagramStats st;
    for (const Selector& s : spec) {
        long long v = 0;
        for (int f = 0; f < d.face_count(); ++f) {
            const auto& cyc = d.faces[static_cast<std::size_t>(f)];
            long long per = static_cast<long long>(cyc.size());
            if (s.kind == Selector::Kind::faces_with_label) {
                long long len = 0;
                for (int x : cyc) len += d.darts[static_cast<std::size_t>(x)].label.gen == s.gen;
                v += len > 0 ? s.value(s.gen, len, per) : 0;
            } else {
                int g;
                long long len;
                face_profile(d, f, g, len);
                v += s.value(g, len, per);
            }
        }
        st.tau.push_back(v);
    }
    int V = 0;
    std::vector<int> vert = d.vertices(&V);
    std::vector<int> deg(static_cast<std::size_t>(V), 0), fdeg(static_cast<std::size_t>(V), 0);
    for (std::size_t x = 0; x < d.darts.size(); ++x) ++deg[static_cast<std::size_t>(vert[x])];
    for (const auto& f : d.faces)
        for (int x : f) ++fdeg[static_cast<std::size_t>(vert[static_cast<std::size_t>(x)])];
    for (int v = 0; v < V; ++v) {
        ++st.vertex_degree[deg[static_cast<std::size_t>(v)]];
        ++st.vertex_face_degree[fdeg[static_cast<std::size_t>(v)]];
    }
    return st;
}

// Maximal a_i-bands (i >= 2) of a diagram over a Baumslag-Solitar presentation.
inline std::vector<Band> a2_bands(const Diagram& d) {
    const auto* bs = std::get_if<BaumslagSolitar>(&d.pres);
    if (!bs) throw Error(ErrorCode::precondition_violated, "bands need a Baumslag-Solitar presentation");
    std::vector<int> face_of(d.darts.size(), -1);
    for (std::size_t f = 0; f < d.faces.size(); ++f)
        for (int x : d.faces[f]) face_of[static_cast<std::size_t>(x)] = static_cast<int>(f);

    std::vector<Band> bands;
    std::vector<char> used(d.faces.size(), 0);
    for (std::size_t f0 = 0; f0 < d.faces.size(); ++f0) {
        if (used[f0]) continue;
        // collect the component through a_2 edges
        std::vector<int> comp{static_cast<int>(f0)};
        used[f0] = 1;
        for (std::size_t q = 0; q < comp.size(); ++q)
            for (int x : d.faces[static_cast<std::size_t>(comp[q])]) {
                if (d.darts[static_cast<std::size_t>(x)].label.gen == 1) continue;
                int g = face_of[static_cast<std::size_t>(d.darts[static_cast<std::size_t>(x)].inv)];
                if (g >= 0 && !used[static_cast<std::size_t>(g)]) used[static_cast<std::size_t>(g)] = 1, comp.push_back(g);
            }
        // merge face cycles along internal a_2 edges
        std::vector<char> in(d.faces.size(), 0);
        for (int g : comp) in[static_cast<std::size_t>(g)] = 1;
        std::vector<int> ends;
        for (int g : comp)
            for (int x : d.faces[static_cast<std::size_t>(g)])
                if (d.darts[static_cast<std::size_t>(x)].label.gen != 1 &&
                    face_of[static_cast<std::size_t>(d.darts[static_cast<std::size_t>(x)].inv)] < 0)
                    ends.push_back(x);
        bool internal_ok = true;
        for (int g : comp)
            for (int x : d.faces[static_cast<std::size_t>(g)]) {
                int y = d.darts[static_cast<std::size_t>(x)].inv;
                if (d.darts[static_cast<std::size_t>(x)].label.gen != 1 && face_of[static_cast<std::size_t>(y)] == g)
                    internal_ok = false;
            }
        if (ends.size() != 2 || !internal_ok)
            throw Error(ErrorCode::closed_band_found, "band through face " + std::to_string(f0) + " is not a chain");

        Band band;
        band.gen = d.darts[static_cast<std::size_t>(ends[0])].label.gen;
        // walk the chain from the face holding ends[0]
        int cur = face_of[static_cast<std::size_t>(ends[0])];
        int entry = ends[0];
        std::vector<int> side_a, side_b;
        for (std::size_t step = 0; step < comp.size(); ++step) {
            band.faces.push_back(cur);
            const auto& cyc = d.faces[static_cast<std::size_t>(cur)];
            std::size_t L = cyc.size();
            std::size_t pe = static_cast<std::size_t>(std::find(cyc.begin(), cyc.end(), entry) - cyc.begin());
            std::size_t px = pe;
            for (std::size_t t = 1; t < L; ++t)
                if (d.darts[static_cast<std::size_t>(cyc[(pe + t) % L])].label.gen != 1) px = (pe + t) % L;
            // a_1 darts strictly after entry up to exit, and after exit up to entry
            for (std::size_t t = (pe + 1) % L; t != px; t = (t + 1) % L) side_a.push_back(cyc[t]);
            std::vector<int> back;
            for (std::size_t t = (px + 1) % L; t != pe; t = (t + 1) % L) back.push_back(cyc[t]);
            side_b.insert(side_b.begin(), back.begin(), back.end());
            int exit = cyc[px];
            if (step + 1 == comp.size()) {
                band.f1 = {entry};
                band.f2 = {exit};
                break;
            }
            int nxt = face_of[static_cast<std::size_t>(d.darts[static_cast<std::size_t>(exit)].inv)];
            if (nxt < 0 || !in[static_cast<std::size_t>(nxt)])
                throw Error(ErrorCode::closed_band_found, "band chain broken");
            entry = d.darts[static_cast<std::size_t>(exit)].inv;
            cur = nxt;
        }
        if (band.faces.size() != comp.size()) throw Error(ErrorCode::closed_band_found, "band is not a simple chain");
        band.s1 = side_a;
        band.s2 = side_b;
        // orient so that f1 reads a_i^{+1}
        if (d.darts[static_cast<std::size_t>(band.f1[0])].label.sign < 0) {
            std::swap(band.f1, band.f2);
            std::swap(band.s1, band.s2);
            std::reverse(band.faces.begin(), band.faces.end());
        }
        bands.push_back(std::move(band));
    }
    return bands;
}

// Label equations of a band: f1 s1 f2 s2 reads a2 a1^{k n1} a2^-1 a1^{-k n2}
// up to orientation.
inline bool band_labels_ok(const Diagram& d, const Band& b) {
    const auto& bs = std::get<BaumslagSolitar>(d.pres);
    auto lab = [&](int x) { return d.darts[static_cast<std::size_t>(x)].label; };
    if (b.f1.size() != 1 || b.f2.size() != 1 || b.gen != 2) return false;
    Word w{lab(b.f1[0])};
    for (int x : b.s1) w.push_back(lab(x));
    w.push_back(lab(b.f2[0]));
    for (int x : b.s2) w.push_back(lab(x));
    long long k = static_cast<long long>(b.faces.size());
    BaumslagSolitar big = bs;
    big.n1 *= k;
    big.n2 *= k;
    return detail::cyclic_match(w, detail::bs_relator(big));
}

// ---- export / import ----

inline int letter_code(Letter x) { return x.sign * x.gen; }
inline Letter letter_from_code(int c) {
    if (c == 0) throw Error(ErrorCode::input, "label 0");
    return {c < 0 ? -c : c, c < 0 ? -1 : 1};
}

inline std::string export_json(const Diagram& d) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["generators"] = generator_names(d.pres);
    std::vector<int> vert = d.vertices();
    nlohmann::ordered_json darts = nlohmann::ordered_json::array();
    for (std::size_t x = 0; x < d.darts.size(); ++x)
        darts.push_back({{"id", x}, {"inv", d.darts[x].inv}, {"label", letter_code(d.darts[x].label)}, {"vertex", vert[x]}});
    j["darts"] = darts;
    j["faces"] = d.faces;
    j["boundary"] = d.boundary;
    j["basepoint"] = 0;
    return j.dump(1);
}

inline Diagram import_json(const std::string& text, const Presentation& p) {
    Diagram d;
    d.pres = p;
    try {
        auto j = nlohmann::json::parse(text);
        if (j.value("schema", 0) != 1) throw Error(ErrorCode::input, "unsupported diagram schema");
        const auto& darts = j.at("darts");
        d.darts.resize(darts.size());
        for (const auto& x : darts) {
            std::size_t id = x.at("id").get<std::size_t>();
            if (id >= d.darts.size()) throw Error(ErrorCode::input, "dart id out of range");
            d.darts[id].inv = x.at("inv").get<int>();
            d.darts[id].label = letter_from_code(x.at("label").get<int>());
        }
        d.faces = j.at("faces").get<std::vector<std::vector<int>>>();
        d.boundary = j.at("boundary").get<std::vector<int>>();
        int base = j.value("basepoint", 0);
        if (base != 0) {
            std::vector<int> vert = d.vertices();
            auto it = std::find_if(d.boundary.begin(), d.boundary.end(),
                                   [&](int x) { return x >= 0 && static_cast<std::size_t>(x) < vert.size() && vert[static_cast<std::size_t>(x)] == base; });
            if (it == d.boundary.end()) throw Error(ErrorCode::basepoint_not_on_boundary, std::to_string(base));
            std::rotate(d.boundary.begin(), it, d.boundary.end());
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::input, std::string("diagram json: ") + e.what());
    }
    return d;
}

inline std::string export_dot(const Diagram& d) {
    const auto& names = generator_names(d.pres);
    int V = 0;
    std::vector<int> vert = d.vertices(&V);
    std::ostringstream os;
    os << "graph diagram {\n";
    for (int v = 0; v < V; ++v) os << "  v" << v << " [shape=point];\n";
    for (std::size_t x = 0; x < d.darts.size(); ++x) {
        int y = d.darts[x].inv;
        if (static_cast<int>(x) > y) continue;
        os << "  v" << vert[x] << " -- v" << vert[static_cast<std::size_t>(y)] << " [label=\""
           << format_letter(d.darts[x].label, names) << "\"];\n";
    }
    for (int f = 0; f < d.face_count(); ++f)
        os << "  f" << f << " [shape=plaintext,label=\"F" << f << ": " << format_word(d.face_label(f), names)
           << "\"];\n";
    os << "}\n";
    return os.str();
}

// ---- construction ----

// Arena used by the reconstruction paths. Partial diagrams are dart lists
// (boundary fragments); faces accumulate in the arena.
class DiagramBuilder {
public:
    explicit DiagramBuilder(Presentation p) { d_.pres = std::move(p); }

    // New edge labelled x; returns the dart reading x (its inverse is dart+1).
    int edge(Letter x) {
        int a = static_cast<int>(d_.darts.size());
        d_.darts.push_back({a + 1, x});
        d_.darts.push_back({a, x.inv()});
        return a;
    }
    int inv(int x) const { return d_.darts[static_cast<std::size_t>(x)].inv; }
    Letter label(int x) const { return d_.darts[static_cast<std::size_t>(x)].label; }
    void face(std::vector<int> cyc) { d_.faces.push_back(std::move(cyc)); }

    // Fold: the darts x and y become mutual inverses; their old partners are dropped.
    void fold(int x, int y) {
        dead_.push_back(inv(x));
        dead_.push_back(inv(y));
        d_.darts[static_cast<std::size_t>(x)].inv = y;
        d_.darts[static_cast<std::size_t>(y)].inv = x;
    }

    Diagram finish(std::vector<int> boundary) {
        d_.boundary = std::move(boundary);
        if (dead_.empty()) return std::move(d_);
        std::vector<int> id(d_.darts.size(), 0);
        for (int x : dead_) id[static_cast<std::size_t>(x)] = -1;
        int next = 0;
        for (auto& v : id) v = v < 0 ? -1 : next++;
        Diagram out;
        out.pres = d_.pres;
        for (std::size_t x = 0; x < d_.darts.size(); ++x)
            if (id[x] >= 0) out.darts.push_back({id[static_cast<std::size_t>(d_.darts[x].inv)], d_.darts[x].label});
        auto remap = [&](const std::vector<int>& cyc) {
            std::vector<int> r;
            for (int x : cyc) r.push_back(id[static_cast<std::size_t>(x)]);
            return r;
        };
        for (const auto& f : d_.faces) out.faces.push_back(remap(f));
        out.boundary = remap(d_.boundary);
        return out;
    }
    Diagram& raw() { return d_; }

private:
    Diagram d_;
    std::vector<int> dead_;
};

// Boundary darts for a^e plus one face reading the inverse, all glued into a polygon.
inline std::vector<int> polygon(DiagramBuilder& b, Letter x, long long len) {
    std::vector<int> bd;
    for (long long t = 0; t < len; ++t) bd.push_back(b.edge(x));
    std::vector<int> f;
    for (auto it = bd.rbegin(); it != bd.rend(); ++it) f.push_back(b.inv(*it));
    b.face(std::move(f));
    return bd;
}

} // namespace vkd

#endif

#ifndef VKD_IO_HPP
#define VKD_IO_HPP

#include "polygon.hpp"

#include <fstream>
#include <json.hpp>

namespace vkd {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::input, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

namespace detail {

inline nlohmann::json parse_json(const std::string& text, const char* what) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::input, std::string(what) + ": " + e.what());
    }
}

template <class F>
auto json_field(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::input, std::string(what) + ": " + e.what());
    }
}

} // namespace detail

inline Presentation presentation_from_json(const std::string& text) {
    auto j = detail::parse_json(text, "presentation");
    return detail::json_field("presentation", [&]() -> Presentation {
        std::string type = j.at("type").get<std::string>();
        auto names = j.at("generators").get<std::vector<std::string>>();
        if (type == "cyclic") {
            CyclicProducts p{names, {}};
            for (const auto& e : j.at("exponent_sets")) {
                std::string kind = e.at("kind").get<std::string>();
                if (kind == "zero")
                    p.sets.push_back(ExponentSet::zero());
                else if (kind == "exactly")
                    p.sets.push_back(ExponentSet::exactly(e.at("n").get<long long>()));
                else if (kind == "multiples")
                    p.sets.push_back(ExponentSet::multiples(e.at("n").get<long long>()));
                else
                    throw Error(ErrorCode::input, "unknown exponent set kind '" + kind + "'");
            }
            check_presentation(p);
            return p;
        }
        if (type == "baumslag_solitar") {
            BaumslagSolitar p{names, j.at("n1").get<long long>(), j.at("n2").get<long long>()};
            check_presentation(p);
            return p;
        }
        throw Error(ErrorCode::input, "unknown presentation type '" + type + "'");
    });
}

inline std::string presentation_to_json(const Presentation& p) {
    nlohmann::ordered_json j;
    if (const auto* c = std::get_if<CyclicProducts>(&p)) {
        j["type"] = "cyclic";
        j["generators"] = c->names;
        j["exponent_sets"] = nlohmann::ordered_json::array();
        for (const auto& e : c->sets) {
            nlohmann::ordered_json s;
            switch (e.kind) {
            case ExponentSet::Kind::zero: s["kind"] = "zero"; break;
            case ExponentSet::Kind::exactly: s["kind"] = "exactly"; s["n"] = e.n; break;
            case ExponentSet::Kind::multiples: s["kind"] = "multiples"; s["n"] = e.n; break;
            }
            j["exponent_sets"].push_back(s);
        }
    } else {
        const auto& b = std::get<BaumslagSolitar>(p);
        j["type"] = "baumslag_solitar";
        j["generators"] = b.names;
        j["n1"] = b.n1;
        j["n2"] = b.n2;
    }
    return j.dump();
}

inline PolyCurve curve_from_json(const std::string& text) {
    auto j = detail::parse_json(text, "curve");
    return detail::json_field("curve", [&] {
        PolyCurve c;
        for (const auto& v : j.at("vertices")) c.vertices.push_back({v.at(0).get<long long>(), v.at(1).get<long long>()});
        if (c.vertices.size() > 1 && c.vertices.front() == c.vertices.back()) c.vertices.pop_back();
        check_curve(c);
        return c;
    });
}

inline std::string curve_to_json(const PolyCurve& c) {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (Point p : c.vertices) j["vertices"].push_back({p.x, p.y});
    return j.dump();
}

struct TessellationPath {
    Tessellation kind = Tessellation::triangular;
    std::vector<Point> path;
};

inline TessellationPath tessellation_path_from_json(const std::string& text) {
    auto j = detail::parse_json(text, "tessellation path");
    return detail::json_field("tessellation path", [&] {
        TessellationPath t;
        std::string kind = j.at("tessellation").get<std::string>();
        if (kind == "triangular")
            t.kind = Tessellation::triangular;
        else if (kind == "hexagonal")
            t.kind = Tessellation::hexagonal;
        else
            throw Error(ErrorCode::input, "unknown tessellation '" + kind + "'");
        for (const auto& v : j.at("path")) t.path.push_back({v.at(0).get<long long>(), v.at(1).get<long long>()});
        return t;
    });
}

} // namespace vkd

#endif

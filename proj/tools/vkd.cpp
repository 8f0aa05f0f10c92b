// Command-line front end for the word-problem, diagram and area solvers.
#include "vkd/vkd.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace vkd;

namespace {

enum Exit { ok = 0, negative = 1, input_error = 2, budget = 3 };

struct Common {
    std::string presentation;
    std::string word;
    std::string word_file;
    std::string format = "text";
};

// "bs:N1:N2" or "cyclic:S,S,..." with S one of 0, =n, *n; anything else is a
// file path or inline JSON.
Presentation load_presentation(const std::string& spec) {
    if (spec.empty()) throw Error(ErrorCode::input, "a presentation is required (--presentation)");
    if (spec.rfind("bs:", 0) == 0) {
        long long n1 = 0, n2 = 0;
        char sep = 0;
        std::istringstream ss(spec.substr(3));
        if (!(ss >> n1 >> sep >> n2) || sep != ':') throw Error(ErrorCode::input, "expected bs:N1:N2");
        BaumslagSolitar p = baumslag_solitar(n1, n2);
        check_presentation(p);
        return p;
    }
    if (spec.rfind("cyclic:", 0) == 0) {
        CyclicProducts p;
        std::istringstream ss(spec.substr(7));
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item == "0") {
                p.sets.push_back(ExponentSet::zero());
                continue;
            }
            if (item.size() < 2 || (item[0] != '=' && item[0] != '*')) throw Error(ErrorCode::input, "bad exponent set '" + item + "'");
            long long n = std::stoll(item.substr(1));
            p.sets.push_back(item[0] == '=' ? ExponentSet::exactly(n) : ExponentSet::multiples(n));
        }
        p.names = default_names(p.m());
        check_presentation(p);
        return p;
    }
    if (!spec.empty() && spec.front() == '{') return presentation_from_json(spec);
    return presentation_from_json(read_file(spec));
}

std::string word_text(const Common& c) {
    if (!c.word.empty() && !c.word_file.empty()) throw Error(ErrorCode::input, "give either --word or --word-file");
    if (!c.word_file.empty()) return read_file(c.word_file);
    return c.word;
}

void add_common(CLI::App* sub, Common& c, bool needs_presentation = true) {
    auto* opt = sub->add_option("-p,--presentation", c.presentation, "presentation file, inline JSON, bs:N1:N2 or cyclic:S,...");
    if (needs_presentation) opt->required();
    sub->add_option("-w,--word", c.word, "word text");
    sub->add_option("--word-file", c.word_file, "file holding the word");
    sub->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
}

void emit(const Common& c, const nlohmann::ordered_json& answer, const std::string& cost, const std::string& text,
          const std::string& cert = "") {
    if (c.format == "json") {
        nlohmann::ordered_json j;
        j["answer"] = answer;
        j["cost"] = cost.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(cost);
        j["certificate_path"] = cert.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(cert);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << text << "\n";
    }
}

std::string tau_str(const std::vector<long long>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ", " : "") + std::to_string(t[i]);
    return s + ")";
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::input, "cannot write " + path);
    out << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Word problems, van Kampen diagrams and homotopy areas"};
    app.require_subcommand(1);

    Common c;
    long long n = 0;
    std::string out_fmt = "json", tau, ops_file, cert_out, path_file, trace_file, curve_file, diagram_out;
    long long M = 0, L = 0, nexp = 0, K = 0, budget_nodes = 10'000'000, certified_M = 0;
    bool use_dp = false;

    auto* wp = app.add_subcommand("wp", "decide whether the word is trivial");
    add_common(wp, c);
    auto* precise = app.add_subcommand("precise", "minimal diagram has exactly n faces");
    add_common(precise, c);
    precise->add_option("n", n)->required()->check(CLI::NonNegativeNumber);
    auto* bounded = app.add_subcommand("bounded", "some diagram has at most n faces");
    add_common(bounded, c);
    bounded->add_option("n", n)->required()->check(CLI::NonNegativeNumber);
    auto* width_cmd = app.add_subcommand("width", "number of conjugates of generator powers");
    add_common(width_cmd, c, false);
    auto* spell = app.add_subcommand("spelling", "number of conjugates of single letters");
    add_common(spell, c, false);
    auto* diag = app.add_subcommand("diagram", "minimal van Kampen diagram");
    add_common(diag, c);
    diag->add_option("--out", out_fmt, "json or dot")->check(CLI::IsMember({"json", "dot"}));
    diag->add_option("--tau", tau, "face statistics, e.g. faces,label:a,len:1:4 (prefix - to maximize)");
    auto* certify = app.add_subcommand("certify", "verify an operational sequence and build its diagram");
    add_common(certify, c);
    certify->add_option("--ops", ops_file, "certificate file")->required();
    certify->add_option("--diagram-out", diagram_out, "write the diagram as JSON");
    auto* search = app.add_subcommand("search", "bounded exhaustive bracket search");
    add_common(search, c);
    search->add_option("--budget", budget_nodes, "node limit")->check(CLI::PositiveNumber);
    search->add_option("--cert-out", cert_out, "write the witness certificate");
    auto* certificate = app.add_subcommand("certificate", "certificate from the Baumslag-Solitar DP");
    add_common(certificate, c);
    certificate->add_option("--cert-out", cert_out, "write the certificate to a file");
    auto* m2cmd = app.add_subcommand("m2", "type-2 homotopy count of a closed lattice path");
    m2cmd->add_option("--path", path_file, "path file 'x y : ENWS...'")->required();
    m2cmd->add_option("--trace", trace_file, "write the homotopy moves");
    m2cmd->add_flag("--dp", use_dp, "use the certified dynamic program");
    m2cmd->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));
    auto* area = app.add_subcommand("area", "homotopy area of a polygonal curve");
    area->add_option("--curve", curve_file, "curve JSON")->required();
    auto* oM = area->add_option("--M", M, "refinement; reports the approximation")->check(CLI::PositiveNumber);
    auto* oL = area->add_option("--L", L, "area is a multiple of 1/L")->check(CLI::PositiveNumber);
    auto* on = area->add_option("--n", nexp, "exponent with L < |c|^n / 2")->check(CLI::PositiveNumber);
    auto* oK = area->add_option("--K", K, "intersection coordinates lie in (1/K)Z")->check(CLI::PositiveNumber);
    area->add_option("--certified-M", certified_M, "smaller refinement certified to keep the error below 1/(2L)");
    area->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));
    oL->needs(on);
    on->needs(oL);
    oM->excludes(oL)->excludes(oK);
    oK->excludes(oL);
    auto* trihex = app.add_subcommand("tri-hex-area", "area of a closed path in the triangle or hexagon tessellation");
    trihex->add_option("--path", path_file, "tessellation path JSON")->required();
    trihex->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));
    long long prime_n = 0;
    auto* prime = app.add_subcommand("gen-prime-curve", "the prime curve c(n)");
    prime->add_option("n", prime_n)->required()->check(CLI::Range(2LL, 100000LL));
    prime->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? ok : input_error;
    }

    try {
        if (*wp || *precise || *bounded || *diag || *certify || *search || *certificate) {
            Presentation p = load_presentation(c.presentation);
            Word w = parse_word(word_text(c), p);
            check_word(w, alphabet_size(p));
            if (*wp) {
                bool t = is_trivial(w, p);
                emit(c, t, "", t ? "trivial" : "nontrivial");
                return t ? ok : negative;
            }
            if (*precise || *bounded) {
                Cost cost = min_faces(w, p);
                bool yes = cost.is_finite() && (*precise ? cost == Cost(n) : cost <= Cost(n));
                emit(c, yes, cost.str(), cost.str());
                return yes ? ok : negative;
            }
            if (*diag) {
                if (!tau.empty()) {
                    const auto* cp = std::get_if<CyclicProducts>(&p);
                    if (!cp) throw Error(ErrorCode::input, "--tau applies to cyclic presentations");
                    auto [t, d] = mu2_lex(w, *cp, parse_tau(tau, cp->names));
                    if (out_fmt == "json") {
                        auto j = nlohmann::ordered_json::parse(export_json(d));
                        j["tau"] = t;
                        std::cout << j.dump() << "\n";
                    } else {
                        std::cout << "// tau = " << tau_str(t) << "\n" << export_dot(d);
                    }
                    return ok;
                }
                Diagram d = minimal_diagram(w, p);
                std::cout << (out_fmt == "json" ? export_json(d) + "\n" : export_dot(d));
                return ok;
            }
            if (*certify) {
                std::istringstream in(read_file(ops_file));
                std::vector<ElemOp> ops = parse_ops(in);
                FinalStats st;
                try {
                    st = verify_sequence(w, p, ops);
                } catch (const Error& e) {
                    std::cerr << e.what() << "\n";
                    emit(c, false, "", "rejected");
                    return negative;
                }
                if (!st.accepted) {
                    emit(c, false, "", "rejected: sequence does not end in a final system");
                    return negative;
                }
                Diagram d = build_diagram(w, p, ops);
                auto bad = validate(d, p);
                for (const auto& v : bad) std::cerr << "diagram violation: " << v << "\n";
                if (!diagram_out.empty()) write_text(diagram_out, export_json(d) + "\n");
                emit(c, bad.empty(), st.faces.str(),
                     "accepted faces=" + st.faces.str() + " peak=" + std::to_string(st.max_concurrent), ops_file);
                return bad.empty() ? ok : negative;
            }
            if (*search) {
                auto hit = search_min_faces(w, p, default_size_bound(w, p), SearchOptions{budget_nodes});
                if (!hit) {
                    emit(c, false, "inf", "not found");
                    return negative;
                }
                if (!cert_out.empty()) write_text(cert_out, format_ops(hit->ops));
                emit(c, true, hit->faces.str(), hit->faces.str() + (cert_out.empty() ? "\n" + format_ops(hit->ops) : ""), cert_out);
                return ok;
            }
            const auto* bs = std::get_if<BaumslagSolitar>(&p);
            if (!bs) throw Error(ErrorCode::input, "DP certificates are available for Baumslag-Solitar presentations only");
            std::string cert = format_ops(certificate_bs(w, *bs));
            if (!cert_out.empty()) write_text(cert_out, cert);
            emit(c, true, mu3(w, *bs).str(), cert_out.empty() ? cert : mu3(w, *bs).str(), cert_out);
            return ok;
        }
        if (*width_cmd || *spell) {
            std::string text = word_text(c);
            std::vector<std::string> names =
                c.presentation.empty() ? infer_names(text) : generator_names(load_presentation(c.presentation));
            Word w = parse_word(text, names);
            int m = std::max<int>(1, static_cast<int>(names.size()));
            Cost v = *width_cmd ? width(w, m) : spelling_length(w, m);
            emit(c, v.is_finite(), v.str(), v.str());
            return v.is_finite() ? ok : negative;
        }
        if (*m2cmd) {
            LatticePath path = parse_path(read_file(path_file));
            Cost v = m2(path, use_dp ? M2Engine::dp : M2Engine::winding);
            if (!trace_file.empty()) {
                std::string trace;
                for (const auto& mv : homotopy_sequence(path)) trace += format_move(mv) + "\n";
                write_text(trace_file, trace);
            }
            emit(c, v.str(), v.str(), v.str());
            return ok;
        }
        if (*area) {
            PolyCurve curve = curve_from_json(read_file(curve_file));
            Rational a;
            std::string note;
            if (M > 0) {
                a = approx_area(curve, M);
                note = "approximation at M=" + std::to_string(M);
            } else if (L > 0) {
                AreaResult r = area_with_denominator(curve, L, nexp, certified_M);
                a = r.area;
                note = r.escape_hatch ? "caller-certified M=" + r.M.str() : "M=" + r.M.str();
            } else {
                a = area_K(curve, K > 0 ? K : 1, certified_M);
                if (certified_M > 0) note = "caller-certified M=" + std::to_string(certified_M);
            }
            if (!note.empty()) std::cerr << note << "\n";
            emit(c, rational_str(a), rational_str(a), rational_str(a) + "  (" + rational_preview(a) + ")");
            return ok;
        }
        if (*trihex) {
            TessellationPath t = tessellation_path_from_json(read_file(path_file));
            Rational a = tri_hex_area(t.path, t.kind);
            emit(c, rational_str(a), rational_str(a), rational_str(a));
            return ok;
        }
        if (*prime) {
            PrimeCurve pc = gen_prime_curve(prime_n);
            if (c.format == "json") {
                nlohmann::ordered_json j = nlohmann::ordered_json::parse(curve_to_json(pc.curve));
                j["t_length"] = pc.expected_t_length;
                j["expected_area"] = rational_str(pc.expected_area);
                std::cout << j.dump() << "\n";
            } else {
                std::cout << curve_to_json(pc.curve) << "\n";
                std::cerr << "|c|_T = " << pc.expected_t_length << ", area = " << rational_str(pc.expected_area) << "\n";
            }
            return ok;
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        if (e.code() == ErrorCode::budget_exceeded) return budget;
        if (e.code() == ErrorCode::not_trivial_in_group || e.code() == ErrorCode::sequence_rejected) return negative;
        return input_error;
    } catch (const std::exception& e) {
        std::cerr << "input-error: " << e.what() << "\n";
        return input_error;
    }
    return ok;
}

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "coxsplit/corpus.hpp"
#include "coxsplit/errors.hpp"
#include "coxsplit/measure.hpp"

using nlohmann::json;
using namespace coxsplit;

namespace {

struct Common {
    std::string system_path;
    std::string caps_text;
    std::string out_path;
    bool text = false;
    int search = 6;
};

Caps resolve_caps(const Common& c) {
    Caps caps;
    if (const char* env = std::getenv("COXSPLIT_CAPS")) caps = Caps::parse(env, caps);
    if (!c.caps_text.empty()) caps = Caps::parse(c.caps_text, caps);
    return caps;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

CoxeterSystem load_system(const Common& c) {
    if (c.system_path.empty()) throw InputError("--system is required");
    return CoxeterSystem::from_json_string(read_file(c.system_path));
}

void write_out(const Common& c, const std::string& payload) {
    if (c.out_path.empty()) {
        std::cout << payload;
        if (payload.empty() || payload.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(c.out_path, std::ios::binary);
    if (!out) throw InputError("cannot write file: " + c.out_path);
    out << payload;
    if (payload.empty() || payload.back() != '\n') out << '\n';
}

void emit(const Common& c, const json& report, const std::string& text) {
    write_out(c, c.text ? text : report.dump(2));
}

json names_json(const CoxeterSystem& sys, Subset a) {
    json arr = json::array();
    for (const auto& n : sys.subset_names(a)) arr.push_back(n);
    return arr;
}

std::string names_str(const CoxeterSystem& sys, Subset a) {
    std::string out = "{";
    bool first = true;
    for (const auto& n : sys.subset_names(a)) {
        if (!first) out += ",";
        out += n;
        first = false;
    }
    return out + "}";
}

Word parse_word(const CoxeterSystem& sys, const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return word_from_tokens(sys, tokens);
}

std::string word_str(const CoxeterSystem& sys, const Word& w) {
    return w.empty() ? std::string("e") : word_to_string(sys, w);
}

void add_common(CLI::App* cmd, Common& c, bool with_search = false) {
    cmd->add_option("--system", c.system_path, "Coxeter system JSON file");
    cmd->add_option("--caps", c.caps_text,
                    "resource caps, e.g. generators=16,closure=200000,order=1024 "
                    "(COXSPLIT_CAPS is the fallback)");
    cmd->add_option("--out", c.out_path, "write the report to a file instead of stdout");
    cmd->add_flag("--text", c.text, "human-readable report instead of JSON");
    if (with_search)
        cmd->add_option("--search", c.search, "conjugator search bound L (default 6)");
}

json separator_json(const CoxeterSystem& sys, const SeparatorRecord& rec, bool with_minimal) {
    json j{{"c", names_json(sys, rec.c)},
           {"e", names_json(sys, rec.e)},
           {"t", names_json(sys, rec.t)}};
    json comps = json::array();
    for (Subset comp : rec.components) comps.push_back(names_json(sys, comp));
    j["components"] = comps;
    if (with_minimal) {
        j["minimal"] = rec.minimal;
        j["witness"] = rec.witness ? names_json(sys, *rec.witness) : json(nullptr);
    }
    return j;
}

std::string status_name(Measure::StepStatus s) {
    switch (s) {
        case Measure::StepStatus::CertifiedDecrease: return "certified-decrease";
        case Measure::StepStatus::Consistent: return "consistent";
        default: return "violation";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"Strong accessibility toolkit for finitely generated Coxeter groups"};
    app.require_subcommand(1);
    int exit_code = 0;

    // ---- analyze ----------------------------------------------------------
    auto* analyze = app.add_subcommand("analyze", "separators, minimality, K(W,S), finiteness");
    analyze->require_subcommand(1);
    static Common ac;
    static std::string subset_csv;
    static bool dedupe = false;
    static long long order_cap_flag = 0;
    static int conj_search = -1;

    auto* a_sep = analyze->add_subcommand("separators", "all separating subsets of Γ");
    add_common(a_sep, ac);
    a_sep->callback([&] {
        CoxeterSystem sys = load_system(ac);
        auto seps = enumerate_separators(sys, resolve_caps(ac));
        json arr = json::array();
        std::string text;
        for (const auto& rec : seps) {
            arr.push_back(separator_json(sys, rec, false));
            text += names_str(sys, rec.c) + "  E=" + names_str(sys, rec.e) +
                    "  components=" + std::to_string(rec.components.size()) + "\n";
        }
        emit(ac, json{{"command", "analyze separators"}, {"count", seps.size()}, {"separators", arr}},
             "separators: " + std::to_string(seps.size()) + "\n" + text);
    });

    auto* a_min = analyze->add_subcommand("minimal", "separators classified by minimality");
    add_common(a_min, ac);
    a_min->add_option("--conjugacy-search", conj_search,
                      "also search conjugators of length <= L for non-separating subsets");
    a_min->callback([&] {
        CoxeterSystem sys = load_system(ac);
        Caps caps = resolve_caps(ac);
        auto seps = classify_minimal(sys, caps);
        json arr = json::array();
        std::string text;
        for (const auto& rec : seps) {
            arr.push_back(separator_json(sys, rec, true));
            text += names_str(sys, rec.c) + (rec.minimal ? "  minimal" : "  non-minimal") +
                    "  E=" + names_str(sys, rec.e) +
                    (rec.witness ? "  witness=" + names_str(sys, *rec.witness) : "") + "\n";
        }
        json report{{"command", "analyze minimal"}, {"count", seps.size()}, {"separators", arr}};
        if (conj_search >= 0) {
            WordEngine engine(sys, caps);
            auto hits = conjugacy_search(engine, conj_search, caps);
            json harr = json::array();
            text += "bounded search (L=" + std::to_string(conj_search) + "):\n";
            for (const auto& h : hits) {
                harr.push_back(json{{"c", names_json(sys, h.c)},
                                    {"witness", word_str(sys, h.witness)},
                                    {"image", names_json(sys, h.image)},
                                    {"target", names_json(sys, h.target)},
                                    {"targetMinimal", h.target_minimal}});
                text += "  " + names_str(sys, h.c) + " -> " + names_str(sys, h.image) + " by " +
                        word_str(sys, h.witness) + " inside " + names_str(sys, h.target) +
                        (h.target_minimal ? " (minimal)" : "") + "\n";
            }
            report["boundedSearch"] = harr;
            report["boundedSearchRadius"] = conj_search;
        }
        emit(ac, report, text);
    });

    auto* a_k = analyze->add_subcommand("kgroups", "enumerate K(W,S) candidates");
    add_common(a_k, ac);
    a_k->add_flag("--dedupe", dedupe, "collapse records with identical canonical form");
    a_k->add_option("--order-cap", order_cap_flag, "finite subgroup order cap override");
    a_k->callback([&] {
        CoxeterSystem sys = load_system(ac);
        Caps caps = resolve_caps(ac);
        if (order_cap_flag > 0) caps.order_cap = static_cast<std::size_t>(order_cap_flag);
        WordEngine engine(sys, caps);
        KEnumeration k = enumerate_k(engine, dedupe, caps);
        json arr = json::array();
        std::string text;
        for (const auto& r : k.records) {
            json words = json::array();
            for (const auto& w : r.finite_factor) words.push_back(word_str(sys, w));
            arr.push_back(json{{"e", names_json(sys, r.e)}, {"finiteFactor", words}});
            text += "E=" + names_str(sys, r.e) + "  |F|=" + std::to_string(r.finite_factor.size()) + "\n";
        }
        emit(ac,
             json{{"command", "analyze kgroups"},
                  {"rawCount", k.raw_count},
                  {"count", k.records.size()},
                  {"dedupe", dedupe},
                  {"kgroups", arr}},
             "raw=" + std::to_string(k.raw_count) + " records=" + std::to_string(k.records.size()) +
                 (dedupe ? " (deduped)\n" : "\n") + text);
    });

    auto* a_ft = analyze->add_subcommand("finite-type", "finite-type verdict for a subset");
    add_common(a_ft, ac);
    auto* ft_subset = a_ft->add_option("--subset", subset_csv, "comma-separated generators (default S)");
    a_ft->callback([&] {
        CoxeterSystem sys = load_system(ac);
        Subset a = ft_subset->count() ? sys.subset_from_csv(subset_csv) : sys.full_set();
        FiniteTypeVerdict v = is_finite_type(sys, a);
        json comps = json::array();
        std::string text = names_str(sys, a) + (v.finite ? " finite" : " infinite");
        if (v.finite) text += " order=" + v.order.str();
        text += "\n";
        for (const auto& ct : v.components) {
            comps.push_back(json{{"generators", names_json(sys, ct.generators)},
                                 {"tag", ct.tag},
                                 {"order", ct.order.str()}});
            text += "  " + names_str(sys, ct.generators) + "  " + ct.tag + "\n";
        }
        emit(ac,
             json{{"command", "analyze finite-type"},
                  {"subset", names_json(sys, a)},
                  {"finite", v.finite},
                  {"order", v.order.str()},
                  {"components", comps}},
             text);
    });

    auto* a_ea = analyze->add_subcommand("split-ea", "⟨A⟩ = ⟨E⟩ × ⟨T⟩ decomposition");
    add_common(a_ea, ac);
    auto* ea_subset = a_ea->add_option("--subset", subset_csv, "comma-separated generators (default S)");
    a_ea->callback([&] {
        CoxeterSystem sys = load_system(ac);
        Subset a = ea_subset->count() ? sys.subset_from_csv(subset_csv) : sys.full_set();
        SplitEA ea = split_ea(sys, a);
        emit(ac,
             json{{"command", "analyze split-ea"},
                  {"subset", names_json(sys, a)},
                  {"e", names_json(sys, ea.e)},
                  {"t", names_json(sys, ea.t)}},
             "A=" + names_str(sys, a) + "  E=" + names_str(sys, ea.e) + "  T=" + names_str(sys, ea.t) + "\n");
    });

    // ---- word -------------------------------------------------------------
    auto* word = app.add_subcommand("word", "word-problem operations");
    word->require_subcommand(1);
    static Common wc;
    static std::string word_a, word_b, left_csv, right_csv;

    auto* w_red = word->add_subcommand("reduce", "canonical geodesic of a word");
    add_common(w_red, wc);
    w_red->add_option("input", word_a, "word as space-separated generator names")->required();
    w_red->callback([&] {
        CoxeterSystem sys = load_system(wc);
        WordEngine engine(sys, resolve_caps(wc));
        Geodesic g = engine.reduce(parse_word(sys, word_a));
        emit(wc,
             json{{"command", "word reduce"},
                  {"input", word_a},
                  {"canonical", word_str(sys, g.canonical)},
                  {"length", g.length()}},
             word_str(sys, g.canonical) + "  (length " + std::to_string(g.length()) + ")\n");
    });

    auto* w_eq = word->add_subcommand("equal", "do two words name the same element?");
    add_common(w_eq, wc);
    w_eq->add_option("lhs", word_a, "first word")->required();
    w_eq->add_option("rhs", word_b, "second word")->required();
    w_eq->callback([&] {
        CoxeterSystem sys = load_system(wc);
        WordEngine engine(sys, resolve_caps(wc));
        bool eq = engine.equal(parse_word(sys, word_a), parse_word(sys, word_b));
        emit(wc, json{{"command", "word equal"}, {"lhs", word_a}, {"rhs", word_b}, {"equal", eq}},
             std::string(eq ? "equal" : "distinct") + "\n");
    });

    auto* w_lett = word->add_subcommand("lett", "letters of any geodesic of the word");
    add_common(w_lett, wc);
    w_lett->add_option("input", word_a, "word")->required();
    w_lett->callback([&] {
        CoxeterSystem sys = load_system(wc);
        WordEngine engine(sys, resolve_caps(wc));
        Subset l = engine.lett(parse_word(sys, word_a));
        emit(wc, json{{"command", "word lett"}, {"word", word_a}, {"letters", names_json(sys, l)}},
             names_str(sys, l) + "\n");
    });

    auto* w_coset = word->add_subcommand("coset", "minimal double-coset representative");
    add_common(w_coset, wc);
    w_coset->add_option("--left", left_csv, "generators of the left special subgroup");
    w_coset->add_option("--right", right_csv, "generators of the right special subgroup");
    w_coset->add_option("input", word_a, "word")->required();
    w_coset->callback([&] {
        CoxeterSystem sys = load_system(wc);
        WordEngine engine(sys, resolve_caps(wc));
        Subset i = sys.subset_from_csv(left_csv), j = sys.subset_from_csv(right_csv);
        auto [d, k] = engine.special_intersection(i, parse_word(sys, word_a), j);
        emit(wc,
             json{{"command", "word coset"},
                  {"left", names_json(sys, i)},
                  {"right", names_json(sys, j)},
                  {"word", word_a},
                  {"representative", word_str(sys, d.canonical)},
                  {"length", d.length()},
                  {"intersection", names_json(sys, k)}},
             "d=" + word_str(sys, d.canonical) + "  K=" + names_str(sys, k) + "\n");
    });

    // ---- decompose --------------------------------------------------------
    static Common dc;
    static bool with_trace = false;
    auto* dec = app.add_subcommand("decompose", "irreducible visual decomposition over minimal splittings");
    add_common(dec, dc);
    dec->add_flag("--trace", with_trace, "include the replayable move trace");
    dec->callback([&] {
        CoxeterSystem sys = load_system(dc);
        Caps caps = resolve_caps(dc);
        Decomposition d = decompose(sys, caps);
        const json gj = json::parse(d.gog.to_json_string(sys));
        json report{{"command", "decompose"},
                    {"gog", gj},
                    {"moveCount", d.trace.size()},
                    {"looksIrreducible", looks_irreducible(sys, d.gog, caps)}};
        std::string text;
        for (const auto& v : gj["vertices"])
            text += "vertex " + v["id"].dump() + ": " + v["label"].dump() + "\n";
        for (const auto& e : gj["edges"])
            text += "edge " + e["u"].dump() + "-" + e["v"].dump() + ": " + e["label"].dump() + "\n";
        text += "moves: " + std::to_string(d.trace.size()) + "\n";
        if (with_trace) report["trace"] = json::parse(trace_to_json_string(sys, d.trace));
        emit(dc, report, text);
    });

    // ---- validate ---------------------------------------------------------
    static Common vc;
    static std::string gog_path;
    auto* val = app.add_subcommand("validate", "check a decomposition against the validity rules");
    add_common(val, vc);
    val->add_option("--gog", gog_path, "decomposition JSON file")->required();
    val->callback([&] {
        CoxeterSystem sys = load_system(vc);
        VisualGog g = VisualGog::from_json_string(sys, read_file(gog_path));
        auto violations = validate(sys, g);
        json arr = json::array();
        std::string text = violations.empty() ? "valid\n" : "";
        for (const auto& v : violations) {
            const char* kind = "";
            switch (v.kind) {
                case GogViolation::Kind::NotATree: kind = "not-a-tree"; break;
                case GogViolation::Kind::EdgeNotInEndpoint: kind = "edge-not-in-endpoint"; break;
                case GogViolation::Kind::MissingGammaEdge: kind = "missing-presentation-edge"; break;
                case GogViolation::Kind::EmptySupport: kind = "empty-support"; break;
                case GogViolation::Kind::DisconnectedSupport: kind = "disconnected-support"; break;
            }
            arr.push_back(json{{"kind", kind}, {"detail", v.detail}});
            text += std::string(kind) + ": " + v.detail + "\n";
        }
        emit(vc, json{{"command", "validate"}, {"valid", violations.empty()}, {"violations", arr}}, text);
        if (!violations.empty()) exit_code = 2;
    });

    // ---- export -----------------------------------------------------------
    static Common xc;
    static std::string export_format = "dot";
    static std::string export_gog_path;
    auto* exp = app.add_subcommand("export", "render a decomposition as DOT or JSON");
    add_common(exp, xc);
    exp->add_option("--gog", export_gog_path, "decomposition JSON file (default: decompose the system)");
    exp->add_option("--format", export_format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
    exp->callback([&] {
        CoxeterSystem sys = load_system(xc);
        VisualGog g = export_gog_path.empty()
                          ? decompose(sys, resolve_caps(xc)).gog
                          : VisualGog::from_json_string(sys, read_file(export_gog_path));
        auto violations = validate(sys, g);
        if (!violations.empty()) throw PreconditionError("decomposition is not valid: " + violations.front().detail);
        write_out(xc, export_format == "dot" ? g.to_dot(sys) : g.to_json_string(sys, 2));
    });

    // ---- measure ----------------------------------------------------------
    auto* meas = app.add_subcommand("measure", "accessibility potential");
    meas->require_subcommand(1);
    static Common mc;
    static std::string measure_gog_path;

    auto* m_c = meas->add_subcommand("c", "potential of a decomposition");
    add_common(m_c, mc, true);
    m_c->add_option("--gog", measure_gog_path, "decomposition JSON file (default: trivial)");
    m_c->callback([&] {
        CoxeterSystem sys = load_system(mc);
        Caps caps = resolve_caps(mc);
        VisualGog g = measure_gog_path.empty()
                          ? trivial_gog(sys)
                          : VisualGog::from_json_string(sys, read_file(measure_gog_path));
        auto violations = validate(sys, g);
        if (!violations.empty()) throw PreconditionError("decomposition is not valid: " + violations.front().detail);
        WordEngine engine(sys, caps);
        Measure m(engine, mc.search, caps);
        Measure::CValue c = m.c_of(g);
        json verts = json::array();
        std::string text;
        for (const auto& vm : c.vertices) {
            verts.push_back(json{{"label", names_json(sys, vm.label)},
                                 {"n", vm.n.n},
                                 {"exact", vm.n.exact}});
            text += names_str(sys, vm.label) + "  n=" + std::to_string(vm.n.n) +
                    (vm.n.exact ? "" : " (lower bound)") + "\n";
        }
        text += "c = " + c.c.str() + (c.exact ? "" : " (lower bound)") + "\n";
        emit(mc,
             json{{"command", "measure c"},
                  {"kCount", m.k_count()},
                  {"searchBound", mc.search},
                  {"c", c.c.str()},
                  {"exact", c.exact},
                  {"vertices", verts}},
             text);
    });

    auto* m_b = meas->add_subcommand("bound", "3^|K(W,S)| sequence-length bound");
    add_common(m_b, mc);
    m_b->callback([&] {
        CoxeterSystem sys = load_system(mc);
        Caps caps = resolve_caps(mc);
        WordEngine engine(sys, caps);
        Measure m(engine, mc.search, caps);
        emit(mc,
             json{{"command", "measure bound"},
                  {"kCount", m.k_count()},
                  {"rawCount", m.raw_count()},
                  {"bound", m.bound().str()}},
             "kCount=" + std::to_string(m.k_count()) + "  bound=3^" + std::to_string(m.k_count()) +
                 " = " + m.bound().str() + "\n");
    });

    // ---- certify ----------------------------------------------------------
    static Common cc;
    static std::string trace_path;
    auto* cert = app.add_subcommand("certify", "replay a trace and certify the strict decrease");
    add_common(cert, cc, true);
    cert->add_option("--trace", trace_path, "trace JSON file")->required();
    cert->callback([&] {
        CoxeterSystem sys = load_system(cc);
        Caps caps = resolve_caps(cc);
        WordEngine engine(sys, caps);
        Measure m(engine, cc.search, caps);
        auto trace = trace_from_json_string(sys, read_file(trace_path));
        Measure::CertifyReport rep = m.certify_sequence(trace);
        json steps = json::array();
        std::string text;
        for (const auto& s : rep.steps) {
            steps.push_back(json{{"vertex", names_json(sys, s.move.vertex_label)},
                                 {"separator", names_json(sys, s.move.separator)},
                                 {"before", s.before.c.str()},
                                 {"after", s.after.c.str()},
                                 {"status", status_name(s.status)}});
            text += names_str(sys, s.move.vertex_label) + " over " + names_str(sys, s.move.separator) +
                    ": " + s.before.c.str() + " -> " + s.after.c.str() + "  " + status_name(s.status) + "\n";
        }
        text += "overall: " + status_name(rep.overall) + (rep.within_bound ? "" : "  OVER BOUND") + "\n";
        json report{{"command", "certify"},
                    {"traceValid", rep.trace_valid},
                    {"steps", steps},
                    {"overall", status_name(rep.overall)},
                    {"bound", rep.bound.str()},
                    {"withinBound", rep.within_bound}};
        if (!rep.trace_valid) report["error"] = rep.error;
        emit(cc, report, rep.trace_valid ? text : "invalid trace: " + rep.error + "\n");
        if (!rep.trace_valid)
            exit_code = 1;
        else if (rep.overall == Measure::StepStatus::Violation)
            exit_code = 2;
    });

    // ---- corpus -----------------------------------------------------------
    static Common pc;
    static std::string corpus_dir = ".";
    auto* corp = app.add_subcommand("corpus", "write the bundled example systems");
    corp->add_option("--out", corpus_dir, "target directory (default .)");
    corp->add_flag("--text", pc.text, "human-readable report instead of JSON");
    corp->callback([&] {
        json files = json::array();
        std::string text;
        for (const auto& name : corpus_names()) {
            std::string path = corpus_dir + "/" + name + ".json";
            std::ofstream out(path, std::ios::binary);
            if (!out) throw InputError("cannot write file: " + path);
            out << corpus_json(name) << '\n';
            files.push_back(path);
            text += path + "\n";
        }
        Common stdout_only;
        stdout_only.text = pc.text;
        emit(stdout_only, json{{"command", "corpus"}, {"written", files}}, text);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition: " << e.what() << '\n';
        return 2;
    } catch (const ResourceBoundError& e) {
        std::cerr << "resource bound: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

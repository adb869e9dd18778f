#include "coxsplit/gog.hpp"

#include <algorithm>
#include <json.hpp>
#include <map>
#include <set>

#include "coxsplit/errors.hpp"

namespace coxsplit {

namespace {

bool label_less(Subset a, Subset b) {
    return canonical_less(a, b);
}

std::vector<const GogVertex*> vertices_canonical(const VisualGog& g) {
    std::vector<const GogVertex*> out;
    out.reserve(g.vertices.size());
    for (const auto& v : g.vertices) out.push_back(&v);
    std::sort(out.begin(), out.end(), [](const GogVertex* a, const GogVertex* b) {
        if (a->label != b->label) return label_less(a->label, b->label);
        return a->id < b->id;
    });
    return out;
}

std::string label_names(const CoxeterSystem& sys, Subset a) {
    std::string out;
    for (int i : a.indices()) {
        if (!out.empty()) out += ',';
        out += sys.name(i);
    }
    return out;
}

nlohmann::json label_to_json(const CoxeterSystem& sys, Subset a) {
    auto arr = nlohmann::json::array();
    for (int i : a.indices()) arr.push_back(sys.name(i));
    return arr;
}

Subset label_from_json(const CoxeterSystem& sys, const nlohmann::json& arr, const char* what) {
    if (!arr.is_array()) throw InputError(std::string(what) + ": expected an array of generator names");
    Subset out;
    for (const auto& item : arr) {
        if (!item.is_string()) throw InputError(std::string(what) + ": expected generator names");
        auto idx = sys.index_of(item.get<std::string>());
        if (!idx) throw InputError(std::string(what) + ": unknown generator " + item.get<std::string>());
        out = out.with(*idx);
    }
    return out;
}

// union-find over vertex ids
struct Dsu {
    std::map<int, int> parent;
    void add(int x) { parent.emplace(x, x); }
    int find(int x) {
        int r = x;
        while (parent[r] != r) r = parent[r];
        while (parent[x] != x) {
            int n = parent[x];
            parent[x] = r;
            x = n;
        }
        return r;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

const GogVertex* VisualGog::find_vertex(int id) const {
    for (const auto& v : vertices)
        if (v.id == id) return &v;
    return nullptr;
}

const GogVertex* VisualGog::find_vertex_by_label(Subset label) const {
    for (const auto& v : vertices)
        if (v.label == label) return &v;
    return nullptr;
}

int VisualGog::max_id() const {
    int m = -1;
    for (const auto& v : vertices) m = std::max(m, v.id);
    return m;
}

std::string VisualGog::to_json_string(const CoxeterSystem& sys, int indent) const {
    nlohmann::json j;
    auto& vs = j["vertices"] = nlohmann::json::array();
    for (const GogVertex* v : vertices_canonical(*this))
        vs.push_back({{"id", v->id}, {"label", label_to_json(sys, v->label)}});
    auto sorted_edges = edges;
    for (auto& e : sorted_edges)
        if (e.u > e.v) std::swap(e.u, e.v);
    std::sort(sorted_edges.begin(), sorted_edges.end(), [](const GogEdge& a, const GogEdge& b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    auto& es = j["edges"] = nlohmann::json::array();
    for (const auto& e : sorted_edges)
        es.push_back({{"u", e.u}, {"v", e.v}, {"label", label_to_json(sys, e.label)}});
    return j.dump(indent);
}

VisualGog VisualGog::from_json_string(const CoxeterSystem& sys, const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("invalid decomposition JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw InputError("decomposition JSON needs a \"vertices\" array");
    VisualGog g;
    for (const auto& v : j["vertices"]) {
        if (!v.is_object() || !v.contains("id") || !v["id"].is_number_integer())
            throw InputError("vertex needs an integer \"id\"");
        g.vertices.push_back({v["id"].get<int>(), label_from_json(sys, v.value("label", nlohmann::json::array()), "vertex label")});
    }
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw InputError("\"edges\" must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_object() || !e.contains("u") || !e.contains("v") ||
                !e["u"].is_number_integer() || !e["v"].is_number_integer())
                throw InputError("edge needs integer endpoints \"u\" and \"v\"");
            g.edges.push_back({e["u"].get<int>(), e["v"].get<int>(),
                               label_from_json(sys, e.value("label", nlohmann::json::array()), "edge label")});
        }
    }
    return g;
}

std::string VisualGog::to_dot(const CoxeterSystem& sys) const {
    std::string out = "graph gog {\n";
    for (const GogVertex* v : vertices_canonical(*this))
        out += "  n" + std::to_string(v->id) + " [label=\"" + label_names(sys, v->label) + "\"];\n";
    auto sorted_edges = edges;
    for (auto& e : sorted_edges)
        if (e.u > e.v) std::swap(e.u, e.v);
    std::sort(sorted_edges.begin(), sorted_edges.end(), [](const GogEdge& a, const GogEdge& b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    for (const auto& e : sorted_edges)
        out += "  n" + std::to_string(e.u) + " -- n" + std::to_string(e.v) + " [label=\"" +
               label_names(sys, e.label) + "\"];\n";
    out += "}\n";
    return out;
}

VisualGog trivial_gog(const CoxeterSystem& sys) {
    VisualGog g;
    g.vertices.push_back({0, sys.full_set()});
    return g;
}

std::vector<GogViolation> validate(const CoxeterSystem& sys, const VisualGog& g) {
    std::vector<GogViolation> out;
    using Kind = GogViolation::Kind;

    if (g.vertices.empty()) {
        out.push_back({Kind::NotATree, "no vertices"});
        return out;
    }
    std::set<int> ids;
    for (const auto& v : g.vertices)
        if (!ids.insert(v.id).second) {
            out.push_back({Kind::NotATree, "duplicate vertex id " + std::to_string(v.id)});
            return out;
        }
    for (const auto& e : g.edges) {
        if (!ids.count(e.u) || !ids.count(e.v)) {
            out.push_back({Kind::NotATree, "edge endpoint is not a vertex id"});
            return out;
        }
        if (e.u == e.v) {
            out.push_back({Kind::NotATree, "self-loop at vertex " + std::to_string(e.u)});
            return out;
        }
    }
    Dsu dsu;
    for (int id : ids) dsu.add(id);
    bool acyclic = true;
    for (const auto& e : g.edges)
        if (!dsu.unite(e.u, e.v)) acyclic = false;
    bool connected = true;
    for (int id : ids)
        if (dsu.find(id) != dsu.find(*ids.begin())) connected = false;
    if (!acyclic || !connected) {
        out.push_back({Kind::NotATree, !acyclic ? "graph has a cycle" : "graph is disconnected"});
        return out;
    }

    for (const auto& e : g.edges) {
        Subset lu = g.find_vertex(e.u)->label, lv = g.find_vertex(e.v)->label;
        if (!e.label.subset_of(lu) || !e.label.subset_of(lv))
            out.push_back({Kind::EdgeNotInEndpoint,
                           "edge {" + label_names(sys, e.label) + "} not inside both endpoint labels"});
    }

    const int rank = static_cast<int>(sys.rank());
    for (int s = 0; s < rank; ++s)
        for (int t = s + 1; t < rank; ++t) {
            if (sys.order(s, t) == CoxeterSystem::infinity) continue;
            bool covered = false;
            for (const auto& v : g.vertices)
                if (v.label.contains(s) && v.label.contains(t)) {
                    covered = true;
                    break;
                }
            if (!covered)
                out.push_back({Kind::MissingGammaEdge, "presentation edge {" + sys.name(s) + "," +
                                                           sys.name(t) + "} lies in no vertex label"});
        }

    for (int s = 0; s < rank; ++s) {
        std::vector<int> support;
        for (const auto& v : g.vertices)
            if (v.label.contains(s)) support.push_back(v.id);
        if (support.empty()) {
            out.push_back({Kind::EmptySupport, "generator " + sys.name(s) + " appears in no vertex label"});
            continue;
        }
        Dsu sup;
        for (int id : support) sup.add(id);
        for (const auto& e : g.edges)
            if (e.label.contains(s)) sup.unite(e.u, e.v);
        bool conn = true;
        for (int id : support)
            if (sup.find(id) != sup.find(support.front())) conn = false;
        if (!conn)
            out.push_back({Kind::DisconnectedSupport,
                           "support of generator " + sys.name(s) + " is not a subtree"});
    }
    return out;
}

VisualGog reduce(const VisualGog& g) {
    VisualGog cur = g;
    for (;;) {
        std::size_t pick = cur.edges.size();
        std::pair<int, int> pick_key{0, 0};
        for (std::size_t i = 0; i < cur.edges.size(); ++i) {
            const auto& e = cur.edges[i];
            const GogVertex* u = cur.find_vertex(e.u);
            const GogVertex* v = cur.find_vertex(e.v);
            if (e.label != u->label && e.label != v->label) continue;
            std::pair<int, int> key{std::min(e.u, e.v), std::max(e.u, e.v)};
            if (pick == cur.edges.size() || key < pick_key) {
                pick = i;
                pick_key = key;
            }
        }
        if (pick == cur.edges.size()) return cur;

        GogEdge e = cur.edges[pick];
        const GogVertex* u = cur.find_vertex(e.u);
        const GogVertex* v = cur.find_vertex(e.v);
        int gone, keep;
        if (e.label == u->label && e.label == v->label) {
            gone = std::max(e.u, e.v);
            keep = std::min(e.u, e.v);
        } else if (e.label == u->label) {
            gone = e.u;
            keep = e.v;
        } else {
            gone = e.v;
            keep = e.u;
        }
        cur.edges.erase(cur.edges.begin() + static_cast<std::ptrdiff_t>(pick));
        for (auto& other : cur.edges) {
            if (other.u == gone) other.u = keep;
            if (other.v == gone) other.v = keep;
        }
        cur.vertices.erase(std::remove_if(cur.vertices.begin(), cur.vertices.end(),
                                          [&](const GogVertex& w) { return w.id == gone; }),
                           cur.vertices.end());
    }
}

std::vector<SplitMove> compatible_splits(const CoxeterSystem& sys, const VisualGog& g,
                                         int vertex, bool restrict_minimal,
                                         const std::vector<SeparatorRecord>& separators) {
    const GogVertex* v = g.find_vertex(vertex);
    if (!v) throw InputError("no vertex with id " + std::to_string(vertex));
    const Subset label = v->label;

    std::vector<Subset> adjacent;
    for (const auto& e : g.edges)
        if (e.u == vertex || e.v == vertex) adjacent.push_back(e.label);

    std::vector<SplitMove> out;
    for (const auto& rec : separators) {
        if (restrict_minimal && !rec.minimal) continue;
        if (!rec.c.subset_of(label)) continue;

        std::vector<Subset> meeting, free_comps;
        for (Subset comp : rec.components)
            (comp.intersects(label) ? meeting : free_comps).push_back(comp);
        if (meeting.size() < 2) continue;

        Subset free_union;
        for (Subset comp : free_comps) free_union = free_union | comp;

        const std::uint64_t count = 1ull << (meeting.size() - 1);
        for (std::uint64_t sel = 1; sel < count; ++sel) {
            Subset a = rec.c | meeting[0] | free_union;
            Subset b = rec.c;
            for (std::size_t k = 1; k < meeting.size(); ++k) {
                if (sel & (1ull << (k - 1)))
                    b = b | meeting[k];
                else
                    a = a | meeting[k];
            }
            bool ok = true;
            for (Subset l : adjacent)
                if (!l.subset_of(a) && !l.subset_of(b)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            out.push_back(SplitMove{vertex, rec.c, a, b});
        }
    }
    return out;
}

std::vector<SplitMove> compatible_splits(const CoxeterSystem& sys, const VisualGog& g,
                                         int vertex, bool restrict_minimal, const Caps& caps) {
    return compatible_splits(sys, g, vertex, restrict_minimal, classify_minimal(sys, caps));
}

VisualGog apply_split(const CoxeterSystem& sys, const VisualGog& g, const SplitMove& move) {
    const GogVertex* v = g.find_vertex(move.vertex);
    if (!v) throw InputError("no vertex with id " + std::to_string(move.vertex));
    const Subset label = v->label;
    const Subset e = move.separator;

    if ((move.a & move.b) != e || (move.a | move.b) != sys.full_set())
        throw InputError("sides must cover S and intersect exactly in the separator");
    auto comps = separates(sys, e);
    if (!comps) throw InputError("subset does not separate the presentation diagram");
    for (Subset comp : *comps)
        if (comp.intersects(move.a) && comp.intersects(move.b))
            throw InputError("a component straddles both sides");
    Subset na = move.a & label, nb = move.b & label;
    if (na == e || nb == e) throw InputError("degenerate split: a side adds nothing to the vertex");

    VisualGog out;
    int ida = g.max_id() + 1, idb = g.max_id() + 2;
    for (const auto& w : g.vertices)
        if (w.id != move.vertex) out.vertices.push_back(w);
    out.vertices.push_back({ida, na});
    out.vertices.push_back({idb, nb});
    for (auto edge : g.edges) {
        if (edge.u == move.vertex) edge.u = edge.label.subset_of(move.a) ? ida : idb;
        if (edge.v == move.vertex) edge.v = edge.label.subset_of(move.a) ? ida : idb;
        if ((edge.u == ida || edge.v == ida) && !edge.label.subset_of(move.a))
            throw InputError("adjacent edge label fits neither side");
        out.edges.push_back(edge);
    }
    for (const auto& edge : out.edges)
        if ((edge.u == idb || edge.v == idb) && !edge.label.subset_of(move.b))
            throw InputError("adjacent edge label fits neither side");
    out.edges.push_back({ida, idb, e});

    if (!validate(sys, out).empty())
        throw InputError("split produces an invalid decomposition");
    return out;
}

bool looks_irreducible(const CoxeterSystem& sys, const VisualGog& g, const Caps& caps) {
    if (!validate(sys, g).empty())
        throw PreconditionError("decomposition is not valid");
    if (reduce(g).vertices.size() != g.vertices.size())
        throw PreconditionError("decomposition is not reduced");
    auto seps = classify_minimal(sys, caps);
    for (const auto& e : g.edges) {
        bool minimal = false;
        for (const auto& rec : seps)
            if (rec.c == e.label) {
                minimal = rec.minimal;
                break;
            }
        if (!minimal)
            throw PreconditionError("edge label {" + label_names(sys, e.label) +
                                    "} is not a minimal separator");
    }
    for (const auto& v : g.vertices)
        if (!compatible_splits(sys, g, v.id, true, seps).empty()) return false;
    return true;
}

Decomposition decompose(const CoxeterSystem& sys, const Caps& caps) {
    auto seps = classify_minimal(sys, caps);
    Decomposition out;
    out.gog = trivial_gog(sys);
    for (;;) {
        const SplitMove* chosen = nullptr;
        std::vector<SplitMove> moves;
        for (const GogVertex* v : vertices_canonical(out.gog)) {
            moves = compatible_splits(sys, out.gog, v->id, true, seps);
            if (!moves.empty()) {
                chosen = &moves.front();
                break;
            }
        }
        if (!chosen) return out;
        Subset vlabel = out.gog.find_vertex(chosen->vertex)->label;
        out.trace.push_back(TraceMove{vlabel, chosen->separator, chosen->a, chosen->b});
        out.gog = reduce(apply_split(sys, out.gog, *chosen));
        if (out.trace.size() > 100000)
            throw ResourceBoundError("resource bound exceeded: decomposition did not stabilize");
    }
}

std::string trace_to_json_string(const CoxeterSystem& sys, const std::vector<TraceMove>& trace,
                                 int indent) {
    nlohmann::json j;
    auto& moves = j["moves"] = nlohmann::json::array();
    for (const auto& m : trace)
        moves.push_back({{"vertex", label_to_json(sys, m.vertex_label)},
                         {"separator", label_to_json(sys, m.separator)},
                         {"a", label_to_json(sys, m.a)},
                         {"b", label_to_json(sys, m.b)}});
    return j.dump(indent);
}

std::vector<TraceMove> trace_from_json_string(const CoxeterSystem& sys, const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("invalid trace JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("moves") || !j["moves"].is_array())
        throw InputError("trace JSON needs a \"moves\" array");
    std::vector<TraceMove> out;
    for (const auto& m : j["moves"]) {
        if (!m.is_object()) throw InputError("each move must be an object");
        TraceMove t;
        t.vertex_label = label_from_json(sys, m.value("vertex", nlohmann::json::array()), "move vertex");
        t.separator = label_from_json(sys, m.value("separator", nlohmann::json::array()), "move separator");
        t.a = label_from_json(sys, m.value("a", nlohmann::json::array()), "move side a");
        t.b = label_from_json(sys, m.value("b", nlohmann::json::array()), "move side b");
        out.push_back(t);
    }
    return out;
}

}  // namespace coxsplit

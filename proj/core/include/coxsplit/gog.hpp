#ifndef COXSPLIT_GOG_HPP
#define COXSPLIT_GOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "coxsplit/caps.hpp"
#include "coxsplit/splittings.hpp"
#include "coxsplit/subset.hpp"
#include "coxsplit/system.hpp"

namespace coxsplit {

struct GogVertex {
    int id = 0;
    Subset label;
    bool operator==(const GogVertex&) const = default;
};

struct GogEdge {
    int u = 0, v = 0;
    Subset label;
    bool operator==(const GogEdge&) const = default;
};

/// A visual graph-of-groups decomposition: a labeled tree with special-subgroup
/// vertex and edge labels, every edge label contained in both endpoint labels.
class VisualGog {
public:
    std::vector<GogVertex> vertices;
    std::vector<GogEdge> edges;

    const GogVertex* find_vertex(int id) const;
    const GogVertex* find_vertex_by_label(Subset label) const;
    int max_id() const;

    /// Deterministic serialization; vertices sorted by (label size, label lex).
    std::string to_json_string(const CoxeterSystem& sys, int indent = -1) const;
    static VisualGog from_json_string(const CoxeterSystem& sys, const std::string& text);
    std::string to_dot(const CoxeterSystem& sys) const;

    bool operator==(const VisualGog&) const = default;
};

struct GogViolation {
    enum class Kind {
        NotATree,           ///< malformed graph: not a tree / bad ids / self-loop
        EdgeNotInEndpoint,  ///< edge label ⊄ some endpoint label
        MissingGammaEdge,   ///< a Γ-edge {s,t} lies in no vertex label
        EmptySupport,       ///< generator s appears in no vertex label
        DisconnectedSupport ///< vertices/edges containing s are not a subtree
    };
    Kind kind;
    std::string detail;
};

/// One refinement step: split `vertex` over E with global
/// sides A = E ∪ (some components of Γ−E) and B = E ∪ (rest); the new vertex
/// labels are A ∩ label and B ∩ label.
struct SplitMove {
    int vertex = 0;
    Subset separator;  ///< E
    Subset a, b;       ///< global sides
    bool operator==(const SplitMove&) const = default;
};

/// Replayable form of a move: the target vertex is addressed by its label,
/// which is unique in a valid reduced gog.
struct TraceMove {
    Subset vertex_label;
    Subset separator;
    Subset a, b;
    bool operator==(const TraceMove&) const = default;
};

VisualGog trivial_gog(const CoxeterSystem& sys);

/// All violations in deterministic scan order (empty = valid).
std::vector<GogViolation> validate(const CoxeterSystem& sys, const VisualGog& g);

/// Collapses every edge whose label equals an endpoint label (least edge
/// first; the endpoint equal to the edge label is merged into the other).
VisualGog reduce(const VisualGog& g);

/// All split moves for the given vertex: subsets E of the vertex label that
/// separate Γ, with side assignments over the components that meet the vertex
/// label such that both sides stay proper and every adjacent edge label fits
/// inside one side. Assignments differing only off the vertex are one move.
/// With restrict_minimal, E is also required to be a minimal separator.
std::vector<SplitMove> compatible_splits(const CoxeterSystem& sys, const VisualGog& g,
                                         int vertex, bool restrict_minimal,
                                         const std::vector<SeparatorRecord>& separators);
std::vector<SplitMove> compatible_splits(const CoxeterSystem& sys, const VisualGog& g,
                                         int vertex, bool restrict_minimal,
                                         const Caps& caps = {});

/// Replaces the vertex by the two sides joined by an edge labeled E; prior
/// edges reattach to the side containing their label (ties → A). New ids are
/// max_id+1 (side A) and max_id+2 (side B). Output is validated.
VisualGog apply_split(const CoxeterSystem& sys, const VisualGog& g, const SplitMove& move);

/// True iff no vertex admits a minimal-separator split. Preconditions: valid,
/// reduced, and every edge label classified minimal — otherwise
/// PreconditionError.
bool looks_irreducible(const CoxeterSystem& sys, const VisualGog& g, const Caps& caps = {});

struct Decomposition {
    VisualGog gog;
    std::vector<TraceMove> trace;
};

/// From the trivial gog, repeatedly apply the canonically least minimal split
/// move and reduce, until no vertex splits. Deterministic.
Decomposition decompose(const CoxeterSystem& sys, const Caps& caps = {});

std::string trace_to_json_string(const CoxeterSystem& sys, const std::vector<TraceMove>& trace,
                                 int indent = -1);
std::vector<TraceMove> trace_from_json_string(const CoxeterSystem& sys, const std::string& text);

}  // namespace coxsplit

#endif

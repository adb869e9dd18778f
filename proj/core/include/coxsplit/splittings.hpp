#ifndef COXSPLIT_SPLITTINGS_HPP
#define COXSPLIT_SPLITTINGS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "coxsplit/caps.hpp"
#include "coxsplit/finite_type.hpp"
#include "coxsplit/subset.hpp"
#include "coxsplit/system.hpp"
#include "coxsplit/word_engine.hpp"

namespace coxsplit {

struct SeparatorRecord {
    Subset c;
    std::vector<Subset> components;       ///< components of Γ − C
    Subset e, t;                          ///< split_ea(C)
    bool minimal = false;                 ///< no separator D has E_W(D) ⊊ E_W(C)
    std::optional<Subset> witness;        ///< for non-minimal C: first such D
};

/// All separators of Γ in canonical order (by |C|, then lex).
/// Throws ResourceBoundError when rank exceeds the generator cap.
std::vector<SeparatorRecord> enumerate_separators(const CoxeterSystem& sys, const Caps& caps = {});

/// Separators with minimal flags and witnesses filled in.
std::vector<SeparatorRecord> classify_minimal(const CoxeterSystem& sys, const Caps& caps = {});

/// An element of K(W,S) in canonical form: the subgroup ⟨E⟩ × F with
/// E its infinite-type core (split_ea(E) = (E, ∅)) and F a finite subgroup
/// of a finite-type special subgroup of ⟨lk2(E)⟩, listed element by element
/// as canonical geodesics.
struct KGroup {
    Subset e;
    std::vector<Word> finite_factor;  ///< sorted by (length, lex); contains ε
};

struct KEnumeration {
    std::uint64_t raw_count = 0;   ///< (A, D, M) tuples before dedupe
    std::vector<KGroup> records;   ///< deduped iff requested, canonical order
};

/// Enumerates ⟨A⟩ × M over A ⊆ S, finite-type D ⊆ lk2(A), subgroups M ≤ ⟨D⟩;
/// canonicalizes each to (E_W(A), elements of ⟨T_W(A)⟩ × M). With dedupe,
/// collapses records with identical canonical form — that is K(W,S) itself.
KEnumeration enumerate_k(const WordEngine& engine, bool dedupe, const Caps& caps = {});

/// Amalgam witness for a separator: A = C ∪ (components assigned to A),
/// B = C ∪ (rest). side_assignment[k] = false → component k joins A.
/// Both sides must receive at least one component.
std::pair<Subset, Subset> visual_split(const CoxeterSystem& sys, Subset c,
                                       const std::vector<bool>& side_assignment);

/// Bounded conjugacy search for non-separating subsets (the separating case
/// is decided exactly by classify_minimal): words w of geodesic length ≤ L
/// with w·C·w⁻¹ landing generator-wise inside some separator. A hit shows
/// ⟨C⟩ is conjugate to a subgroup of a classified separator subgroup.
struct ConjugacyHit {
    Subset c;
    Word witness;
    Subset image;         ///< w·C·w⁻¹ as a generator set
    Subset target;        ///< the separator containing the image
    bool target_minimal = false;
};

std::vector<ConjugacyHit> conjugacy_search(const WordEngine& engine, int radius,
                                           const Caps& caps = {});

}  // namespace coxsplit

#endif

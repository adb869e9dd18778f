#ifndef COXSPLIT_SYSTEM_HPP
#define COXSPLIT_SYSTEM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coxsplit/subset.hpp"

namespace coxsplit {

/// A finitely generated Coxeter system (W,S): named involutive generators and
/// a symmetric exponent matrix m with m(s,s) = 1 and m(s,t) ∈ {2,3,...} ∪ {∞}
/// for s ≠ t. Infinity is stored (and serialized) as 0.
///
/// Two derived graphs are exposed as adjacency masks:
///  - presentation diagram Γ: edge {s,t} iff m(s,t) < ∞;
///  - noncommuting diagram:   edge {s,t} iff m(s,t) ≠ 2 (∞ allowed).
class CoxeterSystem {
public:
    static constexpr std::uint32_t infinity = 0;

    CoxeterSystem() = default;
    /// entries: (i, j, m) for unordered pairs; unlisted pairs default to ∞.
    CoxeterSystem(std::vector<std::string> names,
                  const std::vector<std::tuple<int, int, std::uint32_t>>& entries);

    /// Parses {"generators":["a","b"],"m":[["a","b",3],...]}. Rejects
    /// duplicate symbols, unknown symbols, conflicting duplicate pairs,
    /// off-diagonal m = 1, and more than 64 generators.
    static CoxeterSystem from_json_string(const std::string& text);
    std::string to_json_string(int indent = -1) const;

    int rank() const { return static_cast<int>(names_.size()); }
    Subset full_set() const { return Subset::full(rank()); }
    const std::string& name(int i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<int> index_of(const std::string& name) const;

    std::uint32_t order(int i, int j) const { return m_[static_cast<std::size_t>(i) * names_.size() + static_cast<std::size_t>(j)]; }
    bool commute(int i, int j) const { return order(i, j) == 2; }
    bool finite_order(int i, int j) const { return order(i, j) != infinity; }

    /// Γ-neighbours of i (finite label), as a mask.
    Subset presentation_adjacent(int i) const { return pres_adj_[static_cast<std::size_t>(i)]; }
    /// Noncommuting-diagram neighbours of i (label ≠ 2), as a mask.
    Subset noncommuting_adjacent(int i) const { return nonc_adj_[static_cast<std::size_t>(i)]; }

    /// Connected components of Γ induced on `active`, ordered by least index.
    std::vector<Subset> presentation_components(Subset active) const;
    /// Same for the noncommuting diagram.
    std::vector<Subset> noncommuting_components(Subset active) const;

    /// Subsystem on A; generator order follows ascending index within A.
    CoxeterSystem restrict(Subset a) const;

    std::vector<std::string> subset_names(Subset a) const;
    /// Parses "a,b,c" (or a JSON array of names) into a subset.
    Subset subset_from_names(const std::vector<std::string>& names) const;
    Subset subset_from_csv(const std::string& csv) const;

    bool operator==(const CoxeterSystem&) const = default;

private:
    std::vector<std::string> names_;
    std::vector<std::uint32_t> m_;  // rank*rank, row-major
    std::vector<Subset> pres_adj_, nonc_adj_;

    void build_adjacency();
    std::vector<Subset> components(Subset active, const std::vector<Subset>& adj) const;
};

/// Components of Γ − C if C separates Γ (at least two), else nullopt.
/// For disconnected Γ the empty set is a separator.
std::optional<std::vector<Subset>> separates(const CoxeterSystem& sys, Subset c);

/// True iff two elements of V − C lie in distinct components of Γ − C.
bool separates_within(const CoxeterSystem& sys, Subset c, Subset v);

}  // namespace coxsplit

#endif

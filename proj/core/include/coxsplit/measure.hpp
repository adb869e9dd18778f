#ifndef COXSPLIT_MEASURE_HPP
#define COXSPLIT_MEASURE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "coxsplit/caps.hpp"
#include "coxsplit/finite_type.hpp"
#include "coxsplit/gog.hpp"
#include "coxsplit/splittings.hpp"
#include "coxsplit/word_engine.hpp"

namespace coxsplit {

/// Shared context for potential computations: K(W,S) plus caches for
/// conjugator balls and per-subset n values.
class Measure {
public:
    Measure(const WordEngine& engine, int search_bound = 6, Caps caps = {});

    std::uint64_t k_count() const { return static_cast<std::uint64_t>(kgroups_.size()); }
    std::uint64_t raw_count() const { return raw_count_; }
    const std::vector<KGroup>& kgroups() const { return kgroups_; }

    /// 3^kCount — upper bound on the length of split/reduce sequences.
    BigInt bound() const;

    struct NValue {
        std::uint64_t n = 0;
        bool exact = false;  ///< every K element decided, not just lower-bounded
    };

    /// Number of K(W,S) elements (E, F) contained in some conjugate of ⟨G⟩.
    /// E ⊆ G is necessary: any conjugator reduces to one that fixes E
    /// pointwise and has letters in lk2(E), so the search runs over the
    /// ball of ⟨lk2(E)⟩ and is complete whenever that ball saturates.
    /// The count is a certified lower bound; `exact` is set only when each
    /// K element is either witnessed inside or certifiably excluded
    /// (E ⊄ G, abelianization invariant, Lagrange, or exhausted search).
    NValue n_of(Subset g);

    struct VertexMeasure {
        Subset label;
        NValue n;
    };
    struct CValue {
        BigInt c;  ///< Σ over vertices of 3^n(vertex)
        std::vector<VertexMeasure> vertices;
        bool exact = false;  ///< all vertex n values exact
    };

    CValue c_of(const VisualGog& g);

    enum class StepStatus {
        CertifiedDecrease,  ///< all n exact and c strictly decreased
        Consistent,         ///< some n inexact; no provable contradiction
        Violation           ///< provable failure of the strict decrease
    };
    struct CertifyStep {
        TraceMove move;
        CValue before, after;
        StepStatus status;
    };
    struct CertifyReport {
        bool trace_valid = false;
        std::string error;  ///< set when a move fails to replay
        std::vector<CertifyStep> steps;
        StepStatus overall = StepStatus::CertifiedDecrease;
        BigInt bound;
        bool within_bound = true;
    };

    /// Replays a trace from the trivial gog (apply + reduce per move) and
    /// checks the strict decrease of c demanded by the potential argument.
    CertifyReport certify_sequence(const std::vector<TraceMove>& trace);

private:
    const WordEngine& engine_;
    int search_bound_;
    Caps caps_;
    std::vector<KGroup> kgroups_;
    std::uint64_t raw_count_ = 0;

    // abelianization: generator -> odd-diagram class, W^ab = (Z2)^classes
    std::vector<int> ab_class_;
    int ab_rank_ = 0;
    std::uint64_t ab_of_word(const Word& w) const;
    bool ab_in_span(std::uint64_t v, Subset g) const;

    std::unordered_map<std::uint64_t, Ball> ball_cache_;
    std::unordered_map<std::uint64_t, NValue> n_cache_;
    const Ball& ball_of(Subset a);
};

}  // namespace coxsplit

#endif

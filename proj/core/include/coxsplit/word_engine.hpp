#ifndef COXSPLIT_WORD_ENGINE_HPP
#define COXSPLIT_WORD_ENGINE_HPP

#include <cstdint>
#include <list>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxsplit/caps.hpp"
#include "coxsplit/subset.hpp"
#include "coxsplit/system.hpp"

namespace coxsplit {

/// A word over S as a sequence of generator indices. Letters are involutions,
/// so the inverse is the reversed word.
using Word = std::vector<std::uint8_t>;

Word word_inverse(const Word& w);
Word word_concat(const Word& a, const Word& b);
std::string word_to_string(const CoxeterSystem& sys, const Word& w);
Word word_from_tokens(const CoxeterSystem& sys, const std::vector<std::string>& tokens);

/// (length, lex) order; canonical geodesics are least in this order.
inline bool word_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

/// Canonical representative of an element: the lexicographically least
/// geodesic under the input generator order.
struct Geodesic {
    Word canonical;
    int length() const { return static_cast<int>(canonical.size()); }
    bool operator==(const Geodesic&) const = default;
};

struct Ball {
    std::vector<Word> elements;  ///< canonical geodesics, sorted by (length, lex)
    bool saturated = false;      ///< true iff the ball is the whole subgroup
};

/// Word-problem engine for one system, built on the deletion condition:
/// iterate braid moves (replace a length-m(s,t) alternating factor st... by
/// ts...) over the closure of the word; delete any adjacent equal pair found;
/// repeat until the closure is pair-free. The canonical form is the least
/// closure member. Results are memoized (bounded LRU); all operations are
/// deterministic and safe to call concurrently.
class WordEngine {
public:
    explicit WordEngine(const CoxeterSystem& sys, Caps caps = {});

    const CoxeterSystem& system() const { return sys_; }
    const Caps& caps() const { return caps_; }

    Geodesic reduce(const Word& w) const;
    bool equal(const Word& u, const Word& v) const;
    /// Letter set of any geodesic of w (well-defined).
    Subset lett(const Word& w) const;
    int length(const Word& w) const;

    /// True iff w lies in the special subgroup ⟨a⟩ (its geodesic letters do).
    bool in_special(const Word& w, Subset a) const;

    /// The unique shortest element of ⟨I⟩·w·⟨J⟩, by greedy descent
    /// (least eligible generator first; left side first).
    Geodesic min_double_coset_rep(Subset i, const Word& w, Subset j) const;

    /// (d, K) with d the minimal double-coset representative and
    /// K = { s ∈ I : s = d·t·d⁻¹ for some t ∈ J }; then
    /// ⟨I⟩ ∩ w⟨J⟩w⁻¹ is a ⟨I⟩-conjugate of ⟨K⟩.
    std::pair<Geodesic, Subset> special_intersection(Subset i, const Word& w, Subset j) const;

    /// All elements of ⟨A⟩ as canonical geodesics (BFS closure under right
    /// multiplication). Throws ResourceBoundError past the order cap, so the
    /// caller is protected even if ⟨A⟩ is infinite.
    std::vector<Word> enumerate_group(Subset a) const;

    /// Elements of ⟨A⟩ of geodesic length ≤ radius. Probes one layer further
    /// to set `saturated` (the ball already holds all of ⟨A⟩).
    Ball enumerate_ball(Subset a, int radius) const;

private:
    CoxeterSystem sys_;
    Caps caps_;

    struct WordHash {
        std::size_t operator()(const Word& w) const;
    };
    mutable std::mutex memo_mutex_;
    mutable std::list<Word> memo_order_;
    mutable std::unordered_map<Word, std::pair<Word, std::list<Word>::iterator>, WordHash> memo_;

    Word reduce_uncached(Word w) const;
    void check_word(const Word& w) const;
};

}  // namespace coxsplit

#endif

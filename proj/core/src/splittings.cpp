#include "coxsplit/splittings.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "coxsplit/errors.hpp"

namespace coxsplit {

namespace {

void check_rank(const CoxeterSystem& sys, const Caps& caps) {
    if (static_cast<int>(sys.rank()) > caps.generator_cap)
        throw ResourceBoundError("resource bound exceeded: generator count above enumeration cap");
}

bool word_list_less(const std::vector<Word>& a, const std::vector<Word>& b) {
    auto wl = [](const Word& u, const Word& v) {
        if (u.size() != v.size()) return u.size() < v.size();
        return u < v;
    };
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), wl);
}

struct WordLenLex {
    bool operator()(const Word& u, const Word& v) const {
        if (u.size() != v.size()) return u.size() < v.size();
        return u < v;
    }
};

using ElementSet = std::set<Word, WordLenLex>;

ElementSet close_under_product(const WordEngine& engine, const std::vector<Word>& gens,
                               std::size_t cap) {
    ElementSet elems;
    elems.insert(Word{});
    std::vector<Word> frontier{Word{}};
    while (!frontier.empty()) {
        std::vector<Word> next;
        for (const auto& g : frontier)
            for (const auto& x : gens) {
                Word red = engine.reduce(word_concat(g, x)).canonical;
                if (elems.insert(red).second) {
                    if (elems.size() > cap)
                        throw ResourceBoundError("resource bound exceeded: finite-group order cap");
                    next.push_back(std::move(red));
                }
            }
        frontier = std::move(next);
    }
    return elems;
}

// All subgroups of the finite group with the given element list, found by
// repeatedly extending known subgroups by one element and closing.
std::vector<std::vector<Word>> subgroups_of(const WordEngine& engine,
                                            const std::vector<Word>& elements, std::size_t cap) {
    std::set<std::vector<Word>> subs;
    std::vector<std::vector<Word>> queue;
    std::vector<Word> trivial{Word{}};
    subs.insert(trivial);
    queue.push_back(trivial);
    while (!queue.empty()) {
        std::vector<Word> h = std::move(queue.back());
        queue.pop_back();
        for (const auto& g : elements) {
            if (std::binary_search(h.begin(), h.end(), g, WordLenLex{})) continue;
            std::vector<Word> gens = h;
            gens.push_back(g);
            ElementSet closure = close_under_product(engine, gens, cap);
            std::vector<Word> key(closure.begin(), closure.end());
            if (subs.insert(key).second) queue.push_back(std::move(key));
        }
    }
    return {subs.begin(), subs.end()};
}

}  // namespace

std::vector<SeparatorRecord> enumerate_separators(const CoxeterSystem& sys, const Caps& caps) {
    check_rank(sys, caps);
    std::vector<SeparatorRecord> out;
    const std::uint64_t full = Subset::full(static_cast<int>(sys.rank())).bits();
    for (std::uint64_t mask = 0; mask <= full; ++mask) {
        Subset c(mask);
        auto comps = separates(sys, c);
        if (!comps) continue;
        SeparatorRecord rec;
        rec.c = c;
        rec.components = std::move(*comps);
        SplitEA ea = split_ea(sys, c);
        rec.e = ea.e;
        rec.t = ea.t;
        out.push_back(std::move(rec));
    }
    std::sort(out.begin(), out.end(),
              [](const SeparatorRecord& a, const SeparatorRecord& b) {
                  return canonical_less(a.c, b.c);
              });
    return out;
}

std::vector<SeparatorRecord> classify_minimal(const CoxeterSystem& sys, const Caps& caps) {
    std::vector<SeparatorRecord> seps = enumerate_separators(sys, caps);
    for (auto& rec : seps) {
        rec.minimal = true;
        for (const auto& other : seps)
            if (other.e.proper_subset_of(rec.e)) {
                rec.minimal = false;
                rec.witness = other.c;
                break;
            }
    }
    return seps;
}

KEnumeration enumerate_k(const WordEngine& engine, bool dedupe, const Caps& caps) {
    const CoxeterSystem& sys = engine.system();
    check_rank(sys, caps);
    KEnumeration out;

    // caches keyed by generator subset
    std::map<std::uint64_t, std::vector<Word>> group_cache;
    std::map<std::uint64_t, std::vector<std::vector<Word>>> subgroup_cache;
    auto group_of = [&](Subset d) -> const std::vector<Word>& {
        auto it = group_cache.find(d.bits());
        if (it == group_cache.end())
            it = group_cache.emplace(d.bits(), engine.enumerate_group(d)).first;
        return it->second;
    };

    struct RecordLess {
        bool operator()(const KGroup& a, const KGroup& b) const {
            if (a.e != b.e) return canonical_less(a.e, b.e);
            return word_list_less(a.finite_factor, b.finite_factor);
        }
    };
    std::vector<KGroup> records;

    const std::uint64_t full = Subset::full(static_cast<int>(sys.rank())).bits();
    for (std::uint64_t mask = 0;; ++mask) {
        Subset a(mask);
        SplitEA ea = split_ea(sys, a);
        Subset link = lk2(sys, a);

        // finite-type subsets D of lk2(A), each with its subgroup list
        const auto link_items = link.indices();
        const std::uint64_t dcount = 1ull << link_items.size();
        for (std::uint64_t dsel = 0; dsel < dcount; ++dsel) {
            Subset d;
            for (std::size_t k = 0; k < link_items.size(); ++k)
                if (dsel & (1ull << k)) d = d.with(link_items[k]);
            if (!is_finite_type(sys, d).finite) continue;

            auto sit = subgroup_cache.find(d.bits());
            if (sit == subgroup_cache.end())
                sit = subgroup_cache
                          .emplace(d.bits(), subgroups_of(engine, group_of(d), caps.order_cap))
                          .first;
            for (const auto& m : sit->second) {
                ++out.raw_count;
                std::vector<Word> gens = m;
                for (int t : ea.t.indices()) gens.push_back(Word{static_cast<std::uint8_t>(t)});
                ElementSet factor = close_under_product(engine, gens, caps.order_cap);
                records.push_back(KGroup{ea.e, {factor.begin(), factor.end()}});
            }
        }
        if (mask == full) break;
    }

    std::sort(records.begin(), records.end(), RecordLess{});
    if (dedupe)
        records.erase(std::unique(records.begin(), records.end(),
                                  [](const KGroup& a, const KGroup& b) {
                                      return a.e == b.e && a.finite_factor == b.finite_factor;
                                  }),
                      records.end());
    out.records = std::move(records);
    return out;
}

std::pair<Subset, Subset> visual_split(const CoxeterSystem& sys, Subset c,
                                       const std::vector<bool>& side_assignment) {
    auto comps = separates(sys, c);
    if (!comps) throw InputError("subset does not separate the presentation diagram");
    if (side_assignment.size() != comps->size())
        throw InputError("side assignment must cover every component");
    Subset a = c, b = c;
    for (std::size_t k = 0; k < comps->size(); ++k)
        (side_assignment[k] ? b : a) = (side_assignment[k] ? b : a) | (*comps)[k];
    if (a == c || b == c) throw InputError("both sides of a splitting need a component");
    return {a, b};
}

std::vector<ConjugacyHit> conjugacy_search(const WordEngine& engine, int radius,
                                           const Caps& caps) {
    const CoxeterSystem& sys = engine.system();
    std::vector<SeparatorRecord> seps = classify_minimal(sys, caps);
    std::vector<ConjugacyHit> out;
    if (seps.empty()) return out;

    Subset full = sys.full_set();
    Ball ball = engine.enumerate_ball(full, radius);

    // letterwise conjugation table: conj[w][s] = w·s·w⁻¹ if a single letter
    const int rank = static_cast<int>(sys.rank());
    std::vector<std::vector<int>> conj(ball.elements.size(), std::vector<int>(static_cast<std::size_t>(rank), -1));
    for (std::size_t wi = 0; wi < ball.elements.size(); ++wi) {
        const Word& w = ball.elements[wi];
        Word winv = word_inverse(w);
        for (int s = 0; s < rank; ++s) {
            Word p = w;
            p.push_back(static_cast<std::uint8_t>(s));
            p.insert(p.end(), winv.begin(), winv.end());
            Word red = engine.reduce(p).canonical;
            if (red.size() == 1) conj[wi][static_cast<std::size_t>(s)] = red[0];
        }
    }

    std::vector<Subset> candidates;
    for (std::uint64_t mask = 1; mask <= full.bits(); ++mask) {
        Subset c(mask);
        if (separates(sys, c)) continue;
        candidates.push_back(c);
    }
    std::sort(candidates.begin(), candidates.end(), SubsetCanonicalLess{});

    for (Subset c : candidates) {
        std::optional<ConjugacyHit> best;
        for (std::size_t wi = 0; wi < ball.elements.size() && !(best && best->target_minimal); ++wi) {
            Subset image;
            bool ok = true;
            for (int s : c.indices()) {
                int t = conj[wi][static_cast<std::size_t>(s)];
                if (t < 0) {
                    ok = false;
                    break;
                }
                image = image.with(t);
            }
            if (!ok) continue;
            const SeparatorRecord* target = nullptr;
            for (const auto& rec : seps) {
                if (!image.subset_of(rec.c)) continue;
                if (!target || (rec.minimal && !target->minimal)) target = &rec;
                if (target->minimal) break;
            }
            if (!target) continue;
            if (!best || (target->minimal && !best->target_minimal))
                best = ConjugacyHit{c, ball.elements[wi], image, target->c, target->minimal};
        }
        if (best) out.push_back(std::move(*best));
    }
    return out;
}

}  // namespace coxsplit

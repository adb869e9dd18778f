#include "coxsplit/word_engine.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_set>

#include "coxsplit/errors.hpp"

namespace coxsplit {

namespace {

std::optional<std::size_t> adjacent_pair(const Word& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == w[i + 1]) return i;
    return std::nullopt;
}

}  // namespace

Word word_inverse(const Word& w) {
    return Word(w.rbegin(), w.rend());
}

Word word_concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

std::string word_to_string(const CoxeterSystem& sys, const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += sys.name(w[i]);
    }
    return out;
}

Word word_from_tokens(const CoxeterSystem& sys, const std::vector<std::string>& tokens) {
    Word out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) {
        auto i = sys.index_of(t);
        if (!i) throw InputError("unknown generator symbol: " + t);
        out.push_back(static_cast<std::uint8_t>(*i));
    }
    return out;
}

std::size_t WordEngine::WordHash::operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (auto c : w) {
        h ^= static_cast<std::size_t>(c) + 1;
        h *= 1099511628211ull;
    }
    return h;
}

WordEngine::WordEngine(const CoxeterSystem& sys, Caps caps) : sys_(sys), caps_(caps) {}

void WordEngine::check_word(const Word& w) const {
    if (static_cast<int>(w.size()) > caps_.word_cap)
        throw ResourceBoundError("resource bound exceeded: word longer than cap");
    for (auto c : w)
        if (c >= sys_.rank()) throw InputError("word letter out of range");
}

// Tits' procedure: breadth-first closure of the word under braid moves.
// Any closure member with an adjacent equal pair triggers a deletion and a
// restart on the shorter word; otherwise every member is a geodesic and the
// least one is the canonical form.
Word WordEngine::reduce_uncached(Word w) const {
    for (;;) {
        if (auto i = adjacent_pair(w)) {
            w.erase(w.begin() + static_cast<std::ptrdiff_t>(*i), w.begin() + static_cast<std::ptrdiff_t>(*i) + 2);
            continue;
        }
        std::unordered_set<Word, WordHash> closure;
        std::vector<Word> queue;
        closure.insert(w);
        queue.push_back(w);
        Word best = w;
        std::optional<Word> shortened;
        while (!queue.empty() && !shortened) {
            Word cur = std::move(queue.back());
            queue.pop_back();
            for (std::size_t i = 0; i + 1 < cur.size() && !shortened; ++i) {
                std::uint32_t m = sys_.order(cur[i], cur[i + 1]);
                if (m == CoxeterSystem::infinity || i + m > cur.size()) continue;
                bool alternating = true;
                for (std::size_t k = 2; k < m; ++k)
                    if (cur[i + k] != cur[i + (k % 2)]) {
                        alternating = false;
                        break;
                    }
                if (!alternating) continue;
                Word next = cur;
                for (std::size_t k = 0; k < m; ++k) next[i + k] = cur[i + ((k + 1) % 2)];
                if (!closure.insert(next).second) continue;
                if (auto p = adjacent_pair(next)) {
                    next.erase(next.begin() + static_cast<std::ptrdiff_t>(*p),
                               next.begin() + static_cast<std::ptrdiff_t>(*p) + 2);
                    shortened = std::move(next);
                    break;
                }
                if (closure.size() > caps_.closure_cap)
                    throw ResourceBoundError("resource bound exceeded: braid closure cap");
                if (word_less(next, best)) best = next;
                queue.push_back(std::move(next));
            }
        }
        if (shortened) {
            w = std::move(*shortened);
            continue;
        }
        return best;
    }
}

Geodesic WordEngine::reduce(const Word& w) const {
    check_word(w);
    {
        std::lock_guard<std::mutex> lock(memo_mutex_);
        auto it = memo_.find(w);
        if (it != memo_.end()) {
            memo_order_.splice(memo_order_.begin(), memo_order_, it->second.second);
            return Geodesic{it->second.first};
        }
    }
    Word canonical = reduce_uncached(w);
    {
        std::lock_guard<std::mutex> lock(memo_mutex_);
        if (memo_.find(w) == memo_.end()) {
            memo_order_.push_front(w);
            memo_.emplace(w, std::make_pair(canonical, memo_order_.begin()));
            if (memo_.size() > caps_.memo_cap) {
                memo_.erase(memo_order_.back());
                memo_order_.pop_back();
            }
        }
    }
    return Geodesic{std::move(canonical)};
}

bool WordEngine::equal(const Word& u, const Word& v) const {
    return reduce(u).canonical == reduce(v).canonical;
}

Subset WordEngine::lett(const Word& w) const {
    Subset out;
    for (auto c : reduce(w).canonical) out = out.with(c);
    return out;
}

int WordEngine::length(const Word& w) const {
    return reduce(w).length();
}

bool WordEngine::in_special(const Word& w, Subset a) const {
    return lett(w).subset_of(a);
}

Geodesic WordEngine::min_double_coset_rep(Subset i, const Word& w, Subset j) const {
    Word d = reduce(w).canonical;
    const auto left = i.indices();
    const auto right = j.indices();
    for (bool descended = true; descended;) {
        descended = false;
        for (int s : left) {
            Word cand;
            cand.reserve(d.size() + 1);
            cand.push_back(static_cast<std::uint8_t>(s));
            cand.insert(cand.end(), d.begin(), d.end());
            Word red = reduce(cand).canonical;
            if (red.size() < d.size()) {
                d = std::move(red);
                descended = true;
                break;
            }
        }
        if (descended) continue;
        for (int s : right) {
            Word cand = d;
            cand.push_back(static_cast<std::uint8_t>(s));
            Word red = reduce(cand).canonical;
            if (red.size() < d.size()) {
                d = std::move(red);
                descended = true;
                break;
            }
        }
    }
    return Geodesic{std::move(d)};
}

std::pair<Geodesic, Subset> WordEngine::special_intersection(Subset i, const Word& w, Subset j) const {
    Geodesic d = min_double_coset_rep(i, w, j);
    Word dinv = word_inverse(d.canonical);
    Subset k;
    for (int t : j.indices()) {
        Word conj = d.canonical;
        conj.push_back(static_cast<std::uint8_t>(t));
        conj.insert(conj.end(), dinv.begin(), dinv.end());
        Word red = reduce(conj).canonical;
        if (red.size() == 1 && i.contains(red[0])) k = k.with(red[0]);
    }
    return {std::move(d), k};
}

std::vector<Word> WordEngine::enumerate_group(Subset a) const {
    std::set<Word, decltype(&word_less)> elems(&word_less);
    std::vector<Word> frontier{Word{}};
    elems.insert(Word{});
    const auto gens = a.indices();
    while (!frontier.empty()) {
        std::vector<Word> next;
        for (const auto& g : frontier)
            for (int s : gens) {
                Word cand = g;
                cand.push_back(static_cast<std::uint8_t>(s));
                Word red = reduce(cand).canonical;
                if (elems.insert(red).second) {
                    if (elems.size() > caps_.order_cap)
                        throw ResourceBoundError("resource bound exceeded: group order cap");
                    next.push_back(std::move(red));
                }
            }
        frontier = std::move(next);
    }
    return {elems.begin(), elems.end()};
}

Ball WordEngine::enumerate_ball(Subset a, int radius) const {
    std::set<Word, decltype(&word_less)> elems(&word_less);
    std::vector<Word> frontier{Word{}};
    elems.insert(Word{});
    const auto gens = a.indices();
    Ball out;
    out.saturated = true;
    for (int depth = 1; depth <= radius + 1 && !frontier.empty(); ++depth) {
        std::vector<Word> next;
        for (const auto& g : frontier)
            for (int s : gens) {
                Word cand = g;
                cand.push_back(static_cast<std::uint8_t>(s));
                Word red = reduce(cand).canonical;
                if (static_cast<int>(red.size()) != depth) continue;
                if (!elems.contains(red) ) {
                    if (depth > radius) {
                        // one probe layer past the radius only decides saturation
                        out.saturated = false;
                        goto done;
                    }
                    if (elems.size() >= caps_.closure_cap)
                        throw ResourceBoundError("resource bound exceeded: ball enumeration cap");
                    elems.insert(red);
                    next.push_back(std::move(red));
                }
            }
        frontier = std::move(next);
    }
done:
    out.elements.assign(elems.begin(), elems.end());
    return out;
}

}  // namespace coxsplit

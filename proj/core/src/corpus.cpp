#include "coxsplit/corpus.hpp"

#include <array>
#include <utility>

#include "coxsplit/errors.hpp"

namespace coxsplit {

namespace {

// Finite labels only; absent pairs are ∞ (dinf spells its ∞ out as 0).
const std::array<std::pair<const char*, const char*>, 8> kCorpus{{
    {"sysA", R"({
  "generators": ["a", "b", "c", "d", "x", "y"],
  "m": [
    ["a", "b", 2], ["a", "x", 2], ["a", "y", 2],
    ["b", "c", 2], ["b", "x", 3], ["b", "y", 3],
    ["c", "d", 3], ["c", "x", 2], ["c", "y", 2],
    ["d", "x", 2], ["d", "y", 2]
  ]
})"},
    {"sysB", R"({
  "generators": ["a1", "a2", "a3", "a4", "a5"],
  "m": [
    ["a1", "a2", 2], ["a2", "a3", 2], ["a3", "a4", 2],
    ["a4", "a5", 2], ["a5", "a1", 2], ["a2", "a5", 2]
  ]
})"},
    {"sysC", R"({
  "generators": ["s1", "s2", "s3", "s4", "s5", "s6", "s7"],
  "m": [
    ["s1", "s2", 2], ["s2", "s3", 2], ["s3", "s4", 2], ["s4", "s5", 2],
    ["s1", "s6", 2], ["s2", "s6", 2], ["s3", "s6", 2], ["s4", "s6", 2], ["s5", "s6", 2],
    ["s1", "s7", 2], ["s2", "s7", 2], ["s3", "s7", 2], ["s4", "s7", 2], ["s5", "s7", 2]
  ]
})"},
    {"sysD", R"({
  "generators": ["s1", "s2", "s3", "s4", "s5", "s6"],
  "m": [
    ["s1", "s3", 2], ["s1", "s4", 2], ["s1", "s5", 2], ["s1", "s6", 2],
    ["s2", "s3", 2], ["s2", "s4", 2], ["s2", "s5", 2], ["s2", "s6", 2]
  ]
})"},
    {"dinf", R"({
  "generators": ["a", "b"],
  "m": [["a", "b", 0]]
})"},
    {"a2", R"({
  "generators": ["a", "b"],
  "m": [["a", "b", 3]]
})"},
    {"b2", R"({
  "generators": ["a", "b"],
  "m": [["a", "b", 4]]
})"},
    {"a3", R"({
  "generators": ["s", "t", "u"],
  "m": [["s", "t", 3], ["t", "u", 3], ["s", "u", 2]]
})"},
}};

}  // namespace

std::vector<std::string> corpus_names() {
    std::vector<std::string> out;
    out.reserve(kCorpus.size());
    for (const auto& [name, _] : kCorpus) out.emplace_back(name);
    return out;
}

const std::string& corpus_json(const std::string& name) {
    static const std::array<std::string, 8> texts = [] {
        std::array<std::string, 8> t;
        for (std::size_t i = 0; i < kCorpus.size(); ++i) t[i] = kCorpus[i].second;
        return t;
    }();
    for (std::size_t i = 0; i < kCorpus.size(); ++i)
        if (name == kCorpus[i].first) return texts[i];
    throw InputError("unknown corpus system: " + name);
}

CoxeterSystem corpus_system(const std::string& name) {
    return CoxeterSystem::from_json_string(corpus_json(name));
}

}  // namespace coxsplit

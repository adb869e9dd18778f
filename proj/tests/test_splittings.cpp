#include <doctest.h>

#include <algorithm>
#include <set>

#include "coxsplit/corpus.hpp"
#include "coxsplit/errors.hpp"
#include "coxsplit/splittings.hpp"
#include "coxsplit/word_engine.hpp"

using namespace coxsplit;

namespace {

std::vector<std::string> csv_list(const CoxeterSystem& sys, const std::vector<SeparatorRecord>& v) {
    std::vector<std::string> out;
    for (const auto& rec : v) {
        std::string s;
        for (const auto& n : sys.subset_names(rec.c)) s += (s.empty() ? "" : ",") + n;
        out.push_back(s);
    }
    return out;
}

const SeparatorRecord& find_rec(const CoxeterSystem& sys, const std::vector<SeparatorRecord>& v,
                                const char* csv) {
    Subset c = sys.subset_from_csv(csv);
    for (const auto& rec : v)
        if (rec.c == c) return rec;
    REQUIRE(false);
    return v.front();
}

}  // namespace

TEST_CASE("separator enumeration is exact on the rigid six-generator system") {
    auto sys = corpus_system("sysA");
    auto seps = enumerate_separators(sys);
    CHECK(csv_list(sys, seps) ==
          std::vector<std::string>{"b,x,y", "c,x,y", "a,b,c,d", "a,c,x,y", "b,c,x,y", "b,d,x,y"});

    const auto& cxy = find_rec(sys, seps, "c,x,y");
    CHECK(cxy.components.size() == 2);
    CHECK(cxy.e == sys.subset_from_csv("x,y"));
    CHECK(cxy.t == sys.subset_from_csv("c"));
    const auto& abcd = find_rec(sys, seps, "a,b,c,d");
    CHECK(abcd.e == sys.subset_from_csv("a,b,c,d"));
    CHECK(abcd.t.empty());
}

TEST_CASE("separator enumeration on the disconnected and pentagon systems") {
    auto dinf = corpus_system("dinf");
    auto seps = enumerate_separators(dinf);
    REQUIRE(seps.size() == 1);
    CHECK(seps[0].c.empty());
    CHECK(seps[0].e.empty());
    CHECK(seps[0].t.empty());
    CHECK(seps[0].components.size() == 2);

    auto sysB = corpus_system("sysB");
    CHECK(csv_list(sysB, enumerate_separators(sysB)) ==
          std::vector<std::string>{"a2,a4", "a2,a5", "a3,a5", "a1,a2,a4", "a1,a3,a5", "a2,a3,a5",
                                   "a2,a4,a5"});
}

TEST_CASE("minimality classification and witnesses") {
    auto sys = corpus_system("sysA");
    auto recs = classify_minimal(sys);
    const auto& cxy = find_rec(sys, recs, "c,x,y");
    CHECK(cxy.minimal);
    CHECK_FALSE(cxy.witness.has_value());
    const auto& abcd = find_rec(sys, recs, "a,b,c,d");
    CHECK(abcd.minimal);
    const auto& bxy = find_rec(sys, recs, "b,x,y");
    CHECK_FALSE(bxy.minimal);
    CHECK(bxy.witness == sys.subset_from_csv("c,x,y"));
    CHECK(find_rec(sys, recs, "a,c,x,y").witness == sys.subset_from_csv("c,x,y"));
    CHECK(find_rec(sys, recs, "b,c,x,y").witness == sys.subset_from_csv("c,x,y"));
    // {b,x,y} precedes {c,x,y} canonically and its infinite part is also smaller here
    CHECK(find_rec(sys, recs, "b,d,x,y").witness == sys.subset_from_csv("b,x,y"));
}

TEST_CASE("the pentagon system has a unique minimal separator") {
    auto sys = corpus_system("sysB");
    auto recs = classify_minimal(sys);
    int minimal = 0;
    for (const auto& rec : recs) minimal += rec.minimal ? 1 : 0;
    CHECK(minimal == 1);
    CHECK(find_rec(sys, recs, "a2,a5").minimal);
    CHECK(find_rec(sys, recs, "a2,a4").witness == sys.subset_from_csv("a2,a5"));
    CHECK(find_rec(sys, recs, "a3,a5").witness == sys.subset_from_csv("a2,a5"));
    CHECK(find_rec(sys, recs, "a1,a2,a4").witness == sys.subset_from_csv("a2,a4"));
    CHECK(find_rec(sys, recs, "a1,a3,a5").witness == sys.subset_from_csv("a2,a5"));
    CHECK(find_rec(sys, recs, "a2,a3,a5").witness == sys.subset_from_csv("a2,a5"));
    CHECK(find_rec(sys, recs, "a2,a4,a5").witness == sys.subset_from_csv("a2,a5"));
}

TEST_CASE("minimal separators of the two-apex system") {
    auto sys = corpus_system("sysC");
    auto recs = classify_minimal(sys);
    std::vector<std::string> minimal;
    for (const auto& rec : recs)
        if (rec.minimal) {
            std::string s;
            for (const auto& n : sys.subset_names(rec.c)) s += (s.empty() ? "" : ",") + n;
            minimal.push_back(s);
        }
    CHECK(minimal == std::vector<std::string>{"s2,s6,s7", "s3,s6,s7", "s4,s6,s7", "s2,s3,s6,s7",
                                              "s3,s4,s6,s7", "s1,s2,s3,s4,s5"});
}

TEST_CASE("minimal separators of the complete bipartite system") {
    auto sys = corpus_system("sysD");
    auto recs = classify_minimal(sys);
    CHECK(recs.size() == 12);
    std::vector<std::string> minimal;
    for (const auto& rec : recs)
        if (rec.minimal) {
            std::string s;
            for (const auto& n : sys.subset_names(rec.c)) s += (s.empty() ? "" : ",") + n;
            minimal.push_back(s);
        }
    CHECK(minimal == std::vector<std::string>{"s1,s2", "s1,s2,s3", "s1,s2,s4", "s1,s2,s5",
                                              "s1,s2,s6", "s3,s4,s5,s6"});
}

TEST_CASE("candidate-subgroup enumeration: frozen counts") {
    auto count = [](const char* name, bool dedupe) {
        auto sys = corpus_system(name);
        WordEngine engine(sys);
        auto k = enumerate_k(engine, dedupe);
        return std::pair<std::uint64_t, std::size_t>(k.raw_count, k.records.size());
    };
    CHECK(count("a2", true) == std::pair<std::uint64_t, std::size_t>(14, 6));
    CHECK(count("b2", true) == std::pair<std::uint64_t, std::size_t>(18, 10));
    CHECK(count("a3", true) == std::pair<std::uint64_t, std::size_t>(65, 30));
    CHECK(count("dinf", true) == std::pair<std::uint64_t, std::size_t>(8, 4));
    CHECK(count("sysD", true) == std::pair<std::uint64_t, std::size_t>(200, 72));
    // without dedupe every tuple keeps its record
    auto [raw, records] = count("dinf", false);
    CHECK(raw == 8);
    CHECK(records == 8);
}

TEST_CASE("candidate-subgroup records for the infinite dihedral system") {
    auto sys = corpus_system("dinf");
    WordEngine engine(sys);
    auto k = enumerate_k(engine, true);
    REQUIRE(k.records.size() == 4);
    CHECK(k.records[0].e.empty());
    CHECK(k.records[0].finite_factor == std::vector<Word>{{}});
    CHECK(k.records[1].e.empty());
    CHECK(k.records[1].finite_factor == std::vector<Word>{{}, {0}});
    CHECK(k.records[2].e.empty());
    CHECK(k.records[2].finite_factor == std::vector<Word>{{}, {1}});
    CHECK(k.records[3].e == sys.full_set());
    CHECK(k.records[3].finite_factor == std::vector<Word>{{}});
}

TEST_CASE("candidate-subgroup invariants across the corpus") {
    for (const char* name : {"a2", "b2", "a3", "dinf", "sysB", "sysD"}) {
        auto sys = corpus_system(name);
        WordEngine engine(sys);
        auto k = enumerate_k(engine, true);
        CHECK(k.records.size() <= k.raw_count);
        std::set<std::pair<std::uint64_t, std::vector<Word>>> seen;
        for (const auto& rec : k.records) {
            // identity is always a member, the factor is closed under inverse
            REQUIRE(!rec.finite_factor.empty());
            CHECK(rec.finite_factor.front().empty());
            CHECK(std::is_sorted(rec.finite_factor.begin(), rec.finite_factor.end(), word_less));
            for (const auto& w : rec.finite_factor) {
                bool has_inverse = false;
                for (const auto& v : rec.finite_factor)
                    if (engine.equal(word_inverse(w), v)) has_inverse = true;
                CHECK(has_inverse);
            }
            // the infinite part is purely infinite
            auto ea = split_ea(sys, rec.e);
            CHECK(ea.e == rec.e);
            // deduped records are pairwise distinct
            CHECK(seen.insert({rec.e.bits(), rec.finite_factor}).second);
        }
    }
}

TEST_CASE("splitting a system over a separator") {
    auto sys = corpus_system("sysB");
    Subset c = sys.subset_from_csv("a2,a5");
    auto split = visual_split(sys, c, {false, true});
    CHECK(split.first == sys.subset_from_csv("a1,a2,a5"));
    CHECK(split.second == sys.subset_from_csv("a2,a3,a4,a5"));
    auto flipped = visual_split(sys, c, {true, false});
    CHECK(flipped.first == sys.subset_from_csv("a2,a3,a4,a5"));
    CHECK(flipped.second == sys.subset_from_csv("a1,a2,a5"));

    CHECK_THROWS_AS((void)visual_split(sys, sys.subset_from_csv("a1"), {false, true}), InputError);
    CHECK_THROWS_AS((void)visual_split(sys, c, {false}), InputError);
    CHECK_THROWS_AS((void)visual_split(sys, c, {false, false}), InputError);
}

TEST_CASE("bounded conjugacy search finds the non-visual minimal conjugate") {
    auto sys = corpus_system("sysA");
    WordEngine engine(sys);
    auto hits = conjugacy_search(engine, 2);
    bool found = false;
    for (const auto& h : hits) {
        // soundness of every reported hit
        CHECK_FALSE(separates(sys, h.c).has_value());
        REQUIRE(separates(sys, h.target).has_value());
        CHECK(h.image.subset_of(h.target));
        Word w = h.witness;
        Subset image;
        for (int s : h.c.indices()) {
            Word conj = word_concat(word_concat(w, Word{static_cast<std::uint8_t>(s)}),
                                    word_inverse(w));
            Geodesic g = engine.reduce(conj);
            REQUIRE(g.length() == 1);
            image = image.with(g.canonical[0]);
        }
        CHECK(image == h.image);
        if (h.c == sys.subset_from_csv("d,x,y")) {
            found = true;
            CHECK(h.image == sys.subset_from_csv("c,x,y"));
            CHECK(h.target == sys.subset_from_csv("c,x,y"));
            CHECK(h.target_minimal);
            CHECK(h.witness.size() <= 2);
        }
    }
    CHECK(found);
}

TEST_CASE("generator-count cap") {
    std::string gens;
    for (int i = 0; i < 17; ++i) gens += (i ? ",\"g" : "\"g") + std::to_string(i) + "\"";
    auto sys = CoxeterSystem::from_json_string(R"({"generators":[)" + gens + R"(],"m":[]})");
    CHECK_THROWS_AS((void)enumerate_separators(sys), ResourceBoundError);
}

#include <doctest.h>

#include <string>

#include "coxsplit/corpus.hpp"
#include "coxsplit/finite_type.hpp"
#include "oracle.hpp"

using namespace coxsplit;

namespace {

// Diagram-style construction: the given edges carry their labels, every other
// pair commutes (the JSON default for an absent pair is ∞, not 2).
CoxeterSystem from_diagram(const std::vector<std::string>& names,
                           const std::vector<std::tuple<int, int, int>>& edges) {
    std::vector<std::tuple<int, int, std::uint32_t>> entries;
    for (auto [i, j, label] : edges) entries.emplace_back(i, j, static_cast<std::uint32_t>(label));
    for (int i = 0; i < static_cast<int>(names.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(names.size()); ++j) {
            bool listed = false;
            for (auto [a, b, label] : edges)
                listed = listed || (std::min(a, b) == i && std::max(a, b) == j);
            if (!listed) entries.emplace_back(i, j, 2u);
        }
    return CoxeterSystem(names, entries);
}

// path with the given consecutive labels, generators g0, g1, ...
CoxeterSystem path_system(const std::vector<int>& labels) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i <= labels.size(); ++i) names.push_back("g" + std::to_string(i));
    std::vector<std::tuple<int, int, int>> edges;
    for (std::size_t i = 0; i < labels.size(); ++i)
        edges.emplace_back(static_cast<int>(i), static_cast<int>(i + 1), labels[i]);
    return from_diagram(names, edges);
}

// star: center c, three arms of the given vertex counts, all labels 3
CoxeterSystem star_system(int arm1, int arm2, int arm3) {
    std::vector<std::string> names{"c"};
    std::vector<std::tuple<int, int, int>> edges;
    int arms[3] = {arm1, arm2, arm3};
    for (int a = 0; a < 3; ++a) {
        int prev = 0;
        for (int k = 0; k < arms[a]; ++k) {
            names.push_back("a" + std::to_string(a) + "_" + std::to_string(k));
            int cur = static_cast<int>(names.size()) - 1;
            edges.emplace_back(prev, cur, 3);
            prev = cur;
        }
    }
    return from_diagram(names, edges);
}

void expect_type(const CoxeterSystem& sys, const std::string& tag, long long order) {
    auto v = is_finite_type(sys, sys.full_set());
    REQUIRE(v.components.size() == 1);
    CHECK(v.components[0].tag == tag);
    CHECK(v.finite == (order != 0));
    CHECK(v.order == order);
}

void expect_order_by_bfs(const CoxeterSystem& sys, std::size_t order) {
    oracle::Group g(sys, sys.full_set(), order + 64);
    CHECK(g.complete());
    CHECK(g.size() == order);
}

}  // namespace

TEST_CASE("irreducible catalog: linear types") {
    expect_type(path_system({}), "A_1", 2);
    expect_type(path_system({3}), "A_2", 6);
    expect_type(path_system({3, 3}), "A_3", 24);
    expect_type(path_system({3, 3, 3}), "A_4", 120);
    expect_type(path_system({3, 3, 3, 3, 3, 3}), "A_7", 40320);
    expect_type(path_system({4}), "B_2", 8);
    expect_type(path_system({4, 3}), "B_3", 48);
    expect_type(path_system({3, 4}), "B_3", 48);
    expect_type(path_system({4, 3, 3}), "B_4", 384);
    expect_type(path_system({3, 3, 3, 3, 4}), "B_6", 46080);
    expect_type(path_system({3, 4, 3}), "F4", 1152);
    expect_type(path_system({5, 3}), "H3", 120);
    expect_type(path_system({5, 3, 3}), "H4", 14400);
    expect_type(path_system({5}), "I2(5)", 10);
    expect_type(path_system({6}), "I2(6)", 12);
    expect_type(path_system({9}), "I2(9)", 18);
}

TEST_CASE("irreducible catalog: branched types") {
    expect_type(star_system(1, 1, 1), "D_4", 192);
    expect_type(star_system(1, 1, 2), "D_5", 1920);
    expect_type(star_system(1, 1, 3), "D_6", 23040);
    expect_type(star_system(1, 2, 2), "E6", 51840);
    expect_type(star_system(1, 2, 3), "E7", 2903040);
    expect_type(star_system(1, 2, 4), "E8", 696729600);
}

TEST_CASE("infinite shapes") {
    auto infinite = [](const CoxeterSystem& sys) {
        auto v = is_finite_type(sys, sys.full_set());
        CHECK_FALSE(v.finite);
        CHECK(v.order == 0);
    };
    infinite(corpus_system("dinf"));
    // affine triangle
    infinite(CoxeterSystem::from_json_string(
        R"({"generators":["a","b","c"],"m":[["a","b",3],["b","c",3],["a","c",3]]})"));
    // two heavy edges on a path
    infinite(path_system({4, 3, 4}));
    infinite(path_system({4, 4}));
    // heavy label in the wrong position
    infinite(path_system({3, 4, 3, 3}));
    expect_type(path_system({3, 5}), "H3", 120);  // mirrored H3 is still at a leaf
    infinite(path_system({3, 5, 3}));
    infinite(path_system({5, 3, 3, 3}));
    infinite(path_system({7, 3}));
    // branched failures
    infinite(star_system(2, 2, 2));
    infinite(star_system(1, 3, 3));
    infinite(star_system(1, 2, 5));
    // degree four
    infinite(CoxeterSystem::from_json_string(
        R"({"generators":["c","p","q","r","s"],"m":[["c","p",3],["c","q",3],["c","r",3],["c","s",3]]})"));
    // cycle
    infinite(CoxeterSystem::from_json_string(
        R"({"generators":["a","b","c","d"],"m":[["a","b",3],["b","c",3],["c","d",3],["a","d",3]]})"));
}

TEST_CASE("orders agree with reflection-representation enumeration") {
    expect_order_by_bfs(path_system({3}), 6);
    expect_order_by_bfs(path_system({4}), 8);
    expect_order_by_bfs(path_system({3, 3}), 24);
    expect_order_by_bfs(path_system({3, 3, 3}), 120);
    expect_order_by_bfs(path_system({4, 3}), 48);
    expect_order_by_bfs(path_system({4, 3, 3}), 384);
    expect_order_by_bfs(path_system({5, 3}), 120);
    expect_order_by_bfs(path_system({3, 4, 3}), 1152);
    expect_order_by_bfs(star_system(1, 1, 1), 192);
    expect_order_by_bfs(path_system({7}), 14);

    // BFS confirms non-termination up to the cap for an affine system
    oracle::Group g(CoxeterSystem::from_json_string(
                        R"({"generators":["a","b","c"],"m":[["a","b",3],["b","c",3],["a","c",3]]})"),
                    Subset::of({0, 1, 2}), 600);
    CHECK_FALSE(g.complete());
    CHECK(g.size() == 600);
}

TEST_CASE("reducible subsets multiply component orders") {
    auto sys = CoxeterSystem::from_json_string(
        R"({"generators":["a","b","c"],"m":[["a","b",3],["a","c",2],["b","c",2]]})");
    auto v = is_finite_type(sys, sys.full_set());
    CHECK(v.finite);
    CHECK(v.order == 12);
    REQUIRE(v.components.size() == 2);
    CHECK(v.components[0].tag == "A_2");
    CHECK(v.components[1].tag == "A_1");
    CHECK(is_finite_type(sys, Subset{}).finite);
    CHECK(is_finite_type(sys, Subset{}).order == 1);
}

TEST_CASE("infinite-part/finite-part splitting on corpus subsets") {
    auto sysA = corpus_system("sysA");
    auto ea = split_ea(sysA, sysA.full_set());
    CHECK(ea.e == sysA.full_set());
    CHECK(ea.t.empty());
    ea = split_ea(sysA, sysA.subset_from_csv("b,c,x"));
    CHECK(ea.e.empty());
    CHECK(ea.t == sysA.subset_from_csv("b,c,x"));
    ea = split_ea(sysA, sysA.subset_from_csv("c,x,y"));
    CHECK(ea.e == sysA.subset_from_csv("x,y"));
    CHECK(ea.t == sysA.subset_from_csv("c"));

    auto sysD = corpus_system("sysD");
    ea = split_ea(sysD, sysD.subset_from_csv("s1,s2,s3"));
    CHECK(ea.e == sysD.subset_from_csv("s1,s2"));
    CHECK(ea.t == sysD.subset_from_csv("s3"));
    ea = split_ea(sysD, sysD.subset_from_csv("s3,s4,s5"));
    CHECK(ea.e == sysD.subset_from_csv("s3,s4,s5"));
    CHECK(ea.t.empty());
}

TEST_CASE("commuting link") {
    auto sysD = corpus_system("sysD");
    CHECK(lk2(sysD, Subset{}) == sysD.full_set());
    CHECK(lk2(sysD, sysD.subset_from_csv("s1")) == sysD.subset_from_csv("s3,s4,s5,s6"));
    CHECK(lk2(sysD, sysD.subset_from_csv("s3")) == sysD.subset_from_csv("s1,s2"));
    CHECK(lk2(sysD, sysD.subset_from_csv("s1,s3")).empty());

    auto sysA = corpus_system("sysA");
    CHECK(lk2(sysA, sysA.subset_from_csv("a")) == sysA.subset_from_csv("b,x,y"));
    CHECK(lk2(sysA, sysA.subset_from_csv("x,y")) == sysA.subset_from_csv("a,c,d"));
}

TEST_CASE("split parts never share a noncommuting edge") {
    for (const auto& name : corpus_names()) {
        auto sys = corpus_system(name);
        std::uint64_t full = sys.full_set().bits();
        for (std::uint64_t mask = 0; mask <= full; ++mask) {
            Subset a{mask & full};
            auto ea = split_ea(sys, a);
            CHECK((ea.e | ea.t) == a);
            CHECK((ea.e & ea.t).empty());
            for (int e : ea.e.indices())
                for (int t : ea.t.indices()) CHECK(sys.order(e, t) == 2);
            CHECK(is_finite_type(sys, ea.t).finite);
            // the infinite part is pure: re-splitting it moves nothing
            auto again = split_ea(sys, ea.e);
            CHECK(again.e == ea.e);
            CHECK(again.t.empty());
        }
    }
}

#include "coxsplit/system.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include <json.hpp>

#include "coxsplit/errors.hpp"

namespace coxsplit {

namespace {

constexpr int kMaxRank = 64;  // subsets are 64-bit masks

void check_names(const std::vector<std::string>& names) {
    if (static_cast<int>(names.size()) > kMaxRank)
        throw ResourceBoundError("resource bound exceeded: more than 64 generators");
    std::unordered_map<std::string, int> seen;
    for (const auto& n : names) {
        if (n.empty()) throw InputError("empty generator symbol");
        if (!seen.emplace(n, 1).second) throw InputError("duplicate generator symbol: " + n);
    }
}

}  // namespace

CoxeterSystem::CoxeterSystem(std::vector<std::string> names,
                             const std::vector<std::tuple<int, int, std::uint32_t>>& entries)
    : names_(std::move(names)) {
    check_names(names_);
    const std::size_t n = names_.size();
    m_.assign(n * n, infinity);
    for (std::size_t i = 0; i < n; ++i) m_[i * n + i] = 1;
    for (auto [i, j, v] : entries) {
        if (i < 0 || j < 0 || i >= static_cast<int>(n) || j >= static_cast<int>(n))
            throw InputError("generator index out of range");
        if (i == j) {
            if (v != 1) throw InputError("diagonal exponent must be 1 for " + names_[static_cast<std::size_t>(i)]);
            continue;
        }
        if (v == 1) throw InputError("off-diagonal exponent 1 between " + names_[static_cast<std::size_t>(i)] + " and " +
                                     names_[static_cast<std::size_t>(j)]);
        auto& slot = m_[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)];
        auto& mirror = m_[static_cast<std::size_t>(j) * n + static_cast<std::size_t>(i)];
        if (slot != infinity && slot != v)
            throw InputError("conflicting exponents for pair " + names_[static_cast<std::size_t>(i)] + "," +
                             names_[static_cast<std::size_t>(j)]);
        slot = v;
        mirror = v;
    }
    build_adjacency();
}

void CoxeterSystem::build_adjacency() {
    const int n = rank();
    pres_adj_.assign(static_cast<std::size_t>(n), Subset{});
    nonc_adj_.assign(static_cast<std::size_t>(n), Subset{});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (order(i, j) != infinity) pres_adj_[static_cast<std::size_t>(i)] = pres_adj_[static_cast<std::size_t>(i)].with(j);
            if (order(i, j) != 2) nonc_adj_[static_cast<std::size_t>(i)] = nonc_adj_[static_cast<std::size_t>(i)].with(j);
        }
}

CoxeterSystem CoxeterSystem::from_json_string(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("bad system JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array())
        throw InputError("system JSON needs a \"generators\" array");
    std::vector<std::string> names;
    for (const auto& g : j["generators"]) {
        if (!g.is_string()) throw InputError("generator symbols must be strings");
        names.push_back(g.get<std::string>());
    }
    check_names(names);
    std::unordered_map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(names.size()); ++i) index[names[static_cast<std::size_t>(i)]] = i;

    std::vector<std::tuple<int, int, std::uint32_t>> entries;
    if (j.contains("m")) {
        if (!j["m"].is_array()) throw InputError("\"m\" must be an array of [a,b,m] triples");
        for (const auto& e : j["m"]) {
            if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string() ||
                !e[2].is_number_integer())
                throw InputError("\"m\" entries must be [symbol, symbol, integer]");
            auto a = index.find(e[0].get<std::string>());
            auto b = index.find(e[1].get<std::string>());
            if (a == index.end()) throw InputError("unknown generator symbol: " + e[0].get<std::string>());
            if (b == index.end()) throw InputError("unknown generator symbol: " + e[1].get<std::string>());
            long long v = e[2].get<long long>();
            if (v < 0) throw InputError("negative exponent");
            entries.emplace_back(a->second, b->second, static_cast<std::uint32_t>(v));
        }
    }
    return CoxeterSystem(std::move(names), entries);
}

std::string CoxeterSystem::to_json_string(int indent) const {
    nlohmann::json j;
    j["generators"] = names_;
    auto& m = j["m"] = nlohmann::json::array();
    for (int i = 0; i < rank(); ++i)
        for (int k = i + 1; k < rank(); ++k)
            if (order(i, k) != infinity)
                m.push_back({names_[static_cast<std::size_t>(i)], names_[static_cast<std::size_t>(k)], order(i, k)});
    return j.dump(indent);
}

std::optional<int> CoxeterSystem::index_of(const std::string& name) const {
    for (int i = 0; i < rank(); ++i)
        if (names_[static_cast<std::size_t>(i)] == name) return i;
    return std::nullopt;
}

std::vector<Subset> CoxeterSystem::components(Subset active, const std::vector<Subset>& adj) const {
    std::vector<Subset> out;
    Subset remaining = active;
    while (!remaining.empty()) {
        Subset comp = Subset::single(remaining.least());
        for (;;) {
            Subset grown = comp;
            for (int i : comp.indices()) grown = grown | (adj[static_cast<std::size_t>(i)] & active);
            if (grown == comp) break;
            comp = grown;
        }
        out.push_back(comp);
        remaining = remaining - comp;
    }
    std::sort(out.begin(), out.end(), [](Subset a, Subset b) { return a.least() < b.least(); });
    return out;
}

std::vector<Subset> CoxeterSystem::presentation_components(Subset active) const {
    return components(active, pres_adj_);
}

std::vector<Subset> CoxeterSystem::noncommuting_components(Subset active) const {
    return components(active, nonc_adj_);
}

CoxeterSystem CoxeterSystem::restrict(Subset a) const {
    std::vector<int> idx = a.indices();
    std::vector<std::string> names;
    names.reserve(idx.size());
    for (int i : idx) names.push_back(names_[static_cast<std::size_t>(i)]);
    std::vector<std::tuple<int, int, std::uint32_t>> entries;
    for (std::size_t p = 0; p < idx.size(); ++p)
        for (std::size_t q = p + 1; q < idx.size(); ++q)
            if (order(idx[p], idx[q]) != infinity)
                entries.emplace_back(static_cast<int>(p), static_cast<int>(q), order(idx[p], idx[q]));
    return CoxeterSystem(std::move(names), entries);
}

std::vector<std::string> CoxeterSystem::subset_names(Subset a) const {
    std::vector<std::string> out;
    for (int i : a.indices()) out.push_back(names_[static_cast<std::size_t>(i)]);
    return out;
}

Subset CoxeterSystem::subset_from_names(const std::vector<std::string>& names) const {
    Subset out;
    for (const auto& n : names) {
        auto i = index_of(n);
        if (!i) throw InputError("unknown generator symbol: " + n);
        out = out.with(*i);
    }
    return out;
}

Subset CoxeterSystem::subset_from_csv(const std::string& csv) const {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(csv);
    while (std::getline(in, cur, ','))
        if (!cur.empty()) parts.push_back(cur);
    return subset_from_names(parts);
}

std::optional<std::vector<Subset>> separates(const CoxeterSystem& sys, Subset c) {
    auto comps = sys.presentation_components(sys.full_set() - c);
    if (comps.size() < 2) return std::nullopt;
    return comps;
}

bool separates_within(const CoxeterSystem& sys, Subset c, Subset v) {
    auto comps = sys.presentation_components(sys.full_set() - c);
    int touched = 0;
    for (const auto& comp : comps)
        if (comp.intersects(v - c)) ++touched;
    return touched >= 2;
}

}  // namespace coxsplit

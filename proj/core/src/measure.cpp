#include "coxsplit/measure.hpp"

#include <algorithm>
#include <numeric>

#include "coxsplit/errors.hpp"

namespace coxsplit {

namespace {

BigInt pow3(std::uint64_t n) {
    BigInt out = 1;
    BigInt base = 3;
    while (n) {
        if (n & 1) out *= base;
        base *= base;
        n >>= 1;
    }
    return out;
}

}  // namespace

Measure::Measure(const WordEngine& engine, int search_bound, Caps caps)
    : engine_(engine), search_bound_(search_bound), caps_(caps) {
    KEnumeration k = enumerate_k(engine, true, caps);
    kgroups_ = std::move(k.records);
    raw_count_ = k.raw_count;

    // generators joined by an odd label are conjugate, hence identified in
    // W^ab = (Z2)^classes
    const CoxeterSystem& sys = engine.system();
    const int rank = static_cast<int>(sys.rank());
    std::vector<int> parent(static_cast<std::size_t>(rank));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    };
    for (int s = 0; s < rank; ++s)
        for (int t = s + 1; t < rank; ++t) {
            std::uint32_t m = sys.order(s, t);
            if (m != CoxeterSystem::infinity && m % 2 == 1)
                parent[static_cast<std::size_t>(find(s))] = find(t);
        }
    ab_class_.assign(static_cast<std::size_t>(rank), -1);
    for (int s = 0; s < rank; ++s) {
        int r = find(s);
        if (ab_class_[static_cast<std::size_t>(r)] < 0) ab_class_[static_cast<std::size_t>(r)] = ab_rank_++;
        ab_class_[static_cast<std::size_t>(s)] = ab_class_[static_cast<std::size_t>(r)];
    }
}

std::uint64_t Measure::ab_of_word(const Word& w) const {
    std::uint64_t v = 0;
    for (auto c : w) v ^= 1ull << ab_class_[c];
    return v;
}

bool Measure::ab_in_span(std::uint64_t v, Subset g) const {
    std::uint64_t span = 0;
    for (int s : g.indices()) span |= 1ull << ab_class_[static_cast<std::size_t>(s)];
    return (v & ~span) == 0;
}

const Ball& Measure::ball_of(Subset a) {
    auto it = ball_cache_.find(a.bits());
    if (it == ball_cache_.end())
        it = ball_cache_.emplace(a.bits(), engine_.enumerate_ball(a, search_bound_)).first;
    return it->second;
}

BigInt Measure::bound() const {
    return pow3(k_count());
}

Measure::NValue Measure::n_of(Subset g) {
    if (auto it = n_cache_.find(g.bits()); it != n_cache_.end()) return it->second;

    const CoxeterSystem& sys = engine_.system();
    NValue out;
    out.exact = true;

    BigInt g_order = 0;
    {
        FiniteTypeVerdict v = is_finite_type(sys, g);
        if (v.finite) g_order = v.order;
    }

    for (const KGroup& kg : kgroups_) {
        // necessary: the infinite-type core embeds only via conjugators
        // fixing it pointwise, so it must sit inside G verbatim
        if (!kg.e.subset_of(g)) continue;

        Subset supp;
        for (const Word& f : kg.finite_factor) supp = supp | engine_.lett(f);

        if (supp.subset_of(g)) {
            ++out.n;
            continue;
        }

        bool excluded = false;
        for (const Word& f : kg.finite_factor)
            if (!ab_in_span(ab_of_word(f), g)) {
                excluded = true;
                break;
            }
        if (!excluded && g_order != 0 && g_order % kg.finite_factor.size() != 0) excluded = true;
        if (excluded) continue;

        // conjugators reduce to elements commuting with E letterwise
        const Ball& ball = ball_of(lk2(sys, kg.e));
        bool found = false;
        for (const Word& u : ball.elements) {
            Word uinv = word_inverse(u);
            bool all_in = true;
            for (const Word& f : kg.finite_factor) {
                if (f.empty()) continue;
                Word conj = word_concat(word_concat(u, f), uinv);
                if (!engine_.lett(conj).subset_of(g)) {
                    all_in = false;
                    break;
                }
            }
            if (all_in) {
                found = true;
                break;
            }
        }
        if (found)
            ++out.n;
        else if (!ball.saturated)
            out.exact = false;
    }

    n_cache_.emplace(g.bits(), out);
    return out;
}

Measure::CValue Measure::c_of(const VisualGog& g) {
    CValue out;
    out.c = 0;
    out.exact = true;
    std::vector<const GogVertex*> vs;
    for (const auto& v : g.vertices) vs.push_back(&v);
    std::sort(vs.begin(), vs.end(), [](const GogVertex* a, const GogVertex* b) {
        if (a->label != b->label) return canonical_less(a->label, b->label);
        return a->id < b->id;
    });
    for (const GogVertex* v : vs) {
        NValue n = n_of(v->label);
        out.c += pow3(n.n);
        out.exact = out.exact && n.exact;
        out.vertices.push_back(VertexMeasure{v->label, n});
    }
    return out;
}

Measure::CertifyReport Measure::certify_sequence(const std::vector<TraceMove>& trace) {
    const CoxeterSystem& sys = engine_.system();
    CertifyReport report;
    report.bound = bound();
    report.within_bound = BigInt(trace.size()) <= report.bound;
    report.trace_valid = true;

    VisualGog g = trivial_gog(sys);
    CValue before = c_of(g);
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const TraceMove& m = trace[i];
        const GogVertex* v = g.find_vertex_by_label(m.vertex_label);
        if (!v) {
            report.trace_valid = false;
            report.error = "step " + std::to_string(i + 1) + ": no vertex with the given label";
            break;
        }
        try {
            g = reduce(apply_split(sys, g, SplitMove{v->id, m.separator, m.a, m.b}));
        } catch (const InputError& e) {
            report.trace_valid = false;
            report.error = "step " + std::to_string(i + 1) + ": " + e.what();
            break;
        }
        CValue after = c_of(g);

        StepStatus status;
        if (before.exact && after.c >= before.c)
            status = StepStatus::Violation;
        else if (before.exact && after.exact)
            status = StepStatus::CertifiedDecrease;
        else
            status = StepStatus::Consistent;
        report.steps.push_back(CertifyStep{m, before, after, status});
        before = std::move(after);
    }

    report.overall = StepStatus::CertifiedDecrease;
    for (const auto& step : report.steps) {
        if (step.status == StepStatus::Violation) {
            report.overall = StepStatus::Violation;
            break;
        }
        if (step.status == StepStatus::Consistent) report.overall = StepStatus::Consistent;
    }
    if (!report.within_bound) report.overall = StepStatus::Violation;
    return report;
}

}  // namespace coxsplit

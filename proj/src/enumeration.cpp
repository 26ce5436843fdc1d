#include "logenr/enumeration.hpp"

#include <bit>

#include "logenr/error.hpp"

namespace logenr {

SubsetT::SubsetT(std::uint32_t bits) : bits_(bits) {
    if (bits >= kCount) throw Error(Errc::InvalidArgument, "subset mask has bits beyond label 15");
}

SubsetT SubsetT::from_labels(const std::vector<int>& labels) {
    std::uint32_t bits = 0;
    for (int k : labels) {
        if (k < 1 || k > kLabels) throw Error(Errc::InvalidArgument, "circle label out of range: " + std::to_string(k));
        bits |= 1u << (k - 1);
    }
    return SubsetT(bits);
}

int SubsetT::size() const { return std::popcount(bits_); }

std::vector<int> SubsetT::labels() const {
    std::vector<int> out;
    for (int k = 1; k <= kLabels; ++k)
        if (contains(k)) out.push_back(k);
    return out;
}

namespace {

constexpr std::uint32_t part_mask(int which) {
    switch (which) {
        case 1: return 0b111u;
        case 2: return 0b111111u << 3;
        case 3: return 0b111111u << 9;
    }
    return 0;
}

}  // namespace

SubsetT SubsetT::part(int which) const {
    if (which < 1 || which > 3) throw Error(Errc::InvalidArgument, "part index must be 1, 2 or 3");
    return SubsetT(bits_ & part_mask(which));
}

std::optional<int> SubsetT::part_min(int which) const {
    const auto p = part(which).bits_;
    if (p == 0) return std::nullopt;
    return std::countr_zero(p) + 1;
}

std::optional<int> SubsetT::part_max(int which) const {
    const auto p = part(which).bits_;
    if (p == 0) return std::nullopt;
    return 32 - std::countl_zero(p);
}

SubsetT SubsetT::with(int label) const { return SubsetT::from_labels({label}) | *this; }

SubsetT SubsetT::mapped(ModelCase c) const {
    std::uint32_t out = 0;
    for (int k = 1; k <= kLabels; ++k)
        if (contains(k)) out |= 1u << (circle_involution(c, k) - 1);
    return SubsetT(out);
}

std::string SubsetT::str() const {
    std::string s;
    for (int k : labels()) {
        if (!s.empty()) s += ',';
        s += std::to_string(k);
    }
    return s;
}

std::string_view to_string(FailureReason r) {
    switch (r) {
        case FailureReason::C1NotNegative: return "C1NotNegative";
        case FailureReason::C2NotNegative: return "C2NotNegative";
        case FailureReason::PairNotNegativeDefinite: return "PairNotNegativeDefinite";
    }
    return "";
}

std::pair<int, int> rho_and_rank(SubsetT t) { return {t.size() - 1, 17 - t.size()}; }

namespace {

// Golden intersection matrix with index bookkeeping, built once per model.
class SurfaceOracle {
public:
    explicit SurfaceOracle(ModelCase c) : model_(c) {
        const LogPair gold = golden_graph(c);
        const auto ids = gold.graph.ids();
        matrix_ = integer_intersection_matrix(gold.graph, ids);
        c1_ = gold.graph.index_of(*gold.graph.find_label("C1"));
        c2_ = gold.graph.index_of(*gold.graph.find_label("C2"));
        circle_.assign(SubsetT::kLabels + 1, 0);
        for (int k = 1; k <= SubsetT::kLabels; ++k)
            circle_[static_cast<std::size_t>(k)] = gold.graph.index_of(*gold.graph.find_label(std::to_string(k)));
    }

    CatalogRecord evaluate(SubsetT t) const {
        std::vector<bool> drop(matrix_.order(), false);
        for (int k : t.labels()) drop[circle_[static_cast<std::size_t>(k)]] = true;

        // Full-matrix route, in golden order.
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < matrix_.order(); ++i)
            if (!drop[i]) keep.push_back(i);
        CatalogRecord r;
        r.model = model_;
        r.t = t;
        r.valid = is_negative_definite(matrix_.principal(keep));

        // Two-stage route: contract the non-boundary part, then look at the
        // images of C1 and C2.
        std::vector<std::size_t> staged;
        for (auto i : keep)
            if (i != c1_ && i != c2_) staged.push_back(i);
        staged.push_back(c1_);
        staged.push_back(c2_);
        const SymMatrix pair = schur_complement(matrix_.principal(staged), staged.size() - 2);
        r.c1_sq = pair(0, 0);
        r.c2_sq = pair(1, 1);
        r.c1_c2 = pair(0, 1);
        if (r.c1_sq.sign() >= 0)
            r.reason = FailureReason::C1NotNegative;
        else if (r.c2_sq.sign() >= 0)
            r.reason = FailureReason::C2NotNegative;
        else if (!is_negative_definite(pair))
            r.reason = FailureReason::PairNotNegativeDefinite;

        if (r.valid) {
            const auto [rho, rank] = rho_and_rank(t);
            r.rho = rho;
            r.rank_delta = rank;
        }
        return r;
    }

private:
    ModelCase model_;
    IntMatrix matrix_;
    std::size_t c1_ = 0, c2_ = 0;
    std::vector<std::size_t> circle_;
};

const SurfaceOracle& oracle(ModelCase c) {
    static const SurfaceOracle a26(ModelCase::A26);
    static const SurfaceOracle i22(ModelCase::I22);
    return c == ModelCase::A26 ? a26 : i22;
}

}  // namespace

CatalogRecord is_valid_surface(ModelCase c, SubsetT t) { return oracle(c).evaluate(t); }

std::vector<CatalogRecord> enumerate_catalog(ModelCase c) {
    const SurfaceOracle& o = oracle(c);
    std::vector<CatalogRecord> out;
    out.reserve(SubsetT::kCount);
    for (std::uint32_t bits = 0; bits < SubsetT::kCount; ++bits) out.push_back(o.evaluate(SubsetT(bits)));
    return out;
}

CatalogSummary summarize(ModelCase c, const std::vector<CatalogRecord>& records) {
    CatalogSummary s;
    for (const auto& r : records) {
        if (!r.valid) continue;
        ++s.valid_raw;
        if (r.t.bits() <= r.t.mapped(c).bits()) ++s.valid_mod_symmetry;
    }
    return s;
}

namespace {

std::vector<ReadingOutcome> reading_table(ModelCase c, const std::vector<CatalogRecord>& catalog,
                                          const PredicateOptions& base) {
    auto count = [&](const PredicateOptions& o) {
        int n = 0;
        for (const auto& r : catalog)
            if (evaluate_predicate(c, r.t, o).holds != r.valid) ++n;
        return n;
    };
    std::vector<ReadingOutcome> out;
    if (c == ModelCase::A26) {
        const std::pair<A26Cond8Reading, const char*> readings[] = {
            {A26Cond8Reading::T3SizeFour, "|T3| = 4"},
            {A26Cond8Reading::Unrestricted, "T2 empty, |T3| = 4 arbitrary"},
        };
        for (const auto& [value, name] : readings) {
            PredicateOptions o = base;
            o.a26_cond8 = value;
            out.push_back({"a26 condition (8)", name, value == base.a26_cond8, count(o)});
        }
        return out;
    }
    const std::pair<I22Cond3Reading, const char*> cond3[] = {
        {I22Cond3Reading::FourAndEightOrNine, "4 in T2 and T2 meets {8,9}"},
        {I22Cond3Reading::FourOrEightOrNine, "4 in T2 or T2 meets {8,9}"},
        {I22Cond3Reading::EightOrNine, "T2 meets {8,9}"},
    };
    for (const auto& [value, name] : cond3) {
        PredicateOptions o = base;
        o.i22_cond3 = value;
        out.push_back({"i22 condition (3)", name, value == base.i22_cond3, count(o)});
    }
    const std::pair<I22Cond4Reading, const char*> cond4[] = {
        {I22Cond4Reading::MeetsEightNine, "T2 meets {8,9}"},
        {I22Cond4Reading::ContainsEightNine, "T2 contains {8,9}"},
    };
    for (const auto& [value, name] : cond4) {
        PredicateOptions o = base;
        o.i22_cond4 = value;
        out.push_back({"i22 condition (4)", name, value == base.i22_cond4, count(o)});
    }
    const std::pair<I22Upsilon2Reading, const char*> ups2[] = {
        {I22Upsilon2Reading::MaxT3Is15, "max T3 = 15"},
        {I22Upsilon2Reading::Never, "|T3| = 15 (never holds)"},
        {I22Upsilon2Reading::T3IsOnly15, "T3 = {15}"},
    };
    for (const auto& [value, name] : ups2) {
        PredicateOptions o = base;
        o.i22_upsilon2 = value;
        out.push_back({"i22 Upsilon2", name, value == base.i22_upsilon2, count(o)});
    }
    return out;
}

}  // namespace

VerificationReport verify_theorem(ModelCase c, const std::vector<CatalogRecord>& catalog,
                                  const PredicateOptions& opts) {
    VerificationReport rep;
    rep.model = c;
    for (const auto& r : catalog) {
        const PredicateVerdict v = evaluate_predicate(c, r.t, opts);
        rep.oracle_valid += r.valid ? 1 : 0;
        rep.predicate_valid += v.holds ? 1 : 0;
        if (v.holds == r.valid) continue;
        (r.valid ? rep.oracle_only : rep.predicate_only) += 1;
        rep.mismatches.push_back({r, v});
    }
    rep.readings = reading_table(c, catalog, opts);
    return rep;
}

VerificationReport verify_theorem(ModelCase c, const PredicateOptions& opts) {
    return verify_theorem(c, enumerate_catalog(c), opts);
}

}  // namespace logenr

#include <doctest.h>

#include <set>
#include <sstream>

#include <json.hpp>

#include "support.hpp"

using namespace logenr;
using namespace testing_support;

namespace {

SubsetT T(std::vector<int> labels) { return SubsetT::from_labels(labels); }

const std::vector<CatalogRecord>& a26_catalog() {
    static const std::vector<CatalogRecord> c = enumerate_catalog(ModelCase::A26);
    return c;
}

// Validity and C1^2, C2^2 recomputed through the generic graph routines.
struct Recomputed {
    bool valid;
    Rational c1_sq, c2_sq;
};

Recomputed recompute(ModelCase c, SubsetT t) {
    const DualGraph g = golden_graph(c).graph;
    std::vector<std::string> keep, inner;
    for (const auto& v : g.vertices()) {
        if (v.kind == CurveKind::Circle && t.contains(std::stoi(*v.label))) continue;
        keep.push_back(v.id);
        if (v.kind != CurveKind::Boundary) inner.push_back(v.id);
    }
    const std::string c1 = *g.find_label("C1"), c2 = *g.find_label("C2");
    return {is_negative_definite(intersection_matrix(g, keep)), pushforward_self_intersection(g, inner, c1),
            pushforward_self_intersection(g, inner, c2)};
}

}  // namespace

TEST_SUITE("SubsetT") {
    TEST_CASE("parts and statistics") {
        const SubsetT t = T({2, 3, 5, 9, 11, 14});
        CHECK(t.size() == 6);
        CHECK(t.part(1) == T({2, 3}));
        CHECK(t.part(2) == T({5, 9}));
        CHECK(t.part(3) == T({11, 14}));
        CHECK(t.part_min(2) == 5);
        CHECK(t.part_max(2) == 9);
        CHECK(t.part_min(3) == 11);
        CHECK(t.part_max(1) == 3);
        CHECK_FALSE(T({10}).part_min(1).has_value());
        CHECK(t.str() == "2,3,5,9,11,14");
        CHECK(T({}).str().empty());
        CHECK(T({1, 1, 2}) == T({1, 2}));
        CHECK(T({1}).is_subset_of(T({1, 2})));
        CHECK_FALSE(T({3}).is_subset_of(T({1, 2})));
        CHECK(T({1}).with(15) == T({1, 15}));
        CHECK(error_code([] { T({16}); }) == Errc::InvalidArgument);
        CHECK(error_code([] { T({0}); }) == Errc::InvalidArgument);
        CHECK(error_code([] { SubsetT(1u << 15); }) == Errc::InvalidArgument);
    }

    TEST_CASE("involutions") {
        CHECK(T({1, 4, 10, 11, 12}).mapped(ModelCase::A26) == T({1, 4, 15, 14, 13}));
        CHECK(T({1, 4, 9, 10}).mapped(ModelCase::I22) == T({1, 10, 15, 4}));
        for (std::uint32_t b = 0; b < SubsetT::kCount; b += 97)
            for (auto c : {ModelCase::A26, ModelCase::I22}) CHECK(SubsetT(b).mapped(c).mapped(c) == SubsetT(b));
    }
}

TEST_SUITE("is_valid_surface") {
    TEST_CASE("T = {8,12} is valid with rho 1") {
        for (auto c : {ModelCase::A26, ModelCase::I22}) {
            const CatalogRecord r = is_valid_surface(c, T({8, 12}));
            CHECK(r.valid);
            CHECK_FALSE(r.reason.has_value());
            CHECK(r.rho == 1);
            CHECK(r.rank_delta == 15);
            CHECK(r.c1_sq.sign() < 0);
            CHECK(r.c2_sq.sign() < 0);
        }
    }

    TEST_CASE("T1 empty, T2 = {9}: C1 has square zero") {
        const CatalogRecord r = is_valid_surface(ModelCase::A26, T({9, 10}));
        CHECK_FALSE(r.valid);
        CHECK(r.reason == FailureReason::C1NotNegative);
        CHECK(r.c1_sq == 0);
        CHECK_FALSE(r.rho.has_value());
        CHECK_FALSE(r.rank_delta.has_value());
    }

    TEST_CASE("{3,11,14}: degenerate pair") {
        const CatalogRecord r = is_valid_surface(ModelCase::A26, T({3, 11, 14}));
        CHECK_FALSE(r.valid);
        CHECK(r.reason == FailureReason::PairNotNegativeDefinite);
        CHECK(r.c1_sq == -1);
        CHECK(r.c2_sq == -1);
        CHECK(r.c1_sq * r.c2_sq - r.c1_c2 * r.c1_c2 == 0);
    }

    TEST_CASE("all circles") {
        const CatalogRecord r = is_valid_surface(ModelCase::A26, SubsetT(SubsetT::kCount - 1));
        CHECK(r.valid);
        CHECK(r.rho == 14);
        CHECK(r.rank_delta == 2);
    }

    TEST_CASE("too few circles never work") {
        for (auto c : {ModelCase::A26, ModelCase::I22}) {
            CHECK_FALSE(is_valid_surface(c, T({})).valid);
            for (int k = 1; k <= 15; ++k) CHECK_FALSE(is_valid_surface(c, T({k})).valid);
        }
    }

    TEST_CASE("agrees with the generic rational routines") {
        std::mt19937_64 rng(41);
        std::uniform_int_distribution<std::uint32_t> any(0, SubsetT::kCount - 1);
        for (auto c : {ModelCase::A26, ModelCase::I22}) {
            for (int trial = 0; trial < 40; ++trial) {
                const SubsetT t(any(rng));
                const CatalogRecord r = is_valid_surface(c, t);
                const Recomputed o = recompute(c, t);
                CHECK(r.valid == o.valid);
                CHECK(r.c1_sq == o.c1_sq);
                CHECK(r.c2_sq == o.c2_sq);
            }
        }
    }
}

TEST_SUITE("rho_and_rank") {
    TEST_CASE("examples") {
        CHECK(rho_and_rank(SubsetT(SubsetT::kCount - 1)) == std::pair{14, 2});
        CHECK(rho_and_rank(T({8, 12})) == std::pair{1, 15});
        CHECK(rho_and_rank(T({1, 10})) == std::pair{1, 15});
    }
}

TEST_SUITE("theorem predicates") {
    TEST_CASE("A26 examples") {
        CHECK(theorem_predicate_A26(T({1, 10})));
        CHECK_FALSE(theorem_predicate_A26(T({9, 10})));
        CHECK_FALSE(theorem_predicate_A26(T({3, 11, 14})));
        CHECK(theorem_predicate_A26(T({8, 12})));
        CHECK(theorem_predicate_A26(SubsetT(SubsetT::kCount - 1)));
    }

    TEST_CASE("A26 reads T3 up to the loop symmetry") {
        for (std::uint32_t b = 0; b < SubsetT::kCount; ++b) {
            const SubsetT t(b);
            CHECK(theorem_predicate_A26(t) == theorem_predicate_A26(t.mapped(ModelCase::A26)));
        }
    }

    TEST_CASE("I22 examples") {
        CHECK_FALSE(theorem_predicate_I22(T({4})));
        CHECK(theorem_predicate_I22(T({1, 2, 4})));
        CHECK(theorem_predicate_I22(T({9, 11})));
    }

    TEST_CASE("I22 mirrors T2 = 0 onto T3 = 0") {
        CHECK(theorem_predicate_I22(T({1, 2, 10})) == theorem_predicate_I22(T({1, 2, 4})));
        CHECK(theorem_predicate_I22(T({15})) == theorem_predicate_I22(T({9})));
    }

    TEST_CASE("I22 predicate is stable under the involution") {
        int unstable = 0;
        for (std::uint32_t b = 0; b < SubsetT::kCount; ++b) {
            const SubsetT t(b);
            unstable += theorem_predicate_I22(t) != theorem_predicate_I22(t.mapped(ModelCase::I22)) ? 1 : 0;
        }
        CHECK(unstable == 0);
    }

    TEST_CASE("every I22 T1 clause fires") {
        std::set<std::string> clauses;
        for (std::uint32_t b = 0; b < SubsetT::kCount; ++b) clauses.insert(evaluate_predicate_I22(SubsetT(b)).clause);
        for (const char* prefix : {"(1)", "(2)", "(3)", "(4)", "(5)", "(6)", "(7)", "(8)", "(9)", "(10)", "(11)"}) {
            const bool hit = std::any_of(clauses.begin(), clauses.end(),
                                         [&](const std::string& c) { return c.rfind(prefix, 0) == 0; });
            CHECK_MESSAGE(hit, prefix);
        }
    }

    TEST_CASE("errata readings change the verdict only where expected") {
        PredicateOptions alt;
        alt.a26_cond8 = A26Cond8Reading::Unrestricted;
        CHECK(evaluate_predicate_A26(T({3, 11, 12, 13, 14}), alt).holds);
        CHECK_FALSE(evaluate_predicate_A26(T({3, 11, 12, 13, 14})).holds);
        PredicateOptions ups;
        ups.i22_upsilon2 = I22Upsilon2Reading::Never;
        CHECK(evaluate_predicate_I22(T({4, 14, 15})).holds);
        CHECK_FALSE(evaluate_predicate_I22(T({4, 14, 15}), ups).holds);
    }
}

TEST_SUITE("verify_theorem") {
    TEST_CASE("A26 agrees with brute force") {
        const VerificationReport rep = verify_theorem(ModelCase::A26, a26_catalog());
        CHECK(rep.ok());
        CHECK(rep.oracle_valid == rep.predicate_valid);
        for (const auto& r : rep.readings) CHECK((r.adopted == (r.mismatches == 0)));
    }

    TEST_CASE("weakened condition (1) is caught") {
        PredicateOptions weak;
        weak.weaken_a26_cond1 = true;
        const VerificationReport rep = verify_theorem(ModelCase::A26, a26_catalog(), weak);
        REQUIRE_FALSE(rep.mismatches.empty());
        CHECK(rep.predicate_only == static_cast<int>(rep.mismatches.size()));
        for (const auto& m : rep.mismatches) {
            CHECK(m.record.t.part(1).empty());
            CHECK(m.record.t.part(2) == T({9}));
            CHECK_FALSE(m.record.valid);
            CHECK(m.predicate.holds);
        }
        const std::string text = report_to_text({rep});
        CHECK(text.find("mismatches") != std::string::npos);
        const auto j = nlohmann::json::parse(report_to_json({rep}));
        CHECK(j[0]["mismatches"].size() == rep.mismatches.size());
        CHECK(j[0]["mismatches"][0].contains("clause"));
    }
}

TEST_SUITE("catalog output") {
    TEST_CASE("summary counts") {
        const CatalogSummary s = summarize(ModelCase::A26, a26_catalog());
        CHECK(s.valid_raw > 0);
        CHECK(s.valid_mod_symmetry < s.valid_raw);
        CHECK(2 * s.valid_mod_symmetry >= s.valid_raw);
    }

    TEST_CASE("JSON layout") {
        const std::string text = catalog_to_json(ModelCase::A26, a26_catalog());
        const auto j = nlohmann::ordered_json::parse(text);
        CHECK(j["case"] == "a26");
        CHECK(j["summary"]["valid_raw"] == summarize(ModelCase::A26, a26_catalog()).valid_raw);
        REQUIRE(j["records"].size() == SubsetT::kCount);
        const auto& r = j["records"][(1u << 7) | (1u << 11)];
        CHECK(r["t"] == nlohmann::ordered_json::array({8, 12}));
        CHECK(r["valid"] == true);
        CHECK(r["reason"].is_null());
        CHECK(r["rho"] == 1);
        CHECK(r["rank_delta"] == 15);
        CHECK(r["c1_sq"].is_string());
        const auto& bad = j["records"][(1u << 8) | (1u << 9)];
        CHECK(bad["reason"] == "C1NotNegative");
        CHECK(bad["c1_sq"] == "0");
        CHECK(bad["rho"].is_null());
        std::vector<std::string> keys;
        for (auto it = r.begin(); it != r.end(); ++it) keys.push_back(it.key());
        CHECK(keys == std::vector<std::string>{"t", "valid", "reason", "c1_sq", "c2_sq", "rho", "rank_delta"});
    }

    TEST_CASE("CSV layout") {
        const std::string text = catalog_to_csv(a26_catalog());
        std::istringstream in(text);
        std::string line;
        std::getline(in, line);
        CHECK(line == "t;valid;reason;c1_sq;c2_sq;rho;rank_delta");
        std::size_t rows = 0;
        while (std::getline(in, line)) {
            CHECK(std::count(line.begin(), line.end(), ';') == 6);
            ++rows;
        }
        CHECK(rows == SubsetT::kCount);
        CHECK(text.find("\n8,12;true;;") != std::string::npos);
    }

    TEST_CASE("single record JSON") {
        const std::string s = record_to_json(is_valid_surface(ModelCase::A26, T({8, 12})), true);
        CHECK(s.rfind(R"({"case":"a26","t":[8,12],"valid":true,"reason":null,)", 0) == 0);
        CHECK(s.find(R"("rho":1,"rank_delta":15})") != std::string::npos);
    }
}

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "logenr/models.hpp"
#include "logenr/rational.hpp"

namespace logenr {

/// A subset of the 15 discrepancy-zero circles. Label k is bit k-1.
/// Part 1 holds labels 1..3, part 2 labels 4..9, part 3 labels 10..15.
class SubsetT {
public:
    static constexpr int kLabels = 15;
    static constexpr std::uint32_t kCount = 1u << kLabels;

    constexpr SubsetT() = default;
    /// Throws InvalidArgument if bits beyond label 15 are set.
    explicit SubsetT(std::uint32_t bits);
    /// Throws InvalidArgument on labels outside 1..15; duplicates are merged.
    static SubsetT from_labels(const std::vector<int>& labels);

    std::uint32_t bits() const { return bits_; }
    bool contains(int label) const { return label >= 1 && label <= kLabels && (bits_ >> (label - 1)) & 1u; }
    int size() const;
    bool empty() const { return bits_ == 0; }
    std::vector<int> labels() const;

    SubsetT part(int which) const;
    int part_size(int which) const { return part(which).size(); }
    /// Smallest / largest label of a part; nullopt when the part is empty.
    std::optional<int> part_min(int which) const;
    std::optional<int> part_max(int which) const;

    bool is_subset_of(SubsetT other) const { return (bits_ & ~other.bits_) == 0; }
    SubsetT with(int label) const;
    SubsetT operator|(SubsetT o) const { return SubsetT(bits_ | o.bits_); }

    /// Image under the circle involution of the model.
    SubsetT mapped(ModelCase c) const;

    std::string str() const;  // "8,12"

    friend bool operator==(SubsetT, SubsetT) = default;

private:
    std::uint32_t bits_ = 0;
};

enum class FailureReason { C1NotNegative, C2NotNegative, PairNotNegativeDefinite };

std::string_view to_string(FailureReason r);

/// Verdict for one (model, T).
struct CatalogRecord {
    ModelCase model = ModelCase::A26;
    SubsetT t;
    /// Negative definiteness of every curve except the circles in T.
    bool valid = false;
    /// First failing check of the two-stage criterion; empty when it passes.
    std::optional<FailureReason> reason;
    /// Intersection numbers of the boundary images after contracting every
    /// non-boundary curve outside T.
    Rational c1_sq, c2_sq, c1_c2;
    std::optional<int> rho;
    std::optional<int> rank_delta;
};

/// Full-matrix verdict plus two-stage diagnostics for one subset.
CatalogRecord is_valid_surface(ModelCase c, SubsetT t);

/// (rho, rank of Delta) = (|T| - 1, 17 - |T|) for a valid T.
std::pair<int, int> rho_and_rank(SubsetT t);

/// Candidate readings of the garbled theorem clauses. The defaults are the
/// adopted readings.
enum class A26Cond8Reading { T3SizeFour, Unrestricted };
enum class I22Cond3Reading { FourAndEightOrNine, FourOrEightOrNine, EightOrNine };
enum class I22Cond4Reading { MeetsEightNine, ContainsEightNine };
enum class I22Upsilon2Reading { MaxT3Is15, Never, T3IsOnly15 };

struct PredicateOptions {
    A26Cond8Reading a26_cond8 = A26Cond8Reading::T3SizeFour;
    I22Cond3Reading i22_cond3 = I22Cond3Reading::FourAndEightOrNine;
    I22Cond4Reading i22_cond4 = I22Cond4Reading::MeetsEightNine;
    I22Upsilon2Reading i22_upsilon2 = I22Upsilon2Reading::MaxT3Is15;
    /// Fault injection: drop "if T1 is empty then T2 != {9}" from the A26 condition (1).
    bool weaken_a26_cond1 = false;
};

struct PredicateVerdict {
    bool holds = false;
    std::string clause;  // the condition that decided the verdict
};

PredicateVerdict evaluate_predicate_A26(SubsetT t, const PredicateOptions& opts = {});
PredicateVerdict evaluate_predicate_I22(SubsetT t, const PredicateOptions& opts = {});
PredicateVerdict evaluate_predicate(ModelCase c, SubsetT t, const PredicateOptions& opts = {});
bool theorem_predicate_A26(SubsetT t);
bool theorem_predicate_I22(SubsetT t);

struct CatalogSummary {
    int valid_raw = 0;
    int valid_mod_symmetry = 0;
};

/// All 2^15 records, ordered by bitmask.
std::vector<CatalogRecord> enumerate_catalog(ModelCase c);
CatalogSummary summarize(ModelCase c, const std::vector<CatalogRecord>& records);

struct Mismatch {
    CatalogRecord record;
    PredicateVerdict predicate;
};

struct ReadingOutcome {
    std::string clause;
    std::string reading;
    bool adopted = false;
    int mismatches = 0;
};

struct VerificationReport {
    ModelCase model = ModelCase::A26;
    int oracle_valid = 0;
    int predicate_valid = 0;
    int oracle_only = 0;     // valid by brute force, rejected by the theorem
    int predicate_only = 0;  // accepted by the theorem, invalid by brute force
    std::vector<Mismatch> mismatches;
    std::vector<ReadingOutcome> readings;
    bool ok() const { return mismatches.empty(); }
};

VerificationReport verify_theorem(ModelCase c, const PredicateOptions& opts = {});
VerificationReport verify_theorem(ModelCase c, const std::vector<CatalogRecord>& catalog,
                                  const PredicateOptions& opts = {});

// Interchange formats.
std::string record_to_json(const CatalogRecord& r, bool with_case);
std::string catalog_to_json(ModelCase c, const std::vector<CatalogRecord>& records);
std::string catalog_to_csv(const std::vector<CatalogRecord>& records);
std::string report_to_json(const std::vector<VerificationReport>& reports);
std::string report_to_text(const std::vector<VerificationReport>& reports);

}  // namespace logenr

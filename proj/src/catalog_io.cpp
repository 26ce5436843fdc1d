#include <sstream>

#include <json.hpp>

#include "logenr/enumeration.hpp"

namespace logenr {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json record_json(const CatalogRecord& r, bool with_case) {
    ordered_json j;
    if (with_case) j["case"] = std::string(to_string(r.model));
    j["t"] = r.t.labels();
    j["valid"] = r.valid;
    j["reason"] = r.reason ? ordered_json(std::string(to_string(*r.reason))) : ordered_json(nullptr);
    j["c1_sq"] = r.c1_sq.str();
    j["c2_sq"] = r.c2_sq.str();
    j["rho"] = r.rho ? ordered_json(*r.rho) : ordered_json(nullptr);
    j["rank_delta"] = r.rank_delta ? ordered_json(*r.rank_delta) : ordered_json(nullptr);
    return j;
}

}  // namespace

std::string record_to_json(const CatalogRecord& r, bool with_case) { return record_json(r, with_case).dump(); }

std::string catalog_to_json(ModelCase c, const std::vector<CatalogRecord>& records) {
    const CatalogSummary s = summarize(c, records);
    // One record per line keeps the file diffable.
    std::ostringstream os;
    os << "{\"case\":" << ordered_json(std::string(to_string(c))).dump() << ",\"summary\":"
       << ordered_json{{"valid_raw", s.valid_raw}, {"valid_mod_symmetry", s.valid_mod_symmetry}}.dump()
       << ",\"records\":[\n";
    for (std::size_t i = 0; i < records.size(); ++i)
        os << record_json(records[i], false).dump() << (i + 1 < records.size() ? ",\n" : "\n");
    os << "]}\n";
    return os.str();
}

std::string catalog_to_csv(const std::vector<CatalogRecord>& records) {
    std::ostringstream os;
    os << "t;valid;reason;c1_sq;c2_sq;rho;rank_delta\n";
    for (const auto& r : records) {
        os << r.t.str() << ';' << (r.valid ? "true" : "false") << ';'
           << (r.reason ? std::string(to_string(*r.reason)) : std::string()) << ';' << r.c1_sq << ';' << r.c2_sq
           << ';' << (r.rho ? std::to_string(*r.rho) : std::string()) << ';'
           << (r.rank_delta ? std::to_string(*r.rank_delta) : std::string()) << '\n';
    }
    return os.str();
}

std::string report_to_json(const std::vector<VerificationReport>& reports) {
    ordered_json out = ordered_json::array();
    for (const auto& rep : reports) {
        ordered_json j;
        j["case"] = std::string(to_string(rep.model));
        j["oracle_valid"] = rep.oracle_valid;
        j["predicate_valid"] = rep.predicate_valid;
        j["oracle_only"] = rep.oracle_only;
        j["predicate_only"] = rep.predicate_only;
        j["mismatches"] = ordered_json::array();
        for (const auto& m : rep.mismatches) {
            ordered_json jm = record_json(m.record, false);
            jm["predicate"] = m.predicate.holds;
            jm["clause"] = m.predicate.clause;
            j["mismatches"].push_back(std::move(jm));
        }
        j["readings"] = ordered_json::array();
        for (const auto& r : rep.readings)
            j["readings"].push_back(
                {{"clause", r.clause}, {"reading", r.reading}, {"adopted", r.adopted}, {"mismatches", r.mismatches}});
        out.push_back(std::move(j));
    }
    return out.dump(1) + "\n";
}

std::string report_to_text(const std::vector<VerificationReport>& reports) {
    std::ostringstream os;
    for (const auto& rep : reports) {
        os << "case " << to_string(rep.model) << ": " << rep.oracle_valid << " valid subsets by brute force, "
           << rep.predicate_valid << " accepted by the theorem, " << rep.mismatches.size() << " mismatches ("
           << rep.oracle_only << " missed by the theorem, " << rep.predicate_only << " wrongly accepted)\n";
        for (const auto& m : rep.mismatches)
            os << "  T={" << m.record.t.str() << "} oracle=" << (m.record.valid ? "valid" : "invalid")
               << " theorem=" << (m.predicate.holds ? "accepts" : "rejects") << " clause: " << m.predicate.clause
               << " c1^2=" << m.record.c1_sq << " c2^2=" << m.record.c2_sq << "\n";
        for (const auto& r : rep.readings)
            os << "  reading " << r.clause << " as '" << r.reading << "'" << (r.adopted ? " (adopted)" : "") << ": "
               << r.mismatches << " mismatches\n";
    }
    return os.str();
}

}  // namespace logenr

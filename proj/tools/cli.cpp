#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "logenr/error.hpp"
#include "logenr/models.hpp"

namespace logenr::cli {

SubsetT parse_subset(std::string_view text) {
    std::vector<int> labels;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        if (item.empty()) throw Error(Errc::ParseError, "empty item in subset '" + std::string(text) + "'");
        int k = 0;
        const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), k);
        if (ec != std::errc() || end != item.data() + item.size())
            throw Error(Errc::ParseError, "not an integer: '" + std::string(item) + "'");
        if (k < 1 || k > SubsetT::kLabels)
            throw Error(Errc::ParseError, "label out of range 1..15: " + std::string(item));
        labels.push_back(k);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return SubsetT::from_labels(labels);
}

namespace {

const char* const kMinus = "−";

std::string pretty(const Rational& r) {
    std::string s = r.str();
    if (!s.empty() && s.front() == '-') s = kMinus + s.substr(1);
    return s;
}

// C -> C̄, C1 -> C̄1
std::string bar(std::string_view id) {
    if (id.empty()) return std::string();
    return std::string(id.substr(0, 1)) + "̄" + std::string(id.substr(1));
}

std::string weight(const CurveVertex& v) { return "(" + pretty(v.self_int) + "," + pretty(v.coeff) + ")"; }

// Chains hanging off the boundary, far end first. Empty if the non-boundary
// part is not a disjoint union of such chains.
std::vector<std::string> boundary_chains(const LogPair& p) {
    const DualGraph& g = p.graph;
    const std::set<std::string> boundary(p.boundary_ids.begin(), p.boundary_ids.end());
    std::set<std::string> seen;
    std::vector<std::pair<std::pair<std::size_t, std::string>, std::string>> chains;
    for (const auto& v : g.vertices()) {
        if (boundary.count(v.id) || seen.count(v.id)) continue;
        // Collect the component.
        std::vector<std::string> comp{v.id};
        seen.insert(v.id);
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (const auto& [n, m] : g.neighbors(comp[i]))
                if (!boundary.count(n) && seen.insert(n).second) comp.push_back(n);
        std::string attach, attach_boundary;
        int inner_edges = 0;
        for (const auto& id : comp) {
            const CurveVertex& c = g.vertex(id);
            if (c.nodes != 0) return {};
            int inner_degree = 0;
            for (const auto& [n, m] : g.neighbors(id)) {
                if (m != 1) return {};
                if (boundary.count(n)) {
                    if (!attach.empty()) return {};
                    attach = id;
                    attach_boundary = n;
                } else {
                    ++inner_degree;
                    ++inner_edges;
                }
            }
            if (inner_degree > 2) return {};
        }
        if (attach.empty() || inner_edges / 2 + 1 != static_cast<int>(comp.size())) return {};
        if (comp.size() > 1) {
            int inner = 0;
            for (const auto& nb : g.neighbors(attach)) inner += boundary.count(nb.first) ? 0 : 1;
            if (inner != 1) return {};
        }
        // Walk outward from the attaching curve.
        std::vector<std::string> path{attach};
        std::string prev;
        while (true) {
            std::string next;
            for (const auto& nb : g.neighbors(path.back()))
                if (!boundary.count(nb.first) && nb.first != prev) next = nb.first;
            if (next.empty()) break;
            prev = path.back();
            path.push_back(next);
        }
        std::string line;
        for (auto it = path.rbegin(); it != path.rend(); ++it) line += weight(g.vertex(*it)) + kMinus;
        line += bar(attach_boundary);
        const auto rank = static_cast<std::size_t>(
            std::find(p.boundary_ids.begin(), p.boundary_ids.end(), attach_boundary) - p.boundary_ids.begin());
        chains.push_back({{rank, attach}, line});
    }
    std::sort(chains.begin(), chains.end());
    std::vector<std::string> out;
    for (auto& c : chains) out.push_back(std::move(c.second));
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(Errc::InvalidArgument, "cannot open '" + path + "' for writing");
    f << content;
    if (!f) throw Error(Errc::InvalidArgument, "failed writing '" + path + "'");
}

ModelCase case_from(const std::string& name) { return *parse_model_case(name); }

LogPair extraction_for(const std::string& model) {
    static const std::map<std::string, LocalModel> local = {{"z2", LocalModel::Z2},
                                                            {"z3", LocalModel::Z3},
                                                            {"nc-red", LocalModel::NodeReducible},
                                                            {"nc-irr", LocalModel::NodeIrreducible}};
    if (auto it = local.find(model); it != local.end()) return extract_zero_discrepancy(local_model(it->second));
    return maximal_extraction(case_from(model));
}

}  // namespace

std::string describe_extraction(const LogPair& p) {
    std::ostringstream os;
    const DualGraph& g = p.graph;
    const auto chains = boundary_chains(p);
    if (!chains.empty()) {
        for (const auto& c : chains) os << c << "\n";
    } else {
        os << "curves:\n";
        for (const auto& v : g.vertices()) {
            os << "  " << v.id << " " << weight(v) << " " << to_string(v.kind);
            if (v.label) os << " label=" << *v.label;
            if (v.nodes) os << " nodes=" << v.nodes;
            os << "\n";
        }
        os << "intersections:\n";
        for (const auto& [key, m] : g.edges()) {
            os << "  " << key.first << kMinus << key.second;
            if (m > 1) os << " x" << m;
            os << "\n";
        }
    }
    for (const auto& b : p.boundary_ids) {
        os << "Δ" << b << "² = ";
        try {
            os << pretty(-boundary_drop(p, b)) << "\n";
        } catch (const Error& e) {
            os << "undefined (" << e.what() << ")\n";
        }
    }
    return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Extractions, subset catalogs and classification checks for the A26 and I22 plane models"};
    app.name(args.empty() ? "logenr" : args.front());
    app.require_subcommand(1);

    const std::vector<std::string> models = {"z2", "z3", "nc-red", "nc-irr", "a26", "i22"};
    const std::vector<std::string> cases = {"a26", "i22"};

    std::string model, dot_out;
    auto* extract = app.add_subcommand("extract", "Extract all discrepancy-zero divisors of a model");
    extract->add_option("--model", model, "z2, z3, nc-red, nc-irr, a26 or i22")
        ->required()
        ->check(CLI::IsMember(models));
    extract->add_option("--dot-out", dot_out, "Also write the extracted graph as DOT");

    std::string case_name, format = "json", out_path;
    auto* catalog = app.add_subcommand("catalog", "Evaluate all 32768 subsets T");
    catalog->add_option("--case", case_name)->required()->check(CLI::IsMember(cases));
    catalog->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    catalog->add_option("--out", out_path)->required();

    std::string verify_case = "both", report_out;
    auto* verify = app.add_subcommand("verify", "Compare brute force against the classification theorems");
    verify->add_option("--case", verify_case)->check(CLI::IsMember({"a26", "i22", "both"}));
    verify->add_option("--report-out", report_out, "Write the report as JSON");

    std::string subset_text;
    auto* check = app.add_subcommand("check-subset", "Evaluate one subset T");
    check->add_option("--case", case_name)->required()->check(CLI::IsMember(cases));
    check->add_option("--t", subset_text, "Comma-separated circle labels")->required();

    std::string what, export_format = "json";
    auto* exp = app.add_subcommand("export", "Write the minimal resolution or the golden graph");
    exp->add_option("--case", case_name)->required()->check(CLI::IsMember(cases));
    exp->add_option("--what", what)->required()->check(CLI::IsMember({"minimal", "golden"}));
    exp->add_option("--out", out_path)->required();
    exp->add_option("--format", export_format)->check(CLI::IsMember({"json", "dot"}));

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    if (argv.empty()) argv.push_back("logenr");
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*check) {
            const SubsetT t = parse_subset(subset_text);
            out << record_to_json(is_valid_surface(case_from(case_name), t), true) << "\n";
            return 0;
        }
        if (*extract) {
            const LogPair p = extraction_for(model);
            out << describe_extraction(p);
            if (!dot_out.empty()) write_file(dot_out, to_dot(p.graph, model));
            return 0;
        }
        if (*catalog) {
            const ModelCase c = case_from(case_name);
            const auto records = enumerate_catalog(c);
            write_file(out_path, format == "json" ? catalog_to_json(c, records) : catalog_to_csv(records));
            const CatalogSummary s = summarize(c, records);
            out << "case " << case_name << ": " << records.size() << " records, " << s.valid_raw << " valid, "
                << s.valid_mod_symmetry << " up to symmetry\n";
            return 0;
        }
        if (*verify) {
            std::vector<VerificationReport> reports;
            if (verify_case != "i22") reports.push_back(verify_theorem(ModelCase::A26));
            if (verify_case != "a26") reports.push_back(verify_theorem(ModelCase::I22));
            out << report_to_text(reports);
            if (!report_out.empty()) write_file(report_out, report_to_json(reports));
            const bool clean =
                std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.mismatches.empty(); });
            return clean ? 0 : 1;
        }
        if (*exp) {
            const ModelCase c = case_from(case_name);
            const LogPair p = what == "minimal" ? minimal_resolution_graph(c) : golden_graph(c);
            const std::string name = case_name + "_" + what;
            write_file(out_path, export_format == "json" ? to_json_text(serialize(p.graph)) : to_dot(p.graph, name));
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace logenr::cli

// lleq: command-line front end for the Levy-Leblond workbench.
//
// Subcommands:
//   catalog     list the built-in equations and Clifford word sets
//   table       classification table, checked against embedded or file golden rows
//   verify      square-root, anticommutation and classification checks for one equation
//   dispersion  determinant of the momentum-space symbol on and off shell
//   susy        component equations and partner potentials for a prepotential
//   osp12       graded bracket table of the conformal realization
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or input error.

#include "lleq/lleq.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kSchemaVersion = 1;

using nlohmann::json;

class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

lleq::LLESpec resolve_spec(const std::string& source)
{
    if (auto spec = lleq::find_catalog(source)) return *spec;
    if (std::filesystem::is_regular_file(source)) return lleq::load_spec(source);
    throw UsageError("unknown equation '" + source + "' (not a catalog key or a readable file)");
}

json report_json(const lleq::VerificationReport& r)
{
    json out = json::array();
    for (const auto& c : r.checks) {
        json j{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
        if (c.residual) j["residual"] = lleq::to_string(*c.residual);
        out.push_back(j);
    }
    return out;
}

void print_report(const lleq::VerificationReport& r)
{
    for (const auto& c : r.checks) {
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
        if (c.residual) std::cout << "  residual:\n" << lleq::to_string(*c.residual);
    }
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------
// catalog

int cmd_catalog(bool as_json)
{
    json j{{"schema_version", kSchemaVersion}, {"equations", json::array()}, {"clifford_sets", json::array()}};
    for (const auto& spec : lleq::catalog()) j["equations"].push_back(lleq::to_json(spec));
    for (const auto& [name, set] : lleq::clifford_catalog()) {
        json words = json::array();
        for (const auto& w : set.generators) words.push_back(w.str());
        j["clifford_sets"].push_back({{"name", name}, {"signature", lleq::to_string(set.signature)}, {"words", words}});
    }
    if (as_json) {
        emit(j);
        return kOk;
    }
    std::cout << "equations:\n";
    for (const auto& spec : lleq::catalog()) {
        std::cout << "  " << spec.name() << "  time " << spec.time_word().str() << "  space";
        for (const auto& w : spec.space_words()) std::cout << " " << w.str();
        std::cout << "\n";
    }
    std::cout << "clifford sets:\n";
    for (const auto& [name, set] : lleq::clifford_catalog()) {
        std::cout << "  " << name << "  " << lleq::to_string(set.signature) << " ";
        for (const auto& w : set.generators) std::cout << " " << w.str();
        std::cout << "\n";
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// table

std::vector<lleq::GoldenRow> load_golden(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open golden file '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw UsageError("golden file '" + path + "': " + e.what());
    }
    if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array())
        throw UsageError("golden file '" + path + "': expected an object with a 'rows' array");
    std::vector<lleq::GoldenRow> rows;
    for (const auto& r : j["rows"]) {
        if (!r.is_object() || !r.contains("key") || !r.contains("text") || !r["key"].is_string() || !r["text"].is_string())
            throw UsageError("golden file '" + path + "': rows need string 'key' and 'text'");
        rows.push_back({r["key"].get<std::string>(), r["text"].get<std::string>()});
    }
    return rows;
}

int cmd_table(bool as_json, const std::string& golden_path)
{
    const auto golden = golden_path.empty() ? lleq::golden_table() : load_golden(golden_path);
    const auto rows = lleq::generate_table();

    std::vector<std::string> diffs;
    if (golden.size() != rows.size())
        diffs.push_back("row count: expected " + std::to_string(golden.size()) + ", got " + std::to_string(rows.size()));
    for (std::size_t i = 0; i < std::min(golden.size(), rows.size()); ++i) {
        if (golden[i].key != rows[i].key || golden[i].text != rows[i].str())
            diffs.push_back("row " + std::to_string(i + 1) + ": expected " + golden[i].key + " '" + golden[i].text +
                            "', got " + rows[i].key + " '" + rows[i].str() + "'");
    }

    if (as_json) {
        json j{{"schema_version", kSchemaVersion}, {"rows", json::array()}, {"matches_golden", diffs.empty()},
               {"diff", diffs}};
        for (const auto& r : rows)
            j["rows"].push_back({{"key", r.key},
                                 {"size", r.n},
                                 {"type", lleq::to_string(r.type)},
                                 {"spacetime", "1+" + std::to_string(r.spatial_dims)},
                                 {"components", r.components},
                                 {"text", r.str()}});
        emit(j);
    } else {
        for (const auto& r : rows) std::cout << r.str() << "\n";
    }
    for (const auto& d : diffs) std::cerr << "mismatch " << d << "\n";
    return diffs.empty() ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const std::string& source, bool as_json)
{
    const lleq::LLESpec spec = resolve_spec(source);
    lleq::VerificationReport report = lleq::verify_anticommutation(spec);
    json classification;
    if (spec.is_free()) {
        for (auto& c : lleq::verify_square_root(spec).checks) report.checks.push_back(std::move(c));
        if (report.passed()) {
            try {
                const lleq::SpinorClass cls = lleq::classify(spec);
                const lleq::TableRow row = lleq::table_row(spec, cls);
                classification = {{"row", row.str()},
                                  {"division_algebra", lleq::to_string(cls.division.kind)},
                                  {"structure_dimension", cls.structure_dim},
                                  {"system_dimension", cls.system_dim}};
                json witnesses = json::array();
                for (const auto& w : cls.division.witnesses)
                    if (w.word) witnesses.push_back(w.word->str());
                classification["witnesses"] = witnesses;
            } catch (const lleq::ClassificationError& e) {
                classification = {{"error", e.what()}};
            }
        }
    } else {
        const lleq::OpMatrix d = lleq::build_operator(spec);
        classification = {{"square", lleq::to_string(d * d)}};
    }

    if (as_json) {
        emit({{"schema_version", kSchemaVersion},
              {"equation", lleq::to_json(spec)},
              {"checks", report_json(report)},
              {"passed", report.passed()},
              {"classification", classification}});
    } else {
        std::cout << "equation " << spec.name() << " (" << spec.n() << "x" << spec.n() << ")\n";
        print_report(report);
        if (classification.contains("row")) {
            std::cout << "classification: " << classification["row"].get<std::string>() << "\n";
            std::cout << "structure algebra: " << classification["division_algebra"].get<std::string>() << ", dim "
                      << classification["structure_dimension"].get<std::size_t>();
            for (const auto& w : classification["witnesses"]) std::cout << " " << w.get<std::string>();
            std::cout << "\n";
        } else if (classification.contains("error")) {
            std::cout << "classification: " << classification["error"].get<std::string>() << "\n";
        } else if (classification.contains("square")) {
            std::cout << "D^2:\n" << classification["square"].get<std::string>();
        }
    }
    return report.passed() ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------------
// dispersion

int cmd_dispersion(const std::vector<std::string>& sources, bool as_json)
{
    std::vector<lleq::LLESpec> specs;
    if (sources.empty()) specs = lleq::catalog();
    for (const auto& s : sources) specs.push_back(resolve_spec(s));

    bool all = true;
    json out{{"schema_version", kSchemaVersion}, {"equations", json::array()}};
    for (const auto& spec : specs) {
        std::vector<lleq::DispersionSample> samples;
        const auto report = lleq::dispersion_check(spec, &samples);
        all = all && report.passed();
        if (as_json) {
            json js = json::array();
            for (const auto& s : samples) {
                json k = json::array();
                for (const auto& v : s.momentum) k.push_back(lleq::to_string(v));
                js.push_back({{"E", lleq::to_string(s.energy)}, {"k", k}, {"det", lleq::to_string(s.det)}});
            }
            out["equations"].push_back({{"name", spec.name()}, {"checks", report_json(report)}, {"samples", js}});
        } else {
            std::cout << spec.name() << " (" << spec.n() << "x" << spec.n() << ")\n";
            print_report(report);
        }
    }
    if (as_json) emit(out);
    return all ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------------
// susy

int cmd_susy(const std::string& expr, bool as_json)
{
    lleq::OperatorPoly f;
    try {
        f = lleq::parse_operator(expr);
    } catch (const lleq::ParseError& e) {
        throw UsageError(std::string("prepotential: ") + e.what());
    }
    const lleq::ComponentSystem sys = lleq::derive_components(f);
    const lleq::PartnerPotentials v = lleq::partner_potentials(f);
    const bool closed_form = lleq::square_potential_operator(f) == lleq::square_closed_form(f);
    const bool substitution = lleq::substitution_residual(f).is_zero();

    std::vector<std::string> lines;
    for (const auto& e : sys.algebraic) lines.push_back(e.str());
    for (const auto& e : sys.evolution) lines.push_back(e.str());
    for (const auto& e : sys.schroedinger) lines.push_back(e.str());

    if (as_json) {
        emit({{"schema_version", kSchemaVersion},
              {"prepotential", lleq::to_string(f)},
              {"algebraic", json::array({lines[0], lines[1]})},
              {"evolution", json::array({lines[2], lines[3]})},
              {"schroedinger", json::array({lines[4], lines[5], lines[6], lines[7]})},
              {"v_plus", lleq::to_string(v.plus)},
              {"v_minus", lleq::to_string(v.minus)},
              {"square_matches_closed_form", closed_form},
              {"substitution_matches_square", substitution}});
    } else {
        std::cout << "prepotential f = " << lleq::to_string(f) << "\n";
        for (const auto& l : lines) std::cout << l << "\n";
        std::cout << "V+ = " << lleq::to_string(v.plus) << "\n";
        std::cout << "V- = " << lleq::to_string(v.minus) << "\n";
        std::cout << (closed_form ? "PASS" : "FAIL") << " D^2 = diag(i*dt + dx^2 - f^2) - IX*f'\n";
        std::cout << (substitution ? "PASS" : "FAIL") << " component substitution reproduces D^2\n";
    }
    return closed_form && substitution ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------------
// osp12

std::string expectation_text(const lleq::osp12::BracketEntry& e)
{
    if (e.source == lleq::osp12::Source::Computed) return "computed";
    return lleq::osp12::expansion_text(*e.expected);
}

int cmd_osp12(const std::optional<std::string>& lambda_text, const std::string& r_entry, bool as_json)
{
    namespace o = lleq::osp12;
    o::Parameters params;
    if (lambda_text) {
        try {
            params.lambda = lleq::Rational(*lambda_text);
        } catch (const std::exception&) {
            throw UsageError("--lambda expects a rational number such as 1 or 3/2, got '" + *lambda_text + "'");
        }
    }
    params.r_entry = r_entry == "closing" ? o::REntry::Closing : o::REntry::Lambda;

    const o::Generators gens = o::build_generators(params);
    const o::BracketTable table = o::verify_closure(gens);

    bool grading_ok = true;
    json grading = json::array();
    std::vector<std::string> grading_lines;
    for (const auto& g : gens) {
        const o::ScalingResult s = o::scaling_dimension(g.body);
        const bool ok = s.homogeneous() && s.value() == g.scaling_dim;
        grading_ok = grading_ok && ok;
        std::string found;
        for (const auto& w : s.weights) found += (found.empty() ? "" : ", ") + lleq::to_string(w);
        grading.push_back({{"generator", o::to_string(g.name)}, {"expected", lleq::to_string(g.scaling_dim)},
                           {"weights", found}, {"passed", ok}});
        grading_lines.push_back(std::string(ok ? "PASS " : "FAIL ") + o::to_string(g.name) + ": expected " +
                                lleq::to_string(g.scaling_dim) + ", weights {" + found + "}");
    }

    bool jacobi_ok = true;
    for (const auto& a : gens)
        for (const auto& b : gens)
            for (const auto& c : gens) jacobi_ok = jacobi_ok && o::graded_jacobi(a, b, c).is_zero();

    const bool square_ok = gens[1].body * gens[1].body == gens[0].body;
    const o::HamiltonianSplit split = o::hamiltonian_split();
    const bool split_ok = split.left - split.hamiltonian == gens[0].body;
    const bool passed = table.all_closed() && table.all_match() && grading_ok && jacobi_ok && square_ok && split_ok;

    const std::string lambda_desc = params.lambda ? lleq::to_string(*params.lambda) : "formal";
    const std::string r_desc = params.r_entry == o::REntry::Lambda ? "lambda" : "2*lambda - 1";

    if (as_json) {
        json rows = json::array();
        for (const auto& e : table.rows) {
            json r{{"bracket", e.label},
                   {"computed", e.computed ? json(o::expansion_text(*e.computed)) : json(nullptr)},
                   {"expected", expectation_text(e)},
                   {"closed", e.closed()},
                   {"matches", e.matches()}};
            if (!e.residual.is_zero()) r["residual"] = lleq::to_string(e.residual);
            rows.push_back(r);
        }
        emit({{"schema_version", kSchemaVersion},
              {"lambda", lambda_desc},
              {"r_entry", r_desc},
              {"brackets", rows},
              {"grading", grading},
              {"graded_jacobi", jacobi_ok},
              {"omega_squared_is_h", square_ok},
              {"hamiltonian_split", split_ok},
              {"passed", passed}});
    } else {
        std::cout << "lambda " << lambda_desc << ", R entry " << r_desc << "\n";
        for (const auto& e : table.rows) {
            std::cout << (e.matches() ? "PASS " : "FAIL ") << e.label << " = "
                      << (e.computed ? o::expansion_text(*e.computed) : "not in span") << "  [" << expectation_text(e)
                      << "]\n";
            if (!e.residual.is_zero()) std::cout << "  residual:\n" << lleq::to_string(e.residual);
        }
        for (const auto& l : grading_lines) std::cout << l << "\n";
        std::cout << (jacobi_ok ? "PASS" : "FAIL") << " graded Jacobi identity on all 125 triples\n";
        std::cout << (square_ok ? "PASS" : "FAIL") << " Omega^2 = H\n";
        std::cout << (split_ok ? "PASS" : "FAIL") << " H = 1*i*dt - Hamiltonian\n";
    }
    return passed ? kOk : kCheckFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Levy-Leblond equation workbench"};
    app.require_subcommand(1);
    bool as_json = false;
    std::string format = "text";
    auto format_option = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    auto* catalog = app.add_subcommand("catalog", "List built-in equations and Clifford word sets");
    format_option(catalog);

    std::string golden;
    auto* table = app.add_subcommand("table", "Classification table checked against golden rows");
    format_option(table);
    table->add_option("--golden", golden, "JSON file with {\"rows\": [{\"key\", \"text\"}]}");

    std::string source;
    auto* verify = app.add_subcommand("verify", "Check one equation (catalog key or config file)");
    format_option(verify);
    verify->add_option("equation", source, "Catalog key such as eq10, or a JSON config path")->required();

    std::vector<std::string> sources;
    auto* dispersion = app.add_subcommand("dispersion", "Symbol determinant on and off shell");
    format_option(dispersion);
    dispersion->add_option("equations", sources, "Catalog keys or config paths (default: whole catalog)");

    std::string prepotential = "f";
    auto* susy = app.add_subcommand("susy", "Component equations and partner potentials");
    format_option(susy);
    susy->add_option("--prepotential", prepotential, "Prepotential expression, e.g. f or g*x^-1");

    bool check = false;
    std::optional<std::string> lambda;
    std::string r_entry = "lambda";
    auto* osp = app.add_subcommand("osp12", "Graded brackets of the conformal realization");
    format_option(osp);
    osp->add_flag("--check", check, "Verify the bracket table (the default action)");
    osp->add_option("--lambda", lambda, "Numeric scaling parameter; formal when omitted");
    osp->add_option("--r-entry", r_entry, "Lower-left entry of R: lambda (default) or closing (2*lambda - 1)")
        ->check(CLI::IsMember({"lambda", "closing"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    as_json = format == "json";

    try {
        if (*catalog) return cmd_catalog(as_json);
        if (*table) return cmd_table(as_json, golden);
        if (*verify) return cmd_verify(source, as_json);
        if (*dispersion) return cmd_dispersion(sources, as_json);
        if (*susy) return cmd_susy(prepotential, as_json);
        if (*osp) return cmd_osp12(lambda, r_entry, as_json);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const lleq::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "sakaguchi/report.hpp"

namespace {

using nlohmann::ordered_json;
using namespace sakaguchi;

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw error(errc::usage, "cannot open output file: " + out_path);
    out << text;
}

ordered_json report_fragment(const Report& r, bool with_a5, bool with_t31) {
    ordered_json full = to_json(r);
    ordered_json j;
    for (const char* key :
         {"schema_version", "class_spec", "kind", "phi_coeffs", "conditions"})
        j[key] = full[key];
    if (with_a5) j["a5"] = full["a5"];
    if (with_t31) {
        j["t31"] = full["t31"];
        j["discrepancies"] = full["discrepancies"];
    }
    j["notes"] = full["notes"];
    j["provenance"] = full["provenance"];
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Verification toolkit for coefficient and Toeplitz-determinant "
        "bounds over two symmetric-point function classes"};
    app.set_version_flag("--version", tool_version);
    app.require_subcommand(1);

    std::string spec_text;
    std::string kind_text = "star";
    std::string classes_path;
    std::string format = "json";
    std::string out_path;
    SearchConfig cfg;

    auto add_search_flags = [&](CLI::App* cmd) {
        cmd->add_option("--kind", kind_text, "class kind: star or convex")
            ->check(CLI::IsMember({"star", "convex"}));
        cmd->add_option("--budget", cfg.budget, "objective evaluations");
        cmd->add_option("--seed", cfg.seed, "search seed");
        cmd->add_option("--out", out_path, "write output here instead of stdout");
    };

    CLI::App* cmd_check = app.add_subcommand(
        "check", "evaluate the coefficient conditions for one class");
    cmd_check->add_option("spec", spec_text, "class spec, e.g. sqrt1p")
        ->required();
    cmd_check->add_option("--out", out_path, "write output here");

    CLI::App* cmd_a5 = app.add_subcommand(
        "a5", "fifth-coefficient bound plus extremal search");
    cmd_a5->add_option("spec", spec_text, "class spec")->required();
    add_search_flags(cmd_a5);

    CLI::App* cmd_toeplitz = app.add_subcommand(
        "toeplitz", "third-order Hermitian-Toeplitz determinant bounds");
    cmd_toeplitz->add_option("spec", spec_text, "class spec")->required();
    add_search_flags(cmd_toeplitz);

    CLI::App* cmd_report =
        app.add_subcommand("report", "batch reports for a catalog of classes");
    cmd_report
        ->add_option("--classes", classes_path,
                     "newline-delimited class specs, # comments allowed")
        ->required();
    cmd_report->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd_report->add_option("--budget", cfg.budget, "objective evaluations");
    cmd_report->add_option("--seed", cfg.seed, "search seed");
    cmd_report->add_option("--out", out_path, "write output here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        const ClassKind kind =
            kind_text == "convex" ? ClassKind::convex : ClassKind::starlike;
        if (*cmd_check) {
            const PhiSpec spec = parse_phi_spec(spec_text);
            write_output(to_json(check_conditions(phi_coeffs(spec))).dump(2),
                         out_path);
        } else if (*cmd_a5) {
            const PhiSpec spec = parse_phi_spec(spec_text);
            const Report r = build_report(spec, kind, cfg);
            write_output(report_fragment(r, true, false).dump(2), out_path);
        } else if (*cmd_toeplitz) {
            const PhiSpec spec = parse_phi_spec(spec_text);
            const Report r = build_report(spec, kind, cfg);
            write_output(report_fragment(r, false, true).dump(2), out_path);
        } else if (*cmd_report) {
            const std::vector<Report> reports =
                run_catalog(read_catalog_file(classes_path), cfg);
            if (format == "csv") {
                write_output(to_csv(reports), out_path);
            } else {
                auto arr = ordered_json::array();
                for (const Report& r : reports) arr.push_back(to_json(r));
                write_output(arr.dump(2), out_path);
            }
        }
        return 0;
    } catch (const error& e) {
        std::cerr << e.what() << "\n";
        return e.code() == errc::bound_violation ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}

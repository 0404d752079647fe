// excheck - verification CLI for the sigma/gamma fixed-point constructions
// in the compact exceptional groups F4, E6, E7.
//
// usage:
//   excheck run <suite> [--seed N] [--samples N] [--tol X] [--backend B]
//                       [--format json|md] [--out PATH] [--jobs N]
//   excheck export --family L3_14 [--out PATH]
//   excheck list
//
// exit codes: 0 pass, 1 check failure, 2 usage error

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "exc/report.hpp"
#include "exc/suites.hpp"

namespace {

int write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return 0;
    }
    std::ofstream os(out_path);
    if (!os) {
        std::cerr << "excheck: cannot open " << out_path << "\n";
        return 1;
    }
    os << text << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification suites for the F4 / E6 / E7 fixed-point constructions"};
    app.require_subcommand(1);

    // run
    std::string suite, format = "md", out_path, backend = "auto";
    exc::SuiteConfig cfg;
    CLI::App* run = app.add_subcommand("run", "run a verification suite");
    run->add_option("suite", suite, "suite name (see `excheck list`)")->required();
    run->add_option("--seed", cfg.seed, "root seed (default 42)");
    run->add_option("--samples", cfg.samples, "samples per randomized check (default 50)");
    run->add_option("--tol", cfg.tol, "float residual tolerance (default 1e-9)");
    run->add_option("--backend", backend, "exact | float | auto (default auto)");
    run->add_option("--format", format, "json | md (default md)");
    run->add_option("--out", out_path, "write the report to a file");
    run->add_option("--jobs", cfg.jobs, "concurrent checks (default 1)");

    // export
    std::string family, exp_out;
    CLI::App* exp = app.add_subcommand("export", "export a subalgebra basis as JSON");
    exp->add_option("--family", family, "L3_2 | L3_6 | L3_10 | L3_14 | L3_18 | L3_20")->required();
    exp->add_option("--out", exp_out, "output path (default stdout)");

    CLI::App* list = app.add_subcommand("list", "list the available suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (list->parsed()) {
            for (const std::string& n : exc::suite_names()) std::cout << n << "\n";
            return 0;
        }
        if (exp->parsed()) {
            exc::FamilyId id;
            if (family == "L3_2")
                id = exc::FamilyId::L3_2;
            else if (family == "L3_6")
                id = exc::FamilyId::L3_6;
            else if (family == "L3_10")
                id = exc::FamilyId::L3_10;
            else if (family == "L3_14")
                id = exc::FamilyId::L3_14;
            else if (family == "L3_18")
                id = exc::FamilyId::L3_18;
            else if (family == "L3_20")
                id = exc::FamilyId::L3_20;
            else {
                std::cerr << "excheck: unknown family " << family << "\n";
                return 2;
            }
            std::string lemma = "Lemma 3." + family.substr(3);
            return write_output(exc::subalgebra_json(exc::family_subalgebra(id), lemma), exp_out);
        }
        // run
        if (!exc::is_suite(suite)) {
            std::cerr << "excheck: unknown suite '" << suite << "' (try `excheck list`)\n";
            return 2;
        }
        if (backend != "auto" && backend != "exact" && backend != "float") {
            std::cerr << "excheck: unknown backend '" << backend << "'\n";
            return 2;
        }
        if (format != "json" && format != "md") {
            std::cerr << "excheck: unknown format '" << format << "'\n";
            return 2;
        }
        cfg.backend = backend;
        exc::SuiteReport rep = exc::run_suite(suite, cfg);
        std::string text = format == "json" ? exc::report_json(rep) : exc::report_markdown(rep);
        int rc = write_output(text, out_path);
        if (rc != 0) return rc;
        return rep.pass() ? 0 : 1;
    } catch (const std::exception& ex) {
        std::cerr << "excheck: " << ex.what() << "\n";
        return 1;
    }
}

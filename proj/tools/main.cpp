#include "cpngenus/report.hpp"
#include "cpngenus/version.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

void print(const cpngenus::ReportDocument& doc, bool as_json) {
    if (as_json) {
        std::cout << doc.json.dump(2) << "\n";
    } else {
        std::cout << doc.text;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic Hirzebruch genus engine and CP^n classification pipelines"};
    app.set_version_flag("--version", cpngenus::kEngineVersion);
    app.require_subcommand(1);

    // verify: Todd-genus classification for the CP^n ring with standard
    // Pontrjagin classes, any dimension.
    auto* verify = app.add_subcommand("verify", "Classify c1 for the CP^n ring with standard "
                                                "Pontrjagin classes");
    int verify_n = 0;
    bool verify_sc = false;
    bool verify_json = false;
    verify->add_option("--n", verify_n, "Complex dimension (>= 1)")->required();
    verify->add_flag("--simply-connected", verify_sc, "Assume the manifold is simply-connected");
    verify->add_flag("--json", verify_json, "Emit the machine-readable report");

    // classify-cp4: the dimension-4 pipeline without Pontrjagin assumptions.
    auto* cp4 = app.add_subcommand("classify-cp4", "Run the CP^4 candidate pipeline");
    bool cp4_sc = true;
    bool cp4_json = false;
    std::string cp4_mode = "ring";
    cp4->add_flag("--simply-connected,!--no-simply-connected", cp4_sc,
                  "Assume simple connectivity (default: on)");
    cp4->add_option("--mode", cp4_mode, "Candidate filter: ring or homotopy")
        ->check(CLI::IsMember({"ring", "homotopy"}));
    cp4->add_flag("--json", cp4_json, "Emit the machine-readable report");

    auto* table = app.add_subcommand("genus-table", "Print K-polynomials of a built-in genus");
    std::string table_genus;
    int table_degree = 0;
    bool table_json = false;
    table->add_option("genus", table_genus, "One of: todd, ahat, L, chi-y")
        ->required()
        ->check(CLI::IsMember({"todd", "ahat", "L", "chi-y"}));
    table->add_option("max-degree", table_degree, "Largest degree to print (0..8)")
        ->required()
        ->check(CLI::Range(0, 8));
    table->add_flag("--json", table_json, "Emit the machine-readable report");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            if (verify_n < 1) {
                std::cerr << "verify: --n must be >= 1\n";
                return 2;
            }
            const auto rep = cpngenus::classify_general(static_cast<unsigned>(verify_n), verify_sc);
            std::string echo = "verify --n " + std::to_string(verify_n);
            if (verify_sc) {
                echo += " --simply-connected";
            }
            print(cpngenus::render_classification(rep, echo), verify_json);
        } else if (cp4->parsed()) {
            const auto mode = cp4_mode == "homotopy"
                                  ? cpngenus::ClassificationMode::homotopy_equivalence
                                  : cpngenus::ClassificationMode::cohomology_ring;
            const auto rep = cpngenus::classify_cp4(cp4_sc, mode);
            std::string echo = "classify-cp4 --mode " + cp4_mode;
            echo += cp4_sc ? " --simply-connected" : " --no-simply-connected";
            print(cpngenus::render_classification(rep, echo), cp4_json);
        } else if (table->parsed()) {
            const std::string echo =
                "genus-table " + table_genus + " " + std::to_string(table_degree);
            print(cpngenus::render_genus_table(table_genus, static_cast<unsigned>(table_degree),
                                               echo),
                  table_json);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

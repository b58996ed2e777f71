#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "toric/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact positivity engine for equivariant bundles on short Bott towers "
                 "and projective spaces"};
    app.require_subcommand(1);

    std::string manifest_path;
    toric::cli::Options options;
    bool json_out = false;
    bool table_out = false;
    std::string point, twist;

    const std::vector<std::string> names = {"fan", "restrict", "nef", "mori", "check", "seshadri"};
    const std::vector<std::string> descriptions = {
        "rays, cones, walls, wall relations and curve classes",
        "splitting type of the bundle on every invariant curve",
        "nef/ample verdict with a witness curve on failure",
        "generators of the cone of curves of the projectivized bundle",
        "hypothesis report for the governing closed-form branch",
        "Seshadri constants (exact value, interval, or lower bound) at the given points",
    };
    for (std::size_t i = 0; i < names.size(); ++i) {
        auto* sub = app.add_subcommand(names[i], descriptions[i]);
        sub->add_option("--manifest", manifest_path, "JSON manifest file")->required();
        sub->add_flag("--json", json_out, "print the machine-readable report");
        sub->add_flag("--table", table_out, "print the human-readable tables (default)");
        sub->add_flag("--strict", options.strict,
                      "treat hypothesis failures and bounds-only results as errors (exit 4)");
        sub->add_flag("--oracle", options.oracle,
                      "run the independent brute-force cross-checks and report them");
        sub->add_option("--point", point, "extra evaluation point \"z1:w1:...\" (seshadri)");
        sub->add_option("--twist", twist, "twist coefficients \"a1,a2,...\" overriding the manifest");
    }

    CLI11_PARSE(app, argc, argv);
    if (!point.empty()) options.point = point;
    if (!twist.empty()) options.twist = twist;

    const std::string command = app.get_subcommands().front()->get_name();
    toric::cli::Report report = toric::cli::run_file(command, manifest_path, options);
    if (json_out)
        std::cout << report.machine.dump(2) << "\n";
    else
        std::cout << report.human;
    return report.exit_code;
}

#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "toric/manifest.hpp"

namespace toric {
namespace cli {

// Stable exit codes: 0 success (including interval results), 2 schema or
// validation failures, 3 bundle-data errors, 4 hypothesis failures in strict
// mode.
enum ExitCode : int {
    kOk = 0,
    kValidation = 2,
    kBundleData = 3,
    kHypothesis = 4,
};

struct Options {
    bool strict = false;           // hypothesis failure is an error, not a bounds report
    bool oracle = false;           // run the independent cross-checks and report them
    std::optional<std::string> point;  // "z1:w1:..." appended to the manifest's points
    std::optional<std::string> twist;  // "a1,a2,..." overriding the manifest's twist
};

// Machine and human views of one command's result; the text is rendered from
// the JSON document so both carry the same numbers.
struct Report {
    nlohmann::ordered_json machine;
    std::string human;
    int exit_code = kOk;
};

Report cmd_fan(const Manifest& manifest, const Options& options);
Report cmd_restrict(const Manifest& manifest, const Options& options);
Report cmd_nef(const Manifest& manifest, const Options& options);
Report cmd_mori(const Manifest& manifest, const Options& options);
Report cmd_check(const Manifest& manifest, const Options& options);
Report cmd_seshadri(const Manifest& manifest, const Options& options);

// Dispatch by subcommand name; engine errors are mapped to the exit-code
// contract with a one-line report.
Report run(const std::string& command, const Manifest& manifest, const Options& options);
Report run_file(const std::string& command, const std::string& manifest_path,
                const Options& options);

// Render the human view from a machine document (exposed for tests).
std::string render(const nlohmann::ordered_json& machine);

}  // namespace cli
}  // namespace toric

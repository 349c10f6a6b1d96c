#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace tightcat::cli {

enum Status { Pass = 0, CheckedFailure = 1, UsageOrLimit = 2 };

struct Result {
    int status = Pass;
    nlohmann::json body;
    std::string text;  // rendered according to --format
};

// Runs one command line (without the program name). Relative file arguments
// resolve against root.
Result run(const std::vector<std::string>& args, const std::filesystem::path& root = ".");

// Golden files under dir/golden: each holds the arguments, the expected
// status and the expected output.
nlohmann::json verify_golden(const std::filesystem::path& dir);

std::string render_text(const nlohmann::json& j);

}  // namespace tightcat::cli

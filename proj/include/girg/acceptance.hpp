#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace girg {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct AcceptanceOptions {
    /// Criteria to run (1..10); empty runs all of them.
    std::vector<int> only;
    /// Sweep CSVs and plot data land here when set.
    std::filesystem::path output_dir;
    std::size_t threads = 1;
    /// Progress messages (sweep cells and the like) go here when set.
    std::function<void(const std::string&)> log;
};

inline constexpr int kCriterionCount = 10;

/// Runs the acceptance criteria in order. `on_result` sees each result as
/// soon as it is known.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS  3  separator dichotomy: ... (12.3 s)"
std::string format_result(const CriterionResult& r);

}  // namespace girg

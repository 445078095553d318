// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Usage: acceptance_test [--out DIR] [--only 3,4] [--verbose]
#include <cstdio>
#include <cstring>
#include <iostream>
#include <sstream>
#include <string>

#include "girg/acceptance.hpp"

int main(int argc, char** argv) {
    girg::AcceptanceOptions options;
    options.output_dir = "acceptance_out";
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--out" && i + 1 < argc) {
            options.output_dir = argv[++i];
        } else if (arg == "--only" && i + 1 < argc) {
            std::stringstream list(argv[++i]);
            for (std::string id; std::getline(list, id, ',');) options.only.push_back(std::stoi(id));
        } else if (arg == "--verbose") {
            options.log = [](const std::string& msg) { std::cerr << "  .. " << msg << std::endl; };
        } else {
            std::cerr << "usage: acceptance_test [--out DIR] [--only 1,2,...] [--verbose]\n";
            return 2;
        }
    }

    int failed = 0;
    try {
        girg::run_acceptance(options, [&](const girg::CriterionResult& r) {
            std::cout << girg::format_result(r) << std::endl;
            failed += r.pass ? 0 : 1;
        });
    } catch (const std::exception& e) {
        std::cerr << "acceptance_test: " << e.what() << '\n';
        return 2;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}

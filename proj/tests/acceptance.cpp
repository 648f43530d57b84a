// Acceptance battery driver: one pass/fail line per criterion. Criteria 1-10
// run in-process; criterion 11 invokes the CLI twice and compares bytes.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "dunkl/verify.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool reproducibility_check(std::string& detail) {
#ifndef DUNKL_CLI_PATH
    detail = "CLI path not configured";
    return false;
#else
    std::string out1 = std::string(DUNKL_CLI_PATH) + ".run1.json";
    std::string out2 = std::string(DUNKL_CLI_PATH) + ".run2.json";
    std::string base = std::string("\"") + DUNKL_CLI_PATH + "\" verify-all --seed 42 > ";
    if (std::system((base + "\"" + out1 + "\"").c_str()) == -1 ||
        std::system((base + "\"" + out2 + "\"").c_str()) == -1) {
        detail = "could not launch CLI";
        return false;
    }
    std::string a = slurp(out1), b = slurp(out2);
    std::remove(out1.c_str());
    std::remove(out2.c_str());
    if (a.empty()) {
        detail = "CLI produced no output";
        return false;
    }
    detail = "two runs, " + std::to_string(a.size()) + " bytes each";
    return a == b;
#endif
}

}  // namespace

int main() {
    auto rep = dunkl::verify::run_acceptance(42);
    bool all = true;
    for (const auto& c : rep.results) {
        std::printf("[%s] criterion %2d: %s (metric=%.3g, threshold=%.3g) %s\n",
                    c.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), c.metric, c.threshold,
                    c.detail.c_str());
        all = all && c.pass;
    }
    std::string detail;
    bool repro = reproducibility_check(detail);
    std::printf("[%s] criterion 11: verify-all --seed 42 is byte-identical across runs (%s)\n",
                repro ? "PASS" : "FAIL", detail.c_str());
    all = all && repro;
    return all ? 0 : 1;
}

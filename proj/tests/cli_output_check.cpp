// Runs the CLI and checks its check-fundamental report against the committed
// schema's required-key list, plus the documented exit codes.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <sys/wait.h>

using json = nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::string& args, const std::string& out_path) {
    std::string cmd =
        std::string("\"") + DUNKL_CLI_PATH + "\" " + args + " > \"" + out_path + "\"";
    int rc = std::system(cmd.c_str());
#ifdef WEXITSTATUS
    if (rc != -1) rc = WEXITSTATUS(rc);
#endif
    return rc;
}

int failures = 0;
void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cerr << "FAILED: " << what << "\n";
    }
}

}  // namespace

int main() {
    std::string out = std::string(DUNKL_CLI_PATH) + ".cli_check.json";

    // Exit 2 and a witness list for a killed Gegenbauer mode.
    int rc = run_cli(
        "check-fundamental --family z2 --d 2 --kappa 1/2,1/2 --g gegenbauer:3 --nmax 10", out);
    expect(rc == 2, "exit code 2 for a not-fundamental verdict");
    json rep = json::parse(slurp(out));

    json schema = json::parse(slurp(SCHEMA_PATH));
    for (const auto& key : schema.at("required"))
        expect(rep.contains(key.get<std::string>()),
               "report carries required key " + key.get<std::string>());
    expect(rep["schema"] == schema["$id"], "schema tag matches the committed schema id");
    expect(rep["fundamental_up_to_nmax"] == false, "verdict flag");
    expect(!rep["witnesses"].empty() && rep["witnesses"][0] == 0, "witness list includes 0");

    // Exit 0 when every coefficient clears the threshold.
    rc = run_cli(
        "check-fundamental --family z2 --d 2 --kappa 1/2,1/2 --g exp --nmax 6", out);
    expect(rc == 0, "exit code 0 for a fundamental-up-to-nmax verdict");

    // Exit 1 with a diagnostic on a config error.
    rc = run_cli("check-fundamental --family z2 --d 2 --kappa 0.5,0.5 --g exp 2>/dev/null", out);
    expect(rc == 1, "exit code 1 on a malformed rational");

    std::remove(out.c_str());
    if (failures == 0) std::puts("cli output check: all assertions passed");
    return failures == 0 ? 0 : 1;
}

// End-to-end checks of the command-line front end.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sys/wait.h>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include <besovlab/campaign.hpp>
#include <besovlab/weights.hpp>

using Json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

const char* cli_path() { return BESOVLAB_CLI_PATH; }

struct RunResult {
    int exit_code = -1;
    std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    fs::path dir = fs::temp_directory_path() / "besovlab_test_cli";
    fs::create_directories(dir);
    fs::path log = dir / ("stdout_" + std::to_string(counter++) + ".txt");
    std::string cmd = std::string(cli_path()) + " " + args + " > " +
                      log.string() + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    std::ifstream in(log);
    std::stringstream ss;
    ss << in.rdbuf();
    r.stdout_text = ss.str();
    return r;
}

fs::path fresh_dir(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / "besovlab_test_cli" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("definitely-not-a-subcommand").exit_code == 2);
    CHECK(run_cli("campaign").exit_code == 2); // missing identifier
    CHECK(run_cli("campaign no-such-lemma").exit_code == 2);
    CHECK(run_cli("product --law bogus").exit_code == 2);
    // Hypothesis violations surface as configuration errors.
    CHECK(run_cli("product --law sum-index --s1 5 --grid 32 --trials 1").exit_code == 2);
}

TEST_CASE("campaign --list enumerates the registry") {
    RunResult r = run_cli("campaign --list");
    REQUIRE(r.exit_code == 0);
    std::istringstream in(r.stdout_text);
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) lines.push_back(line);
    auto ids = besovlab::campaign_list();
    REQUIRE(lines.size() == ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) CHECK(lines[i] == ids[i]);
}

TEST_CASE("partition-check passes and writes its JSON artifact") {
    fs::path dir = fresh_dir("partition");
    RunResult r = run_cli("partition-check --grid 64 --out " + dir.string());
    CHECK(r.exit_code == 0);
    Json j = Json::parse(slurp(dir / "partition_check.json"));
    CHECK(j["verdict"] == "pass");
    CHECK(j["reconstruction_residual"].get<double>() <= 1e-10);
    CHECK(j["block_orthogonality"].get<double>() <= 1e-12);
}

TEST_CASE("weights tabulation matches the library values") {
    fs::path dir = fresh_dir("weights");
    RunResult r = run_cli("weights --c 1.5 --kmax 6 --tmax 2 --steps 4 --out " +
                          dir.string());
    REQUIRE(r.exit_code == 0);
    std::istringstream csv(slurp(dir / "weights.csv"));
    std::string header;
    std::getline(csv, header);
    CHECK(header == "k,t,e,omega");

    besovlab::WeightSequence ws(1.5, 0, 6);
    int rows = 0;
    for (std::string line; std::getline(csv, line);) {
        if (line.empty()) continue;
        ++rows;
        std::istringstream ls(line);
        std::string tok;
        std::getline(ls, tok, ',');
        int k = std::stoi(tok);
        std::getline(ls, tok, ',');
        double t = std::stod(tok);
        std::getline(ls, tok, ',');
        double e = std::stod(tok);
        std::getline(ls, tok, ',');
        double om = std::stod(tok);
        CHECK(e == doctest::Approx(ws.e(k, t)).epsilon(1e-14));
        CHECK(om == doctest::Approx(ws.omega(k, t)).epsilon(1e-14));
    }
    CHECK(rows == 7 * 5);
    CHECK(run_cli("weights --kmax -1").exit_code == 2);
}

TEST_CASE("campaign subcommands report verdicts and write stable JSON") {
    fs::path dir = fresh_dir("bony");
    std::string args = "bony --grid 32 --trials 2 --out " + dir.string();
    RunResult r1 = run_cli(args);
    CHECK(r1.exit_code == 0);
    CHECK(r1.stdout_text.find("verdict=pass") != std::string::npos);

    std::string first = slurp(dir / "campaign_bony.json");
    Json j = Json::parse(first);
    CHECK(j["lemma"] == "bony");
    CHECK(j["verdict"] == "pass");
    CHECK(j["trials"] == 2);

    // Re-running with the same arguments reproduces the artifact verbatim.
    RunResult r2 = run_cli(args);
    CHECK(r2.exit_code == 0);
    CHECK(slurp(dir / "campaign_bony.json") == first);

    // An unachievable drift bound flips the exit code to a verdict failure.
    CHECK(run_cli("transport --grid 32 --trials 2 --drift-bound 1e-12")
              .exit_code == 1);
}

TEST_CASE("solve integrates a configuration file and writes artifacts") {
    fs::path dir = fresh_dir("solve");
    Json cfg{{"grid", 32},
             {"dim", 2},
             {"seed", 1},
             {"T", 0.02},
             {"dt", 1e-3},
             {"record_every", 2},
             {"eta", 0.01},
             {"laws", Json{{"preset", "shallow-water"}, {"rho_bar0", 1.0}, {"c0", 0.5}}},
             {"data", Json{{"a_amplitude", 0.01}, {"u_amplitude", 0.01}, {"j_cut", 3}}}};
    fs::path cfg_path = dir / "config.json";
    std::ofstream(cfg_path) << cfg.dump(2);

    RunResult r = run_cli("solve --config " + cfg_path.string() + " --out " +
                          dir.string());
    CHECK(r.exit_code == 0);
    for (const char* name : {"manifest.json", "a_series.csv", "u_series.csv",
                             "f_series.csv", "trace.csv", "a_final.bin",
                             "u_final.bin"})
        CHECK(fs::exists(dir / name));

    Json manifest = Json::parse(slurp(dir / "manifest.json"));
    CHECK(manifest["healthy_to_end"].get<bool>());
    CHECK(manifest["mass_drift"].get<double>() <= 1e-8);
    CHECK(manifest.contains("timestamp"));
    CHECK(manifest["budget"].contains("predicates"));
    CHECK(manifest["config"]["grid"] == 32);

    // Determinism modulo the timestamp field.
    fs::path dir2 = fresh_dir("solve2");
    RunResult r2 = run_cli("solve --config " + cfg_path.string() + " --out " +
                           dir2.string());
    CHECK(r2.exit_code == 0);
    Json m1 = Json::parse(slurp(dir / "manifest.json"));
    Json m2 = Json::parse(slurp(dir2 / "manifest.json"));
    m1.erase("timestamp");
    m2.erase("timestamp");
    CHECK(m1 == m2);
    CHECK(slurp(dir / "trace.csv") == slurp(dir2 / "trace.csv"));
}

TEST_CASE("uniqueness subcommand distinguishes identical and perturbed runs") {
    fs::path dir = fresh_dir("uniq");
    Json cfg{{"grid", 32},
             {"T", 0.01},
             {"dt", 1e-3},
             {"data", Json{{"a_amplitude", 0.01}, {"u_amplitude", 0.01}, {"j_cut", 3}}}};
    fs::path cfg_path = dir / "config.json";
    std::ofstream(cfg_path) << cfg.dump(2);

    RunResult same = run_cli("uniqueness --perturb 0 --config " +
                             cfg_path.string() + " --out " + dir.string());
    CHECK(same.exit_code == 0);
    Json j = Json::parse(slurp(dir / "uniqueness.json"));
    CHECK(j["identically_zero"].get<bool>());
    CHECK(j["osgood_value"].get<double>() > 10.0);
    CHECK(fs::exists(dir / "uniqueness.csv"));

    RunResult pert = run_cli("uniqueness --perturb 1e-6 --config " +
                             cfg_path.string() + " --out " + dir.string());
    CHECK(pert.exit_code == 0);
    Json jp = Json::parse(slurp(dir / "uniqueness.json"));
    CHECK(!jp["identically_zero"].get<bool>());
    CHECK(jp["growth_factor"].get<double>() < 100.0);
}

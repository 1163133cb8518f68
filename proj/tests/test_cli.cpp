#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "p13/report.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace p13;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

[[nodiscard]] std::string bin_path() {
    const char* env = std::getenv("P13CERT_BIN");
    REQUIRE_MESSAGE(env != nullptr, "P13CERT_BIN must point at the cli binary");
    return env;
}

[[nodiscard]] std::string data_dir() {
    const char* env = std::getenv("P13CERT_DATA");
    REQUIRE_MESSAGE(env != nullptr, "P13CERT_DATA must point at the data directory");
    return env;
}

[[nodiscard]] RunResult run_cli(const std::string& args) {
    const std::string out_file = "/tmp/p13cert_cli_out.txt";
    const std::string cmd = bin_path() + " --manifest " + data_dir() +
                            "/expected_classification.tsv " + args + " > " + out_file + " 2>&1";
    const int raw = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    std::ifstream f(out_file, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    r.out = ss.str();
    return r;
}

[[nodiscard]] int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("one bracket check per generator pair") {
    const RunResult r = run_cli("--suite poincare --rep phi1 --format json");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.out) == 45);
    CHECK(r.out.find("\"check_id\":\"poincare/phi1/P0-P1\"") != std::string::npos);
    CHECK(r.out.find("\"status\":\"holds\"") != std::string::npos);
}

TEST_CASE("identical seeds give byte-identical reports") {
    const std::string args = "--suite symmetry --rep w2 --seed 7 --format json";
    const RunResult r1 = run_cli(args);
    const RunResult r2 = run_cli(args);
    CHECK(r1.exit_code == 0);
    REQUIRE(!r1.out.empty());
    CHECK(r1.out == r2.out);
    const RunResult r3 = run_cli("--suite symmetry --rep w2 --seed 8 --format json");
    CHECK(r3.exit_code == 0);
    CHECK(r3.out != r1.out);  // residuals move with the stream
}

TEST_CASE("json lines round-trip byte for byte") {
    const RunResult r = run_cli("--suite casimir --rep phi2 --format json");
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string line;
    int n = 0;
    while (std::getline(lines, line)) {
        const CheckReport rep = from_json_line(line);
        CHECK(to_json_line(rep) == line);
        ++n;
    }
    CHECK(n > 0);
}

TEST_CASE("text format carries the convention header and a tally") {
    const RunResult r = run_cli("--suite content --rep phi3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("# plane-wave convention") != std::string::npos);
    CHECK(r.out.find("omega = +-E") != std::string::npos);
    CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("a corrupted manifest row flips the exit code") {
    std::ifstream src(data_dir() + "/expected_classification.tsv");
    REQUIRE(src.good());
    std::ostringstream buf;
    buf << src.rdbuf();
    std::string table = buf.str();
    const std::string good = "chi2\tT2\texists";
    const auto pos = table.find(good);
    REQUIRE(pos != std::string::npos);
    table.replace(pos, good.size(), "chi2\tT2\tobstructed");
    const std::string mutated = "/tmp/p13cert_mutated.tsv";
    std::ofstream(mutated, std::ios::binary) << table;

    const std::string out_file = "/tmp/p13cert_cli_out.txt";
    const std::string cmd = bin_path() + " --manifest " + mutated +
                            " --suite symmetry --rep chi2 > " + out_file + " 2>&1";
    const int raw = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(raw) == 1);

    std::ifstream f(out_file);
    std::ostringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str().find("FAIL") != std::string::npos);
    CHECK(ss.str().find("chi2-T2") != std::string::npos);
}

TEST_CASE("configuration errors exit with 2 before any check runs") {
    CHECK(run_cli("--suite nonsense").exit_code == 2);
    CHECK(run_cli("--suite poincare --rep phi9").exit_code == 2);
    CHECK(run_cli("--format yaml").exit_code == 2);
    const std::string cmd = bin_path() +
                            " --manifest /nonexistent.tsv --suite classification --rep chi1 "
                            "> /dev/null 2>&1";
    CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 2);
}

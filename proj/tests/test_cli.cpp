#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lagcal/power_series.hpp"

#include "json.hpp"

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct CmdResult {
    int code = -1;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    const std::string cmd = std::string(LAGCAL_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult r;
    char buf[4096];
    while (std::fgets(buf, sizeof buf, pipe) != nullptr) r.out += buf;
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

std::string temp_path(const std::string& name) {
    return std::string("cli_test_") + name;
}

} // namespace

TEST_CASE("eval prints CSV values for the special functions") {
    CmdResult r = run_cli("eval --fn c0 --at 0 --at 1");
    CHECK(r.code == 0);
    auto rows = lines_of(r.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == "arg,value");
    CHECK(rows[1] == "0,1");
    auto cells = split_csv(rows[2]);
    REQUIRE(cells.size() == 2);
    CHECK(std::stod(cells[1]) == doctest::Approx(0.22389077914123566805).epsilon(1e-13));

    // Mittag-Leffler at alpha = 1 is the exponential
    r = run_cli("eval --fn mlf --alpha 1 --at 1");
    CHECK(r.code == 0);
    rows = lines_of(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(std::stod(split_csv(rows[1])[1]) == doctest::Approx(std::exp(1.0)).epsilon(1e-13));

    // W with unit parameters reproduces c0 with the argument negated
    CmdResult w = run_cli("eval --fn hbw --alpha 1 --beta 1 --nu 1 --at 1");
    CmdResult c = run_cli("eval --fn c0 --at -1");
    CHECK(w.code == 0);
    CHECK(c.code == 0);
    const double wv = std::stod(split_csv(lines_of(w.out)[1])[1]);
    const double cv = std::stod(split_csv(lines_of(c.out)[1])[1]);
    CHECK(wv == doctest::Approx(cv).epsilon(1e-13));

    // two-variable polynomial rows carry both coordinates
    r = run_cli("eval --fn laguerre_poly --n 2 --at 1,1");
    CHECK(r.code == 0);
    rows = lines_of(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == "x,y,value");
    CHECK(std::stod(split_csv(rows[1])[2]) == doctest::Approx(-0.5).epsilon(1e-14));

    r = run_cli("eval --fn lower_l --n 3 --at 2");
    CHECK(r.code == 0);
    CHECK(std::stod(split_csv(lines_of(r.out)[1])[1]) ==
          doctest::Approx(-8.0 / 6.0).epsilon(1e-14));

    CHECK(run_cli("eval --fn airy --at 0").code == 2);
    CHECK(run_cli("eval --fn c0 --at not-a-number").code == 2);
}

TEST_CASE("verify reports JSON and exits by pass/fail") {
    CmdResult r = run_cli("verify --eq burgers-laguerre --R 1 --k 1 --nx 41 --nt 81");
    CHECK(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["equation"] == "burgers-laguerre");
    CHECK(j["r"] == doctest::Approx(1.0));
    CHECK(j["mode"] == "exact-time");
    CHECK(j["tolerance"] == doctest::Approx(1e-6));
    CHECK(j["pass"] == true);

    // forcing a wrong rate flips the exit code
    r = run_cli("verify --eq burgers-laguerre --R 1 --k 1 --nx 41 --nt 81 --force-r 2");
    CHECK(r.code == 1);
    j = nlohmann::json::parse(r.out);
    CHECK(j["pass"] == false);
    CHECK(j["normalized"].get<double>() >= 0.3);

    // fd mode defaults to the looser tolerance
    r = run_cli("verify --eq burgers-laguerre --R 1 --k 1 --mode fd --nx 101 --nt 101");
    CHECK(r.code == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(j["tolerance"] == doctest::Approx(1e-2));

    CHECK(run_cli("verify --eq no-such-equation --k 1").code == 2);
    CHECK(run_cli("verify --eq burgers-laguerre --k 0").code == 2);
}

TEST_CASE("dispersion emits closed form, numeric root, and agreement") {
    CmdResult r = run_cli("dispersion --eq burgers-laguerre --k 3");
    CHECK(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["closed_form"] == doctest::Approx(9.0));
    CHECK(j["numeric"] == doctest::Approx(9.0));
    CHECK(j["agree"] == true);

    r = run_cli("dispersion --eq kdv-laguerre --k 1");
    CHECK(r.code == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(j["closed_form"] == doctest::Approx(1.0));
    CHECK(j["agree"] == true);

    // the power-n block reports both readings of the nonlinearity
    r = run_cli("dispersion --eq burgers-power-n --n 2 --k 1");
    CHECK(r.code == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(j["literal"]["closed_form"] == doctest::Approx(3.0));
    CHECK(j["literal"]["numeric"] == doctest::Approx(3.0));
    CHECK(j["literal"]["agree"] == true);
    CHECK(j["paper_condition"]["closed_form"] == doctest::Approx(1.0));
    CHECK(j["paper_condition"]["numeric"] == doctest::Approx(3.0));
    CHECK(j["paper_condition"]["agree"] == false);
    CHECK(j["paper_condition"]["note"].is_string());

    // variable-coefficient families have no numeric root to solve for
    r = run_cli("dispersion --eq varcoef-burgers --k 1");
    CHECK(r.code == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(j["numeric"].is_null());
    CHECK(j["note"].is_string());

    CHECK(run_cli("dispersion --eq burgers-laguerre --k 0").code == 2);
}

TEST_CASE("identities subcommand prints one status line per check") {
    CmdResult r = run_cli("identities");
    CHECK(r.code == 0);
    int pass_lines = 0;
    int note_lines = 0;
    for (const auto& line : lines_of(r.out)) {
        if (line.rfind("[PASS]", 0) == 0) ++pass_lines;
        if (line.rfind("[FAIL]", 0) == 0) {
            ++pass_lines;
            FAIL_CHECK("identity reported as failed: ", line);
        }
        if (line.find("note:") != std::string::npos) ++note_lines;
    }
    CHECK(pass_lines == 14);
    CHECK(note_lines >= 2); // the unit-phase observations on the fractional chain
}

TEST_CASE("identities --dump-golden writes parseable series files") {
    const std::string dir = temp_path("golden");
    REQUIRE(std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str()) == 0);
    CmdResult r = run_cli("identities --dump-golden " + dir);
    CHECK(r.code == 0);
    int files = 0;
    for (const char* name : {"tricomi-lambda1", "mlf-a05-r1", "w-05-05-10",
                             "laguerre-n6-y1", "lower-n8"}) {
        std::ifstream in(dir + "/" + name + ".txt");
        REQUIRE(in.good());
        std::stringstream ss;
        ss << in.rdbuf();
        lagcal::PhasedPowerSeries s = lagcal::parse_series(ss.str());
        CHECK(s.size() > 0);
        ++files;
    }
    CHECK(files == 5);
    CHECK(std::system(("rm -rf " + dir).c_str()) == 0);
}

TEST_CASE("config files supply defaults and flags override them") {
    const std::string cfg = temp_path("verify.cfg");
    {
        std::ofstream f(cfg);
        f << "eq=burgers-laguerre\nk=2\nR=1\nnx=41\nnt=81\n";
    }
    CmdResult r = run_cli("verify --config " + cfg);
    CHECK(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["k"] == doctest::Approx(2.0));
    CHECK(j["r"] == doctest::Approx(4.0));

    // command line wins over the file
    r = run_cli("verify --config " + cfg + " --k 1");
    CHECK(r.code == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(j["r"] == doctest::Approx(1.0));

    // unknown keys are rejected, not ignored
    {
        std::ofstream f(cfg);
        f << "eq=burgers-laguerre\nk=2\nwavenumber=3\n";
    }
    CHECK(run_cli("verify --config " + cfg).code == 2);
    std::remove(cfg.c_str());
}

TEST_CASE("table writes the solution surface with masked residual cells") {
    const std::string csv = temp_path("table.csv");
    CmdResult r = run_cli("table --eq burgers-laguerre --R 1 --k 1 "
                          "--nx 11 --nt 11 --t-max 1 --out " + csv);
    CHECK(r.code == 0);
    std::ifstream in(csv);
    REQUIRE(in.good());
    std::string line;
    std::getline(in, line);
    CHECK(line == "x,t,u,residual");
    int rows = 0;
    bool saw_origin = false;
    while (std::getline(in, line)) {
        ++rows;
        auto cells = split_csv(line);
        REQUIRE(cells.size() == 4);
        if (cells[0] == "0" && cells[1] == "0") {
            saw_origin = true;
            CHECK(std::stod(cells[2]) == doctest::Approx(1.0)); // u(0,0) = R
        }
    }
    CHECK(rows == 121);
    CHECK(saw_origin);
    in.close();
    std::remove(csv.c_str());
}

TEST_CASE("table leaves the residual cell empty where the profile vanishes") {
    // node 4 of t in [0, 2 t*] with 9 nodes lands exactly on the first zero
    const std::string csv = temp_path("masked.csv");
    CmdResult r = run_cli("table --eq burgers-laguerre --R 1 --k 1 --nx 9 --nt 9 "
                          "--t-max 2.8915929814733922606 --out " + csv);
    CHECK(r.code == 0);
    std::ifstream in(csv);
    REQUIRE(in.good());
    std::string line;
    std::getline(in, line);
    int empty_cells = 0;
    int filled_cells = 0;
    while (std::getline(in, line)) {
        auto cells = split_csv(line);
        REQUIRE(cells.size() == 4);
        if (cells[3].empty())
            ++empty_cells;
        else
            ++filled_cells;
    }
    CHECK(empty_cells == 9); // one masked t-column across all 9 x-nodes
    CHECK(filled_cells == 72);
    in.close();
    std::remove(csv.c_str());
}

TEST_CASE("fd table of the fractional family shows the first-node layer") {
    const std::string csv = temp_path("frac.csv");
    CmdResult r = run_cli("table --eq burgers-fractional --alpha 0.5 --R 1 --k 1 "
                          "--mode fd --nx 41 --nt 401 --out " + csv);
    CHECK(r.code == 0);
    std::ifstream in(csv);
    REQUIRE(in.good());
    std::string line;
    std::getline(in, line);
    double early_max = 0.0;
    double window_max = 0.0;
    while (std::getline(in, line)) {
        auto cells = split_csv(line);
        if (cells[3].empty()) continue;
        const double t = std::stod(cells[1]);
        const double res = std::abs(std::stod(cells[3]));
        if (t < 0.25)
            early_max = std::max(early_max, res);
        else
            window_max = std::max(window_max, res);
    }
    // absolute residuals: the layer dwarfs the settled region
    CHECK(early_max > 0.1);
    CHECK(window_max < 1e-2);
    in.close();
    std::remove(csv.c_str());
}

TEST_CASE("bad invocations exit with the usage code") {
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("table --eq burgers-laguerre").code == 2); // --out is required
    CHECK(run_cli("eval --at 1").code == 2);                 // --fn is required
}

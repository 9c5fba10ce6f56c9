#include <doctest.h>

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lingame/cli.hpp"

using lingame::run_command;
using nlohmann::json;

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
    json j;
};

Run cli(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::ostringstream out, err;
    std::istringstream in(stdin_text);
    int status = run_command(args, out, err, &in);
    Run r{status, out.str(), err.str(), json()};
    if (status == 0 && !r.out.empty() && (r.out[0] == '{' || r.out[0] == '['))
        r.j = json::parse(r.out);
    return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
    std::string path = "/tmp/lingame_test_" + name;
    std::ofstream f(path);
    f << text;
    return path;
}

const char* kChsh = R"({"n_a":2,"n_b":2,"d":"2","k":[["0","0"],["0","1"]]})";

} // namespace

TEST_CASE("construct binary emits the canonical game file") {
    Run r = cli({"construct", "binary", "--rows", "3", "--cols", "4"});
    CHECK(r.status == 0);
    CHECK(r.j["d"] == "128");
    CHECK(r.j["k"][2][3] == "64");
}

TEST_CASE("construct rudin emits the pinned matrix") {
    Run r = cli({"construct", "rudin", "--n", "3", "--s", "2"});
    CHECK(r.status == 0);
    CHECK(r.j["d"] == "484");
    CHECK(r.j["k"] == json::parse(R"([["0","23","90"],["201","114","71"],["72","117","206"]])"));
}

TEST_CASE("construct pipes into analyze classical") {
    Run game = cli({"construct", "binary", "--rows", "3", "--cols", "4"});
    for (const char* algo : {"naive", "path-gauge"}) {
        Run r = cli({"analyze", "classical", "-", "--algorithm", algo}, game.out);
        CHECK(r.status == 0);
        CHECK(r.j["beta_c"] == 6);
        CHECK(r.j["p_cl"]["fraction"] == "1/2");
        CHECK(r.j["algorithm"] == algo);
    }
}

TEST_CASE("analyze classical on a file") {
    std::string path = write_temp("chsh.json", kChsh);
    Run r = cli({"analyze", "classical", path});
    CHECK(r.status == 0);
    CHECK(r.j["beta_c"] == 1);
    CHECK(r.j["p_cl"]["fraction"] == "3/4");
}

TEST_CASE("analyze quantum-bound") {
    std::string path = write_temp("chsh.json", kChsh);
    Run r = cli({"analyze", "quantum-bound", path});
    CHECK(r.status == 0);
    CHECK(r.j["p_q_bar"].get<double>() == doctest::Approx(0.8535533906).epsilon(1e-9));
    CHECK(r.j["normalization"] == "sqrt");
    CHECK(r.j["norms"].size() == 1);

    Run lit = cli({"analyze", "quantum-bound", path, "--normalization", "paper-literal"});
    CHECK(lit.j["p_q_bar"].get<double>() == doctest::Approx(0.6767766953).epsilon(1e-9));
}

TEST_CASE("certify with the subset-sum extension") {
    Run game = cli({"construct", "rudin", "--n", "3", "--s", "2"});
    Run r = cli({"certify", "-", "--subset-sum", "2"}, game.out);
    CHECK(r.status == 0);
    CHECK(r.j["maximality"]["verdict"] == "maximal");
    CHECK(r.j["subset_sum"]["pass"] == true);
}

TEST_CASE("girth-stats") {
    std::string path = write_temp("chsh.json", kChsh);
    Run r = cli({"girth-stats", path});
    CHECK(r.status == 0);
    CHECK(r.j["h"]["edges"] == 3);
    CHECK(r.j["h_opt"]["edges"] == 3);
    CHECK(r.j["h_opt"]["is_tree"] == true);
}

TEST_CASE("classify3x3 gauges before classifying") {
    std::string path = write_temp(
        "shifted.json", R"({"n_a":3,"n_b":3,"d":"6","k":[["2","2","2"],["2","3","5"],["2","0","1"]]})");
    Run r = cli({"classify3x3", path});
    CHECK(r.status == 0);
    CHECK(r.j["beta"] == 3);
    CHECK(r.j["rule"] == "four-distinct-cycle-4");
}

TEST_CASE("rudin-set reports both verdicts") {
    Run r = cli({"rudin-set", "--s", "2", "--p", "3", "--verify"});
    CHECK(r.status == 0);
    CHECK(r.j["elements"] == json({"0", "7", "8"}));
    CHECK(r.j["verified_level"] == 2);
    CHECK(r.j["multiset"]["pass"] == true);
    CHECK(r.j["disjoint"]["pass"] == true);
}

TEST_CASE("lower-bound") {
    Run r3 = cli({"lower-bound", "--n", "3", "--exact"});
    CHECK(r3.status == 0);
    CHECK(r3.j["lower_bound"] == "6");
    CHECK(r3.j["chromatic"]["exact"] == true);

    Run r4 = cli({"lower-bound", "--n", "4", "--exact"});
    CHECK(r4.j["lower_bound"] == "10");
    CHECK(r4.j["algebraic_floor"] == "10");
}

TEST_CASE("min-d flags every refuted modulus") {
    Run r = cli({"min-d", "--n", "3", "--d-max", "8"});
    CHECK(r.status == 0);
    CHECK(r.j["d_min"] == "7");
    CHECK(r.j["ruled_out"] == json({"2", "3", "4", "5", "6"}));
    CHECK(r.j["witness"]["d"] == "7");
}

TEST_CASE("report falls back to the analytic floor when the power sum is refused") {
    Run game = cli({"construct", "rudin", "--n", "4", "--s", "4"}); // d is about 2 * 10^7
    Run r = cli({"report", "-"}, game.out);
    CHECK(r.status == 0);
    CHECK(r.j.contains("quantum_floor"));
    CHECK_FALSE(r.j.contains("quantum"));
    CHECK(r.j["classical"]["algorithm"] == "path-gauge");
    CHECK(r.j["classical"]["p_cl"]["fraction"] == "7/16");
    CHECK(r.j["certificates"]["maximality"]["verdict"] == "maximal");
}

TEST_CASE("quantum-bound refusal exits with the budget status") {
    Run game = cli({"construct", "rudin", "--n", "3", "--s", "2"});
    Run r = cli({"--spectral-cap", "10", "analyze", "quantum-bound", "-"}, game.out);
    CHECK(r.status == 2);
}

TEST_CASE("report bundles the full pipeline") {
    std::string path = write_temp("chsh.json", kChsh);
    Run r = cli({"report", path});
    CHECK(r.status == 0);
    CHECK(r.j["schema"] == 1);
    CHECK(r.j["classical"]["beta_c"] == 1);
    CHECK(r.j["classical"]["p_cl"]["fraction"] == "3/4");
    CHECK(r.j["quantum"]["p_q_bar"].get<double>() == doctest::Approx(0.8535533906).epsilon(1e-9));
    CHECK(r.j["bias_ratio"].get<double>() == doctest::Approx(1.4142135624).epsilon(1e-9));
    CHECK(r.j["certificates"]["maximality"]["verdict"] == "maximal");
    CHECK(r.j["h_opt_stats"]["is_tree"] == true);
}

TEST_CASE("exit codes") {
    CHECK(cli({"no-such-command"}).status == 1);
    CHECK(cli({"construct", "binary", "--rows", "3"}).status == 1);
    CHECK(cli({"analyze", "classical", "/no/such/file.json"}).status == 1);
    CHECK(cli({"analyze", "classical", "-"}, "{not json").status == 1);
    CHECK(cli({"--help"}).status == 0);

    Run game = cli({"construct", "binary", "--rows", "3", "--cols", "4"});
    Run starved = cli({"--naive-budget", "10", "analyze", "classical", "-", "--algorithm", "naive"},
                      game.out);
    CHECK(starved.status == 2);
}

TEST_CASE("output bytes are deterministic") {
    std::string path = write_temp("chsh.json", kChsh);
    Run a = cli({"report", path});
    Run b = cli({"report", path});
    // timings differ; compare everything else
    a.j.erase("timings_ms");
    b.j.erase("timings_ms");
    CHECK(a.j == b.j);

    Run w1 = cli({"--workers", "1", "analyze", "classical", path});
    Run w4 = cli({"--workers", "4", "analyze", "classical", path});
    CHECK(w1.out == w4.out);
}

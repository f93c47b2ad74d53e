// Drives the installed CLI binary end to end and checks the envelope
// contract: one JSON envelope per invocation, deterministic bytes, and exit
// codes 0 / 1 / 2 for ok / identity_fails / error.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

using json = nlohmann::json;

namespace {

struct RunResult {
    std::string out;
    int exit_code = -1;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(SIE_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

json envelope_of(const RunResult& r) { return json::parse(r.out); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("transform emits the expected envelope") {
    const RunResult r = run_cli("transform --kind sie --input 120,24,6,2,1,1");
    CHECK(r.exit_code == 0);
    const json env = envelope_of(r);
    CHECK(env["command"] == "transform");
    CHECK(env["status"] == "ok");
    CHECK(env["inputs"]["kind"] == "sie");
    const json expected = {"120/1", "96/1", "78/1", "64/1", "53/1", "44/1"};
    CHECK(env["result"]["sequence"] == expected);
}

TEST_CASE("binomial transform of the derangement numbers") {
    const json env = envelope_of(run_cli("transform --kind binomial --input 1,0,1,2,9,44"));
    const json expected = {"1/1", "1/1", "2/1", "6/1", "24/1", "120/1"};
    CHECK(env["result"]["sequence"] == expected);
}

TEST_CASE("inv-binomial on a singleton") {
    const json env = envelope_of(run_cli("transform --kind inv-binomial --input 1"));
    CHECK(env["result"]["sequence"] == json{"1/1"});
}

TEST_CASE("sequence input from a JSON file") {
    const std::string path = "cli_test_sequence.json";
    std::ofstream(path) << R"(["1","1","2","6","24","120"])";
    const json env = envelope_of(run_cli("transform --kind inv-binomial --file " + path));
    const json expected = {"1/1", "0/1", "1/1", "2/1", "9/1", "44/1"};
    CHECK(env["result"]["sequence"] == expected);
    std::remove(path.c_str());
}

TEST_CASE("rotated table with double extension reports an empty interval") {
    const json env = envelope_of(
        run_cli("table --top 1,1,2,6,24,120 --emit rotated --extend 1 --extend 1"));
    CHECK(env["status"] == "ok");
    const json rows = env["result"]["triangle"]["rows"];
    REQUIRE(rows.size() == 8);
    const json seventh = {"1/1", "0/1", "0/1", "1/1", "1/1", "8/1", "36/1"};
    const json eighth = {"1/1", "0/1", "0/1", "0/1", "1/1", "0/1", "8/1", "28/1"};
    CHECK(rows[6] == seventh);
    CHECK(rows[7] == eighth);
    CHECK(env["result"]["extension_interval"]["empty"] == true);
}

TEST_CASE("rotated table bottom row is the inverse binomial transform") {
    const json env = envelope_of(run_cli("table --top 1,1,2,6,24,120 --emit rotated"));
    const json bottom = env["result"]["triangle"]["rows"].back();
    const json expected = {"1/1", "0/1", "1/1", "2/1", "9/1", "44/1"};
    CHECK(bottom == expected);
}

TEST_CASE("single-entry difference table") {
    const json env = envelope_of(run_cli("table --top 1 --emit difference"));
    CHECK(env["result"]["triangle"]["rows"] == json::array({json::array({"1/1"})}));
}

TEST_CASE("exact urn values") {
    CHECK(envelope_of(run_cli("urn --urns 1:1 --n 2 --quantity bbar"))["result"]["value"] ==
          "1/3");
    CHECK(envelope_of(run_cli("urn --urns 1:1,1:1 --n 2 --quantity bbar"))["result"]["value"] ==
          "11/18");
    CHECK(envelope_of(run_cli("urn --r 3 --b 2 --n 1 --quantity abar"))["result"]["value"] ==
          "3/5");
}

TEST_CASE("simulation envelopes are byte-identical across runs") {
    const std::string args = "urn --urns 1:1 --n 2 --quantity abar --trials 100000 --seed 42";
    const RunResult first = run_cli(args);
    const RunResult second = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
    const json env = envelope_of(first);
    CHECK(env["result"]["exact"] == "1/3");
    CHECK(env["result"]["trials"] == 100000);
    const double z = env["result"]["z_score"].get<double>();
    CHECK(z < 4.0);
    CHECK(z > -4.0);
}

TEST_CASE("simulation requires a seed") {
    const RunResult r = run_cli("urn --urns 1:1 --n 2 --quantity abar --trials 1000");
    CHECK(r.exit_code == 2);
    CHECK(envelope_of(r)["status"] == "error");
}

TEST_CASE("ascent exact and simulated") {
    CHECK(envelope_of(run_cli("ascent --input 1,2"))["result"]["value"] == "1/6");
    CHECK(envelope_of(run_cli("ascent --input 1,3"))["result"]["value"] == "1/4");
    const json env =
        envelope_of(run_cli("ascent --input 1,2 --trials 100000 --seed 42 --workers 2"));
    CHECK(env["result"]["exact"] == "1/6");
    CHECK(env["result"]["workers"] == 2);
}

TEST_CASE("verify exit codes distinguish holds from fails") {
    const RunResult holds = run_cli("verify --identity chu-vandermonde --r 1 --b 1 --n 2");
    CHECK(holds.exit_code == 0);
    const json env = envelope_of(holds);
    CHECK(env["status"] == "identity_holds");
    CHECK(env["result"]["lhs"] == "1/3");
    CHECK(env["result"]["rhs"] == "1/3");

    // (1,1),(1,1) is not a symmetric pair, so the egf relation fails
    const RunResult fails =
        run_cli("verify --identity egf-pair --input \"1,1;1,1\" --kind symmetric --order 1");
    CHECK(fails.exit_code == 1);
    CHECK(envelope_of(fails)["status"] == "identity_fails");
}

TEST_CASE("verify f32 identities") {
    const json env =
        envelope_of(run_cli("verify --identity f32-trinomial --urns 1:1,1:1 --n 2"));
    CHECK(env["status"] == "identity_holds");
    CHECK(env["result"]["lhs"] == "11/18");
    CHECK(envelope_of(run_cli("verify --identity f32-single --urns 2:3,1:4 --n 1"))["status"] ==
          "identity_holds");
    CHECK(envelope_of(
              run_cli("verify --identity f32-gasper --urns 3/2:1/2,5/2:1/2 --n 3"))["status"] ==
          "identity_holds");
}

TEST_CASE("verify series identities") {
    CHECK(envelope_of(run_cli("verify --identity f11 --b 3/2 --r 5/2 --order 12"))["status"] ==
          "identity_holds");
    const json env = envelope_of(run_cli("verify --identity u-gf --n 1 --r 1 --order 10"));
    CHECK(env["status"] == "identity_holds");
    CHECK(env["result"]["lhs"][1] == "1/1");
    CHECK(env["result"]["lhs"][2] == "3/2");
    CHECK(env["result"]["lhs"][3] == "7/4");
}

TEST_CASE("u-numbers tables") {
    const json env = envelope_of(run_cli("u-numbers --r 1 --n 1 --m-max 3"));
    const json expected = {"0/1", "1/2", "3/4", "7/8"};
    CHECK(env["result"]["values"] == expected);
    const json env2 = envelope_of(run_cli("u-numbers --r 2 --n 1 --m-max 2"));
    const json expected2 = {"0/1", "1/3", "5/9"};
    CHECK(env2["result"]["values"] == expected2);
    const json env3 = envelope_of(run_cli("u-numbers --r 7/3 --n 0 --m-max 4"));
    for (const auto& v : env3["result"]["values"]) CHECK(v == "1/1");
}

TEST_CASE("errors produce an error envelope and exit code 2") {
    const RunResult bad_literal = run_cli("transform --kind sie --input not-a-number");
    CHECK(bad_literal.exit_code == 2);
    CHECK(envelope_of(bad_literal)["status"] == "error");

    const RunResult bad_urn = run_cli("urn --urns 0:1 --n 1 --quantity abar");
    CHECK(bad_urn.exit_code == 2);
    CHECK(envelope_of(bad_urn)["error"] == "invalid urn parameters");

    const RunResult bad_flag = run_cli("transform --kind nonsense --input 1,2");
    CHECK(bad_flag.exit_code == 2);
    CHECK(envelope_of(bad_flag)["status"] == "error");
}

TEST_CASE("csv and plain formats") {
    const RunResult csv = run_cli("urn --urns 1:1 --n 2 --quantity bbar --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.find("key,value\n") == 0);
    CHECK(csv.out.find("/result/value,1/3") != std::string::npos);

    const RunResult plain = run_cli("u-numbers --r 1 --n 1 --m-max 3 --format plain");
    CHECK(plain.out == "0, 1/2, 3/4, 7/8\n");
}

TEST_CASE("echoed inputs reproduce the result") {
    const json env = envelope_of(run_cli("urn --urns 1:1,2:3 --n 3 --quantity bbar"));
    std::string urns;
    for (const auto& u : env["inputs"]["urns"]) {
        if (!urns.empty()) urns += ",";
        urns += u["r"].get<std::string>() + ":" + u["b"].get<std::string>();
    }
    const std::string rebuilt = "urn --urns " + urns + " --n " +
                                std::to_string(env["inputs"]["n"].get<long>()) + " --quantity " +
                                env["inputs"]["quantity"].get<std::string>();
    CHECK(envelope_of(run_cli(rebuilt))["result"] == env["result"]);
}

}  // TEST_SUITE

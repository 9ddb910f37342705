#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(JACO_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<nlohmann::json> ndjson(const std::string& text) {
    std::vector<nlohmann::json> out;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t nl = text.find('\n', pos);
        if (nl == std::string::npos) nl = text.size();
        std::string line = text.substr(pos, nl - pos);
        if (!line.empty() && line[0] == '{') out.push_back(nlohmann::json::parse(line));
        pos = nl + 1;
    }
    return out;
}

}  // namespace

TEST_CASE("build formats") {
    RunResult el = run_cli("build 4 --format edgelist");
    CHECK(el.exit_code == 0);
    CHECK(el.out == "4\n1 2\n2 3\n3 4");

    RunResult dot = run_cli("build 4");
    CHECK(dot.exit_code == 0);
    CHECK(dot.out ==
          "graph {\n  v1;\n  v2;\n  v3;\n  v4;\n  v1 -- v2;\n  v2 -- v3;\n  v3 -- v4;\n}\n");

    RunResult dj = run_cli("build 5 --directed --format json");
    CHECK(dj.exit_code == 0);
    auto j = nlohmann::json::parse(dj.out);
    CHECK(j["n"] == 5);
    CHECK(j["arcs"] ==
          nlohmann::json::parse("[[1,2],[2,3],[3,4],[3,5],[4,5]]"));
    CHECK(j["prime_jaconian"] == 3);

    CHECK(run_cli("build 0").exit_code == 2);
    CHECK(run_cli("build 4 --format nope").exit_code == 2);
}

TEST_CASE("invariants prints the table then the report object") {
    RunResult t = run_cli("invariants 7 --with-bondage");
    CHECK(t.exit_code == 0);
    CHECK(t.out.find("J_7") != std::string::npos);
    CHECK(t.out.find("murtage") != std::string::npos);
    CHECK(t.out.find("compact {v2, v4}") != std::string::npos);

    size_t brace = t.out.find("\n{");
    REQUIRE(brace != std::string::npos);
    auto parsed = nlohmann::json::parse(t.out.substr(brace + 1));
    CHECK(parsed["gamma"]["value"] == 2);
    CHECK(parsed["murtage"]["value"] == 2);
    CHECK(parsed["murtage"]["source"] == "theorem");
    CHECK(parsed["prime_jaconian"] == 4);
    CHECK(parsed["bondage"]["value"] == 1);

    RunResult o = run_cli("invariants 9 --with-oracles");
    CHECK(o.exit_code == 0);

    CHECK(run_cli("invariants").exit_code == 2);
}

TEST_CASE("invariants from an edge list file") {
    std::string path = "cli_edges_tmp.txt";
    {
        std::ofstream f(path);
        f << "4\n1 2\n2 3\n3 4\n";
    }
    RunResult r = run_cli("invariants --edges " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("cli_edges_tmp.txt") != std::string::npos);
    size_t brace = r.out.find("\n{");
    REQUIRE(brace != std::string::npos);
    auto parsed = nlohmann::json::parse(r.out.substr(brace + 1));
    CHECK(parsed["gamma"]["value"] == 2);
    CHECK(parsed["alpha"]["source"] == "oracle");

    CHECK(run_cli("invariants 4 --edges " + path).exit_code == 2);
    CHECK(run_cli("invariants --edges no_such_file.txt").exit_code == 2);

    {
        std::ofstream f(path);
        f << "3\n1 9\n";
    }
    CHECK(run_cli("invariants --edges " + path).exit_code == 2);
    std::remove(path.c_str());
}

TEST_CASE("verify") {
    RunResult r = run_cli("verify --checks bondage --from 2 --to 12");
    CHECK(r.exit_code == 0);
    auto records = ndjson(r.out);
    CHECK(records.size() == 11);
    bool saw_disagreement = false;
    for (const auto& rec : records) {
        if (rec["graph"] == "J_4") {
            saw_disagreement = rec["verdict"] == "DISAGREE" &&
                               !rec["witness"].get<std::string>().empty();
        }
    }
    CHECK(saw_disagreement);

    CHECK(run_cli("verify --checks nope --from 1 --to 2").exit_code == 2);
    CHECK(run_cli("verify --from 3 --to 2").exit_code == 2);
    CHECK(run_cli("verify --to 2").exit_code == 2);
}

TEST_CASE("verify is byte deterministic") {
    std::string args = "verify --checks murtage,bondage --from 1 --to 12";
    CHECK(run_cli(args).out == run_cli(args).out);
}

TEST_CASE("export") {
    RunResult csv = run_cli("export --from 1 --to 5 --to-format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.rfind("n,alpha,beta,chi,gamma,murtage,bondage\n", 0) == 0);
    CHECK(csv.out.find("\n4,2,2,2,2,1,2\n") != std::string::npos);
    CHECK(csv.out.find("\n1,1,0,1,1,0,\n") != std::string::npos);

    RunResult js = run_cli("export --from 1 --to 3 --to-format json");
    CHECK(js.exit_code == 0);
    auto rows = nlohmann::json::parse(js.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0]["bondage"].is_null());
    CHECK(rows[1]["bondage"] == 1);

    std::string path = "cli_export_tmp.csv";
    RunResult to_file = run_cli("export --from 1 --to 5 --to-format csv --out " + path);
    CHECK(to_file.exit_code == 0);
    std::ifstream f(path);
    std::string body((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CHECK(body == csv.out);
    std::remove(path.c_str());

    CHECK(run_cli("export --from 1 --to 5").exit_code == 2);
    CHECK(run_cli("export --from 1 --to 5 --to-format xml").exit_code == 2);
}

TEST_CASE("paper table") {
    RunResult r = run_cli("paper-table");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("m(theorem)") != std::string::npos);
    // every table row agrees; the DISAGREEs live in the trailing records
    CHECK(r.out.find("  DISAGREE") == std::string::npos);
    CHECK(r.out.find("  AGREE") != std::string::npos);
    CHECK(!ndjson(r.out).empty());
    CHECK(run_cli("paper-table --from 5 --to 20").exit_code == 2);
}

TEST_CASE("usage errors") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

#include "gcp/pair_io.hpp"
#include "gcp/seeds.hpp"

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

const std::string kTool = GCPTOOL_PATH;

struct CmdResult {
    int exit_code = -1;
    std::string output;
};

CmdResult run_cmd(const std::string& cmd) {
    CmdResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) {
        result.output.append(buf, n);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

std::string table1_document() {
    gcp::PairEntry entry;
    entry.name = "len18";
    entry.a = {0, 0, 2, 0, 0, 2, 2, 2, 0, 0, 3, 0, 1, 0, 1, 0, 3, 0};
    entry.b = {0, 1, 0, 0, 1, 0, 2, 3, 2, 0, 2, 2, 1, 3, 3, 0, 2, 2};
    return gcp::emit_json_document(gcp::document_from_pairs(4, 18, {entry}));
}

} // namespace

TEST_CASE("verify exit codes and report lines") {
    const auto good = write_temp("gcp_cli_good.json", table1_document());
    auto r = run_cmd(kTool + " verify " + good.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("pair 'len18': GCP: yes, shifts checked: 17") != std::string::npos);

    gcp::PairEntry same;
    same.name = "flat";
    same.a = {0, 0, 0};
    same.b = {0, 0, 0};
    const auto bad =
        write_temp("gcp_cli_bad.json", gcp::emit_json_document(gcp::document_from_pairs(4, 3, {same})));
    r = run_cmd(kTool + " verify " + bad.string());
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("GCP: no, first failing shift: 1") != std::string::npos);
    CHECK(r.output.find("residual coeffs:") != std::string::npos);

    const auto truncated = write_temp("gcp_cli_trunc.json", "{\"q\": 4, \"length\": 2,");
    r = run_cmd(kTool + " verify " + truncated.string() + " 2>&1");
    CHECK(r.exit_code == 2);

    r = run_cmd(kTool + " verify /nonexistent/path.json 2>&1");
    CHECK(r.exit_code == 3);

    r = run_cmd("echo 'q=4 n=2' | " + kTool + " verify 2>&1"); // header but no pairs
    CHECK(r.exit_code == 2);

    std::filesystem::remove(good);
    std::filesystem::remove(bad);
    std::filesystem::remove(truncated);
}

TEST_CASE("construct emits the documented expansion") {
    auto r = run_cmd(kTool + " construct --seed len18 -m 1 -h 2");
    REQUIRE(r.exit_code == 0);
    const auto doc = gcp::parse_document(r.output);
    CHECK(doc.q == 8);
    CHECK(doc.length == 36);
    REQUIRE(doc.pairs.size() == 1);
    // Spot values at h=2 from the published rows: a_2 = 2h+1, b_10 = 3h,
    // b_18 = 2h+1.
    CHECK(doc.pairs[0].a[2] == 5);
    CHECK(doc.pairs[0].b[10] == 6);
    CHECK(doc.pairs[0].b[18] == 5);

    // Byte-identical output across runs.
    const auto again = run_cmd(kTool + " construct --seed len18 -m 1 -h 2");
    CHECK(again.exit_code == 0);
    CHECK(again.output == r.output);

    // JSON variant round-trips into the same pair.
    const auto js = run_cmd(kTool + " construct --seed len18 -m 1 -h 2 --json");
    CHECK(js.exit_code == 0);
    const auto jdoc = gcp::parse_document(js.output);
    CHECK(jdoc.pairs[0].a == doc.pairs[0].a);
    CHECK(jdoc.pairs[0].b == doc.pairs[0].b);

    // The documented 44-term example.
    const auto ex2 = run_cmd(kTool + " construct --seed len11 -m 2 -h 1 --theta 1 --theta-prime 1");
    REQUIRE(ex2.exit_code == 0);
    const auto doc2 = gcp::parse_document(ex2.output);
    CHECK(doc2.q == 4);
    CHECK(doc2.length == 44);
    CHECK(doc2.pairs[0].a[0] == 1);
    CHECK(doc2.pairs[0].b[33] == 3);

    r = run_cmd(kTool + " construct --seed nosuch -m 1 -h 1 2>&1");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("len18") != std::string::npos); // lists builtin names

    r = run_cmd(kTool + " construct --seed len18 -m 1 2>&1"); // -h is required
    CHECK(r.exit_code == 2);
}

TEST_CASE("construct pipes into verify for every builtin seed") {
    for (const auto& record : gcp::builtin_seeds()) {
        for (int m : {1, 2, 3}) {
            for (int h : {1, 2, 3, 4}) {
                const std::string cmd = kTool + " construct --seed " + record.name + " -m " +
                                        std::to_string(m) + " -h " + std::to_string(h) + " | " + kTool +
                                        " verify -";
                const auto r = run_cmd(cmd);
                CAPTURE(cmd);
                CHECK(r.exit_code == 0);
            }
        }
    }
}

TEST_CASE("search subcommand") {
    auto r = run_cmd(kTool + " search -M 2 -q 2 --normalize");
    REQUIRE(r.exit_code == 0);
    const auto doc = gcp::parse_document(r.output);
    CHECK(doc.pairs.size() == 2);

    r = run_cmd(kTool + " search -M 3 -q 2 --normalize --count-only");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "0\n");

    r = run_cmd(kTool + " search -M 2 -q 4 --count-only --full");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "64\n");

    r = run_cmd(kTool + " search -M 30 -q 4 --node-budget 100000 2>&1");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("search too large") != std::string::npos);

    // Worker count must not change the bytes.
    const auto one = run_cmd(kTool + " --jobs 1 search -M 3 -q 4");
    const auto eight = run_cmd(kTool + " --jobs 8 search -M 3 -q 4");
    CHECK(one.exit_code == 0);
    CHECK(one.output == eight.output);
}

TEST_CASE("admissible and reachable subcommands") {
    auto r = run_cmd(kTool + " admissible 18");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("(a=1,b=2,c=0,d=0,e=0,u=0)") != std::string::npos);

    r = run_cmd(kTool + " admissible 7");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("not covered") != std::string::npos);
    CHECK(r.output.find("does not assert non-existence") != std::string::npos);

    r = run_cmd(kTool + " admissible 1 2>&1");
    CHECK(r.exit_code == 2);

    r = run_cmd(kTool + " reachable 50");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\n36\n") != std::string::npos);
    CHECK(r.output.find("\n44\n") != std::string::npos);
}

TEST_CASE("seeds subcommands") {
    auto r = run_cmd(kTool + " seeds list");
    CHECK(r.exit_code == 0);
    for (const char* name : {"len2", "len3", "len5", "len10", "len11", "len13", "len18"}) {
        CHECK(r.output.find(name) != std::string::npos);
    }

    r = run_cmd(kTool + " seeds show len18");
    REQUIRE(r.exit_code == 0);
    const auto doc = gcp::parse_document(r.output);
    CHECK(doc.q == 4);
    CHECK(doc.length == 18);
    CHECK(doc.pairs[0].a[2] == 2);

    r = run_cmd(kTool + " seeds show nosuch 2>&1");
    CHECK(r.exit_code == 2);

    SUBCASE("seed directory via environment variable") {
        namespace fs = std::filesystem;
        const fs::path dir = fs::temp_directory_path() / "gcp_cli_seed_dir";
        fs::create_directories(dir);
        gcp::PairEntry e;
        e.name = "user2";
        e.a = {0, 0};
        e.b = {0, 2};
        std::ofstream(dir / "user2.json") << gcp::emit_json_document(gcp::document_from_pairs(4, 2, {e}));

        const auto listed = run_cmd("GCP_SEED_DIR=" + dir.string() + " " + kTool + " seeds list");
        CHECK(listed.exit_code == 0);
        CHECK(listed.output.find("user2") != std::string::npos);

        const auto piped = run_cmd("GCP_SEED_DIR=" + dir.string() + " " + kTool +
                                   " construct --seed user2 -m 1 -h 1 | " + kTool + " verify -");
        CHECK(piped.exit_code == 0);
        fs::remove_all(dir);
    }
}

TEST_CASE("identity-check subcommand") {
    auto r = run_cmd(kTool + " identity-check --trials 5 --rng-seed 99");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("5/5 trials passed") != std::string::npos);

    r = run_cmd(kTool + " identity-check --trials 0");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("0 trials") != std::string::npos);

    r = run_cmd(kTool + " identity-check --trials 3 --inject-fault");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("FAILED") != std::string::npos);
}

TEST_CASE("output redirection and json piping") {
    namespace fs = std::filesystem;
    const auto out_path = fs::temp_directory_path() / "gcp_cli_out.txt";
    auto r = run_cmd(kTool + " construct --seed len3 -m 1 -h 1 -o " + out_path.string());
    CHECK(r.exit_code == 0);
    std::ifstream in(out_path);
    std::stringstream buf;
    buf << in.rdbuf();
    const auto doc = gcp::parse_document(buf.str());
    CHECK(doc.length == 6);
    fs::remove(out_path);

    r = run_cmd(kTool + " construct --seed len3 -m 1 -h 1 -o /nonexistent-dir/x.txt 2>&1");
    CHECK(r.exit_code == 3);

    r = run_cmd(kTool + " construct --seed len5 -m 2 -h 2 --json | " + kTool + " verify -");
    CHECK(r.exit_code == 0);

    r = run_cmd(kTool + " search -M 2 -q 4 --json | " + kTool + " verify -");
    CHECK(r.exit_code == 0);
}

TEST_CASE("construct accepts a seed document file") {
    const auto path = write_temp("gcp_cli_seedfile.json", table1_document());
    const auto r = run_cmd(kTool + " construct --seed " + path.string() + " -m 1 -h 1 | " + kTool +
                           " verify -");
    CHECK(r.exit_code == 0);
    std::filesystem::remove(path);
}

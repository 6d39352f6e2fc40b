#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pointed/cli.hpp"

using pointed::cli::Json;

namespace {

struct Run {
    int code;
    std::string out;
    Json json() const { return Json::parse(out); }
};

std::string binary() {
    const char* p = std::getenv("POINTED_CLI");
    return p ? p : "";
}

Run run(const std::string& args) {
    std::string cmd = "'" + binary() + "' " + args + " 2>/dev/null";
    FILE* f = popen(cmd.c_str(), "r");
    if (!f) return {-1, ""};
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, f)) out.append(buf, n);
    int status = pclose(f);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

// In-process entry point, for when the binary is not available.
Run run_inproc(std::vector<std::string> args) {
    args.insert(args.begin(), "pointed");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream os;
    int code = pointed::cli::run(static_cast<int>(argv.size()), argv.data(), os);
    return {code, os.str()};
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        if (binary().empty()) GTEST_SKIP() << "POINTED_CLI not set";
    }
};

}  // namespace

TEST_F(Cli, BuildAlgebra) {
    auto r = run("build-algebra --group dihedral:12 --module ik:1,6");
    ASSERT_EQ(r.code, 0) << r.out;
    auto j = r.json();
    EXPECT_EQ(j["algebra"]["dim"], 96);
    EXPECT_EQ(j["algebra"]["hilbert_series"], Json::array({1, 2, 1}));
    auto s = run("build-algebra --rack o2:-1 --n 3").json();
    EXPECT_EQ(s["algebra"]["dim"], 72);
    EXPECT_EQ(s["algebra"]["hilbert_series"], Json::array({1, 3, 4, 3, 1}));
    auto c = run("build-algebra --rack o2:-1 --n 4 --cap 2").json();
    EXPECT_EQ(c["algebra"]["cap"], 2);
    EXPECT_EQ(c["algebra"]["finite"], false);
}

TEST_F(Cli, TablesAreDeterministic) {
    auto dir = std::filesystem::temp_directory_path() / ("pointed_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    auto a = dir / "a.json", b = dir / "b.json";
    ASSERT_EQ(run("build-algebra --rack o2:-1 --n 3 --output '" + a.string() + "'").code, 0);
    ASSERT_EQ(run("build-algebra --rack o2:-1 --n 3 --output '" + b.string() + "'").code, 0);
    auto slurp = [](const std::filesystem::path& p) {
        std::ifstream in(p);
        return std::string(std::istreambuf_iterator<char>(in), {});
    };
    std::string x = slurp(a), y = slurp(b);
    EXPECT_FALSE(x.empty());
    EXPECT_EQ(x, y);
    auto j = Json::parse(x);
    EXPECT_EQ(j["basis"].size(), 72u);
    EXPECT_TRUE(j.contains("product"));
    EXPECT_TRUE(j.contains("coproduct"));
    std::filesystem::remove_all(dir);
    EXPECT_EQ(run("build-algebra --group dihedral:12 --module ell:3").out,
              run("build-algebra --group dihedral:12 --module ell:3").out);
}

TEST_F(Cli, Checks) {
    auto ok = run("check eq12 --rack o2:-1 --n 4 --beta 1,1,1");
    EXPECT_EQ(ok.code, 0);
    EXPECT_EQ(ok.json()["overall"], true);
    auto bad = run("check eq12 --rack o2:-1 --n 4 --beta 1,2,1");
    EXPECT_EQ(bad.code, 1);
    auto j = bad.json();
    EXPECT_EQ(j["overall"], false);
    bool witnessed = false;
    for (const auto& r : j["results"])
        if (!r["pass"].get<bool>()) witnessed |= r.contains("witness");
    EXPECT_TRUE(witnessed);

    EXPECT_EQ(run("check hopf-axioms --group dihedral:12 --module ik:1,6").code, 0);
    EXPECT_EQ(run("check hochschild --group dihedral:12 --I 1,6 --alpha 1,0").code, 0);
    EXPECT_EQ(run("check hochschild --group dihedral:12 --I 1,6 --alpha 1,0 --break-invariance").code, 1);
    EXPECT_EQ(run("check mult-cocycle --group dihedral:12 --I 1,6 --random --seed 4").code, 0);
    EXPECT_EQ(run("check commuting --rack o2:-1 --n 3 --beta 1,2").code, 1);
    // on the chi module the off-diagonal invariants carry signs, so only the diagonal class value is free
    EXPECT_EQ(run("check invariance --rack o2:chi --n 4 --beta 1,2,3").code, 1);
    EXPECT_EQ(run("check invariance --rack o2:chi --n 4 --beta 1,0,0").code, 0);
}

TEST_F(Cli, Theorems) {
    auto s3 = run("verify-theorem S3 --lambda 1/2");
    EXPECT_EQ(s3.code, 0);
    EXPECT_EQ(s3.json()["parameters"]["Lambda"], "1/3");
    EXPECT_EQ(run("verify-theorem AI --I 1,6 --alpha 1,2").code, 0);
    EXPECT_EQ(run("verify-theorem chi-scan --n 4 --range 1").code, 0);
}

TEST_F(Cli, Errors) {
    auto r = run("build-algebra --group dihedral:12 --module ik:1,5");
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(r.json()["error"]["code"], "not_in_J");
    EXPECT_EQ(run("build-algebra --rack o2:-1 --n 4").code, 3);
    EXPECT_EQ(run("nonsense").code, 2);
    EXPECT_EQ(run("build-algebra --group cyclic:3 --module ell:1").code, 2);
    EXPECT_EQ(run("verify-theorem Q5").code, 2);
}

TEST(CliInProcess, MatchesBinaryContract) {
    auto r = run_inproc({"build-algebra", "--group", "dihedral:12", "--module", "ell:1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.json()["algebra"]["dim"], 96);
    auto e = run_inproc({"check", "eq12", "--rack", "o2:-1", "--n", "3", "--beta", "1,2"});
    EXPECT_EQ(e.code, 1);
    auto u = run_inproc({});
    EXPECT_EQ(u.code, 2);
    EXPECT_TRUE(u.json().contains("error"));
}

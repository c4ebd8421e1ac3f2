#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(PMS_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 512> buf;
    while (fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("dist") {
    CHECK(run("dist l.B r.T").out == "1\n");
    CHECK(run("dist l.T r.B").out == "0\n");
    CHECK(run("dist a.T a.L").out == "1/2^1\n");
    CHECK(run("dist ll.B .T").out == "1\n");  // bare .T takes the partner's alphabet
    CHECK(run("dist .T .T").out == "0\n");
    CHECK(run("dist l.B a.T").exit_code == 2);
    CHECK(run("dist l.B").exit_code == 2);
}

TEST_CASE("fold") {
    CHECK(run("fold llrr.T").out == "1/2^2\n");
    CHECK(run("fold .B").out == "0\n");
    CHECK(run("fold .T").out == "1\n");  // bi-pointed reading under fold
    CHECK(run("fold a.T").exit_code == 2);
}

TEST_CASE("equiv") {
    auto r = run("equiv lr.T rl.B");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "true\n");
    CHECK(run("equiv l.B r.T").out == "false\n");
}

TEST_CASE("approx") {
    auto r = run("approx interval-e 1/2^1 --depth 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "word lrrr.T\nfold 1/2^1\nerror<=1/2^4\n");

    auto t = run("approx triangle-e apex --depth 3");
    CHECK(t.exit_code == 0);
    CHECK(t.out == "word aaa.T\ncoords (1/2^1, 1*sqrt(3)/2)\nerror<=1/2^3\n");

    CHECK(run("approx interval-e 1/2^1 --depth 0").exit_code == 2);
    CHECK(run("approx no-such 0 --depth 3").exit_code == 2);
    CHECK(run("approx interval-e 3/2^1 --depth 3").exit_code == 2);
}

TEST_CASE("eval") {
    CHECK(run("eval bip-alg rrr.T").out == "1\n");
    CHECK(run("eval bip-alg rrr.B").out == "0\n");
    CHECK(run("eval trip-alg aaa.L").out == "L\n");
    CHECK(run("eval trip-alg .T").out == "T\n");
    CHECK(run("eval bip-alg abc.T").exit_code == 2);
}

TEST_CASE("verify") {
    auto r = run("verify metric-axioms 3 --trials 50");
    CHECK(r.exit_code == 0);
    std::istringstream in(r.out);
    std::string line, last;
    while (std::getline(in, line)) {
        if (!line.empty()) last = line;
        if (line.rfind("OK", 0) != 0)
            CHECK(line.rfind("PASS ", 0) == 0);
    }
    CHECK(last.rfind("OK ", 0) == 0);

    CHECK(run("verify no-such-suite").exit_code == 2);
}

TEST_CASE("table") {
    auto r = run("table lipschitz --nmax 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("n,ratio_num,ratio_exp\n", 0) == 0);

    std::string path = "cli_values_tmp.csv";
    auto w = run("table values --nmax 2 --samples 2 --csv " + path);
    CHECK(w.exit_code == 0);
    std::ifstream file(path);
    REQUIRE(file.good());
    std::string header;
    std::getline(file, header);
    CHECK(header == "n,x_num,x_exp,f_num,f_exp");
    file.close();
    std::remove(path.c_str());

    CHECK(run("table no-such").exit_code == 2);
}

TEST_CASE("usage errors") {
    CHECK(run("").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
}

#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#ifndef UNIVOQUE_CLI
#error "UNIVOQUE_CLI must point at the command-line binary"
#endif

namespace {

struct RunResult {
    std::string out;
    int code = -1;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(UNIVOQUE_CLI) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("constants prints the four values") {
    RunResult r = run("constants --M 1");
    CHECK(r.code == 0);
    CHECK(r.out.find("q_G = 1.618033988749894848") != std::string::npos);
    CHECK(r.out.find("1.7872") != std::string::npos);
    CHECK(r.out.find("x_KL = 1.27027") != std::string::npos);
}

TEST_CASE("expansions and alpha") {
    // a base given as a finite decimal sits just above the golden ratio, so
    // the second digit resolves upward and the tail collapses to zeros
    RunResult r = run("expand --M 1 --x 1 --q 1.61803398875 --n 6 --kind quasi");
    CHECK(r.code == 0);
    CHECK(r.out == "110000\n");
    CHECK(run("expand --M 1 --x 0.5 --q 2 --n 4 --kind quasi").out == "0111\n");
    CHECK(run("expand --M 1 --x 1 --q 2 --n 4 --kind greedy").out == "1111\n");
    CHECK(run("alpha --M 1 --q 2 --n 5").out == "11111\n");
    CHECK(run("alpha --M 1 --q 1.8 --n 6").out == "110101\n");
}

TEST_CASE("base inversion") {
    RunResult r = run("invert --M 1 --d '(10)' --x 1");
    CHECK(r.code == 0);
    CHECK(r.out.substr(0, 12) == "1.6180339887");
}

TEST_CASE("dimension brackets") {
    RunResult r = run("dim-uq --M 1 --q 2 --N 16 --n 48");
    CHECK(r.code == 0);
    double lo = 0, hi = 0;
    CHECK(std::sscanf(r.out.c_str(), "%lf %lf", &lo, &hi) == 2);
    CHECK(lo >= 0.99);
    CHECK(hi == doctest::Approx(1.0));
    RunResult x = run("dim-ux --M 1 --x 1.4 --N 16 --n 48");
    CHECK(std::sscanf(x.out.c_str(), "%lf %lf", &lo, &hi) == 2);
    CHECK(hi <= 0.05);
}

TEST_CASE("staircase output is deterministic CSV") {
    std::string args = "staircase --kind psi --M 1 --from 1.6 --to 2.0 --steps 7 --N 12 --n 36";
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("abscissa,lower,upper\n", 0) == 0);
    int lines = 0;
    for (char ch : a.out) lines += ch == '\n';
    CHECK(lines == 8);
}

TEST_CASE("classification with a singleton witness") {
    RunResult r = run("classify --M 1 --x 2 --format json");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["regime"] == "SINGLETON");
    CHECK(j["schema_version"] == "1");
    REQUIRE(j["witnesses"].size() == 1);
    CHECK(j["witnesses"][0]["base"] == "1.5");
    CHECK(j["witnesses"][0]["expansion"] == "(1)");
}

TEST_CASE("member witnesses as json") {
    RunResult r = run("members --M 1 --x 1.4 --family golden --k 6");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema_version"] == "1");
    CHECK(j["witnesses"].size() >= 3);
    RunResult d = run("members --M 1 --x 0.5 --family dense --k 2 --sample 4 --seed 3");
    auto jd = nlohmann::json::parse(d.out);
    CHECK(jd["witnesses"].size() == 4);
    // deterministic under a fixed seed
    RunResult d2 = run("members --M 1 --x 0.5 --family dense --k 2 --sample 4 --seed 3");
    CHECK(d.out == d2.out);
}

TEST_CASE("base scan emits verdict rows") {
    RunResult r = run("scan-ux --M 1 --x 2 --steps 16 --depth 30");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("q_lo,q_hi,verdict\n", 0) == 0);
    int candidates = 0, rows = 0;
    std::size_t pos = r.out.find('\n') + 1;
    while (pos < r.out.size()) {
        std::size_t next = r.out.find('\n', pos);
        if (next == std::string::npos) break;
        ++rows;
        if (r.out.substr(pos, next - pos).find("CANDIDATE") != std::string::npos) ++candidates;
        pos = next + 1;
    }
    CHECK(rows == 16);
    CHECK(candidates == 1);
}

TEST_CASE("isolated certificates and scope errors") {
    RunResult r = run("isolated --M 1 --x 1.5");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["found"] == true);
    CHECK(j["family"] == "C");
    CHECK(j["expansion"] == "1111(10)");
    RunResult scope = run("isolated --M 2 --x 1.5");
    CHECK(scope.code == 1);
    RunResult low = run("isolated --M 1 --x 0.5");
    CHECK(low.code == 1);
}

TEST_CASE("interval cover CSV") {
    RunResult r = run("iso-cover --n-max 2 --k-max 2");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("lo,hi,n,k,family\n", 0) == 0);
    int lines = 0;
    for (char ch : r.out) lines += ch == '\n';
    CHECK(lines == 1 + 2 * 2 + 1 * 2);
}

TEST_CASE("verify-paper runs a named suite") {
    RunResult r = run("verify-paper --suite thue-morse");
    CHECK(r.code == 0);
    CHECK(r.out.find("[ok]   tm.doubling-identity") != std::string::npos);
}

TEST_CASE("usage errors exit with 2, computation errors with 1") {
    CHECK(run("no-such-command").code == 2);
    CHECK(run("expand --M 1").code == 2);              // missing required flags
    CHECK(run("invert --M 1 --d '0' --x 1").code == 1); // 0^inf has no base
    CHECK(run("staircase --kind psi --M 1 --from 2.0 --to 1.5 --steps 5").code == 2);
}

TEST_SUITE_END();

#include "doctest.h"

#include "supertriv/serialize.hpp"
#include "supertriv/structure.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

using namespace supertriv;

namespace {

// The test driver exports SUPERTRIV_CLI with the binary location.
std::string cli_path() {
    const char* p = std::getenv("SUPERTRIV_CLI");
    return p ? p : "./supertriv";
}

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string out_path = "cli_test_stdout.txt";
    const int rc = std::system((cli_path() + " " + args + " > " + out_path + " 2>&1").c_str());
    std::ifstream in(out_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::remove(out_path.c_str());
#ifdef _WIN32
    return {rc, buf.str()};
#else
    return {WEXITSTATUS(rc), buf.str()};
#endif
}

struct TempModule {
    std::string path;
    TempModule(const std::string& p, const Supermodule& m) : path(p) {
        write_module(path, m);
    }
    ~TempModule() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("cli validate: accept and reject with the documented exit codes") {
    const TempModule good("cli_good.json", lambda_regular(exterior(2)));
    CHECK(run("validate " + good.path).code == 0);

    // e1^2 = 1 != 0: relation failure, exit 2.
    Supermodule bad = trivial_module(exterior(1), 0);
    bad.space = GradedSpace{1, 1};
    Matrix a(2, 2);
    a.at(1, 0) = 1;
    a.at(0, 1) = 1;
    bad.actions = {a};
    const TempModule badf("cli_bad.json", bad);
    const RunResult r = run("validate " + badf.path);
    CHECK(r.code == 2);
    CHECK(r.out.find("RelationFailed") != std::string::npos);

    CHECK(run("validate no_such_file.json").code == 2);
    CHECK(run("nonsense-subcommand").code == 1);
    CHECK(run("validate").code == 1); // missing argument
}

TEST_CASE("cli info prints the structural summary") {
    const TempModule m("cli_info.json", syzygy(trivial_module(exterior(2), 0), 1));
    const RunResult r = run("info " + m.path);
    CHECK(r.code == 0);
    CHECK(r.out.find("dim: 3 (1|2)") != std::string::npos);
    CHECK(r.out.find("rk: 2") != std::string::npos);
    CHECK(r.out.find("projective: no") != std::string::npos);
}

TEST_CASE("cli op and syzygy write loadable, correct modules") {
    const auto ext = exterior(2);
    const TempModule k0("cli_k0.json", trivial_module(ext, 0));
    const TempModule k1("cli_k1.json", trivial_module(ext, 1));
    CHECK(run("op tensor " + k0.path + " " + k1.path + " -o cli_t.json").code == 0);
    const Supermodule t = read_module("cli_t.json");
    CHECK(t.space == GradedSpace{0, 1});
    std::remove("cli_t.json");

    CHECK(run("syzygy " + k0.path + " -n 2 -o cli_s.json").code == 0);
    CHECK(read_module("cli_s.json").dim() == 5);
    std::remove("cli_s.json");

    const TempModule reg("cli_reg.json", lambda_regular(ext));
    CHECK(run("op restrict " + reg.path + " --vs 1,1 -o cli_r.json").code == 0);
    CHECK(read_module("cli_r.json").algebra.same_presentation(exterior(1)));
    std::remove("cli_r.json");
}

TEST_CASE("cli strip prints multiplicities") {
    const auto ext = exterior(2);
    const TempModule m("cli_strip.json",
                       direct_sum(trivial_module(ext, 1), lambda_regular(ext)));
    const RunResult r = run("strip " + m.path);
    CHECK(r.code == 0);
    CHECK(r.out.find("free multiplicity: 1 even, 0 odd") != std::string::npos);
    CHECK(r.out.find("core dim: 1 (0|1)") != std::string::npos);
}

TEST_CASE("cli classify round trip") {
    const auto ext = exterior(2);
    const TempModule m("cli_cls.json", syzygy(trivial_module(ext, 0), 1));
    const RunResult r = run("classify " + m.path);
    CHECK(r.code == 0);
    CHECK(r.out.find("(1, ev)") != std::string::npos);

    const TempModule p("cli_proj.json", lambda_regular(ext));
    const RunResult r2 = run("classify " + p.path);
    CHECK(r2.code == 0);
    CHECK(r2.out.find("NOT_ENDOTRIVIAL") != std::string::npos);
}

TEST_CASE("cli verify: exit status reflects the suites; json output parses") {
    const RunResult r = run("verify --rank 2 --range 2 --suite rank");
    CHECK(r.code == 0);
    CHECK(r.out.find("result: PASS") != std::string::npos);
    const RunResult rj = run("verify --rank 1 --range 2 --suite rank --json");
    CHECK(rj.code == 0);
    CHECK(rj.out.find("\"all_pass\": true") != std::string::npos);
    CHECK(run("verify --suite no-such-suite").code == 1);
}

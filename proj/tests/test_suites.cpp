#include "doctest.h"
#include "qkmv/suites.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qkmv;

namespace {

int run_cli(const std::string& args) {
    const std::string cmd = std::string(QKMV_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("names round-trip") {
    for (Suite s : {Suite::Relations, Suite::Hopf, Suite::Limits, Suite::Cybe, Suite::Automorphism, Suite::All})
        CHECK(suite_from_name(suite_name(s)) == s);
    for (Mode m : {Mode::Substitution, Mode::Evaluation, Mode::XiSymbolic}) CHECK(mode_from_name(mode_name(m)) == m);
    CHECK_THROWS_AS(suite_from_name("everything"), UsageError);
    CHECK_THROWS_AS(format_from_name("xml"), UsageError);
}

TEST_CASE("request validation") {
    SuiteRequest r;
    r.rank = 3;
    CHECK_THROWS_AS(validate(r), UsageError);
    r.series = Series::D;
    CHECK_THROWS_AS(validate(r), UsageError);  // D needs rank >= 4
    r.rank = 4;
    CHECK_NOTHROW(validate(r));
    r.mode = Mode::Evaluation;
    CHECK_THROWS_AS(validate(r), UsageError);
    r.series = Series::A;
    r.rank = 3;
    CHECK_NOTHROW(validate(r));
    r.mode = Mode::XiSymbolic;
    r.family = Family::Uqg;
    CHECK_THROWS_AS(validate(r), UsageError);
}

TEST_CASE("default grid") {
    SuiteRequest r;
    std::string labels;
    for (const auto& rs : request_grid(r)) labels += rs.label() + " ";
    CHECK(labels == "A3 A4 A5 B3 B4 C2 C3 D4 D5 ");
    r.mode = Mode::Evaluation;
    CHECK(request_grid(r).size() == 3);
}

TEST_CASE("relations suite reproduces the Drinfeldian relations") {
    SuiteRequest r;
    r.suite = Suite::Relations;
    r.family = Family::DrinfeldianExplicit;
    r.series = Series::B;
    r.rank = 3;
    SuiteReport rep = run_suite(r);
    CHECK(rep.count(Status::Fail) == 0);
    CHECK(rep.count(Status::Pass) > 20);
    CHECK(rep.exit_code() == 0);
    CHECK(std::is_sorted(rep.checks.begin(), rep.checks.end(),
                         [](const auto& a, const auto& b) { return a.id < b.id; }));
}

TEST_CASE("recorded outcomes are reported, not failed") {
    SuiteRequest r;
    r.suite = Suite::Relations;
    r.family = Family::YangianExplicit;
    r.series = Series::D;
    r.rank = 4;
    SuiteReport rep = run_suite(r);
    CHECK(rep.count(Status::Fail) == 0);
    int outcome = 0;
    for (const auto& c : rep.checks)
        if (c.status == Status::Reported && c.id.find("verbatim") == std::string::npos) ++outcome;
    CHECK(outcome == 2);
}

TEST_CASE("limits and cybe suites") {
    SuiteRequest r;
    r.suite = Suite::Limits;
    r.series = Series::A;
    r.rank = 3;
    SuiteReport lim = run_suite(r);
    CHECK(lim.count(Status::Fail) == 0);
    CHECK(lim.checks.size() > 40);

    SuiteRequest c;
    c.suite = Suite::Cybe;
    SuiteReport cy = run_suite(c);
    CHECK(cy.checks.size() == 10);
    CHECK(cy.count(Status::Pass) == 10);
}

TEST_CASE("reports are deterministic without timing") {
    SuiteRequest r;
    r.suite = Suite::Hopf;
    r.series = Series::C;
    r.rank = 2;
    r.timing = false;
    const std::string a = render_report(run_suite(r), Format::Json);
    const std::string b = render_report(run_suite(r), Format::Json);
    CHECK(a == b);
    CHECK(a.find("\"elapsed_ms\": null") != std::string::npos);
    CHECK(a.find("\"fail\": 0") != std::string::npos);
    r.timing = true;
    CHECK(render_report(run_suite(r), Format::Text).find("elapsed_ms") != std::string::npos);
}

TEST_CASE("command line exit codes") {
    const auto dir = std::filesystem::temp_directory_path() / "qkmv_cli_test";
    std::filesystem::create_directories(dir);
    const auto ok = dir / "cybe.json", bad = dir / "bad.json";
    std::filesystem::remove(ok);
    std::filesystem::remove(bad);

    CHECK(run_cli("cybe --no-timing --out " + ok.string()) == 0);
    CHECK(slurp(ok).find("\"pass\": 10") != std::string::npos);
    const std::string first = slurp(ok);
    CHECK(run_cli("cybe --no-timing --out " + ok.string()) == 0);
    CHECK(slurp(ok) == first);

    CHECK(run_cli("relations --series C --rank 2 --mode evaluation --out " + bad.string()) == 2);
    CHECK(run_cli("relations --series E --out " + bad.string()) == 2);
    CHECK(run_cli("nonsense --out " + bad.string()) == 2);
    CHECK(run_cli("limits --rank 3 --out " + bad.string()) == 2);
    CHECK(!std::filesystem::exists(bad));
    CHECK(run_cli("cybe --out /nonexistent-dir/x.json") == 2);
    std::filesystem::remove_all(dir);
}

TEST_CASE("one failing check sets exit code 1") {
    SuiteReport rep;
    rep.checks.push_back({"a", "", Status::Pass, 0, ""});
    rep.checks.push_back({"b", "", Status::Reported, 1, ""});
    CHECK(rep.exit_code() == 0);
    rep.checks.push_back({"c", "", Status::Fail, 1, ""});
    CHECK(rep.exit_code() == 1);
}

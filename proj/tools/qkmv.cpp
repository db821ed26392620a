#include "qkmv/suites.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace qkmv;

int main(int argc, char** argv) {
    CLI::App app{"Exact checks for quantum current algebras, Drinfeldians and Yangians"};
    std::string suite, family, series, mode = "substitution", format = "json", out;
    int rank = 0;
    bool no_timing = false;
    app.add_option("suite", suite, "relations | hopf | limits | cybe | automorphism | all")->required();
    app.add_option("--family", family, "catalog family filter");
    app.add_option("--series", series, "A | B | C | D");
    app.add_option("--rank", rank, "rank (gl_l index for A); needs --series");
    app.add_option("--mode", mode, "substitution | evaluation | xi-symbolic");
    app.add_option("--format", format, "json | text");
    app.add_option("--out", out, "report file (default: stdout)");
    app.add_flag("--no-timing", no_timing, "omit the elapsed time for byte-stable output");
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    SuiteRequest req;
    try {
        req.suite = suite_from_name(suite);
        req.mode = mode_from_name(mode);
        req.format = format_from_name(format);
        if (!family.empty()) {
            try {
                req.family = family_from_name(family);
            } catch (const std::invalid_argument&) {
                throw UsageError("unknown family: " + family);
            }
        }
        if (!series.empty()) {
            if (series.size() != 1) throw UsageError("unknown series: " + series);
            try {
                req.series = series_from_letter(series[0]);
            } catch (const std::invalid_argument&) {
                throw UsageError("unknown series: " + series);
            }
        }
        if (app.count("--rank")) req.rank = rank;
        if (!out.empty()) req.out = out;
        req.timing = !no_timing;
        validate(req);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    SuiteReport report = run_suite(req);
    try {
        emit_report(report, req.format, req.out.value_or(""));
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 2;
    }
    if (req.out) {
        std::cerr << suite_name(req.suite) << ": " << report.count(Status::Pass) << " pass, "
                  << report.count(Status::Fail) << " fail, " << report.count(Status::Reported) << " reported\n";
    }
    return report.exit_code();
}

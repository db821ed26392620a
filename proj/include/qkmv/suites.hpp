#pragma once

#include "qkmv/limits.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qkmv {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Suite { Relations, Hopf, Limits, Cybe, Automorphism, All };
enum class Mode { Substitution, Evaluation, XiSymbolic };
enum class Format { Json, Text };

std::string suite_name(Suite s);
Suite suite_from_name(const std::string& name);
std::string mode_name(Mode m);
Mode mode_from_name(const std::string& name);
std::string format_name(Format f);
Format format_from_name(const std::string& name);

struct SuiteRequest {
    Suite suite = Suite::All;
    std::optional<Family> family;
    std::optional<Series> series;
    std::optional<int> rank;
    Mode mode = Mode::Substitution;
    Format format = Format::Json;
    std::optional<std::string> out;
    bool timing = true;  // false drops the elapsed time, making output byte-stable
};

// Throws UsageError for combinations that cannot run.
void validate(const SuiteRequest& req);

// Series/rank grid selected by the request (the default grid without filters).
std::vector<RootSystem> request_grid(const SuiteRequest& req);

enum class Status { Pass, Fail, Reported };
std::string status_name(Status s);

struct CheckRecord {
    std::string id;
    std::string anchor;
    Status status = Status::Fail;
    int defect = 0;
    std::string note;
};

struct SuiteReport {
    SuiteRequest request;
    std::vector<CheckRecord> checks;  // sorted by id
    long elapsed_ms = 0;

    int count(Status s) const;
    int exit_code() const { return count(Status::Fail) > 0 ? 1 : 0; }
};

// Validates, then runs every selected check in a worker pool (QKMV_WORKERS).
SuiteReport run_suite(const SuiteRequest& req);

// Check records and totals; the elapsed time sits in a separate envelope field.
std::string render_report(const SuiteReport& rep, Format format);
// Writes to path, or to stdout when path is empty. Throws IoError.
void emit_report(const SuiteReport& rep, Format format, const std::string& path);

}  // namespace qkmv

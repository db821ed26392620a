#include "qkmv/suites.hpp"

#include "qkmv/cybe.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

namespace qkmv {

namespace {

constexpr int kMaxRank = 10;

template <class E>
std::string lookup_name(E value, const std::vector<std::pair<E, const char*>>& table) {
    for (const auto& [e, n] : table)
        if (e == value) return n;
    return "?";
}

template <class E>
E lookup_value(const std::string& name, const std::vector<std::pair<E, const char*>>& table, const char* what) {
    for (const auto& [e, n] : table)
        if (name == n) return e;
    throw UsageError(std::string("unknown ") + what + ": " + name);
}

const std::vector<std::pair<Suite, const char*>> kSuites{{Suite::Relations, "relations"}, {Suite::Hopf, "hopf"},
                                                         {Suite::Limits, "limits"},       {Suite::Cybe, "cybe"},
                                                         {Suite::Automorphism, "automorphism"}, {Suite::All, "all"}};
const std::vector<std::pair<Mode, const char*>> kModes{
    {Mode::Substitution, "substitution"}, {Mode::Evaluation, "evaluation"}, {Mode::XiSymbolic, "xi-symbolic"}};
const std::vector<std::pair<Format, const char*>> kFormats{{Format::Json, "json"}, {Format::Text, "text"}};
const std::vector<std::pair<Status, const char*>> kStatuses{
    {Status::Pass, "pass"}, {Status::Fail, "fail"}, {Status::Reported, "reported"}};

RepKind vector_kind(Series s) {
    switch (s) {
        case Series::A: return RepKind::FundamentalGl;
        case Series::B: return RepKind::VectorB;
        case Series::C: return RepKind::VectorC;
        case Series::D: return RepKind::VectorD;
    }
    return RepKind::FundamentalGl;
}

bool wants(const SuiteRequest& req, Family f) { return !req.family || *req.family == f; }

bool wants_algebra(const SuiteRequest& req, HopfAlgebra a) {
    if (!req.family) return true;
    switch (*req.family) {
        case Family::Uqg: return a == HopfAlgebra::Uqg;
        case Family::QuantumCurrent: return a == HopfAlgebra::QuantumCurrent;
        case Family::DrinfeldianGeneral:
        case Family::DrinfeldianExplicit: return a == HopfAlgebra::Drinfeldian;
        case Family::YangianExplicit: return a == HopfAlgebra::Yangian;
        case Family::ClassicalCurrent: return false;
    }
    return false;
}

// Outcomes recorded rather than gated: relations with a quadratic eta
// right-hand side under an evaluation-type image of the affine letter outside gl.
bool evaluation_outcome(const RootSystem& rs, const std::string& key) {
    return (rs.series == Series::B || rs.series == Series::D) && (key == "minus:1" || key == "serre:1");
}

using Records = std::vector<CheckRecord>;
using Task = std::function<Records()>;

struct Collector {
    std::vector<Task> tasks;

    // A report becomes one record per result; reported(key) marks outcomes
    // that are recorded instead of gated.
    void add(std::string prefix, std::function<Report()> make, std::string anchor,
             std::function<bool(const RelationResult&)> reported = {}) {
        tasks.push_back([prefix = std::move(prefix), make = std::move(make), anchor = std::move(anchor),
                         reported = std::move(reported)] {
            Records out;
            Report r;
            try {
                r = make();
            } catch (const std::exception& e) {
                out.push_back({prefix, anchor, Status::Fail, 0, std::string("error: ") + e.what()});
                return out;
            }
            for (const auto& x : r.results) {
                Status s = x.pass ? Status::Pass : Status::Fail;
                if (reported && reported(x)) s = Status::Reported;
                std::string note = x.note;
                if (s == Status::Reported) note = std::string(x.pass ? "holds" : "does not hold") + (note.empty() ? "" : "; " + note);
                out.push_back({prefix + "/" + x.key, anchor, s, x.defect, note});
            }
            return out;
        });
    }

    void add_single(std::string id, std::string anchor, std::function<std::pair<bool, int>()> check) {
        tasks.push_back([id = std::move(id), anchor = std::move(anchor), check = std::move(check)] {
            try {
                auto [ok, defect] = check();
                return Records{{id, anchor, ok ? Status::Pass : Status::Fail, defect, ""}};
            } catch (const std::exception& e) {
                return Records{{id, anchor, Status::Fail, 0, std::string("error: ") + e.what()}};
            }
        });
    }
};

const auto all_reported = [](const RelationResult&) { return true; };

void relations_tasks(const SuiteRequest& req, const RootSystem& rs, Collector& c) {
    const std::string L = rs.label();
    if (req.mode == Mode::XiSymbolic) {
        c.add("relations/xi-symbolic/" + L, [rs] { return general_explicit_equivalence(rs); },
              "general and explicit Drinfeldian relations agree with xi symbolic");
        c.add("relations/xi-symbolic/" + L + "/VxV", [rs] { return general_explicit_equivalence(rs, true); },
              "general and explicit Drinfeldian relations on the tensor square (diagnostic)",
              [](const RelationResult& x) { return !x.pass; });
        return;
    }
    if (wants(req, Family::Uqg))
        c.add("relations/uqg/" + L, [rs] {
            return verify_catalog(build_representation_unchecked(vector_kind(rs.series), rs),
                                  relation_catalog(Family::Uqg, rs));
        }, "Chevalley relations in the vector module");
    if (wants(req, Family::ClassicalCurrent))
        c.add("relations/classical-current/" + L, [rs] {
            return verify_catalog(build_representation_unchecked(RepKind::Classical, rs),
                                  relation_catalog(Family::ClassicalCurrent, rs));
        }, "current algebra relations, affine letter u e_{-theta}");

    for (Family f : {Family::DrinfeldianGeneral, Family::DrinfeldianExplicit}) {
        if (!wants(req, f)) continue;
        const std::string fam = family_name(f);
        if (req.mode == Mode::Evaluation) {
            c.add("relations/" + fam + "/" + L + "/evaluation", [rs, f] {
                return verify_catalog(build_representation(RepKind::EvaluationGl, rs), relation_catalog(f, rs));
            }, "Drinfeldian relations in the evaluation module xi = u rho(e~)");
            if (f == Family::DrinfeldianExplicit)
                c.add("relations/" + fam + "/" + L + "/evaluation/sides", [rs] {
                    const Representation rep = build_representation(RepKind::EvaluationGl, rs);
                    const Catalog cat = relation_catalog(Family::DrinfeldianExplicit, rs);
                    Report r;
                    for (const auto& rel : cat.relations) {
                        if (rel.key.rfind("quad:", 0) != 0) continue;
                        const Matrix a = evaluate(rep, rel.lhs), b = evaluate(rep, rel.rhs);
                        r.results.push_back({rel.id, rel.key + ":lhs", a.is_zero(), a.nonzeros(), ""});
                        r.results.push_back({rel.id, rel.key + ":rhs", b.is_zero(), b.nonzeros(), ""});
                    }
                    return r;
                }, "both sides of the quadratic relations vanish separately");
        } else {
            c.add("relations/" + fam + "/" + L + "/tilde", [rs, f] {
                const Representation rep =
                    extend_with_xi(build_representation(vector_kind(rs.series), rs), XiMode::tilde());
                return verify_catalog(rep, relation_catalog(f, rs));
            }, "Drinfeldian relations in the vector module, xi = tau rho(e~)");
        }
        c.add("relations/" + fam + "/" + L + "/verbatim", [rs, f] {
            const Catalog cat = relation_catalog(f, rs);
            const Representation rep =
                extend_with_xi(build_representation(vector_kind(rs.series), rs), XiMode::tilde());
            return verify_relations(rep, cat.reported, "verbatim");
        }, "verbatim displays replaced by the shipped catalog", all_reported);
    }

    if (wants(req, Family::QuantumCurrent))
        c.add("relations/quantum-current/" + L, [rs] {
            const Representation base = build_representation(vector_kind(rs.series), rs);
            const Matrix image = Scalar::variable(Var::u) * evaluate(base, tilde_e(rs));
            return verify_catalog(extend_with_xi(base, XiMode::with_matrix(image)),
                                  relation_catalog(Family::QuantumCurrent, rs));
        }, "quantum current relations, affine letter u rho(e~)",
              [rs](const RelationResult& x) { return !x.pass && evaluation_outcome(rs, x.key); });

    if (wants(req, Family::YangianExplicit)) {
        c.add("relations/yangian-explicit/" + L, [rs] {
            return verify_catalog(build_representation(RepKind::Classical, rs),
                                  relation_catalog(Family::YangianExplicit, rs));
        }, "Yangian relations in the classical evaluation module xi = u e_{-theta}",
              [rs](const RelationResult& x) { return !x.pass && evaluation_outcome(rs, x.key); });
        c.add("relations/yangian-explicit/" + L + "/verbatim", [rs] {
            return verify_relations(build_representation(RepKind::Classical, rs),
                                    relation_catalog(Family::YangianExplicit, rs).reported, "verbatim");
        }, "verbatim displays replaced by the shipped catalog", all_reported);
    }
}

void hopf_tasks(const SuiteRequest& req, const RootSystem& rs, Collector& c) {
    const std::string L = rs.label();
    const RepKind vk = vector_kind(rs.series);
    if (req.mode == Mode::Evaluation) {
        if (wants_algebra(req, HopfAlgebra::Drinfeldian)) {
            c.add("hopf/drinfeldian/" + L + "/evaluation/axioms", [rs] {
                const auto rep = extend_with_xi(build_representation(RepKind::FundamentalGl, rs), XiMode::evaluation(Var::z1));
                return check_hopf_axioms(rep, hopf_data(HopfAlgebra::Drinfeldian, rs));
            }, "Hopf axioms in the evaluation module");
            c.add("hopf/drinfeldian/" + L + "/evaluation/coproduct", [rs] {
                const auto fund = build_representation(RepKind::FundamentalGl, rs);
                return check_coproduct_relations(extend_with_xi(fund, XiMode::evaluation(Var::z1)),
                                                 extend_with_xi(fund, XiMode::evaluation(Var::z2)),
                                                 hopf_data(HopfAlgebra::Drinfeldian, rs),
                                                 relation_catalog(Family::DrinfeldianExplicit, rs));
            }, "coproduct respects the relations in V(z1) (x) V(z2)");
            c.add("hopf/drinfeldian/" + L + "/evaluation/verbatim", [rs] {
                const auto rep = extend_with_xi(build_representation(RepKind::FundamentalGl, rs), XiMode::evaluation(Var::z1));
                return check_reported_hopf(rep, hopf_data(HopfAlgebra::Drinfeldian, rs));
            }, "verbatim Hopf displays", all_reported);
        }
    } else {
        if (wants_algebra(req, HopfAlgebra::Uqg)) {
            c.add("hopf/uqg/" + L + "/axioms", [rs, vk] {
                return check_hopf_axioms(build_representation(vk, rs), hopf_data(HopfAlgebra::Uqg, rs));
            }, "Hopf axioms in the vector module");
            c.add("hopf/uqg/" + L + "/coproduct", [rs, vk] {
                return check_coproduct_relations(build_representation(vk, rs), hopf_data(HopfAlgebra::Uqg, rs),
                                                 relation_catalog(Family::Uqg, rs));
            }, "coproduct respects the relations in V (x) V");
            c.add("hopf/uqg/" + L + "/verbatim", [rs, vk] {
                return check_reported_hopf(build_representation(vk, rs), hopf_data(HopfAlgebra::Uqg, rs));
            }, "verbatim Hopf displays", all_reported);
        }
        if (wants_algebra(req, HopfAlgebra::Drinfeldian)) {
            c.add("hopf/drinfeldian/" + L + "/axioms", [rs, vk] {
                const auto rep = extend_with_xi(build_representation(vk, rs), XiMode::tilde());
                return check_hopf_axioms(rep, hopf_data(HopfAlgebra::Drinfeldian, rs));
            }, "Hopf axioms in the vector module, xi = tau rho(e~)");
            c.add("hopf/drinfeldian/" + L + "/coproduct", [rs, vk] {
                const auto rep = extend_with_xi(build_representation(vk, rs), XiMode::tilde());
                const Family f = rs.series == Series::A ? Family::DrinfeldianExplicit : Family::DrinfeldianGeneral;
                return check_coproduct_relations(rep, hopf_data(HopfAlgebra::Drinfeldian, rs), relation_catalog(f, rs));
            }, "coproduct respects the relations in V (x) V");
            c.add("hopf/drinfeldian/" + L + "/verbatim", [rs, vk] {
                const auto rep = extend_with_xi(build_representation(vk, rs), XiMode::tilde());
                return check_reported_hopf(rep, hopf_data(HopfAlgebra::Drinfeldian, rs));
            }, "verbatim Hopf displays", all_reported);
        }
        if (wants_algebra(req, HopfAlgebra::QuantumCurrent))
            c.add("hopf/quantum-current/" + L + "/axioms", [rs, vk] {
                const auto rep = extend_with_xi(build_representation(vk, rs), XiMode::tilde());
                return check_hopf_axioms(rep, hopf_data(HopfAlgebra::QuantumCurrent, rs));
            }, "Hopf axioms in the vector module");
    }
    if (rs.series == Series::A && wants_algebra(req, HopfAlgebra::Yangian)) {
        c.add("hopf/yangian/" + L + "/axioms", [rs] {
            return check_hopf_axioms(build_representation(RepKind::Classical, rs), hopf_data(HopfAlgebra::Yangian, rs));
        }, "Hopf axioms in the classical evaluation module");
        c.add("hopf/yangian/" + L + "/coproduct", [rs] {
            const auto cl = build_representation(RepKind::Classical, rs);
            return check_coproduct_relations(extend_with_xi(cl, XiMode::classical_evaluation(Var::z1)),
                                             extend_with_xi(cl, XiMode::classical_evaluation(Var::z2)),
                                             hopf_data(HopfAlgebra::Yangian, rs),
                                             relation_catalog(Family::YangianExplicit, rs));
        }, "coproduct respects the relations in V(z1) (x) V(z2)");
    }
}

void limits_tasks(const RootSystem& rs, Collector& c) {
    const std::string L = rs.label();
    c.add("limits/q-to-1/" + L, [rs] { return classical_limit(rs); }, "q -> 1 jets against the Yangian relations");
    c.add("limits/eta-to-0/" + L, [rs] { return eta_zero_limit(rs); },
          "eta -> 0 against the quantum current relations");
    c.add("limits/eta-to-0-hopf/" + L, [rs] { return hopf_eta_zero_limit(rs); },
          "eta -> 0 of the Hopf data against the quantum current data");
    if (rs.series == Series::A)
        c.add("limits/q-to-1-hopf/" + L, [rs] { return hopf_classical_limit(rs); },
              "q -> 1 of the Hopf data against the Yangian data");
}

void cybe_tasks(Collector& c) {
    using namespace cybe;
    c.add_single("cybe/omega2", "Casimir two-tensor from the quadratic Casimir", [] {
        TwoTensor expected;
        expected.at(H, H) = Scalar(1) / Scalar(2);
        expected.at(EP, EM) = Scalar(1);
        expected.at(EM, EP) = Scalar(1);
        const TwoTensor d = omega2() - expected;
        int n = 0;
        for (const auto& s : d.c) n += s.is_zero() ? 0 : 1;
        return std::pair{n == 0, n};
    });
    c.add_single("cybe/jacobi", "Jacobi identity on the 27 basis triples", [] {
        int bad = 0;
        for (int i = 0; i < kDim; ++i)
            for (int j = 0; j < kDim; ++j)
                for (int k = 0; k < kDim; ++k) {
                    const LieElement x = LieElement::basis(i), y = LieElement::basis(j), z = LieElement::basis(k);
                    bad += (bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))).is_zero() ? 0 : 1;
                }
        return std::pair{bad == 0, bad};
    });
    auto count = [](const TwoTensor& t) {
        int n = 0;
        for (const auto& s : t.c) n += s.is_zero() ? 0 : 1;
        return n;
    };
    for (RKind k : all_rkinds()) {
        c.add_single("cybe/defect/" + rkind_name(k), "classical Yang-Baxter equation at symbolic points", [k] {
            const ThreeTensor d = cybe_defect(k);
            return std::pair{d.is_zero(), d.nonzero_count()};
        });
        c.add_single("cybe/unitarity/" + rkind_name(k), "r(z1, z2) + flip r(z2, z1) = 0", [k, count] {
            const int n = count(unitarity_defect(k));
            return std::pair{n == 0, n};
        });
    }
    c.add_single("cybe/shift", "shifted trigonometric r-matrix", [count] {
        const int n = count(shift_defect());
        return std::pair{n == 0, n};
    });
    c.add_single("cybe/cocommutator/rational", "rational cocommutator vanishes on constants", [count] {
        int n = 0;
        for (int x = 0; x < kDim; ++x) n += count(cocommutator(RKind::Rational, LieElement::basis(x)));
        return std::pair{n == 0, n};
    });
}

}  // namespace

std::string suite_name(Suite s) { return lookup_name(s, kSuites); }
Suite suite_from_name(const std::string& n) { return lookup_value(n, kSuites, "suite"); }
std::string mode_name(Mode m) { return lookup_name(m, kModes); }
Mode mode_from_name(const std::string& n) { return lookup_value(n, kModes, "mode"); }
std::string format_name(Format f) { return lookup_name(f, kFormats); }
Format format_from_name(const std::string& n) { return lookup_value(n, kFormats, "format"); }
std::string status_name(Status s) { return lookup_name(s, kStatuses); }

void validate(const SuiteRequest& req) {
    if (req.rank && !req.series) throw UsageError("--rank needs --series");
    if (req.series && req.rank) {
        if (*req.rank > kMaxRank) throw UsageError("rank above " + std::to_string(kMaxRank));
        try {
            build_root_system(*req.series, *req.rank);
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
    }
    if (req.mode == Mode::Evaluation && req.series && *req.series != Series::A)
        throw UsageError("evaluation mode exists for series A only");
    if (req.mode == Mode::XiSymbolic && req.family && *req.family != Family::DrinfeldianGeneral &&
        *req.family != Family::DrinfeldianExplicit)
        throw UsageError("xi-symbolic mode compares the Drinfeldian catalogs only");
    if (req.suite == Suite::Hopf && req.family == Family::ClassicalCurrent)
        throw UsageError("the classical current algebra has no Hopf data here");
}

std::vector<RootSystem> request_grid(const SuiteRequest& req) {
    const std::vector<std::pair<Series, std::vector<int>>> grid{
        {Series::A, {3, 4, 5}}, {Series::B, {3, 4}}, {Series::C, {2, 3}}, {Series::D, {4, 5}}};
    std::vector<RootSystem> out;
    for (const auto& [s, ranks] : grid) {
        if (req.series && *req.series != s) continue;
        if (req.mode == Mode::Evaluation && s != Series::A) continue;
        if (req.rank) {
            out.push_back(build_root_system(s, *req.rank));
            continue;
        }
        for (int l : ranks) out.push_back(build_root_system(s, l));
    }
    return out;
}

int SuiteReport::count(Status s) const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [&](const auto& c) { return c.status == s; }));
}

SuiteReport run_suite(const SuiteRequest& req) {
    validate(req);
    const auto start = std::chrono::steady_clock::now();
    Collector c;
    const bool all = req.suite == Suite::All;
    const std::vector<RootSystem> grid = request_grid(req);
    for (const auto& rs : grid) {
        if (all || req.suite == Suite::Relations) relations_tasks(req, rs, c);
        if (all || req.suite == Suite::Hopf) hopf_tasks(req, rs, c);
        if (all || req.suite == Suite::Limits) limits_tasks(rs, c);
        if (all || req.suite == Suite::Automorphism)
            c.add("automorphism/" + rs.label(), [rs] { return verify_scaling_automorphism(rs); },
                  "scaling automorphism of the affine letter");
    }
    if (all || req.suite == Suite::Cybe) cybe_tasks(c);

    std::vector<Records> results(c.tasks.size());
    const int workers = std::max(1, std::min<int>(worker_count(), static_cast<int>(c.tasks.size())));
    const int inner = std::max(1, worker_count() / workers);
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        set_thread_worker_cap(inner);
        for (std::size_t i; (i = next++) < c.tasks.size();) results[i] = c.tasks[i]();
        set_thread_worker_cap(0);
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();

    SuiteReport report;
    report.request = req;
    std::map<std::string, int> seen;
    for (auto& rs : results)
        for (auto& rec : rs) {
            const int n = ++seen[rec.id];
            if (n > 1) rec.id += "#" + std::to_string(n);
            report.checks.push_back(std::move(rec));
        }
    std::sort(report.checks.begin(), report.checks.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    report.elapsed_ms = static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
    return report;
}

std::string render_report(const SuiteReport& rep, Format format) {
    const SuiteRequest& r = rep.request;
    if (format == Format::Text) {
        std::ostringstream os;
        os << "suite " << suite_name(r.suite) << " mode " << mode_name(r.mode) << "\n";
        for (const auto& c : rep.checks) {
            os << status_name(c.status) << "\t" << c.id;
            if (c.defect) os << "\tdefect " << c.defect;
            if (!c.note.empty()) os << "\t" << c.note;
            os << "\n";
        }
        os << "totals: " << rep.count(Status::Pass) << " pass, " << rep.count(Status::Fail) << " fail, "
           << rep.count(Status::Reported) << " reported, " << rep.checks.size() << " checks\n";
        if (r.timing) os << "elapsed_ms " << rep.elapsed_ms << "\n";
        return os.str();
    }
    using nlohmann::json;
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"id", c.id}, {"anchor", c.anchor}, {"status", status_name(c.status)},
                          {"defect", c.defect}, {"note", c.note}});
    json request{{"suite", suite_name(r.suite)}, {"mode", mode_name(r.mode)}};
    request["family"] = r.family ? json(family_name(*r.family)) : json(nullptr);
    request["series"] = r.series ? json(std::string(1, series_letter(*r.series))) : json(nullptr);
    request["rank"] = r.rank ? json(*r.rank) : json(nullptr);
    json doc{{"request", request},
             {"checks", checks},
             {"totals",
              {{"pass", rep.count(Status::Pass)},
               {"fail", rep.count(Status::Fail)},
               {"reported", rep.count(Status::Reported)},
               {"total", rep.checks.size()}}},
             {"envelope", {{"elapsed_ms", r.timing ? json(rep.elapsed_ms) : json(nullptr)}}}};
    return doc.dump(2) + "\n";
}

void emit_report(const SuiteReport& rep, Format format, const std::string& path) {
    const std::string text = render_report(rep, format);
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path);
    out << text;
    if (!out) throw IoError("cannot write " + path);
}

}  // namespace qkmv

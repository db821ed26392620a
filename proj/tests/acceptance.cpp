// Acceptance run: one line per criterion, exact checks, pinned time limits.
#include "qkmv/cybe.hpp"
#include "qkmv/limits.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace qkmv;

namespace {

std::vector<RootSystem> grid() {
    std::vector<RootSystem> out;
    for (int l : {3, 4, 5}) out.push_back(build_root_system(Series::A, l));
    for (int l : {3, 4}) out.push_back(build_root_system(Series::B, l));
    for (int l : {2, 3}) out.push_back(build_root_system(Series::C, l));
    for (int l : {4, 5}) out.push_back(build_root_system(Series::D, l));
    return out;
}

RepKind vector_kind(Series s) {
    switch (s) {
        case Series::A: return RepKind::FundamentalGl;
        case Series::B: return RepKind::VectorB;
        case Series::C: return RepKind::VectorC;
        case Series::D: return RepKind::VectorD;
    }
    return RepKind::FundamentalGl;
}

struct Tally {
    int checks = 0;
    std::vector<std::string> failures;

    void add(const Report& r) {
        for (const auto& x : r.results) {
            ++checks;
            if (!x.pass) failures.push_back(x.id.empty() ? r.title + " " + x.key : x.id);
        }
    }
    void add(bool ok, const std::string& what) {
        ++checks;
        if (!ok) failures.push_back(what);
    }
};

struct Criterion {
    int number;
    const char* title;
    double limit_s;
    std::function<void(Tally&)> body;
    bool gated = true;
};

bool run(const Criterion& c) {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
        c.body(t);
    } catch (const std::exception& e) {
        error = e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = s <= c.limit_s;
    const bool ok = error.empty() && t.failures.empty() && in_time && t.checks > 0;
    const char* label = c.gated ? (ok ? "PASS" : "FAIL") : "INFO";
    if (c.gated)
        std::printf("criterion %2d %s  %-58s %5d checks  %7.2f s / %g s\n", c.number, label, c.title, t.checks, s,
                    c.limit_s);
    else
        std::printf("diagnostic   %s  %-58s %5d checks, %zu not holding  %7.2f s\n", label, c.title, t.checks,
                    t.failures.size(), s);
    if (!error.empty()) std::printf("    error: %s\n", error.c_str());
    if (!in_time) std::printf("    over the time limit\n");
    const std::size_t shown = c.gated ? 20 : 8;
    for (std::size_t i = 0; i < t.failures.size() && i < shown; ++i) std::printf("    %s\n", t.failures[i].c_str());
    if (t.failures.size() > shown) std::printf("    ... %zu more\n", t.failures.size() - shown);
    std::fflush(stdout);
    return ok || !c.gated;
}

int count_tensor(const cybe::TwoTensor& t) {
    int n = 0;
    for (const auto& s : t.c) n += s.is_zero() ? 0 : 1;
    return n;
}

}  // namespace

int main() {
    const std::vector<RootSystem> g = grid();
    std::vector<Criterion> criteria;

    criteria.push_back({1, "uqg relations in the shipped modules", 60, [&](Tally& t) {
        for (const auto& rs : g)
            t.add(verify_catalog(build_representation_unchecked(vector_kind(rs.series), rs),
                                 relation_catalog(Family::Uqg, rs)));
    }});

    criteria.push_back({2, "Drinfeldian relations under xi = tau rho(e~)", 120, [&](Tally& t) {
        for (const auto& rs : g)
            t.add(verify_catalog(extend_with_xi(build_representation(vector_kind(rs.series), rs), XiMode::tilde()),
                                 relation_catalog(Family::DrinfeldianExplicit, rs)));
    }});
    criteria.push_back({2, "Drinfeldian relations under tilde on V (x) V", 300, [&](Tally& t) {
        for (const auto& rs : g) {
            const auto sq = tensor_square(build_representation(vector_kind(rs.series), rs));
            t.add(verify_catalog(extend_with_xi(sq, XiMode::tilde()), relation_catalog(Family::DrinfeldianExplicit, rs)));
        }
    }, false});

    criteria.push_back({3, "gl evaluation module, quadratic sides vanish", 30, [&](Tally& t) {
        for (int l : {3, 4, 5}) {
            const auto rs = build_root_system(Series::A, l);
            const auto rep = build_representation(RepKind::EvaluationGl, rs);
            const Catalog cat = relation_catalog(Family::DrinfeldianExplicit, rs);
            t.add(verify_catalog(rep, cat));
            const Matrix expected = Scalar::variable(Var::u) *
                                    evaluate(build_representation(RepKind::FundamentalGl, rs), tilde_e(rs));
            t.add(*rep.xi == expected, rs.label() + " xi image");
            int quads = 0;
            for (const auto& r : cat.relations) {
                if (r.key.rfind("quad:", 0) != 0) continue;
                ++quads;
                t.add(evaluate(rep, r.lhs).is_zero(), r.id + " lhs");
                t.add(evaluate(rep, r.rhs).is_zero(), r.id + " rhs");
            }
            t.add(quads == 2, rs.label() + " has two quadratic relations");
        }
    }});

    criteria.push_back({4, "general and explicit relations agree, xi symbolic", 120, [&](Tally& t) {
        for (const auto& rs : g) t.add(general_explicit_equivalence(rs));
    }});
    criteria.push_back({4, "general vs explicit on V (x) V", 120, [&](Tally& t) {
        for (const auto& rs : g) t.add(general_explicit_equivalence(rs, true));
    }, false});

    criteria.push_back({5, "q -> 1 jets match the Yangian relations", 60, [&](Tally& t) {
        for (const auto& rs : g) t.add(classical_limit(rs));
    }});

    criteria.push_back({6, "eta -> 0 gives the quantum current algebra", 30, [&](Tally& t) {
        for (const auto& rs : g) {
            t.add(eta_zero_limit(rs));
            t.add(hopf_eta_zero_limit(rs));
        }
    }});

    criteria.push_back({7, "Hopf axioms and coproduct of the relations", 300, [&](Tally& t) {
        for (const auto& rs : g) {
            const auto v = build_representation(vector_kind(rs.series), rs);
            const auto uq = hopf_data(HopfAlgebra::Uqg, rs);
            t.add(check_hopf_axioms(v, uq));
            t.add(check_coproduct_relations(v, uq, relation_catalog(Family::Uqg, rs)));
            const auto ext = extend_with_xi(v, XiMode::tilde());
            const auto dr = hopf_data(HopfAlgebra::Drinfeldian, rs);
            t.add(check_hopf_axioms(ext, dr));
            const Family f = rs.series == Series::A ? Family::DrinfeldianExplicit : Family::DrinfeldianGeneral;
            t.add(check_coproduct_relations(ext, dr, relation_catalog(f, rs)));
            if (rs.series != Series::A) continue;
            const auto cl = build_representation(RepKind::Classical, rs);
            const auto y = hopf_data(HopfAlgebra::Yangian, rs);
            t.add(check_hopf_axioms(cl, y));
            t.add(check_coproduct_relations(extend_with_xi(cl, XiMode::classical_evaluation(Var::z1)),
                                            extend_with_xi(cl, XiMode::classical_evaluation(Var::z2)), y,
                                            relation_catalog(Family::YangianExplicit, rs)));
        }
    }});

    criteria.push_back({8, "tau e~ satisfies the general relations in the free algebra", 10, [&](Tally& t) {
        std::vector<RootSystem> systems = g;
        systems.push_back(build_gl2());
        for (const auto& rs : systems) {
            const NcExpr x = Scalar::tau() * tilde_e(rs);
            for (const auto& r : relation_catalog(Family::DrinfeldianGeneral, rs).relations) {
                const NcExpr d = substitute(r.difference(), [&](const GenSym& s) -> std::optional<NcExpr> {
                    if (s.kind == SymKind::Xi) return x;
                    return std::nullopt;
                });
                t.add(cartan_left_form(expand_composites(d, rs)).is_zero(), r.id);
            }
        }
    }});

    criteria.push_back({9, "classical Yang-Baxter suite for sl2", 5, [&](Tally& t) {
        using namespace cybe;
        TwoTensor expected;
        expected.at(H, H) = Scalar(1) / Scalar(2);
        expected.at(EP, EM) = Scalar(1);
        expected.at(EM, EP) = Scalar(1);
        t.add(omega2() == expected, "Casimir two-tensor");
        for (RKind k : all_rkinds()) {
            t.add(cybe_defect(k).is_zero(), "CYBE " + rkind_name(k));
            t.add(count_tensor(unitarity_defect(k)) == 0, "unitarity " + rkind_name(k));
        }
        t.add(count_tensor(shift_defect()) == 0, "shift identity");
    }});

    criteria.push_back({10, "k-independence, bracket depths, negative control", 30, [&](Tally& t) {
        for (int l : {4, 5}) {
            const auto rs = build_root_system(Series::A, l);
            const auto rep = build_representation(RepKind::FundamentalGl, rs);
            for (int i = 1; i <= l; ++i)
                for (int j = 1; j <= l; ++j) {
                    if (std::abs(i - j) < 2) continue;
                    const Matrix direct = rep.root_vectors.at(root_of(l, i, -j));
                    for (int k = std::min(i, j) + 1; k < std::max(i, j); ++k)
                        t.add(evaluate(rep, composite_a_via(rs, i, j, k)) == direct,
                              rs.label() + " e_{" + std::to_string(i) + ",-" + std::to_string(j) + "} via " +
                                  std::to_string(k));
                }
        }
        for (const auto& rs : g) {
            for (Family f : {Family::DrinfeldianExplicit, Family::YangianExplicit}) {
                const Catalog cat = relation_catalog(f, rs);
                for (int i = 1; i <= rs.num_simple(); ++i) {
                    const Root& a = rs.simple_roots[i - 1];
                    const int depth = 1 + 2 * inner(a, rs.theta) / inner(a, a);
                    const Relation* r = cat.find("serre:" + std::to_string(i));
                    if (!r) {
                        t.add(false, cat.label() + " serre:" + std::to_string(i) + " missing");
                        continue;
                    }
                    bool ok = !r->lhs.terms().empty();
                    for (const auto& term : r->lhs.terms()) {
                        int n = 0;
                        for (const auto& s : term.key[0]) n += s.kind == SymKind::RootVec;
                        ok = ok && n == depth;
                    }
                    t.add(ok, r->id + " depth " + std::to_string(depth));
                }
            }
            t.add(negative_control(rs));
        }
    }});

    int failed = 0;
    for (const auto& c : criteria)
        if (!run(c)) ++failed;
    std::printf("%s: %d gated criteria failing\n", failed ? "FAIL" : "PASS", failed);
    return failed ? 1 : 0;
}

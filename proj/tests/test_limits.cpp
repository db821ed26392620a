#include "doctest.h"
#include "qkmv/limits.hpp"

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

std::string failing(const Report& r) {
    std::string out;
    for (const auto& x : r.results)
        if (!x.pass) out += " " + x.id + " (" + x.note + ")";
    return out;
}

}  // namespace

TEST_CASE("counterpart keys") {
    CHECK(classical_counterpart_key("weight:2+") == "weight:2");
    CHECK(classical_counterpart_key("central:xi-") == "central:xi");
    CHECK(classical_counterpart_key("serre:1") == "serre:1");
    CHECK(current_counterpart_key("central:xi+") == "central:e_{d-t}+");
    CHECK(current_counterpart_key("quad:2") == "quad:2");
}

TEST_CASE("q -> 1 limit reaches the Yangian") {
    for (const auto& rs : grid()) {
        Report r = classical_limit(rs);
        INFO(rs.label() << failing(r));
        CHECK(r.all_pass());
        CHECK(r.results.size() == relation_catalog(Family::DrinfeldianExplicit, rs).relations.size());
    }
}

TEST_CASE("weight relations need the first-order jet") {
    Report r = classical_limit(build_root_system(Series::B, 3));
    const RelationResult* w = r.find_key("weight:1+");
    REQUIRE(w);
    CHECK(w->note.find("order 1") == 0);
    CHECK(r.find_key("minus:1")->note.find("order 0") == 0);
}

TEST_CASE("the printed Yangian weight relation of B is not the limit") {
    auto rs = build_root_system(Series::B, 3);
    auto d = relation_catalog(Family::DrinfeldianExplicit, rs);
    auto y = relation_catalog(Family::YangianExplicit, rs);
    REQUIRE(!y.reported.empty());
    auto [c0, c1] = jet_classical(d.find("weight:1+")->difference());
    CHECK(c0.is_zero());
    for (const auto& v : y.reported)
        if (v.key == "weight:1") CHECK(!proportionality(c1, v.difference()));
}

TEST_CASE("eta -> 0 limit reaches the quantum current algebra") {
    for (const auto& rs : grid()) {
        Report r = eta_zero_limit(rs);
        INFO(rs.label() << failing(r));
        CHECK(r.all_pass());
    }
}

TEST_CASE("eta -> 0 with a perturbed catalog is caught") {
    auto rs = build_root_system(Series::C, 2);
    auto d = relation_catalog(Family::DrinfeldianExplicit, rs);
    auto qc = relation_catalog(Family::QuantumCurrent, rs);
    const Relation* r = d.find("serre:1");
    NcExpr x = rename_affine(specialize_expr(r->difference(), {{Var::eta, Scalar(0)}}));
    NcExpr wrong = x + Scalar::q() * root_vector(rs.simple_roots[0]) * rename_affine(gen(GenSym::xi(rs.theta))) *
                           root_vector(rs.simple_roots[0]);
    CHECK(proportionality(x, qc.find("serre:1")->difference()));
    CHECK(!proportionality(wrong, qc.find("serre:1")->difference()));
}

TEST_CASE("renaming the affine letter") {
    auto rs = build_root_system(Series::A, 3);
    CHECK(rename_affine(gen(GenSym::xi(rs.theta))) == gen(GenSym::affine_vec(rs.theta)));
    CHECK(rename_affine(gen(GenSym::xi_classical(rs.theta))) == gen(GenSym::affine_vec(rs.theta)));
}

TEST_CASE("eta -> 0 turns the Drinfeldian Hopf data into the current algebra data") {
    for (auto rs : {build_root_system(Series::A, 4), build_root_system(Series::B, 3), build_root_system(Series::C, 2),
                    build_root_system(Series::D, 4)}) {
        Report r = hopf_eta_zero_limit(rs);
        INFO(rs.label() << failing(r));
        CHECK(r.all_pass());
    }
}

TEST_CASE("q -> 1 turns the gl Drinfeldian Hopf data into the Yangian data") {
    for (int l : {3, 4, 5}) {
        Report r = hopf_classical_limit(build_root_system(Series::A, l));
        CHECK(r.results.size() == 2);
        CHECK(r.all_pass());
    }
    CHECK_THROWS_AS(hopf_classical_limit(build_root_system(Series::C, 2)), Unsupported);
}

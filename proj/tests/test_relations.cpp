#include "doctest.h"
#include "qkmv/relations.hpp"

#include <algorithm>

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

Scalar q() { return Scalar::q(); }
NcExpr K(const Lambda& lam) { return gen(GenSym::cartan_exp(lam)); }

// Number of root-vector letters in the first word of x.
int root_letters(const NcExpr& x) {
    int n = 0;
    for (const auto& g : x.terms().front().key[0]) n += g.kind == SymKind::RootVec;
    return n;
}

}  // namespace

TEST_CASE("uqg A3 contains the Chevalley bracket") {
    auto rs = build_root_system(Series::A, 3);
    auto cat = relation_catalog(Family::Uqg, rs);
    const Relation* r = cat.find("bracket:1:1");
    REQUIRE(r);
    CHECK(r->lhs == commutator(root_vector(root_of(3, 1, -2)), root_vector(root_of(3, 2, -1))));
    Lambda lam = Lambda::unit(3, 1) - Lambda::unit(3, 2);
    CHECK(r->rhs == gen(GenSym::q_bracket(lam, 0)));
    CHECK(cat.find("bracket:1:2")->rhs.is_zero());
}

TEST_CASE("Yangian B3 commutator of e_{2,-1} with xi") {
    auto rs = build_root_system(Series::B, 3);
    auto cat = relation_catalog(Family::YangianExplicit, rs);
    const Relation* r = cat.find("minus:1");
    REQUIRE(r);
    auto E = [](const Root& x) { return root_vector(x); };
    auto e = [](int i) { return eps(3, i); };
    NcExpr expected = Scalar::variable(Var::eta) * (Scalar(-1) * (E(-e(3) - e(1)) * E(e(3) - e(1))) +
                                                    Scalar(mpq_class(1, 2)) * (E(-e(1)) * E(-e(1))));
    CHECK(r->rhs == expected);
    CHECK(r->lhs == commutator(E(root_of(3, 2, -1)), gen(GenSym::xi_classical(rs.theta))));
}

TEST_CASE("Drinfeldian C2 commutator of e_{l,l} with xi") {
    auto rs = build_root_system(Series::C, 2);
    auto cat = relation_catalog(Family::DrinfeldianExplicit, rs);
    const Relation* r = cat.find("serre:2");
    REQUIRE(r);
    NcExpr c = root_vector(root_of(2, 2, -1));
    NcExpr k = K((Lambda::unit(2, 1) + Lambda::unit(2, 2)).scaled(2));
    CHECK(r->rhs == Scalar::variable(Var::eta) * q_number(2) * Scalar::q_pow(-3) * k * c * c);
    CHECK(r->lhs == commutator(root_vector(scaled(eps(2, 2), 2)), gen(GenSym::xi(rs.theta))));
}

TEST_CASE("composite root vector examples") {
    auto a = build_root_system(Series::A, 3);
    auto ca = composite_root_vectors(a);
    NcExpr e12 = root_vector(root_of(3, 1, -2)), e23 = root_vector(root_of(3, 2, -3));
    CHECK(ca.at(root_of(3, 1, -3)) == q_commutator(e12, e23, -1, 3));

    auto b = build_root_system(Series::B, 3);
    auto cb = composite_root_vectors(b);
    CHECK(cb.at(-eps(3, 1)) ==
          q_commutator(root_vector(-eps(3, 3)), cb.at(eps(3, 3) - eps(3, 1)), +1, 3));

    auto c = build_root_system(Series::C, 3);
    auto cc = composite_root_vectors(c);
    CHECK(cc.at(scaled(eps(3, 1), 2)) ==
          q_commutator(cc.at(eps(3, 1) - eps(3, 3)), cc.at(eps(3, 1) + eps(3, 3)), -1, 3));
}

TEST_CASE("every non-simple root gets a composite of its own weight") {
    for (const auto& rs : grid()) {
        auto comp = composite_root_vectors(rs);
        CHECK(comp.size() == 2 * (rs.positive_roots.size() - rs.simple_roots.size()));
        for (const auto& [r, x] : comp) {
            auto w = homogeneous_weight(x, rs.l);
            REQUIRE(w);
            CHECK(*w == r);
        }
    }
}

TEST_CASE("k-variant composites have the right weight") {
    auto rs = build_root_system(Series::A, 5);
    auto w = homogeneous_weight(composite_a_via(rs, 1, 4, 3), 5);
    REQUIRE(w);
    CHECK(*w == root_of(5, 1, -4));
    CHECK_THROWS(composite_a_via(rs, 1, 4, 4));
    CHECK_THROWS(composite_a_via(build_root_system(Series::B, 3), 1, 3, 2));
}

TEST_CASE("tilde e has weight minus theta") {
    for (const auto& rs : grid()) {
        auto w = homogeneous_weight(tilde_e(rs), rs.l);
        REQUIRE(w);
        CHECK(*w == -rs.theta);
        CHECK(*homogeneous_weight(tilde_e_atomic(rs), rs.l) == -rs.theta);
    }
    auto gl2 = build_gl2();
    CHECK(*homogeneous_weight(tilde_e(gl2), 2) == -gl2.theta);
}

TEST_CASE("every relation is weight homogeneous") {
    for (const auto& rs : grid())
        for (Family f : all_families()) {
            auto cat = relation_catalog(f, rs);
            CHECK(!cat.relations.empty());
            for (const auto& r : cat.relations) {
                INFO(r.id);
                CHECK(is_homogeneous(r.difference(), rs.l));
                CHECK(r.xi_degree <= 2);
                CHECK(!r.difference().is_zero());
            }
        }
    auto cat = relation_catalog(Family::DrinfeldianGeneral, build_gl2());
    REQUIRE(cat.find("cubic"));
    CHECK(cat.find("cubic")->xi_degree == 3);
}

TEST_CASE("unsupported combinations") {
    CHECK_THROWS_AS(relation_catalog(Family::DrinfeldianExplicit, build_gl2()), Unsupported);
    CHECK_THROWS_AS(relation_catalog(Family::YangianExplicit, build_gl2()), Unsupported);
    CHECK_NOTHROW(relation_catalog(Family::Uqg, build_gl2()));
    CHECK(family_from_name("yangian-explicit") == Family::YangianExplicit);
    CHECK_THROWS(family_from_name("e8"));
}

TEST_CASE("explicit affine Serre depths follow the root data") {
    for (const auto& rs : grid())
        for (Family f : {Family::DrinfeldianExplicit, Family::YangianExplicit, Family::DrinfeldianGeneral}) {
            auto cat = relation_catalog(f, rs);
            for (int i = 1; i <= rs.num_simple(); ++i) {
                const Relation* r = cat.find("serre:" + std::to_string(i));
                REQUIRE(r);
                INFO(r->id);
                CHECK(root_letters(r->lhs) == affine_exponent(rs, i));
                CHECK(cat.find("minus:" + std::to_string(i)));
            }
        }
}

TEST_CASE("substituting tau times tilde e satisfies the general catalog") {
    auto check = [](const RootSystem& rs) {
        auto cat = relation_catalog(Family::DrinfeldianGeneral, rs);
        NcExpr t = Scalar::tau() * tilde_e(rs);
        for (const auto& r : cat.relations) {
            INFO(r.id);
            NcExpr d = substitute(r.difference(), [&](const GenSym& g) -> std::optional<NcExpr> {
                if (g.kind == SymKind::Xi) return t;
                return std::nullopt;
            });
            CHECK(cartan_left_form(expand_composites(d, rs)).is_zero());
        }
    };
    for (const auto& rs : grid()) check(rs);
    check(build_gl2());
}

TEST_CASE("cartan left form") {
    NcExpr x = root_vector(root_of(3, 1, -2));
    NcExpr k = K(Lambda::unit(3, 1));
    CHECK(cartan_left_form(x * k) == q().inverse() * (k * x));
    CHECK(cartan_left_form(k * x * K(-Lambda::unit(3, 1))) == q() * x);
}

TEST_CASE("dump has one line per relation") {
    auto cat = relation_catalog(Family::Uqg, build_root_system(Series::D, 4));
    std::string d = dump_catalog(cat);
    CHECK(static_cast<std::size_t>(std::count(d.begin(), d.end(), '\n')) == cat.relations.size());
    CHECK(d.find("uqg/D4/") == 0);
}

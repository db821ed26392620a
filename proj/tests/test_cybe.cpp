#include "doctest.h"
#include "qkmv/cybe.hpp"
#include "qkmv/reps.hpp"

using namespace qkmv;
using namespace qkmv::cybe;

namespace {

// Defining 2x2 matrices, used as an independent oracle.
Matrix fund(int i) {
    switch (i) {
        case H: return Matrix::diagonal({Scalar(1), Scalar(-1)});
        case EP: return Matrix::unit(2, 0, 1);
        default: return Matrix::unit(2, 1, 0);
    }
}

Matrix fund(const LieElement& x) {
    Matrix m(2);
    for (int i = 0; i < kDim; ++i) m += x.c[i] * fund(i);
    return m;
}

Matrix image(const TwoTensor& t) {
    Matrix m(4);
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            if (!t.at(i, j).is_zero()) m += t.at(i, j) * kron(fund(i), fund(j));
    return m;
}

Matrix image(const ThreeTensor& t) {
    Matrix m(8);
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            for (int k = 0; k < kDim; ++k)
                if (!t.at(i, j, k).is_zero()) m += t.at(i, j, k) * kron(kron(fund(i), fund(j)), fund(k));
    return m;
}

Matrix comm(const Matrix& a, const Matrix& b) { return a * b - b * a; }

// r placed in slots (1,2), (1,3) or (2,3) of V (x) V (x) V.
Matrix embed(const TwoTensor& t, int s1, int s2) {
    Matrix m(8);
    const Matrix id = Matrix::identity(2);
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            if (t.at(i, j).is_zero()) continue;
            std::array<Matrix, 3> f{id, id, id};
            f[s1] = fund(i);
            f[s2] = fund(j);
            m += t.at(i, j) * kron(kron(f[0], f[1]), f[2]);
        }
    return m;
}

const Scalar half = Scalar(1) / Scalar(2);

}  // namespace

TEST_CASE("structure constants match the defining matrices") {
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            const LieElement b = bracket(LieElement::basis(i), LieElement::basis(j));
            CHECK(fund(b) == comm(fund(i), fund(j)));
        }
}

TEST_CASE("bracket is antisymmetric and satisfies Jacobi on all basis triples") {
    int triples = 0;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            CHECK(bracket(LieElement::basis(i), LieElement::basis(j)) ==
                  Scalar(-1) * bracket(LieElement::basis(j), LieElement::basis(i)));
            for (int k = 0; k < kDim; ++k) {
                const LieElement x = LieElement::basis(i), y = LieElement::basis(j), z = LieElement::basis(k);
                CHECK((bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))).is_zero());
                ++triples;
            }
        }
    CHECK(triples == 27);
}

TEST_CASE("Casimir two-tensor") {
    const TwoTensor o = omega2();
    TwoTensor expected;
    expected.at(H, H) = half;
    expected.at(EP, EM) = Scalar(1);
    expected.at(EM, EP) = Scalar(1);
    CHECK(o == expected);
    CHECK(o.flip() == o);
    for (int x = 0; x < kDim; ++x) {
        CHECK(ad_action(LieElement::basis(x), o).is_zero());
        const Matrix X = fund(x), id = Matrix::identity(2);
        CHECK(comm(kron(X, id) + kron(id, X), image(o)).is_zero());
    }
    // C2 acts on the defining module by the scalar 3/2.
    Matrix c(2);
    for (const auto& [w, s] : casimir_c2()) c += s * (fund(w.first) * fund(w.second));
    CHECK(c == (Scalar(3) / Scalar(2)) * Matrix::identity(2));
}

TEST_CASE("Casimir two-tensor equals the dual-basis sum") {
    // I1 = h / sqrt2, I2 = (e+ + e-) / sqrt2, I3 = i (e+ - e-) / sqrt2 are
    // orthonormal for the trace form; squares of the normalizations are rational.
    const std::vector<std::pair<Scalar, LieElement>> onb{
        {half, LieElement::basis(H)},
        {half, LieElement::basis(EP) + LieElement::basis(EM)},
        {-half, LieElement::basis(EP) + Scalar(-1) * LieElement::basis(EM)},
    };
    TwoTensor sum;
    for (const auto& [n2, w] : onb) {
        sum += n2 * tensor(w, w);
        for (const auto& [m2, u] : onb) {
            const Matrix p = fund(w) * fund(u);
            const Scalar tr = p.at(0, 0) + p.at(1, 1);
            CHECK(n2 * tr == (&w == &u ? Scalar(1) : Scalar(0)));
        }
    }
    CHECK(sum == omega2());
}

TEST_CASE("r-matrices") {
    const Scalar z1 = Scalar::variable(Var::z1), z2 = Scalar::variable(Var::z2);
    const Scalar eta = Scalar::variable(Var::eta), hbar = Scalar::variable(Var::hbar);
    CHECK(r_matrix(RKind::Rational, Var::z1, Var::z2) == (eta / (z1 - z2)) * omega2());

    TwoTensor tr = ((z1 + z2) / (z1 - z2)) * omega2();
    tr.at(EM, EP) += Scalar(1);
    tr.at(EP, EM) -= Scalar(1);
    CHECK(r_matrix(RKind::Trigonometric, Var::z1, Var::z2) == hbar * tr);

    TwoTensor s = r_matrix(RKind::Sum, Var::z1, Var::z2);
    for (auto& c : s.c) c = specialize(c, {{Var::eta, Scalar(0)}});
    CHECK(s == r_matrix(RKind::Trigonometric, Var::z1, Var::z2));

    CHECK_THROWS_AS(r_matrix(RKind::Rational, Var::z1, Var::z1), CoincidentPoints);
    CHECK_THROWS_AS(r_matrix(RKind::Sum, z2 + Scalar(1), Scalar(1) + z2), CoincidentPoints);
}

TEST_CASE("classical Yang-Baxter equation") {
    for (RKind k : all_rkinds()) {
        CAPTURE(rkind_name(k));
        const ThreeTensor d = cybe_defect(k);
        CHECK(d.is_zero());
        // Oracle: the same brackets as commutators in End(V (x) V (x) V).
        const Matrix r12 = embed(r_matrix(k, Var::z1, Var::z2), 0, 1);
        const Matrix r13 = embed(r_matrix(k, Var::z1, Var::z3), 0, 2);
        const Matrix r23 = embed(r_matrix(k, Var::z2, Var::z3), 1, 2);
        const Matrix m = comm(r12, r13) + comm(r12, r23) + comm(r13, r23);
        CHECK(m.is_zero());
        CHECK(image(d) == m);
    }
}

TEST_CASE("CYBE defect detects a non-solution") {
    // A point-independent Omega2 + e- (x) e+ is not a solution.
    TwoTensor r = omega2();
    r.at(EM, EP) += Scalar(1);
    const ThreeTensor d = cybe_defect(r, r, r);
    CHECK_FALSE(d.is_zero());
    const Matrix r12 = embed(r, 0, 1), r13 = embed(r, 0, 2), r23 = embed(r, 1, 2);
    CHECK(image(d) == comm(r12, r13) + comm(r12, r23) + comm(r13, r23));
}

TEST_CASE("shift identity and unitarity") {
    CHECK(shift_defect().is_zero());
    TwoTensor s = shift_defect();
    for (auto& c : s.c) c = specialize(c, {{Var::a, Scalar(0)}});
    CHECK(s.is_zero());
    for (RKind k : all_rkinds()) {
        CAPTURE(rkind_name(k));
        CHECK(unitarity_defect(k).is_zero());
    }
    // Stronger form: flip and point swap negate the trigonometric tensor.
    CHECK(r_matrix(RKind::Trigonometric, Var::z1, Var::z2).flip() ==
          Scalar(-1) * r_matrix(RKind::Trigonometric, Var::z2, Var::z1));
}

TEST_CASE("cocommutator") {
    const LieElement h = LieElement::basis(H);
    for (int x = 0; x < kDim; ++x) CHECK(cocommutator(RKind::Rational, LieElement::basis(x)).is_zero());

    TwoTensor anti;
    anti.at(EM, EP) = Scalar(1);
    anti.at(EP, EM) = Scalar(-1);
    const Scalar hbar = Scalar::variable(Var::hbar);
    const TwoTensor got = cocommutator(RKind::Trigonometric, h);
    const Matrix H2 = kron(fund(H), Matrix::identity(2)) + kron(Matrix::identity(2), fund(H));
    CHECK(image(got) == hbar * comm(H2, image(anti)));
    // h commutes with e+ (x) e- and e- (x) e+ under the diagonal action.
    CHECK(got.is_zero());

    const TwoTensor ep = cocommutator(RKind::Sum, LieElement::basis(EP));
    CHECK_FALSE(ep.is_zero());
    const Matrix X = fund(EP), id = Matrix::identity(2);
    CHECK(image(ep) == comm(kron(X, id) + kron(id, X), image(r_matrix(RKind::Sum, Var::z1, Var::z2))));

    // Linear in x.
    const Scalar c = Scalar::variable(Var::a);
    const LieElement y = c * h + LieElement::basis(EM);
    CHECK(cocommutator(RKind::Sum, y) ==
          c * cocommutator(RKind::Sum, h) + cocommutator(RKind::Sum, LieElement::basis(EM)));
}

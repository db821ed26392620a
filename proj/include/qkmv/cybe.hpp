#pragma once

#include "qkmv/scalar.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qkmv::cybe {

// Ordered basis of sl2: [e+, e-] = h, [h, e+] = 2 e+, [h, e-] = -2 e-.
enum Basis : int { H = 0, EP = 1, EM = 2 };
inline constexpr int kDim = 3;

const char* basis_name(int i);

struct CoincidentPoints : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct LieElement {
    std::array<Scalar, kDim> c{};

    static LieElement basis(int i);
    bool is_zero() const;
    LieElement& operator+=(const LieElement& o);
    friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
    friend LieElement operator*(const Scalar& s, LieElement a);
    friend bool operator==(const LieElement& a, const LieElement& b);
};

LieElement bracket(const LieElement& x, const LieElement& y);
// Structure constants: [x_i, x_j] = sum_k f(i,j,k) x_k.
const Scalar& structure_constant(int i, int j, int k);

struct TwoTensor {
    std::array<Scalar, kDim * kDim> c{};

    Scalar& at(int i, int j) { return c[i * kDim + j]; }
    const Scalar& at(int i, int j) const { return c[i * kDim + j]; }
    bool is_zero() const;
    TwoTensor flip() const;
    TwoTensor& operator+=(const TwoTensor& o);
    TwoTensor& operator-=(const TwoTensor& o);
    friend TwoTensor operator+(TwoTensor a, const TwoTensor& b) { return a += b; }
    friend TwoTensor operator-(TwoTensor a, const TwoTensor& b) { return a -= b; }
    friend TwoTensor operator*(const Scalar& s, TwoTensor a);
    friend bool operator==(const TwoTensor& a, const TwoTensor& b);
    std::string str() const;
};

TwoTensor tensor(const LieElement& x, const LieElement& y);

struct ThreeTensor {
    std::array<Scalar, kDim * kDim * kDim> c{};

    Scalar& at(int i, int j, int k) { return c[(i * kDim + j) * kDim + k]; }
    const Scalar& at(int i, int j, int k) const { return c[(i * kDim + j) * kDim + k]; }
    bool is_zero() const;
    int nonzero_count() const;
};

// Quadratic element of U(sl2): coefficients on ordered words x_i x_j.
using Quadratic = std::map<std::pair<int, int>, Scalar>;

Quadratic casimir_c2();
// Derived from 1/2 (Delta_0(C2) - C2 (x) 1 - 1 (x) C2).
TwoTensor omega2();

enum class RKind { Rational, Trigonometric, Sum };
std::string rkind_name(RKind k);
const std::vector<RKind>& all_rkinds();

TwoTensor r_matrix(RKind kind, const Scalar& zi, const Scalar& zj);
TwoTensor r_matrix(RKind kind, Var zi, Var zj);

// [r12, r13] + [r12, r23] + [r13, r23] at (z1, z2, z3), reduced slotwise.
ThreeTensor cybe_defect(RKind kind);
ThreeTensor cybe_defect(const TwoTensor& r12, const TwoTensor& r13, const TwoTensor& r23);

// r_tr(z1 + a/2, z2 + a/2) - r_tr(z1, z2) - (hbar a / eta) r_rt(z1, z2).
TwoTensor shift_defect();
// r(z1, z2) + flip(r(z2, z1)).
TwoTensor unitarity_defect(RKind kind);

// [x (x) 1 + 1 (x) x, r(z1, z2)].
TwoTensor cocommutator(RKind kind, const LieElement& x);
TwoTensor ad_action(const LieElement& x, const TwoTensor& t);

}  // namespace qkmv::cybe

#pragma once

#include "qkmv/poly.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace qkmv {

struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

struct DivisionByZero : std::domain_error {
    using std::domain_error::domain_error;
};

// Exact rational function num/den over the fixed variable set.
//
// Reduction is partial: common monomials are cancelled, and when the
// denominator involves only v the gcd with the v-content of the numerator is
// removed, which makes the representation canonical in that case. Equality
// never relies on reduction.
class Scalar {
public:
    Scalar() : num_(0), den_(1) {}
    Scalar(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    explicit Scalar(mpq_class c) : num_((c.canonicalize(), c)), den_(1) {}
    explicit Scalar(Poly num) : num_(std::move(num)), den_(1) {}
    Scalar(Poly num, Poly den);

    static Scalar variable(Var x) { return Scalar(Poly::variable(x)); }
    static Scalar v_pow(int n);         // v^n, n of either sign
    static Scalar q_pow(int n) { return v_pow(2 * n); }
    static Scalar q_pow_half(int twice_x) { return v_pow(twice_x); }  // q^{twice_x/2}
    static Scalar q() { return v_pow(2); }
    static Scalar tau();               // eta / (q - q^{-1})

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool depends_on(Var x) const { return num_.depends_on(x) || den_.depends_on(x); }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);

    Scalar inverse() const;
    Scalar pow(int n) const;

    std::string str() const;

private:
    void normalize();
    Poly num_;
    Poly den_;
};

bool scalar_equals(const Scalar& x, const Scalar& y);

// (q^x - q^{-x}) / (q - q^{-1}) for x = twice_x / 2.
Scalar q_number_twice(int twice_x);
Scalar q_number(const mpq_class& x);

using Assignment = std::map<Var, Scalar>;
Scalar specialize(const Scalar& x, const Assignment& values);

// First-order data of f(1 + s) in s; both parts are free of v.
struct Jet {
    Scalar c0;
    Scalar c1;
    friend Jet operator+(const Jet& a, const Jet& b) { return {a.c0 + b.c0, a.c1 + b.c1}; }
    friend Jet operator*(const Jet& a, const Jet& b) { return {a.c0 * b.c0, a.c0 * b.c1 + a.c1 * b.c0}; }
    friend bool operator==(const Jet& a, const Jet& b) { return a.c0 == b.c0 && a.c1 == b.c1; }
};

Jet jet_at_v1(const Scalar& x);

}  // namespace qkmv

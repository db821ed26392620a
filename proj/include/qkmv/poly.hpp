#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qkmv {

// The closed variable set shared by every module. q is v^2.
enum class Var : int { v = 0, eta, u, z1, z2, z3, hbar, a };
inline constexpr int kNumVars = 8;

const char* var_name(Var x);

using Monomial = std::array<std::int16_t, kNumVars>;

struct PolyTerm {
    Monomial mono{};
    mpq_class coeff;
};

// Sparse polynomial with rational coefficients and nonnegative exponents.
// Terms are kept sorted by descending lexicographic monomial order with no
// zero coefficients, so structural equality is polynomial equality.
class Poly {
public:
    Poly() = default;
    Poly(long c);  // NOLINT(google-explicit-constructor)
    explicit Poly(const mpq_class& c);

    static Poly variable(Var x, int power = 1);
    static Poly monomial(const Monomial& m, const mpq_class& c);

    const std::vector<PolyTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    mpq_class constant_value() const;  // requires is_constant()
    const PolyTerm& leading() const { return terms_.front(); }

    int degree(Var x) const;
    bool depends_on(Var x) const;
    bool only_in(Var x) const;  // no variable other than x occurs
    Monomial gcd_monomial() const;

    Poly derivative(Var x) const;
    Poly scaled(const mpq_class& c) const;
    Poly times_monomial(const Monomial& m) const;
    Poly divided_by_monomial(const Monomial& m) const;  // caller guarantees divisibility

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b);

    std::string str() const;

private:
    static Poly from_unsorted(std::vector<PolyTerm> terms);
    std::vector<PolyTerm> terms_;
};

// a / b when b divides a exactly, otherwise nullopt.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

// Univariate helpers in v, coefficient index = degree.
using UPoly = std::vector<mpq_class>;
UPoly upoly_gcd(UPoly a, UPoly b);
void upoly_trim(UPoly& p);

// Split p by the v-exponent: key is the monomial with v stripped, value the
// univariate v-coefficient polynomial.
std::vector<std::pair<Monomial, UPoly>> v_coefficients(const Poly& p);
Poly from_v_coefficients(const std::vector<std::pair<Monomial, UPoly>>& parts);
UPoly to_upoly(const Poly& p);  // requires only_in(Var::v)
Poly from_upoly(const UPoly& p);
// Exact division of univariate polynomials; divisor must divide.
UPoly upoly_divide(const UPoly& a, const UPoly& b);

}  // namespace qkmv

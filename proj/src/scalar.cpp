#include "qkmv/scalar.hpp"

#include <algorithm>

namespace qkmv {

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

void Scalar::normalize() {
    if (den_.is_zero()) throw DivisionByZero("zero denominator");
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    if (den_.is_one()) return;

    Monomial g = den_.gcd_monomial();
    const Monomial gn = num_.gcd_monomial();
    bool any = false;
    for (int i = 0; i < kNumVars; ++i) {
        g[i] = std::min(g[i], gn[i]);
        any = any || g[i] != 0;
    }
    if (any) {
        num_ = num_.divided_by_monomial(g);
        den_ = den_.divided_by_monomial(g);
    }

    if (den_.is_constant()) {
        num_ = num_.scaled(1 / den_.constant_value());
        den_ = Poly(1);
        return;
    }

    if (den_.only_in(Var::v)) {
        UPoly d = to_upoly(den_);
        auto parts = v_coefficients(num_);
        UPoly g1 = d;
        for (const auto& part : parts) {
            g1 = upoly_gcd(g1, part.second);
            if (g1.size() == 1) break;
        }
        if (g1.size() > 1) {
            d = upoly_divide(d, g1);
            for (auto& part : parts) part.second = upoly_divide(part.second, g1);
            num_ = from_v_coefficients(parts);
        }
        const mpq_class lc = d.back();
        num_ = num_.scaled(1 / lc);
        for (auto& c : d) c /= lc;
        den_ = from_upoly(d);
        return;
    }

    if (auto quot = divide_exact(num_, den_)) {
        num_ = std::move(*quot);
        den_ = Poly(1);
        return;
    }
    const mpq_class lc = den_.leading().coeff;
    if (lc != 1) {
        num_ = num_.scaled(1 / lc);
        den_ = den_.scaled(1 / lc);
    }
}

Scalar Scalar::v_pow(int n) {
    if (n >= 0) return Scalar(Poly::variable(Var::v, n));
    return Scalar(Poly(1), Poly::variable(Var::v, -n));
}

Scalar Scalar::tau() {
    // eta / (v^2 - v^{-2}) = eta v^2 / (v^4 - 1)
    return Scalar(Poly::variable(Var::eta) * Poly::variable(Var::v, 2), Poly::variable(Var::v, 4) - Poly(1));
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else if (o.den_.is_one()) {
        num_ += o.num_ * den_;
    } else if (den_.is_one()) {
        num_ = num_ * o.den_ + o.num_;
        den_ = o.den_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = Scalar();
    num_ = num_ * o.num_;
    if (!o.den_.is_one()) {
        den_ = den_ * o.den_;
        normalize();
    } else if (!den_.is_one()) {
        normalize();
    }
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return Scalar(den_, num_);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
}

bool scalar_equals(const Scalar& x, const Scalar& y) { return x == y; }

Scalar Scalar::pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    Scalar result(1), base = *this;
    while (n > 0) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n > 0) base *= base;
    }
    return result;
}

std::string Scalar::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

Scalar q_number_twice(int twice_x) {
    if (twice_x == 0) return Scalar(0);
    // (v^m - v^{-m}) / (v^2 - v^{-2}) = v^{2-m} (v^{2m} - 1) / (v^4 - 1)
    const int m = twice_x;
    Scalar top = Scalar::v_pow(m) - Scalar::v_pow(-m);
    Scalar bottom = Scalar::v_pow(2) - Scalar::v_pow(-2);
    return top / bottom;
}

Scalar q_number(const mpq_class& x) {
    mpq_class t = 2 * x;
    if (t.get_den() != 1) throw std::invalid_argument("q_number needs a half-integer");
    return q_number_twice(static_cast<int>(t.get_num().get_si()));
}

namespace {

Scalar eval_poly(const Poly& p, const Assignment& values) {
    std::map<std::pair<int, int>, Scalar> powers;
    auto power_of = [&](int var, int e) -> const Scalar& {
        auto key = std::make_pair(var, e);
        auto it = powers.find(key);
        if (it != powers.end()) return it->second;
        return powers.emplace(key, values.at(static_cast<Var>(var)).pow(e)).first->second;
    };
    Scalar total;
    for (const auto& t : p.terms()) {
        Monomial kept{};
        Scalar factor(t.coeff);
        for (int i = 0; i < kNumVars; ++i) {
            if (t.mono[i] == 0) continue;
            if (values.count(static_cast<Var>(i)))
                factor *= power_of(i, t.mono[i]);
            else
                kept[i] = t.mono[i];
        }
        total += factor * Scalar(Poly::monomial(kept, 1));
    }
    return total;
}

std::vector<Poly> by_v_degree(const Poly& p) {
    std::vector<Poly> out(p.degree(Var::v) + 1);
    for (const auto& t : p.terms()) {
        Monomial rest = t.mono;
        const int d = rest[0];
        rest[0] = 0;
        out[d] += Poly::monomial(rest, t.coeff);
    }
    return out;
}

Poly value_at_one(const std::vector<Poly>& c) {
    Poly s;
    for (const auto& x : c) s += x;
    return s;
}

Poly slope_at_one(const std::vector<Poly>& c) {
    Poly s;
    for (std::size_t d = 1; d < c.size(); ++d) s += c[d].scaled(mpq_class(static_cast<long>(d)));
    return s;
}

// Divide by (v - 1); the caller has checked the value at 1 vanishes.
std::vector<Poly> divide_v_minus_one(const std::vector<Poly>& a) {
    const std::size_t n = a.size() - 1;
    std::vector<Poly> b(n);
    b[n - 1] = a[n];
    for (std::size_t k = n - 1; k >= 1; --k) b[k - 1] = a[k] + b[k];
    return b;
}

}  // namespace

Scalar specialize(const Scalar& x, const Assignment& values) {
    Scalar n = eval_poly(x.num(), values);
    Scalar d = eval_poly(x.den(), values);
    if (d.is_zero()) throw DivisionByZero("denominator vanishes under specialization");
    return n / d;
}

Jet jet_at_v1(const Scalar& x) {
    if (x.is_zero()) return {Scalar(0), Scalar(0)};
    auto n = by_v_degree(x.num());
    auto d = by_v_degree(x.den());
    Poly d1 = value_at_one(d);
    while (d1.is_zero()) {
        if (!value_at_one(n).is_zero()) throw PoleError("singular at q = 1");
        n = divide_v_minus_one(n);
        d = divide_v_minus_one(d);
        d1 = value_at_one(d);
    }
    Poly n1 = value_at_one(n);
    Poly n1p = slope_at_one(n);
    Poly d1p = slope_at_one(d);
    return {Scalar(n1, d1), Scalar(n1p * d1 - n1 * d1p, d1 * d1)};
}

}  // namespace qkmv

#include "qkmv/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qkmv {

namespace {

bool mono_greater(const Monomial& a, const Monomial& b) { return a > b; }

Monomial mono_add(const Monomial& a, const Monomial& b) {
    Monomial r{};
    for (int i = 0; i < kNumVars; ++i) r[i] = static_cast<std::int16_t>(a[i] + b[i]);
    return r;
}

bool mono_divides(const Monomial& d, const Monomial& m) {
    for (int i = 0; i < kNumVars; ++i)
        if (d[i] > m[i]) return false;
    return true;
}

}  // namespace

const char* var_name(Var x) {
    static const char* names[kNumVars] = {"v", "eta", "u", "z1", "z2", "z3", "hbar", "a"};
    return names[static_cast<int>(x)];
}

Poly::Poly(long c) {
    if (c != 0) terms_.push_back({Monomial{}, mpq_class(c)});
}

Poly::Poly(const mpq_class& c) {
    if (c != 0) terms_.push_back({Monomial{}, c});
}

Poly Poly::variable(Var x, int power) {
    Monomial m{};
    m[static_cast<int>(x)] = static_cast<std::int16_t>(power);
    return monomial(m, 1);
}

Poly Poly::monomial(const Monomial& m, const mpq_class& c) {
    for (auto e : m)
        if (e < 0) throw std::invalid_argument("negative exponent in Poly");
    Poly p;
    if (c != 0) p.terms_.push_back({m, c});
    return p;
}

Poly Poly::from_unsorted(std::vector<PolyTerm> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const PolyTerm& a, const PolyTerm& b) { return mono_greater(a.mono, b.mono); });
    Poly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
        } else {
            if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono == Monomial{});
}

bool Poly::is_one() const {
    return terms_.size() == 1 && terms_[0].mono == Monomial{} && terms_[0].coeff == 1;
}

mpq_class Poly::constant_value() const {
    if (terms_.empty()) return 0;
    return terms_[0].coeff;
}

int Poly::degree(Var x) const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono[static_cast<int>(x)]));
    return d;
}

bool Poly::depends_on(Var x) const {
    for (const auto& t : terms_)
        if (t.mono[static_cast<int>(x)] != 0) return true;
    return false;
}

bool Poly::only_in(Var x) const {
    for (const auto& t : terms_)
        for (int i = 0; i < kNumVars; ++i)
            if (i != static_cast<int>(x) && t.mono[i] != 0) return false;
    return true;
}

Monomial Poly::gcd_monomial() const {
    if (terms_.empty()) return Monomial{};
    Monomial g = terms_[0].mono;
    for (const auto& t : terms_)
        for (int i = 0; i < kNumVars; ++i) g[i] = std::min(g[i], t.mono[i]);
    return g;
}

Poly Poly::derivative(Var x) const {
    const int k = static_cast<int>(x);
    std::vector<PolyTerm> out;
    for (const auto& t : terms_) {
        if (t.mono[k] == 0) continue;
        PolyTerm d{t.mono, t.coeff * t.mono[k]};
        d.mono[k] -= 1;
        out.push_back(std::move(d));
    }
    return from_unsorted(std::move(out));
}

Poly Poly::scaled(const mpq_class& c) const {
    if (c == 0) return {};
    Poly p = *this;
    for (auto& t : p.terms_) t.coeff *= c;
    return p;
}

Poly Poly::times_monomial(const Monomial& m) const {
    Poly p = *this;
    for (auto& t : p.terms_) t.mono = mono_add(t.mono, m);
    return p;
}

Poly Poly::divided_by_monomial(const Monomial& m) const {
    Poly p = *this;
    for (auto& t : p.terms_)
        for (int i = 0; i < kNumVars; ++i) t.mono[i] = static_cast<std::int16_t>(t.mono[i] - m[i]);
    return p;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.terms_.empty()) return *this;
    std::vector<PolyTerm> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && mono_greater(terms_[i].mono, o.terms_[j].mono))) {
            out.push_back(std::move(terms_[i++]));
        } else if (i == terms_.size() || mono_greater(o.terms_[j].mono, terms_[i].mono)) {
            out.push_back(o.terms_[j++]);
        } else {
            mpq_class c = terms_[i].coeff + o.terms_[j].coeff;
            if (c != 0) out.push_back({terms_[i].mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    std::map<Monomial, mpq_class, std::greater<>> acc;
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) acc[mono_add(x.mono, y.mono)] += x.coeff * y.coeff;
    Poly p;
    p.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) p.terms_.push_back({m, c});
    return p;
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        mpq_class c = t.coeff;
        const bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        const bool unit = t.mono == Monomial{};
        if (c != 1 || unit) {
            os << c.get_str();
            if (!unit) os << "*";
        }
        bool sep = false;
        for (int i = 0; i < kNumVars; ++i) {
            if (t.mono[i] == 0) continue;
            if (sep) os << "*";
            os << var_name(static_cast<Var>(i));
            if (t.mono[i] != 1) os << "^" << t.mono[i];
            sep = true;
        }
    }
    return os.str();
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (b.is_one()) return a;
    Poly r = a;
    std::vector<PolyTerm> quot;
    const PolyTerm& lb = b.leading();
    while (!r.is_zero()) {
        const PolyTerm& lr = r.leading();
        if (!mono_divides(lb.mono, lr.mono)) return std::nullopt;
        Monomial m{};
        for (int i = 0; i < kNumVars; ++i) m[i] = static_cast<std::int16_t>(lr.mono[i] - lb.mono[i]);
        mpq_class c = lr.coeff / lb.coeff;
        r -= b.times_monomial(m).scaled(c);
        quot.push_back({m, c});
    }
    Poly q;
    for (auto& t : quot) q += Poly::monomial(t.mono, t.coeff);
    return q;
}

void upoly_trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

namespace {

UPoly upoly_rem(UPoly a, const UPoly& b) {
    const std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        mpq_class f = a.back() / b.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= f * b[i];
        upoly_trim(a);
    }
    return a;
}

void make_monic(UPoly& p) {
    if (p.empty()) return;
    mpq_class lc = p.back();
    for (auto& c : p) c /= lc;
}

}  // namespace

UPoly upoly_gcd(UPoly a, UPoly b) {
    upoly_trim(a);
    upoly_trim(b);
    while (!b.empty()) {
        UPoly r = upoly_rem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    make_monic(a);
    return a;
}

UPoly upoly_divide(const UPoly& a, const UPoly& b) {
    UPoly r = a;
    upoly_trim(r);
    if (r.empty()) return {};
    const std::size_t db = b.size() - 1;
    UPoly q(r.size() >= b.size() ? r.size() - db : 0);
    while (r.size() >= b.size()) {
        mpq_class f = r.back() / b.back();
        const std::size_t shift = r.size() - 1 - db;
        q[shift] = f;
        for (std::size_t i = 0; i <= db; ++i) r[shift + i] -= f * b[i];
        r.pop_back();
        upoly_trim(r);
    }
    if (!r.empty()) throw std::logic_error("upoly_divide: not exact");
    return q;
}

std::vector<std::pair<Monomial, UPoly>> v_coefficients(const Poly& p) {
    std::map<Monomial, UPoly, std::greater<>> parts;
    for (const auto& t : p.terms()) {
        Monomial rest = t.mono;
        const int d = rest[0];
        rest[0] = 0;
        UPoly& u = parts[rest];
        if (static_cast<int>(u.size()) <= d) u.resize(d + 1);
        u[d] = t.coeff;
    }
    return {parts.begin(), parts.end()};
}

Poly from_v_coefficients(const std::vector<std::pair<Monomial, UPoly>>& parts) {
    Poly p;
    for (const auto& [rest, u] : parts) {
        for (std::size_t d = 0; d < u.size(); ++d) {
            if (u[d] == 0) continue;
            Monomial m = rest;
            m[0] = static_cast<std::int16_t>(d);
            p += Poly::monomial(m, u[d]);
        }
    }
    return p;
}

UPoly to_upoly(const Poly& p) {
    UPoly u;
    for (const auto& t : p.terms()) {
        const int d = t.mono[0];
        if (static_cast<int>(u.size()) <= d) u.resize(d + 1);
        u[d] = t.coeff;
    }
    return u;
}

Poly from_upoly(const UPoly& u) {
    Poly p;
    for (std::size_t d = 0; d < u.size(); ++d)
        if (u[d] != 0) p += Poly::variable(Var::v, static_cast<int>(d)).scaled(u[d]);
    return p;
}

}  // namespace qkmv

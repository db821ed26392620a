#include "qkmv/freealg.hpp"

#include <algorithm>
#include <sstream>

namespace qkmv {

namespace {

std::string half_str(int twice) {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

// "a*name" with a a half-integer, sign handled by the caller.
void append_scaled(std::string& out, int twice, const std::string& name) {
    const bool neg = twice < 0;
    const int mag = neg ? -twice : twice;
    if (out.empty()) {
        if (neg) out += "-";
    } else {
        out += neg ? "-" : "+";
    }
    if (mag != 2) out += half_str(mag);
    out += name;
}

}  // namespace

Lambda Lambda::unit(int l, int i) {
    Lambda r = zero(l);
    r.twice[i] = 2;
    return r;
}

Lambda Lambda::c_hat(int l) {
    Lambda r = zero(l);
    r.twice[0] = 2;
    return r;
}

Lambda Lambda::from_root(const Root& r) {
    Lambda lam = zero(static_cast<int>(r.size()));
    for (std::size_t i = 0; i < r.size(); ++i) lam.twice[i + 1] = 2 * r[i];
    return lam;
}

bool Lambda::is_zero() const {
    for (int t : twice)
        if (t) return false;
    return true;
}

Lambda Lambda::operator+(const Lambda& o) const {
    Lambda r = *this;
    for (std::size_t i = 0; i < r.twice.size(); ++i) r.twice[i] += o.twice[i];
    return r;
}

Lambda Lambda::operator-(const Lambda& o) const { return *this + (-o); }

Lambda Lambda::operator-() const { return scaled(-1); }

Lambda Lambda::scaled(int k) const {
    Lambda r = *this;
    for (auto& t : r.twice) t *= k;
    return r;
}

Lambda Lambda::halved() const {
    Lambda r = *this;
    for (auto& t : r.twice) {
        if (t % 2) throw std::invalid_argument("Lambda::halved on odd entry");
        t /= 2;
    }
    return r;
}

int Lambda::twice_pairing(const Root& weight) const {
    int s = 0;
    for (std::size_t i = 0; i < weight.size(); ++i) s += twice[i + 1] * weight[i];
    return s;
}

std::string Lambda::str() const {
    std::string out;
    for (std::size_t i = 0; i < twice.size(); ++i) {
        if (!twice[i]) continue;
        const std::string name = i == 0 ? "c" : "e_{" + std::to_string(i) + ",-" + std::to_string(i) + "}";
        append_scaled(out, twice[i], name);
    }
    return out.empty() ? "0" : out;
}

namespace {

GenSym with_root(SymKind k, const Root& r) {
    if (r.size() + 1 > kMaxCoords) throw std::invalid_argument("rank too large for GenSym");
    GenSym g;
    g.kind = k;
    g.l = static_cast<std::int8_t>(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) g.x[i + 1] = static_cast<std::int8_t>(r[i]);
    return g;
}

GenSym with_lambda(SymKind k, const Lambda& lam, int twice_c) {
    if (lam.twice.size() > kMaxCoords) throw std::invalid_argument("rank too large for GenSym");
    GenSym g;
    g.kind = k;
    g.l = static_cast<std::int8_t>(lam.rank());
    g.c2 = static_cast<std::int8_t>(twice_c);
    for (std::size_t i = 0; i < lam.twice.size(); ++i) g.x[i] = static_cast<std::int8_t>(lam.twice[i]);
    return g;
}

}  // namespace

GenSym GenSym::root_vec(const Root& r) { return with_root(SymKind::RootVec, r); }
GenSym GenSym::cartan_exp(const Lambda& lam) { return with_lambda(SymKind::CartanExp, lam, 0); }
GenSym GenSym::q_bracket(const Lambda& lam, int twice_c) { return with_lambda(SymKind::QBracket, lam, twice_c); }
GenSym GenSym::cartan_lin(const Lambda& lam, int twice_c) { return with_lambda(SymKind::CartanLin, lam, twice_c); }
GenSym GenSym::xi(const Root& theta) { return with_root(SymKind::Xi, -theta); }
GenSym GenSym::xi_classical(const Root& theta) { return with_root(SymKind::XiClassical, -theta); }
GenSym GenSym::affine_vec(const Root& theta) { return with_root(SymKind::AffineVec, -theta); }

Root GenSym::weight() const {
    Root r(l, 0);
    if (kind == SymKind::RootVec || is_xi())
        for (int i = 0; i < l; ++i) r[i] = x[i + 1];
    return r;
}

Lambda GenSym::lambda() const {
    Lambda lam = Lambda::zero(l);
    for (int i = 0; i <= l; ++i) lam.twice[i] = x[i];
    return lam;
}

std::string GenSym::str() const {
    switch (kind) {
        case SymKind::RootVec: return root_name(weight());
        case SymKind::Xi: return "xi";
        case SymKind::XiClassical: return "xi'";
        case SymKind::AffineVec: return "e_{d-t}";
        case SymKind::CartanExp: return "q^{" + lambda().str() + "}";
        case SymKind::QBracket: {
            std::string s = lambda().str();
            if (c2) s += (c2 > 0 ? "+" : "-") + half_str(c2 > 0 ? c2 : -c2);
            return "[" + s + "]";
        }
        case SymKind::CartanLin: {
            std::string s = lambda().str();
            if (c2) return "(" + s + (c2 > 0 ? "+" : "-") + half_str(c2 > 0 ? c2 : -c2) + ")";
            return s;
        }
    }
    return "?";
}

std::string word_str(const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += " ";
        s += w[i].str();
    }
    return s;
}

Root word_weight(const Word& w, int l) {
    Root r(l, 0);
    for (const auto& g : w) r = r + g.weight();
    return r;
}

int word_xi_count(const Word& w) {
    int n = 0;
    for (const auto& g : w) n += g.is_xi();
    return n;
}

Word concat(const Word& a, const Word& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    Word w;
    w.reserve(a.size() + b.size());
    w.insert(w.end(), a.begin(), a.end());
    auto it = b.begin();
    if (w.back().kind == SymKind::CartanExp && it->kind == SymKind::CartanExp) {
        Lambda sum = w.back().lambda() + it->lambda();
        w.pop_back();
        if (!sum.is_zero()) w.push_back(GenSym::cartan_exp(sum));
        ++it;
        // a merge can expose another CartanExp pair only if words were not canonical
    }
    w.insert(w.end(), it, b.end());
    return w;
}

namespace {

Scalar half(int twice) {
    mpq_class h(twice, 2);
    h.canonicalize();
    return Scalar(h);
}

}  // namespace

NcExpr gen(const GenSym& g) {
    const int l = g.l;
    switch (g.kind) {
        case SymKind::CartanExp:
            if (g.lambda().is_zero()) return NcExpr(Scalar(1));
            break;
        case SymKind::QBracket:
            if (g.lambda().is_zero()) return NcExpr(q_number_twice(g.c2));
            break;
        case SymKind::CartanLin: {
            Lambda lam = g.lambda();
            NcExpr out(half(g.c2));
            for (int i = 0; i <= l; ++i) {
                if (!lam.twice[i]) continue;
                GenSym unit = GenSym::cartan_lin(i == 0 ? Lambda::c_hat(l) : Lambda::unit(l, i), 0);
                out += NcExpr::single({Word{unit}}, half(lam.twice[i]));
            }
            return out;
        }
        default: break;
    }
    return NcExpr::single({Word{g}}, Scalar(1));
}

NcExpr word_expr(const Word& w, const Scalar& c) {
    NcExpr out(c);
    for (const auto& g : w) out = out * gen(g);
    return out;
}

TensorExpr tensor(const NcExpr& a, const NcExpr& b) {
    std::vector<TensorExpr::Term> terms;
    terms.reserve(a.size() * b.size());
    for (const auto& x : a.terms())
        for (const auto& y : b.terms()) terms.push_back({{x.key[0], y.key[0]}, x.coeff * y.coeff});
    return TensorExpr::from_terms(std::move(terms));
}

Tensor3Expr tensor3(const NcExpr& a, const NcExpr& b, const NcExpr& c) {
    std::vector<Tensor3Expr::Term> terms;
    for (const auto& x : a.terms())
        for (const auto& y : b.terms())
            for (const auto& z : c.terms())
                terms.push_back({{x.key[0], y.key[0], z.key[0]}, x.coeff * y.coeff * z.coeff});
    return Tensor3Expr::from_terms(std::move(terms));
}

std::optional<Root> homogeneous_weight(const NcExpr& x, int l) {
    std::optional<Root> w;
    for (const auto& t : x.terms()) {
        Root r = word_weight(t.key[0], l);
        if (!w)
            w = r;
        else if (*w != r)
            throw NonHomogeneous("expression is not weight-homogeneous");
    }
    return w;
}

bool is_homogeneous(const NcExpr& x, int l) {
    try {
        homogeneous_weight(x, l);
        return true;
    } catch (const NonHomogeneous&) {
        return false;
    }
}

int xi_degree(const NcExpr& x) {
    int d = 0;
    for (const auto& t : x.terms()) d = std::max(d, word_xi_count(t.key[0]));
    return d;
}

NcExpr commutator(const NcExpr& x, const NcExpr& y) { return x * y - y * x; }

NcExpr q_commutator(const NcExpr& x, const NcExpr& y, int sign, int l) {
    auto wx = homogeneous_weight(x, l);
    auto wy = homogeneous_weight(y, l);
    if (!wx || !wy) return {};
    return x * y - Scalar::q_pow(sign * inner(*wx, *wy)) * (y * x);
}

NcExpr ad_q_power(const NcExpr& e, int n, const NcExpr& y, int l) {
    if (n < 1) throw std::invalid_argument("ad_q_power needs n >= 1");
    NcExpr r = y;
    for (int k = 0; k < n; ++k) r = q_commutator(e, r, +1, l);
    return r;
}

NcExpr ad_q_power(const GenSym& e, int n, const NcExpr& y) { return ad_q_power(gen(e), n, y, e.l); }

NcExpr expand_normal_form(const NcExpr& x) {
    // Terms are canonical by construction; re-running the canonicalization
    // through word_expr keeps the operation idempotent and linear.
    NcExpr out;
    for (const auto& t : x.terms()) out += word_expr(t.key[0], t.coeff);
    return out;
}

std::pair<NcExpr, NcExpr> word_jet(const Word& w) {
    NcExpr w0(Scalar(1)), w1;
    for (const auto& g : w) {
        NcExpr g0, g1;
        switch (g.kind) {
            case SymKind::CartanExp:
                g0 = NcExpr(Scalar(1));
                g1 = gen(GenSym::cartan_lin(g.lambda(), 0)) * Scalar(2);
                break;
            case SymKind::QBracket: g0 = gen(GenSym::cartan_lin(g.lambda(), g.c2)); break;
            case SymKind::Xi: g0 = gen(GenSym::xi_classical(-g.weight())); break;
            default: g0 = gen(g); break;
        }
        w1 = w1 * g0 + w0 * g1;
        w0 = w0 * g0;
    }
    return {w0, w1};
}

NcExpr substitute(const NcExpr& x, const LetterMap& f) {
    std::map<GenSym, std::optional<NcExpr>> cache;
    auto image = [&](const GenSym& g) -> const std::optional<NcExpr>& {
        auto it = cache.find(g);
        if (it == cache.end()) it = cache.emplace(g, f(g)).first;
        return it->second;
    };
    // Collected once at the end: merging term by term is quadratic.
    std::vector<NcExpr::Term> out;
    for (const auto& t : x.terms()) {
        const Word& word = t.key[0];
        if (std::none_of(word.begin(), word.end(), [&](const GenSym& g) { return image(g).has_value(); })) {
            out.push_back(t);
            continue;
        }
        NcExpr w(t.coeff);
        for (const auto& g : word) {
            const auto& img = image(g);
            w = w * (img ? *img : gen(g));
        }
        out.insert(out.end(), w.terms().begin(), w.terms().end());
    }
    return NcExpr::from_terms(std::move(out));
}

std::optional<Scalar> proportionality(const NcExpr& a, const NcExpr& b) {
    if (a.is_zero() && b.is_zero()) return Scalar(1);
    if (a.size() != b.size() || b.is_zero()) return std::nullopt;
    Scalar c = a.terms()[0].coeff / b.terms()[0].coeff;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.terms()[i].key != b.terms()[i].key) return std::nullopt;
        if (!(a.terms()[i].coeff == c * b.terms()[i].coeff)) return std::nullopt;
    }
    return c;
}

NcExpr cartan_left_form(const NcExpr& x) {
    std::vector<NcExpr::Term> out;
    out.reserve(x.size());
    for (const auto& t : x.terms()) {
        const Word& w = t.key[0];
        Word rest;
        std::optional<Lambda> lam;
        int twice_exp = 0;
        for (const auto& g : w) {
            if (g.kind != SymKind::CartanExp) {
                rest.push_back(g);
                continue;
            }
            // g passes over every non-Cartan letter already collected
            for (const auto& y : rest) twice_exp -= g.lambda().twice_pairing(y.weight());
            lam = lam ? *lam + g.lambda() : g.lambda();
        }
        Word key;
        if (lam && !lam->is_zero()) key.push_back(GenSym::cartan_exp(*lam));
        key.insert(key.end(), rest.begin(), rest.end());
        // twice_pairing is doubled and q = v^2, so the v exponent equals twice_exp
        out.push_back({{std::move(key)}, t.coeff * Scalar::v_pow(twice_exp)});
    }
    return NcExpr::from_terms(std::move(out));
}

NcExpr cartan_lin_left_form(const NcExpr& x) {
    std::map<Word, Scalar> acc;
    std::vector<std::pair<Word, Scalar>> work;
    for (const auto& t : x.terms()) work.emplace_back(t.key[0], t.coeff);
    auto is_lin = [](const GenSym& g) { return g.kind == SymKind::CartanLin; };
    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();
        auto first_other = std::find_if_not(w.begin(), w.end(), is_lin);
        auto h = std::find_if(first_other, w.end(), is_lin);
        if (h == w.end()) {
            std::sort(w.begin(), first_other);
            auto [it, inserted] = acc.try_emplace(std::move(w), c);
            if (!inserted) it->second += c;
            continue;
        }
        // y h = h y - h(wt y) y
        const std::size_t p = static_cast<std::size_t>(h - w.begin());
        const int twice = w[p].lambda().twice_pairing(w[p - 1].weight());
        if (twice != 0) {
            Word shorter = w;
            shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(p));
            work.emplace_back(std::move(shorter), c * Scalar(mpq_class(-twice, 2)));
        }
        std::swap(w[p - 1], w[p]);
        work.emplace_back(std::move(w), c);
    }
    std::vector<NcExpr::Term> out;
    for (auto& [w, c] : acc) out.push_back({{w}, c});
    return NcExpr::from_terms(std::move(out));
}

}  // namespace qkmv

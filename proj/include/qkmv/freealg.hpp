#pragma once

#include "qkmv/rootsys.hpp"
#include "qkmv/scalar.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qkmv {

inline constexpr int kMaxCoords = 12;  // c-hat plus up to 11 diagonal units

// Half-integer vector over {c-hat, e_{1,-1}, ..., e_{l,-l}}, stored doubled.
// Index 0 is c-hat.
struct Lambda {
    std::vector<int> twice;

    static Lambda zero(int l) { return {std::vector<int>(l + 1, 0)}; }
    static Lambda unit(int l, int i);  // e_{i,-i}
    static Lambda c_hat(int l);
    static Lambda from_root(const Root& r);  // sum r_i e_{i,-i}
    int rank() const { return static_cast<int>(twice.size()) - 1; }
    bool is_zero() const;
    Lambda operator+(const Lambda& o) const;
    Lambda operator-(const Lambda& o) const;
    Lambda operator-() const;
    Lambda scaled(int k) const;
    Lambda halved() const;  // requires even entries
    // Twice the value of the functional on an eps-weight (c-hat acts as zero).
    int twice_pairing(const Root& weight) const;
    std::string str() const;
    friend bool operator==(const Lambda&, const Lambda&) = default;
};

enum class SymKind : std::uint8_t { RootVec, CartanExp, QBracket, CartanLin, Xi, XiClassical, AffineVec };

// A generator symbol. RootVec, Xi and AffineVec (e_{delta-theta}) carry an
// eps-weight, the Cartan kinds a doubled lambda; QBracket and CartanLin also
// carry a doubled constant. c-hat is the unit functional CartanLin(c_hat).
struct GenSym {
    SymKind kind = SymKind::RootVec;
    std::int8_t l = 0;
    std::int8_t c2 = 0;
    std::array<std::int8_t, kMaxCoords> x{};

    static GenSym root_vec(const Root& r);
    static GenSym cartan_exp(const Lambda& lam);
    static GenSym q_bracket(const Lambda& lam, int twice_c);
    static GenSym cartan_lin(const Lambda& lam, int twice_c);
    static GenSym xi(const Root& theta);
    static GenSym xi_classical(const Root& theta);
    static GenSym affine_vec(const Root& theta);

    Root weight() const;
    Root root() const { return weight(); }
    Lambda lambda() const;
    // Affine letters all have weight -theta and count towards the xi-degree.
    bool is_xi() const {
        return kind == SymKind::Xi || kind == SymKind::XiClassical || kind == SymKind::AffineVec;
    }
    bool is_cartan() const {
        return kind == SymKind::CartanExp || kind == SymKind::QBracket || kind == SymKind::CartanLin;
    }
    std::string str() const;

    friend auto operator<=>(const GenSym&, const GenSym&) = default;
};

using Word = std::vector<GenSym>;

std::string word_str(const Word& w);
Root word_weight(const Word& w, int l);
int word_xi_count(const Word& w);
// Concatenation that merges adjacent CartanExp letters (they are group-like)
// and drops q^0.
Word concat(const Word& a, const Word& b);

// Finite sum of coefficient * (word_1 (x) ... (x) word_N), kept canonical:
// sorted by key, merged, no zero coefficients.
template <int N>
class MultiExpr {
public:
    using Key = std::array<Word, N>;
    struct Term {
        Key key;
        Scalar coeff;
    };

    MultiExpr() = default;
    explicit MultiExpr(const Scalar& c) {
        if (!c.is_zero()) terms_.push_back({Key{}, c});
    }
    static MultiExpr from_terms(std::vector<Term> terms) {
        std::map<Key, Scalar> acc;
        for (auto& t : terms) add_to(acc, std::move(t.key), t.coeff);
        return from_map(std::move(acc));
    }
    static MultiExpr single(Key key, const Scalar& c) {
        MultiExpr e;
        if (!c.is_zero()) e.terms_.push_back({std::move(key), c});
        return e;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    MultiExpr& operator+=(const MultiExpr& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) return *this = o;
        std::vector<Term> merged;
        merged.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < o.terms_.size()) {
            if (j == o.terms_.size() || (i < terms_.size() && terms_[i].key < o.terms_[j].key)) {
                merged.push_back(std::move(terms_[i++]));
            } else if (i == terms_.size() || o.terms_[j].key < terms_[i].key) {
                merged.push_back(o.terms_[j++]);
            } else {
                Scalar c = terms_[i].coeff + o.terms_[j].coeff;
                if (!c.is_zero()) merged.push_back({std::move(terms_[i].key), std::move(c)});
                ++i;
                ++j;
            }
        }
        terms_ = std::move(merged);
        return *this;
    }
    MultiExpr& operator-=(const MultiExpr& o) { return *this += o * Scalar(-1); }
    friend MultiExpr operator+(MultiExpr a, const MultiExpr& b) { return a += b; }
    friend MultiExpr operator-(MultiExpr a, const MultiExpr& b) { return a -= b; }
    MultiExpr operator-() const { return *this * Scalar(-1); }

    friend MultiExpr operator*(const MultiExpr& a, const Scalar& c) {
        if (c.is_zero()) return {};
        MultiExpr r = a;
        for (auto& t : r.terms_) t.coeff *= c;
        return r;
    }
    friend MultiExpr operator*(const Scalar& c, const MultiExpr& a) { return a * c; }

    friend MultiExpr operator*(const MultiExpr& a, const MultiExpr& b) {
        std::map<Key, Scalar> acc;
        for (const auto& x : a.terms_)
            for (const auto& y : b.terms_) {
                Key k;
                for (int s = 0; s < N; ++s) k[s] = concat(x.key[s], y.key[s]);
                add_to(acc, std::move(k), x.coeff * y.coeff);
            }
        return from_map(std::move(acc));
    }

    friend bool operator==(const MultiExpr& a, const MultiExpr& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].key != b.terms_[i].key || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
        return true;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            if (i) out += " + ";
            out += "(" + terms_[i].coeff.str() + ")";
            for (int s = 0; s < N; ++s) {
                out += s == 0 ? " " : " (x) ";
                out += terms_[i].key[s].empty() ? "1" : word_str(terms_[i].key[s]);
            }
        }
        return out;
    }

private:
    static void add_to(std::map<Key, Scalar>& acc, Key key, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = acc.try_emplace(std::move(key), c);
        if (!inserted) it->second += c;
    }
    static MultiExpr from_map(std::map<Key, Scalar> acc) {
        MultiExpr e;
        e.terms_.reserve(acc.size());
        for (auto& [k, c] : acc)
            if (!c.is_zero()) e.terms_.push_back({k, std::move(c)});
        return e;
    }
    std::vector<Term> terms_;
};

using NcExpr = MultiExpr<1>;
using TensorExpr = MultiExpr<2>;
using Tensor3Expr = MultiExpr<3>;

struct NonHomogeneous : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Expression for a single generator. CartanLin is expanded linearly over the
// unit functionals; CartanExp(0) is 1; QBracket(0, c) is the number [c].
NcExpr gen(const GenSym& g);
NcExpr word_expr(const Word& w, const Scalar& c = Scalar(1));
inline NcExpr scalar_expr(const Scalar& c) { return NcExpr(c); }

TensorExpr tensor(const NcExpr& a, const NcExpr& b);
Tensor3Expr tensor3(const NcExpr& a, const NcExpr& b, const NcExpr& c);

// Common eps-weight of all terms; nullopt for the zero expression.
std::optional<Root> homogeneous_weight(const NcExpr& x, int l);
bool is_homogeneous(const NcExpr& x, int l);
int xi_degree(const NcExpr& x);

NcExpr commutator(const NcExpr& x, const NcExpr& y);
// xy - q^{sign (wt x, wt y)} yx
NcExpr q_commutator(const NcExpr& x, const NcExpr& y, int sign, int l);
// (ad_q e)^n y, pairing recomputed from the current weight at every step.
NcExpr ad_q_power(const GenSym& e, int n, const NcExpr& y);
NcExpr ad_q_power(const NcExpr& e, int n, const NcExpr& y, int l);

NcExpr expand_normal_form(const NcExpr& x);

// First-order expansion of a single word at v = 1 + s.
std::pair<NcExpr, NcExpr> word_jet(const Word& w);

// First-order expansion at v = 1 + s over the classical alphabet.
template <int N>
std::pair<MultiExpr<N>, MultiExpr<N>> jet_classical(const MultiExpr<N>& x) {
    using M = MultiExpr<N>;
    auto lift = [](const NcExpr& e, int slot) {
        std::vector<typename M::Term> terms;
        for (const auto& t : e.terms()) {
            typename M::Key k{};
            k[slot] = t.key[0];
            terms.push_back({std::move(k), t.coeff});
        }
        return M::from_terms(std::move(terms));
    };
    M c0, c1;
    for (const auto& t : x.terms()) {
        Jet j = jet_at_v1(t.coeff);
        M p0(Scalar(1)), p1;
        for (int s = 0; s < N; ++s) {
            auto [w0, w1] = word_jet(t.key[s]);
            M g0 = lift(w0, s), g1 = lift(w1, s);
            p1 = p1 * g0 + p0 * g1;
            p0 = p0 * g0;
        }
        c0 += p0 * j.c0;
        c1 += p1 * j.c0 + p0 * j.c1;
    }
    return {c0, c1};
}

template <int N>
MultiExpr<N> specialize_expr(const MultiExpr<N>& x, const Assignment& values) {
    std::vector<typename MultiExpr<N>::Term> out;
    out.reserve(x.size());
    for (const auto& t : x.terms()) out.push_back({t.key, specialize(t.coeff, values)});
    return MultiExpr<N>::from_terms(std::move(out));
}

// Letter-wise substitution: every letter is replaced by the expression f
// returns (nullopt keeps it). Used for xi -> tau e~ and renamings.
using LetterMap = std::function<std::optional<NcExpr>(const GenSym&)>;
NcExpr substitute(const NcExpr& x, const LetterMap& f);

template <int N>
MultiExpr<N> substitute_multi(const MultiExpr<N>& x, const LetterMap& f) {
    using M = MultiExpr<N>;
    M out;
    for (const auto& t : x.terms()) {
        M term(t.coeff);
        for (int s = 0; s < N; ++s) {
            NcExpr img = substitute(NcExpr::single({t.key[s]}, Scalar(1)), f);
            std::vector<typename M::Term> lifted;
            for (const auto& u : img.terms()) {
                typename M::Key k{};
                k[s] = u.key[0];
                lifted.push_back({std::move(k), u.coeff});
            }
            term = term * M::from_terms(std::move(lifted));
        }
        out += term;
    }
    return out;
}

// Unique monomial coefficient ratio a = c * b, if any.
std::optional<Scalar> proportionality(const NcExpr& a, const NcExpr& b);

// Moves every q^{lambda} to the front of its word using
// q^{lambda} x = q^{(lambda, wt x)} x q^{lambda}. This is a quotient of the
// free algebra, used where the Cartan relations are assumed.
NcExpr cartan_left_form(const NcExpr& x);
// Classical counterpart: moves every Cartan element to the front of its word
// using y h = h y - h(wt y) y.
NcExpr cartan_lin_left_form(const NcExpr& x);

}  // namespace qkmv

#include "qkmv/cybe.hpp"

#include <sstream>

namespace qkmv::cybe {

namespace {

using Word = std::vector<int>;
using WordTensor = std::map<std::pair<Word, Word>, Scalar>;

void add_to(WordTensor& t, const std::pair<Word, Word>& key, const Scalar& s) {
    Scalar& slot = t[key];
    slot += s;
    if (slot.is_zero()) t.erase(key);
}

WordTensor multiply(const WordTensor& a, const WordTensor& b) {
    WordTensor out;
    for (const auto& [ka, sa] : a)
        for (const auto& [kb, sb] : b) {
            Word l = ka.first, r = ka.second;
            l.insert(l.end(), kb.first.begin(), kb.first.end());
            r.insert(r.end(), kb.second.begin(), kb.second.end());
            add_to(out, {l, r}, sa * sb);
        }
    return out;
}

// Primitive coproduct of a word, expanded letter by letter.
WordTensor delta0(const Word& w) {
    WordTensor out{{{Word{}, Word{}}, Scalar(1)}};
    for (int x : w) out = multiply(out, WordTensor{{{Word{x}, Word{}}, Scalar(1)}, {{Word{}, Word{x}}, Scalar(1)}});
    return out;
}

std::array<Scalar, kDim * kDim * kDim> make_structure_constants() {
    std::array<Scalar, kDim * kDim * kDim> f{};
    auto set = [&](int i, int j, int k, long v) {
        f[(i * kDim + j) * kDim + k] = Scalar(v);
        f[(j * kDim + i) * kDim + k] = Scalar(-v);
    };
    set(EP, EM, H, 1);
    set(H, EP, EP, 2);
    set(H, EM, EM, -2);
    return f;
}

// Brackets of basis elements as sparse lists.
const std::vector<std::pair<int, Scalar>>& basis_bracket(int i, int j) {
    static const auto table = [] {
        std::array<std::vector<std::pair<int, Scalar>>, kDim * kDim> t;
        for (int a = 0; a < kDim; ++a)
            for (int b = 0; b < kDim; ++b)
                for (int k = 0; k < kDim; ++k)
                    if (!structure_constant(a, b, k).is_zero()) t[a * kDim + b].push_back({k, structure_constant(a, b, k)});
        return t;
    }();
    return table[i * kDim + j];
}

}  // namespace

const char* basis_name(int i) {
    static const char* names[] = {"h", "e+", "e-"};
    return names[i];
}

const Scalar& structure_constant(int i, int j, int k) {
    static const auto f = make_structure_constants();
    return f[(i * kDim + j) * kDim + k];
}

LieElement LieElement::basis(int i) {
    LieElement x;
    x.c[i] = Scalar(1);
    return x;
}

bool LieElement::is_zero() const {
    for (const auto& s : c)
        if (!s.is_zero()) return false;
    return true;
}

LieElement& LieElement::operator+=(const LieElement& o) {
    for (int i = 0; i < kDim; ++i) c[i] += o.c[i];
    return *this;
}

LieElement operator*(const Scalar& s, LieElement a) {
    for (auto& x : a.c) x *= s;
    return a;
}

bool operator==(const LieElement& a, const LieElement& b) {
    for (int i = 0; i < kDim; ++i)
        if (!(a.c[i] == b.c[i])) return false;
    return true;
}

LieElement bracket(const LieElement& x, const LieElement& y) {
    LieElement out;
    for (int i = 0; i < kDim; ++i) {
        if (x.c[i].is_zero()) continue;
        for (int j = 0; j < kDim; ++j) {
            if (y.c[j].is_zero()) continue;
            for (const auto& [k, f] : basis_bracket(i, j)) out.c[k] += f * x.c[i] * y.c[j];
        }
    }
    return out;
}

bool TwoTensor::is_zero() const {
    for (const auto& s : c)
        if (!s.is_zero()) return false;
    return true;
}

TwoTensor TwoTensor::flip() const {
    TwoTensor out;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) out.at(j, i) = at(i, j);
    return out;
}

TwoTensor& TwoTensor::operator+=(const TwoTensor& o) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
}

TwoTensor& TwoTensor::operator-=(const TwoTensor& o) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
    return *this;
}

TwoTensor operator*(const Scalar& s, TwoTensor a) {
    for (auto& x : a.c) x *= s;
    return a;
}

bool operator==(const TwoTensor& a, const TwoTensor& b) { return (a - b).is_zero(); }

std::string TwoTensor::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            if (at(i, j).is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << at(i, j).str() << ") " << basis_name(i) << "(x)" << basis_name(j);
        }
    return first ? "0" : os.str();
}

TwoTensor tensor(const LieElement& x, const LieElement& y) {
    TwoTensor out;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) out.at(i, j) = x.c[i] * y.c[j];
    return out;
}

bool ThreeTensor::is_zero() const { return nonzero_count() == 0; }

int ThreeTensor::nonzero_count() const {
    int n = 0;
    for (const auto& s : c) n += s.is_zero() ? 0 : 1;
    return n;
}

Quadratic casimir_c2() {
    const Scalar half = Scalar(1) / Scalar(2);
    return {{{H, H}, half}, {{EM, EP}, Scalar(1)}, {{EP, EM}, Scalar(1)}};
}

TwoTensor omega2() {
    WordTensor d;
    for (const auto& [w, s] : casimir_c2()) {
        const Word word{w.first, w.second};
        for (const auto& [k, x] : delta0(word)) add_to(d, k, s * x);
        add_to(d, {word, Word{}}, -s);
        add_to(d, {Word{}, word}, -s);
    }
    TwoTensor out;
    const Scalar half = Scalar(1) / Scalar(2);
    for (const auto& [k, s] : d) {
        // Only the degree (1, 1) component survives the subtraction.
        if (k.first.size() != 1 || k.second.size() != 1) throw std::logic_error("Casimir two-tensor off degree (1,1)");
        out.at(k.first[0], k.second[0]) += half * s;
    }
    return out;
}

std::string rkind_name(RKind k) {
    switch (k) {
        case RKind::Rational: return "rational";
        case RKind::Trigonometric: return "trigonometric";
        case RKind::Sum: return "sum";
    }
    return "?";
}

const std::vector<RKind>& all_rkinds() {
    static const std::vector<RKind> k{RKind::Rational, RKind::Trigonometric, RKind::Sum};
    return k;
}

TwoTensor r_matrix(RKind kind, const Scalar& zi, const Scalar& zj) {
    if (zi == zj) throw CoincidentPoints("r-matrix evaluated at coincident points");
    const Scalar diff = zi - zj;
    TwoTensor out;
    if (kind != RKind::Trigonometric) out += (Scalar::variable(Var::eta) / diff) * omega2();
    if (kind != RKind::Rational) {
        TwoTensor t = ((zi + zj) / diff) * omega2();
        t.at(EM, EP) += Scalar(1);
        t.at(EP, EM) -= Scalar(1);
        out += Scalar::variable(Var::hbar) * t;
    }
    return out;
}

TwoTensor r_matrix(RKind kind, Var zi, Var zj) {
    return r_matrix(kind, Scalar::variable(zi), Scalar::variable(zj));
}

ThreeTensor cybe_defect(const TwoTensor& r12, const TwoTensor& r13, const TwoTensor& r23) {
    ThreeTensor out;
    for (int a = 0; a < kDim; ++a)
        for (int b = 0; b < kDim; ++b) {
            const Scalar& f = r12.at(a, b);
            for (int c = 0; c < kDim; ++c)
                for (int d = 0; d < kDim; ++d) {
                    // [r12, r13] = f g [a, c] (x) b (x) d
                    const Scalar& g13 = r13.at(c, d);
                    if (!f.is_zero() && !g13.is_zero())
                        for (const auto& [k, s] : basis_bracket(a, c)) out.at(k, b, d) += s * f * g13;
                    // [r12, r23] = f g a (x) [b, c] (x) d
                    const Scalar& g23 = r23.at(c, d);
                    if (!f.is_zero() && !g23.is_zero())
                        for (const auto& [k, s] : basis_bracket(b, c)) out.at(a, k, d) += s * f * g23;
                }
        }
    // [r13, r23] = f g a (x) c (x) [b, d]
    for (int a = 0; a < kDim; ++a)
        for (int b = 0; b < kDim; ++b) {
            const Scalar& f = r13.at(a, b);
            if (f.is_zero()) continue;
            for (int c = 0; c < kDim; ++c)
                for (int d = 0; d < kDim; ++d) {
                    const Scalar& g = r23.at(c, d);
                    if (g.is_zero()) continue;
                    for (const auto& [k, s] : basis_bracket(b, d)) out.at(a, c, k) += s * f * g;
                }
        }
    return out;
}

ThreeTensor cybe_defect(RKind kind) {
    return cybe_defect(r_matrix(kind, Var::z1, Var::z2), r_matrix(kind, Var::z1, Var::z3),
                       r_matrix(kind, Var::z2, Var::z3));
}

TwoTensor shift_defect() {
    const Scalar u = Scalar::variable(Var::z1), w = Scalar::variable(Var::z2);
    const Scalar half_a = Scalar::variable(Var::a) / Scalar(2);
    const Scalar factor = Scalar::variable(Var::hbar) * Scalar::variable(Var::a) / Scalar::variable(Var::eta);
    return r_matrix(RKind::Trigonometric, u + half_a, w + half_a) - r_matrix(RKind::Trigonometric, u, w) -
           factor * r_matrix(RKind::Rational, u, w);
}

TwoTensor unitarity_defect(RKind kind) {
    return r_matrix(kind, Var::z1, Var::z2) + r_matrix(kind, Var::z2, Var::z1).flip();
}

TwoTensor ad_action(const LieElement& x, const TwoTensor& t) {
    TwoTensor out;
    for (int a = 0; a < kDim; ++a)
        for (int b = 0; b < kDim; ++b) {
            const Scalar& f = t.at(a, b);
            if (f.is_zero()) continue;
            const LieElement xa = bracket(x, LieElement::basis(a)), xb = bracket(x, LieElement::basis(b));
            for (int k = 0; k < kDim; ++k) {
                if (!xa.c[k].is_zero()) out.at(k, b) += f * xa.c[k];
                if (!xb.c[k].is_zero()) out.at(a, k) += f * xb.c[k];
            }
        }
    return out;
}

TwoTensor cocommutator(RKind kind, const LieElement& x) { return ad_action(x, r_matrix(kind, Var::z1, Var::z2)); }

}  // namespace qkmv::cybe

#include "qkmv/relations.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace qkmv {

std::string family_name(Family f) {
    switch (f) {
        case Family::ClassicalCurrent: return "classical-current";
        case Family::Uqg: return "uqg";
        case Family::QuantumCurrent: return "quantum-current";
        case Family::DrinfeldianGeneral: return "drinfeldian-general";
        case Family::DrinfeldianExplicit: return "drinfeldian-explicit";
        case Family::YangianExplicit: return "yangian-explicit";
    }
    return "?";
}

const std::vector<Family>& all_families() {
    static const std::vector<Family> fams = {Family::ClassicalCurrent,    Family::Uqg,
                                             Family::QuantumCurrent,      Family::DrinfeldianGeneral,
                                             Family::DrinfeldianExplicit, Family::YangianExplicit};
    return fams;
}

Family family_from_name(const std::string& name) {
    for (Family f : all_families())
        if (family_name(f) == name) return f;
    throw std::invalid_argument("unknown family: " + name);
}

const Relation* Catalog::find(const std::string& key) const {
    for (const auto& r : relations)
        if (r.key == key) return &r;
    return nullptr;
}

NcExpr root_vector(const Root& r) { return gen(GenSym::root_vec(r)); }

bool is_simple_or_negative_simple(const RootSystem& rs, const Root& r) {
    for (const auto& a : rs.simple_roots)
        if (r == a || r == -a) return true;
    return false;
}

Lambda k_lambda(const Root& alpha) { return Lambda::from_root(alpha); }

Lambda k_affine_lambda(const RootSystem& rs) { return Lambda::c_hat(rs.l) - Lambda::from_root(rs.theta); }

// ---------------------------------------------------------------------------
// Composite root vectors

namespace {

class CompositeBuilder {
public:
    explicit CompositeBuilder(const RootSystem& rs) : rs_(rs), l_(rs.l) {}

    const NcExpr& vec(const Root& r) {
        auto it = memo_.find(r);
        if (it != memo_.end()) return it->second;
        NcExpr v = build(r);
        return memo_.emplace(r, std::move(v)).first->second;
    }

private:
    Root e(int i) const { return eps(l_, i); }
    NcExpr qc(const Root& a, const Root& b, int sign) { return q_commutator(vec(a), vec(b), sign, l_); }

    NcExpr build(const Root& r) {
        if (is_simple_or_negative_simple(rs_, r)) return root_vector(r);
        if (!rs_.is_root(r)) throw std::invalid_argument("not a root: " + root_name(r));
        std::vector<std::pair<int, int>> nz;
        for (int k = 0; k < l_; ++k)
            if (r[k]) nz.push_back({k + 1, r[k]});
        const int l = l_;
        if (nz.size() == 1) {
            auto [k, x] = nz[0];
            if (rs_.series == Series::B)
                return x > 0 ? qc(e(k) - e(l), e(l), -1) : qc(-e(l), e(l) - e(k), +1);
            // series C, long root 2 eps_k
            return x > 0 ? qc(e(k) - e(l), e(k) + e(l), -1) : qc(-e(l) - e(k), e(l) - e(k), +1);
        }
        auto [i, xi] = nz[0];
        auto [j, xj] = nz[1];
        if (xi > 0 && xj < 0) return qc(e(i) - e(i + 1), e(i + 1) - e(j), -1);
        if (xi < 0 && xj > 0) return qc(e(j) - e(i + 1), e(i + 1) - e(i), +1);
        if (xi > 0) {
            if (j == l) {
                switch (rs_.series) {
                    case Series::B: return qc(e(i), e(l), -1);
                    case Series::C: return qc(e(i) - e(l), scaled(e(l), 2), -1);
                    default: return qc(e(i) - e(l - 1), e(l - 1) + e(l), -1);
                }
            }
            return qc(e(i) + e(j + 1), e(j) - e(j + 1), -1);
        }
        if (j == l) {
            switch (rs_.series) {
                case Series::B: return qc(-e(l), -e(i), +1);
                case Series::C: return qc(scaled(e(l), -2), e(l) - e(i), +1);
                default: return qc(-e(l - 1) - e(l), e(l - 1) - e(i), +1);
            }
        }
        return qc(e(j + 1) - e(j), -e(j + 1) - e(i), +1);
    }

    const RootSystem& rs_;
    int l_;
    std::map<Root, NcExpr> memo_;
};

}  // namespace

std::map<Root, NcExpr> composite_root_vectors(const RootSystem& rs) {
    CompositeBuilder b(rs);
    std::map<Root, NcExpr> out;
    for (const auto& r : rs.normal_ordering) {
        if (is_simple_or_negative_simple(rs, r)) continue;
        out.emplace(r, b.vec(r));
        out.emplace(-r, b.vec(-r));
    }
    return out;
}

NcExpr composite_a_via(const RootSystem& rs, int i, int j, int k) {
    if (rs.series != Series::A) throw std::invalid_argument("k-variant composites exist for series A only");
    if (!(std::min(i, j) < k && k < std::max(i, j))) throw std::invalid_argument("k must lie strictly between i and j");
    CompositeBuilder b(rs);
    const int l = rs.l;
    return q_commutator(b.vec(eps(l, i) - eps(l, k)), b.vec(eps(l, k) - eps(l, j)), i < j ? -1 : +1, l);
}

NcExpr expand_composites(const NcExpr& x, const RootSystem& rs) {
    CompositeBuilder b(rs);
    return substitute(x, [&](const GenSym& g) -> std::optional<NcExpr> {
        if (g.kind != SymKind::RootVec) return std::nullopt;
        Root r = g.weight();
        if (is_simple_or_negative_simple(rs, r)) return std::nullopt;
        return b.vec(r);
    });
}

NcExpr tilde_e_atomic(const RootSystem& rs) {
    const int l = rs.l;
    switch (rs.series) {
        case Series::A:
            return gen(GenSym::cartan_exp(Lambda::unit(l, 1) + Lambda::unit(l, l))) * root_vector(eps(l, l) - eps(l, 1));
        case Series::C:
            return gen(GenSym::cartan_exp(Lambda::unit(l, 1).scaled(2))) * root_vector(scaled(eps(l, 1), -2));
        default:
            return gen(GenSym::cartan_exp(Lambda::unit(l, 1) + Lambda::unit(l, 2))) *
                   root_vector(-eps(l, 1) - eps(l, 2));
    }
}

NcExpr tilde_e(const RootSystem& rs) { return expand_composites(tilde_e_atomic(rs), rs); }

// ---------------------------------------------------------------------------
// Catalogs

namespace {

NcExpr K(const Lambda& lam) { return gen(GenSym::cartan_exp(lam)); }
NcExpr QB(const Lambda& lam, int twice_c = 0) { return gen(GenSym::q_bracket(lam, twice_c)); }
NcExpr H(const Lambda& lam, int twice_c = 0) { return gen(GenSym::cartan_lin(lam, twice_c)); }
Scalar Q(int n) { return Scalar::q_pow(n); }
Scalar eta() { return Scalar::variable(Var::eta); }
int sgn_pow(int k) { return k % 2 == 0 ? 1 : -1; }

bool classical_family(Family f) { return f == Family::ClassicalCurrent || f == Family::YangianExplicit; }

class Builder {
public:
    Builder(Family f, const RootSystem& rs) : f_(f), rs_(rs), l_(rs.l) {
        cat_.family = f;
        cat_.rs = rs;
    }

    Catalog take() { return std::move(cat_); }

    int l() const { return l_; }
    const RootSystem& rs() const { return rs_; }
    Root e(int i) const { return eps(l_, i); }
    NcExpr E(const Root& r) const { return root_vector(r); }
    NcExpr Eij(int i, int j) const { return root_vector(root_of(l_, i, j)); }
    Lambda unit(int i) const { return Lambda::unit(l_, i); }

    NcExpr affine() const {
        switch (f_) {
            case Family::ClassicalCurrent:
            case Family::QuantumCurrent: return gen(GenSym::affine_vec(rs_.theta));
            case Family::YangianExplicit: return gen(GenSym::xi_classical(rs_.theta));
            default: return gen(GenSym::xi(rs_.theta));
        }
    }
    std::string affine_name() const {
        return f_ == Family::ClassicalCurrent || f_ == Family::QuantumCurrent ? "e_{d-t}" : "xi";
    }

    // q-bracket of the family: plain commutator in the classical families.
    NcExpr qb(const NcExpr& x, const NcExpr& y) const {
        return classical_family(f_) ? commutator(x, y) : q_commutator(x, y, +1, l_);
    }
    NcExpr adq(const NcExpr& x, int n, const NcExpr& y) const {
        NcExpr r = y;
        for (int k = 0; k < n; ++k) r = qb(x, r);
        return r;
    }

    void add(const std::string& key, const std::string& anchor, NcExpr lhs, NcExpr rhs) {
        Relation r;
        r.id = family_name(f_) + "/" + rs_.label() + "/" + key;
        r.key = key;
        r.anchor = anchor;
        r.lhs = std::move(lhs);
        r.rhs = std::move(rhs);
        r.xi_degree = xi_degree(r.lhs - r.rhs);
        cat_.relations.push_back(std::move(r));
    }
    void add_reported(const std::string& key, const std::string& anchor, NcExpr lhs, NcExpr rhs) {
        Relation r;
        r.id = family_name(f_) + "/" + rs_.label() + "/" + key + "/verbatim";
        r.key = key;
        r.anchor = anchor;
        r.lhs = std::move(lhs);
        r.rhs = std::move(rhs);
        r.xi_degree = xi_degree(r.lhs - r.rhs);
        cat_.reported.push_back(std::move(r));
    }

    std::string context() const {
        std::string alg;
        switch (f_) {
            case Family::ClassicalCurrent: alg = "current algebra"; break;
            case Family::Uqg: alg = "quantum algebra"; break;
            case Family::QuantumCurrent: alg = "quantum current algebra"; break;
            case Family::DrinfeldianGeneral: alg = "Drinfeldian (general form)"; break;
            case Family::DrinfeldianExplicit: alg = "Drinfeldian"; break;
            case Family::YangianExplicit: alg = "Yangian"; break;
        }
        return alg + " " + rs_.label();
    }

private:
    Family f_;
    const RootSystem& rs_;
    int l_;
    Catalog cat_;
};

// Chevalley generators e_{+-alpha_i} of the gl part.
std::vector<Root> gl_chevalley(const Builder& b) {
    std::vector<Root> out;
    for (int j = 1; j < b.l(); ++j) {
        out.push_back(b.e(j) - b.e(j + 1));
        out.push_back(b.e(j + 1) - b.e(j));
    }
    return out;
}

void conj_relations(Builder& b, const std::vector<Root>& gens) {
    for (int i = 1; i <= b.l(); ++i)
        for (const auto& g : gens)
            b.add("conj:" + std::to_string(i) + ":" + root_name(g), b.context() + ": Cartan conjugation",
                  K(b.unit(i)) * b.E(g) * K(-b.unit(i)), Q(g[i - 1]) * b.E(g));
}

void uqg_catalog(Builder& b) {
    const int l = b.l();
    const std::string ctx = b.context();
    conj_relations(b, gl_chevalley(b));
    for (int i = 1; i < l; ++i)
        for (int j = 1; j < l; ++j) {
            NcExpr rhs = i == j ? QB(b.unit(i) - b.unit(i + 1)) : NcExpr();
            b.add("bracket:" + std::to_string(i) + ":" + std::to_string(j), ctx + ": Chevalley bracket",
                  commutator(b.Eij(i, -(i + 1)), b.Eij(j + 1, -j)), rhs);
        }
    for (int i = 1; i < l; ++i)
        for (int j = i + 2; j < l; ++j) {
            std::string tag = std::to_string(i) + ":" + std::to_string(j);
            b.add("comm+:" + tag, ctx + ": distant generators commute",
                  commutator(b.Eij(i, -(i + 1)), b.Eij(j, -(j + 1))), {});
            b.add("comm-:" + tag, ctx + ": distant generators commute",
                  commutator(b.Eij(i + 1, -i), b.Eij(j + 1, -j)), {});
        }
    for (int i = 1; i < l; ++i)
        for (int j = 1; j < l; ++j) {
            if (std::abs(i - j) != 1) continue;
            std::string tag = std::to_string(i) + ":" + std::to_string(j);
            NcExpr ei = b.Eij(i, -(i + 1)), ej = b.Eij(j, -(j + 1));
            NcExpr fi = b.Eij(i + 1, -i), fj = b.Eij(j + 1, -j);
            b.add("serre+:" + tag, ctx + ": q-Serre relation", b.qb(b.qb(ei, ej), ej), {});
            b.add("serre-:" + tag, ctx + ": q-Serre relation", b.qb(b.qb(fi, fj), fj), {});
        }
    if (b.rs().series == Series::A) return;

    // The extra pair of generators of B, C, D.
    Root p, m;
    Lambda bracket_lambda;
    switch (b.rs().series) {
        case Series::B:
            p = b.e(l);
            bracket_lambda = b.unit(l);
            break;
        case Series::C:
            p = scaled(b.e(l), 2);
            bracket_lambda = b.unit(l).scaled(2);
            break;
        default:
            p = b.e(l - 1) + b.e(l);
            bracket_lambda = b.unit(l - 1) + b.unit(l);
            break;
    }
    m = -p;
    conj_relations(b, {p, m});
    b.add("bracket:" + root_name(p), ctx + ": Chevalley bracket", commutator(b.E(p), b.E(m)), QB(bracket_lambda));
    // The generator e_{i,-j} of the gl part is excluded where it forms a
    // Serre pair with the extra generator.
    const int serre_j = b.rs().series == Series::D ? l - 1 : l;
    for (const auto& g : gl_chevalley(b)) {
        int gi = 0, gj = 0;
        for (int k = 0; k < l; ++k) {
            if (g[k] > 0) gi = k + 1;
            if (g[k] < 0) gj = k + 1;
        }
        if (gj != serre_j)
            b.add("comm:" + root_name(g) + ":" + root_name(p), ctx + ": commutation with the extra generator",
                  commutator(b.E(g), b.E(p)), {});
        if (gi != serre_j)
            b.add("comm:" + root_name(g) + ":" + root_name(m), ctx + ": commutation with the extra generator",
                  commutator(b.E(g), b.E(m)), {});
    }
    const std::string serre = ctx + ": q-Serre relation";
    switch (b.rs().series) {
        case Series::B: {
            NcExpr a = b.Eij(l - 1, -l), f = b.Eij(l, -(l - 1));
            b.add("serre+:" + root_name(p), serre, b.qb(b.qb(b.qb(a, b.E(p)), b.E(p)), b.E(p)), {});
            b.add("serre-:" + root_name(m), serre, b.qb(b.qb(b.qb(f, b.E(m)), b.E(m)), b.E(m)), {});
            break;
        }
        case Series::C: {
            NcExpr a = b.Eij(l - 1, -l), f = b.Eij(l, -(l - 1));
            b.add("serre+:" + root_name(p), serre, b.qb(b.qb(a, b.E(p)), b.E(p)), {});
            b.add("serre-:" + root_name(m), serre, b.qb(b.qb(f, b.E(m)), b.E(m)), {});
            b.add("serre+:" + root_name(p) + ":3", serre, b.adq(a, 3, b.E(p)), {});
            b.add("serre-:" + root_name(m) + ":3", serre, b.adq(f, 3, b.E(m)), {});
            break;
        }
        default: {
            NcExpr a = b.Eij(l - 2, -(l - 1)), f = b.Eij(l - 1, -(l - 2));
            b.add("serre+:" + root_name(p), serre, b.qb(b.qb(a, b.E(p)), b.E(p)), {});
            b.add("serre-:" + root_name(m), serre, b.qb(b.qb(f, b.E(m)), b.E(m)), {});
            b.add("serre+:" + root_name(p) + ":2", serre, b.adq(a, 2, b.E(p)), {});
            b.add("serre-:" + root_name(m) + ":2", serre, b.adq(f, 2, b.E(m)), {});
            break;
        }
    }
}

// Finite part of the section-5 style presentations in terms of simple roots.
void current_finite_part(Builder& b, bool quantum) {
    const RootSystem& rs = b.rs();
    const int r = rs.num_simple();
    const std::string ctx = b.context();
    auto h = [&](int i) { return H(k_lambda(rs.simple_roots[i])); };
    auto k = [&](int i, int sign) { return K(k_lambda(rs.simple_roots[i]).scaled(sign)); };
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            const Root& ai = rs.simple_roots[i];
            const Root& aj = rs.simple_roots[j];
            std::string tag = std::to_string(i + 1) + ":" + std::to_string(j + 1);
            for (int s : {+1, -1}) {
                NcExpr ej = b.E(scaled(aj, s));
                std::string st = s > 0 ? "+" : "-";
                if (quantum)
                    b.add("kconj:" + tag + st, ctx + ": Cartan conjugation", k(i, 1) * ej * k(i, -1),
                          Q(s * inner(ai, aj)) * ej);
                else
                    b.add("cartan:" + tag + st, ctx + ": Cartan action", commutator(h(i), ej),
                          Scalar(s * inner(ai, aj)) * ej);
            }
            if (quantum) {
                if (i == j)
                    b.add("bracket:" + std::to_string(i + 1), ctx + ": Chevalley bracket",
                          commutator(b.E(ai), b.E(-ai)), QB(k_lambda(ai)));
            } else {
                b.add("bracket:" + tag, ctx + ": Chevalley bracket", commutator(b.E(ai), b.E(-aj)),
                      i == j ? h(i) : NcExpr());
                if (i < j) b.add("hh:" + tag, ctx + ": Cartan elements commute", commutator(h(i), h(j)), {});
            }
            if (i != j) {
                const int n = rs.serre_exponents[i][j];
                b.add("serre+:" + tag, ctx + ": Serre relation", b.adq(b.E(ai), n, b.E(aj)), {});
                b.add("serre-:" + tag, ctx + ": Serre relation", b.adq(b.E(-ai), n, b.E(-aj)), {});
            }
        }
}

std::vector<std::pair<std::string, NcExpr>> central_targets(Builder& b) {
    std::vector<std::pair<std::string, NcExpr>> out = {{b.affine_name(), b.affine()}};
    for (const auto& a : b.rs().simple_roots) {
        out.push_back({root_name(a), b.E(a)});
        out.push_back({root_name(-a), b.E(-a)});
    }
    return out;
}

void central_quantum(Builder& b) {
    for (auto& [name, g] : central_targets(b))
        for (int s : {+1, -1})
            b.add("central:" + name + (s > 0 ? "+" : "-"), b.context() + ": q^{c-hat} is central",
                  commutator(K(Lambda::c_hat(b.l()).scaled(s)), g), {});
}

void central_classical(Builder& b) {
    for (auto& [name, g] : central_targets(b))
        b.add("central:" + name, b.context() + ": c-hat is central", commutator(H(Lambda::c_hat(b.l())), g), {});
}

// q^{+-e_{i,-i}} x = q^{-+(eps_i,theta)} x q^{+-e_{i,-i}}
void weight_quantum(Builder& b) {
    const NcExpr x = b.affine();
    for (int i = 1; i <= b.l(); ++i) {
        const int w = b.rs().theta[i - 1];
        for (int s : {+1, -1})
            b.add("weight:" + std::to_string(i) + (s > 0 ? "+" : "-"), b.context() + ": weight of the affine generator",
                  K(b.unit(i).scaled(s)) * x, Q(-s * w) * (x * K(b.unit(i).scaled(s))));
    }
}

void weight_classical(Builder& b) {
    const NcExpr x = b.affine();
    for (int i = 1; i <= b.l(); ++i)
        b.add("weight:" + std::to_string(i), b.context() + ": weight of the affine generator",
              commutator(H(b.unit(i)), x), Scalar(-b.rs().theta[i - 1]) * x);
}

bool is_gl2(const RootSystem& rs) { return rs.series == Series::A && rs.l == 2; }

// Affine-node relations of the current algebras and of the general Drinfeldian.
void affine_part(Builder& b, Family f) {
    const RootSystem& rs = b.rs();
    const std::string ctx = b.context();
    const NcExpr x = b.affine();
    const bool general = f == Family::DrinfeldianGeneral;
    const NcExpr t = general ? tilde_e_atomic(rs) : NcExpr();
    const Scalar tau = Scalar::tau();
    for (int i = 0; i < rs.num_simple(); ++i) {
        const Root& a = rs.simple_roots[i];
        const std::string idx = std::to_string(i + 1);
        const int pairing = inner(a, rs.theta);
        if (f == Family::ClassicalCurrent)
            b.add("hweight:" + idx, ctx + ": Cartan action on the affine generator", commutator(H(k_lambda(a)), x),
                  Scalar(-pairing) * x);
        else
            b.add("kweight:" + idx, ctx + ": weight of the affine generator",
                  K(k_lambda(a)) * x * K(-k_lambda(a)), Q(-pairing) * x);
        const NcExpr fm = b.E(-a), ep = b.E(a);
        b.add("minus:" + idx, ctx + ": commutation with e_{-alpha}", commutator(fm, x),
              general ? tau * commutator(fm, t) : NcExpr());
        const int n = rs.affine_exponents[i];
        b.add("serre:" + idx, ctx + ": affine Serre relation", b.adq(ep, n, x),
              general ? tau * b.adq(ep, n, t) : NcExpr());
        if (pairing != 0 && !is_gl2(rs)) {
            NcExpr rhs;
            if (general)
                rhs = Scalar(-1) * tau * tau * b.qb(b.qb(ep, t), t) + tau * (b.qb(b.qb(ep, t), x) + b.qb(b.qb(ep, x), t));
            b.add("quad:" + idx, ctx + ": quadratic relation in the affine generator", b.qb(b.qb(ep, x), x), rhs);
        }
    }
    if (is_gl2(rs)) {
        const NcExpr ep = b.E(rs.simple_roots[0]);
        auto B = [&](const NcExpr& u, const NcExpr& v) { return b.qb(u, v); };
        auto chain = [&](const NcExpr& p, const NcExpr& q2, const NcExpr& r) { return B(B(B(ep, p), q2), r); };
        NcExpr rhs;
        if (general)
            rhs = tau * (chain(t, x, x) + chain(x, t, x) + chain(x, x, t)) -
                  tau * tau * (chain(t, t, x) + chain(t, x, t) + chain(x, t, t)) + tau * tau * tau * chain(t, t, t);
        b.add("cubic", ctx + ": cubic relation of sl2", chain(x, x, x), rhs);
    }
}

// ---------------------------------------------------------------------------
// Explicit Drinfeldian and Yangian relations.

void explicit_gl(Builder& b, bool yangian) {
    const int l = b.l();
    const std::string ctx = b.context();
    const NcExpr x = b.affine();
    const NcExpr elm1 = b.Eij(l, -1);
    const NcExpr e12 = b.Eij(1, -2), elml = b.Eij(l - 1, -l);
    for (int i = 1; i < l; ++i)
        b.add("minus:" + std::to_string(i), ctx + ": commutation with e_{i+1,-i}", commutator(x, b.Eij(i + 1, -i)), {});
    for (int i = 2; i <= l - 2; ++i)
        b.add("serre:" + std::to_string(i), ctx + ": commutation with e_{i,-i-1}", commutator(b.Eij(i, -(i + 1)), x), {});
    b.add("serre:1", ctx + ": affine Serre relation", b.qb(e12, b.qb(e12, x)), {});
    b.add("serre:" + std::to_string(l - 1), ctx + ": affine Serre relation", b.qb(b.qb(x, elml), elml), {});
    if (yangian) {
        b.add("quad:1", ctx + ": quadratic relation in xi", b.qb(b.qb(e12, x), x),
              eta() * (commutator(e12, elm1) * x - elm1 * commutator(e12, x)));
        b.add("quad:" + std::to_string(l - 1), ctx + ": quadratic relation in xi", b.qb(x, b.qb(x, elml)),
              eta() * (commutator(elm1, elml) * x - elm1 * commutator(x, elml)));
    } else {
        const NcExpr k = K(b.unit(1) + b.unit(l));
        b.add("quad:1", ctx + ": quadratic relation in xi", b.qb(b.qb(e12, x), x),
              eta() * k * (Q(-2) * commutator(e12, elm1) * x - elm1 * b.qb(e12, x)));
        b.add("quad:" + std::to_string(l - 1), ctx + ": quadratic relation in xi", b.qb(x, b.qb(x, elml)),
              eta() * Q(1) * k * (Q(1) * commutator(elm1, elml) * x - elm1 * b.qb(x, elml)));
    }
}

// sum_{k=3}^{l} (-1)^k q^{k-3} e_{-k,-m} e_{k,-m}  (+ the short-root term for B)
NcExpr bd_sum(Builder& b, int m, bool yangian) {
    const int l = b.l();
    NcExpr s;
    for (int k = 3; k <= l; ++k)
        s += Scalar(sgn_pow(k)) * (yangian ? Scalar(1) : Q(k - 3)) * b.E(-b.e(k) - b.e(m)) * b.E(b.e(k) - b.e(m));
    if (b.rs().series == Series::B) {
        Scalar c = yangian ? Scalar(mpq_class(sgn_pow(l - 1), 2))
                           : Scalar(sgn_pow(l - 1)) * Q(l - 1) / (Scalar::q() + Scalar(1));
        s += c * b.E(-b.e(m)) * b.E(-b.e(m));
    }
    return s;
}

void explicit_bd(Builder& b, bool yangian) {
    const int l = b.l();
    const std::string ctx = b.context();
    const NcExpr x = b.affine();
    NcExpr rhs1 = eta() * bd_sum(b, 1, yangian), rhs2 = eta() * bd_sum(b, 2, yangian);
    if (!yangian) {
        rhs1 = K(b.unit(1) + b.unit(2)) * rhs1;
        rhs2 = K(b.unit(2).scaled(2)) * rhs2;
    }
    b.add("minus:1", ctx + ": commutator of e_{2,-1} with xi", commutator(b.Eij(2, -1), x), rhs1);
    b.add("serre:1", ctx + ": commutator of e_{1,-2} with xi", commutator(b.Eij(1, -2), x), rhs2);
    b.add("minus:2", ctx + ": commutation with e_{3,-2}", commutator(b.Eij(3, -2), x), {});
    const NcExpr e23 = b.Eij(2, -3);
    b.add("serre:2", ctx + ": affine Serre relation", b.qb(e23, b.qb(e23, x)), {});
    b.add("quad:2", ctx + ": quadratic relation in xi", b.qb(b.qb(e23, x), x), {});
    for (int i = 3; i < l; ++i) {
        b.add("serre:" + std::to_string(i), ctx + ": commutation with e_{i,-i-1}", commutator(b.Eij(i, -(i + 1)), x), {});
        b.add("minus:" + std::to_string(i), ctx + ": commutation with e_{i+1,-i}", commutator(b.Eij(i + 1, -i), x), {});
    }
    Root p = b.rs().series == Series::B ? b.e(l) : b.e(l - 1) + b.e(l);
    b.add("serre:" + std::to_string(l), ctx + ": commutation with " + root_name(p), commutator(b.E(p), x), {});
    b.add("minus:" + std::to_string(l), ctx + ": commutation with " + root_name(-p), commutator(b.E(-p), x), {});
}

void explicit_c(Builder& b, bool yangian) {
    const int l = b.l();
    const std::string ctx = b.context();
    const NcExpr x = b.affine();
    const NcExpr e12 = b.Eij(1, -2);
    b.add("minus:1", ctx + ": commutation with e_{2,-1}", commutator(b.Eij(2, -1), x), {});
    b.add("serre:1", ctx + ": affine Serre relation", b.adq(e12, 3, x), {});
    b.add("quad:1", ctx + ": quadratic relation in xi", b.qb(b.qb(e12, x), x), {});
    for (int i = 2; i < l; ++i) {
        b.add("serre:" + std::to_string(i), ctx + ": commutation with e_{i,-i-1}", commutator(b.Eij(i, -(i + 1)), x), {});
        b.add("minus:" + std::to_string(i), ctx + ": commutation with e_{i+1,-i}", commutator(b.Eij(i + 1, -i), x), {});
    }
    const NcExpr a = b.E(-b.e(l) - b.e(1)), c = b.E(b.e(l) - b.e(1));
    const Root p = scaled(b.e(l), 2);
    NcExpr rhs_minus = eta() * a * a, rhs_serre = Scalar(2) * eta() * c * c;
    if (!yangian) {
        rhs_minus = K(b.unit(1).scaled(2)) * rhs_minus;
        rhs_serre = eta() * q_number(2) * Q(-3) * K((b.unit(1) + b.unit(l)).scaled(2)) * c * c;
    }
    b.add("minus:" + std::to_string(l), ctx + ": commutator of e_{-l,-l} with xi", commutator(b.E(-p), x), rhs_minus);
    b.add("serre:" + std::to_string(l), ctx + ": commutator of e_{l,l} with xi", commutator(b.E(p), x), rhs_serre);
}

}  // namespace

Catalog relation_catalog(Family f, const RootSystem& rs) {
    if (is_gl2(rs) && f != Family::DrinfeldianGeneral && f != Family::Uqg)
        throw Unsupported("gl_2 has no explicit or current-algebra catalog");
    Builder b(f, rs);
    switch (f) {
        case Family::Uqg: uqg_catalog(b); break;
        case Family::ClassicalCurrent:
            central_classical(b);
            current_finite_part(b, false);
            affine_part(b, f);
            break;
        case Family::QuantumCurrent:
            central_quantum(b);
            current_finite_part(b, true);
            weight_quantum(b);
            affine_part(b, f);
            break;
        case Family::DrinfeldianGeneral:
            central_quantum(b);
            affine_part(b, f);
            break;
        case Family::DrinfeldianExplicit:
        case Family::YangianExplicit: {
            const bool y = f == Family::YangianExplicit;
            if (y) {
                central_classical(b);
                weight_classical(b);
            } else {
                central_quantum(b);
                weight_quantum(b);
            }
            switch (rs.series) {
                case Series::A: explicit_gl(b, y); break;
                case Series::C: explicit_c(b, y); break;
                default: explicit_bd(b, y); break;
            }
            break;
        }
    }
    Catalog cat = b.take();

    // Verbatim forms that the shipped catalog corrects.
    Builder v(f, rs);
    const NcExpr x = v.affine();
    if (f == Family::YangianExplicit && (rs.series == Series::B || rs.series == Series::D))
        for (int i = 1; i <= 2; ++i)
            v.add_reported("weight:" + std::to_string(i), v.context() + ": weight of xi as printed",
                           commutator(H(Lambda::unit(rs.l, i)), x), x);
    cat.reported = v.take().reported;
    return cat;
}

std::string dump_catalog(const Catalog& c) {
    std::ostringstream os;
    for (const auto& r : c.relations) os << r.id << '\t' << r.lhs.str() << '\t' << r.rhs.str() << '\n';
    return os.str();
}

}  // namespace qkmv

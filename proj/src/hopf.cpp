#include "qkmv/hopf.hpp"

#include <stdexcept>

namespace qkmv {

namespace {

NcExpr K(const Lambda& lam) { return gen(GenSym::cartan_exp(lam)); }
NcExpr one() { return NcExpr(Scalar(1)); }
NcExpr E(const Root& r) { return root_vector(r); }

Scalar half_of(int twice) { return Scalar(mpq_class(twice, 2)); }

bool is_positive(const RootSystem& rs, const Root& r) {
    for (const auto& p : rs.positive_roots)
        if (p == r) return true;
    return false;
}

// Delta(e_a) = e_a (x) 1 + k_a^{-1} (x) e_a, Delta(e_{-a}) = e_{-a} (x) k_a + 1 (x) e_{-a}.
TensorExpr uniform_delta(const RootSystem& rs, const Root& r) {
    if (is_positive(rs, r)) return tensor(E(r), one()) + tensor(K(-k_lambda(r)), E(r));
    return tensor(E(r), K(k_lambda(-r))) + tensor(one(), E(r));
}

// S(e_a) = -k_a e_a, S(e_{-a}) = -e_{-a} k_a^{-1}.
NcExpr uniform_antipode(const RootSystem& rs, const Root& r) {
    if (is_positive(rs, r)) return Scalar(-1) * (K(k_lambda(r)) * E(r));
    return Scalar(-1) * (E(r) * K(-k_lambda(-r)));
}

TensorExpr primitive(const NcExpr& x) { return tensor(x, one()) + tensor(one(), x); }

class Extension {
public:
    explicit Extension(const HopfData& hd) : hd_(hd), composites_(composite_root_vectors(hd.rs)) {}

    const TensorExpr& delta(const GenSym& g) {
        auto it = delta_cache_.find(g);
        if (it != delta_cache_.end()) return it->second;
        return delta_cache_.emplace(g, compute_delta(g)).first->second;
    }
    const NcExpr& antipode(const GenSym& g) {
        auto it = antipode_cache_.find(g);
        if (it != antipode_cache_.end()) return it->second;
        return antipode_cache_.emplace(g, compute_antipode(g)).first->second;
    }
    Scalar counit(const GenSym& g) const {
        if (auto it = hd_.counit.find(g); it != hd_.counit.end()) return it->second;
        switch (g.kind) {
            case SymKind::CartanExp: require_quantum(g); return Scalar(1);
            case SymKind::QBracket: require_quantum(g); return q_number_twice(g.c2);
            case SymKind::CartanLin: require_classical(g); return half_of(g.c2);
            case SymKind::RootVec:
                if (composites_.count(g.weight())) return Scalar(0);
                break;
            default: break;
        }
        throw UnknownSymbol(g.str() + " is not in the alphabet of " + hd_.tag());
    }

    TensorExpr delta(const NcExpr& x) {
        TensorExpr out;
        for (const auto& t : x.terms()) {
            TensorExpr w(t.coeff);
            for (const auto& g : t.key[0]) w = w * delta(g);
            out += w;
        }
        return out;
    }
    NcExpr antipode(const NcExpr& x) {
        NcExpr out;
        for (const auto& t : x.terms()) {
            NcExpr w(t.coeff);
            for (auto g = t.key[0].rbegin(); g != t.key[0].rend(); ++g) w = w * antipode(*g);
            out += w;
        }
        return out;
    }
    Scalar counit(const NcExpr& x) const {
        Scalar out;
        for (const auto& t : x.terms()) {
            Scalar w = t.coeff;
            for (const auto& g : t.key[0]) {
                w *= counit(g);
                if (w.is_zero()) break;
            }
            out += w;
        }
        return out;
    }

    // Chevalley expansion of a composite letter, if it is one.
    const NcExpr* composite(const GenSym& g) const {
        if (g.kind != SymKind::RootVec || hd_.classical) return nullptr;
        auto it = composites_.find(g.weight());
        return it == composites_.end() ? nullptr : &it->second;
    }

private:
    void require_quantum(const GenSym& g) const {
        if (hd_.classical) throw UnknownSymbol(g.str() + " is not in the alphabet of " + hd_.tag());
    }
    void require_classical(const GenSym& g) const {
        if (!hd_.classical) throw UnknownSymbol(g.str() + " is not in the alphabet of " + hd_.tag());
    }

    TensorExpr compute_delta(const GenSym& g) {
        if (auto it = hd_.delta.find(g); it != hd_.delta.end()) return it->second;
        switch (g.kind) {
            case SymKind::CartanExp: require_quantum(g); return tensor(gen(g), gen(g));
            case SymKind::QBracket: {
                require_quantum(g);
                const Lambda lam = g.lambda();
                TensorExpr up = tensor(K(lam), K(lam)) * Scalar::v_pow(g.c2);
                TensorExpr down = tensor(K(-lam), K(-lam)) * Scalar::v_pow(-g.c2);
                return (up - down) * (Scalar::q() - Scalar::q().inverse()).inverse();
            }
            case SymKind::CartanLin: {
                require_classical(g);
                NcExpr h = gen(GenSym::cartan_lin(g.lambda(), 0));
                return primitive(h) + TensorExpr(half_of(g.c2));
            }
            case SymKind::RootVec:
                if (auto it = composites_.find(g.weight()); it != composites_.end())
                    return hd_.classical ? primitive(gen(g)) : delta(it->second);
                break;
            default: break;
        }
        throw UnknownSymbol(g.str() + " is not in the alphabet of " + hd_.tag());
    }

    NcExpr compute_antipode(const GenSym& g) {
        if (auto it = hd_.antipode.find(g); it != hd_.antipode.end()) return it->second;
        switch (g.kind) {
            case SymKind::CartanExp: require_quantum(g); return K(-g.lambda());
            case SymKind::QBracket: require_quantum(g); return gen(GenSym::q_bracket(-g.lambda(), g.c2));
            case SymKind::CartanLin: require_classical(g); return gen(GenSym::cartan_lin(-g.lambda(), g.c2));
            case SymKind::RootVec:
                if (auto it = composites_.find(g.weight()); it != composites_.end())
                    return hd_.classical ? Scalar(-1) * gen(g) : antipode(it->second);
                break;
            default: break;
        }
        throw UnknownSymbol(g.str() + " is not in the alphabet of " + hd_.tag());
    }

    const HopfData& hd_;
    std::map<Root, NcExpr> composites_;
    std::map<GenSym, TensorExpr> delta_cache_;
    std::map<GenSym, NcExpr> antipode_cache_;
};

void add_uqg(HopfData& hd) {
    const RootSystem& rs = hd.rs;
    for (int i = 1; i <= rs.l; ++i) {
        GenSym k = GenSym::cartan_exp(Lambda::unit(rs.l, i));
        hd.generators.push_back(k);
        hd.delta[k] = tensor(gen(k), gen(k));
        hd.antipode[k] = K(-Lambda::unit(rs.l, i));
        hd.counit[k] = Scalar(1);
    }
    for (const auto& a : rs.simple_roots)
        for (const Root& r : {a, -a}) {
            GenSym e = GenSym::root_vec(r);
            hd.generators.push_back(e);
            hd.delta[e] = uniform_delta(rs, r);
            hd.antipode[e] = uniform_antipode(rs, r);
            hd.counit[e] = Scalar(0);
        }
}

void add_central(HopfData& hd) {
    GenSym c = GenSym::cartan_exp(Lambda::c_hat(hd.rs.l));
    hd.generators.push_back(c);
    hd.delta[c] = tensor(gen(c), gen(c));
    hd.antipode[c] = K(-Lambda::c_hat(hd.rs.l));
    hd.counit[c] = Scalar(1);
}

// The D display of the last pair of generators with k_a in place of k_a^{-1}.
void add_reported_d(HopfData& hd) {
    const RootSystem& rs = hd.rs;
    const int l = rs.l;
    const Root a = root_of(l, l - 1, l);
    const Lambda k = Lambda::unit(l, l - 1) + Lambda::unit(l, l);
    hd.reported.push_back({"hopf/" + rs.label() + "/delta:" + root_name(a) + "/verbatim", GenSym::root_vec(a),
                           tensor(E(a), one()) + tensor(K(k), E(a)), std::nullopt});
    hd.reported.push_back({"hopf/" + rs.label() + "/delta:" + root_name(-a) + "/verbatim", GenSym::root_vec(-a),
                           tensor(E(-a), K(-k)) + tensor(one(), E(-a)), std::nullopt});
}

// gl: explicit coproduct of xi.
TensorExpr gl_xi_delta(const RootSystem& rs, const GenSym& xi) {
    const int l = rs.l;
    auto u = [&](int i) { return Lambda::unit(l, i); };
    const Lambda chat = Lambda::c_hat(l);
    const Lambda half_chat = chat.halved();
    NcExpr el1 = E(root_of(l, l, -1));
    NcExpr kl = K(u(l));
    TensorExpr inner = tensor(el1 * kl, gen(GenSym::q_bracket(u(1), 0))) +
                       tensor(gen(GenSym::q_bracket(half_chat + u(l), 0)) * K(-half_chat), el1 * kl);
    for (int i = 2; i <= l - 1; ++i) inner += tensor(E(root_of(l, l, -i)) * kl, E(root_of(l, i, -1)) * K(u(i)));
    TensorExpr out = tensor(gen(xi), one()) + tensor(K(u(1) - u(l) - chat), gen(xi));
    return out + Scalar::variable(Var::eta) * (inner * tensor(K(u(1)), K(u(1))));
}

// gl: explicit antipode of xi; chain_sign = -1 is the shipped form, +1 the printed one.
NcExpr gl_xi_antipode(const RootSystem& rs, const GenSym& xi, int chain_sign) {
    const int l = rs.l;
    auto u = [&](int i) { return Lambda::unit(l, i); };
    const Lambda chat = Lambda::c_hat(l);
    const Lambda half_chat = chat.halved();
    NcExpr inner = Scalar::q_pow(-1) * (gen(GenSym::q_bracket(half_chat + u(1) + u(l), 2)) *
                                        K(half_chat - u(1) + u(l)) * E(root_of(l, l, -1)));
    const Scalar qq = Scalar::q() - Scalar::q().inverse();
    // chains l-1 >= i_k > ... > i_1 >= 2
    const int m = l - 2;
    for (int mask = 1; mask < (1 << m); ++mask) {
        std::vector<int> idx{l};
        for (int b = m - 1; b >= 0; --b)
            if (mask & (1 << b)) idx.push_back(b + 2);
        idx.push_back(1);
        const int k = static_cast<int>(idx.size()) - 2;
        NcExpr chain = one();
        for (std::size_t j = 0; j + 1 < idx.size(); ++j) chain = chain * E(root_of(l, idx[j], -idx[j + 1]));
        Scalar c = Scalar::q_pow(-k) * (Scalar(chain_sign) * qq).pow(k - 1);
        inner += c * (chain * K(u(1).scaled(-2)));
    }
    return Scalar(-1) * (K(chat - u(1) + u(l)) * gen(xi)) + Scalar::variable(Var::eta) * inner;
}

TensorExpr yangian_xi_delta(const RootSystem& rs, const GenSym& xi) {
    const int l = rs.l;
    NcExpr half_chat = gen(GenSym::cartan_lin(Lambda::c_hat(l).halved(), 0));
    TensorExpr extra = tensor(half_chat, E(root_of(l, l, -1)));
    for (int i = 1; i <= l; ++i) {
        NcExpr left = i == l ? gen(GenSym::cartan_lin(Lambda::unit(l, l), 0)) : E(root_of(l, l, -i));
        NcExpr right = i == 1 ? gen(GenSym::cartan_lin(Lambda::unit(l, 1), 0)) : E(root_of(l, i, -1));
        extra += tensor(left, right);
    }
    return primitive(gen(xi)) + Scalar::variable(Var::eta) * extra;
}

NcExpr yangian_xi_antipode(const RootSystem& rs, const GenSym& xi) {
    const int l = rs.l;
    NcExpr half_chat = gen(GenSym::cartan_lin(Lambda::c_hat(l).halved(), 0));
    NcExpr extra = half_chat * E(root_of(l, l, -1));
    for (int i = 1; i <= l; ++i) {
        NcExpr left = i == l ? gen(GenSym::cartan_lin(Lambda::unit(l, l), 0)) : E(root_of(l, l, -i));
        NcExpr right = i == 1 ? gen(GenSym::cartan_lin(Lambda::unit(l, 1), 0)) : E(root_of(l, i, -1));
        extra += left * right;
    }
    return Scalar(-1) * gen(xi) + Scalar::variable(Var::eta) * extra;
}

}  // namespace

std::string hopf_algebra_name(HopfAlgebra a) {
    switch (a) {
        case HopfAlgebra::Uqg: return "uqg";
        case HopfAlgebra::QuantumCurrent: return "quantum-current";
        case HopfAlgebra::Drinfeldian: return "drinfeldian";
        case HopfAlgebra::Yangian: return "yangian";
    }
    return "?";
}

HopfAlgebra hopf_algebra_from_name(const std::string& name) {
    for (HopfAlgebra a : {HopfAlgebra::Uqg, HopfAlgebra::QuantumCurrent, HopfAlgebra::Drinfeldian, HopfAlgebra::Yangian})
        if (hopf_algebra_name(a) == name) return a;
    throw std::invalid_argument("unknown algebra " + name);
}

TensorExpr general_xi_delta(const RootSystem& rs) {
    HopfData uq;
    uq.algebra = HopfAlgebra::Uqg;
    uq.rs = rs;
    add_uqg(uq);
    add_central(uq);
    const NcExpr et = tilde_e_atomic(rs);
    const NcExpr kinv = K(-k_affine_lambda(rs));
    const NcExpr xi = gen(GenSym::xi(rs.theta));
    TensorExpr corr = coproduct(et, uq) - tensor(et, one()) - tensor(kinv, et);
    return tensor(xi, one()) + tensor(kinv, xi) + Scalar::tau() * corr;
}

NcExpr general_xi_antipode(const RootSystem& rs) {
    HopfData uq;
    uq.algebra = HopfAlgebra::Uqg;
    uq.rs = rs;
    add_uqg(uq);
    add_central(uq);
    const NcExpr et = tilde_e_atomic(rs);
    const NcExpr k = K(k_affine_lambda(rs));
    const NcExpr xi = gen(GenSym::xi(rs.theta));
    return Scalar(-1) * (k * xi) + Scalar::tau() * (antipode(et, uq) + k * et);
}

NcExpr gl_xi_antipode_printed(const RootSystem& rs) {
    return gl_xi_antipode(rs, GenSym::xi(rs.theta), +1);
}

HopfData hopf_data(HopfAlgebra a, const RootSystem& rs) {
    if (rs.num_simple() < 2) throw Unsupported(hopf_algebra_name(a) + " Hopf data needs rank >= 2");
    HopfData hd;
    hd.algebra = a;
    hd.rs = rs;
    switch (a) {
        case HopfAlgebra::Uqg:
            add_uqg(hd);
            if (rs.series == Series::D) add_reported_d(hd);
            break;
        case HopfAlgebra::QuantumCurrent: {
            add_uqg(hd);
            add_central(hd);
            GenSym e = GenSym::affine_vec(rs.theta);
            const Lambda k = k_affine_lambda(rs);
            hd.generators.push_back(e);
            hd.delta[e] = tensor(gen(e), one()) + tensor(K(-k), gen(e));
            hd.antipode[e] = Scalar(-1) * (K(k) * gen(e));
            hd.counit[e] = Scalar(0);
            break;
        }
        case HopfAlgebra::Drinfeldian: {
            add_uqg(hd);
            add_central(hd);
            GenSym xi = GenSym::xi(rs.theta);
            hd.generators.push_back(xi);
            if (rs.series == Series::A) {
                hd.delta[xi] = gl_xi_delta(rs, xi);
                hd.antipode[xi] = gl_xi_antipode(rs, xi, -1);
                hd.reported.push_back({"hopf/" + rs.label() + "/antipode:xi/verbatim", xi, std::nullopt,
                                       gl_xi_antipode(rs, xi, +1)});
            } else {
                hd.delta[xi] = general_xi_delta(rs);
                hd.antipode[xi] = general_xi_antipode(rs);
            }
            hd.counit[xi] = Scalar(0);
            break;
        }
        case HopfAlgebra::Yangian: {
            if (rs.series != Series::A) throw Unsupported("Yangian Hopf data is given for gl only");
            hd.classical = true;
            auto add_primitive = [&](const GenSym& g) {
                hd.generators.push_back(g);
                hd.delta[g] = primitive(gen(g));
                hd.antipode[g] = Scalar(-1) * gen(g);
                hd.counit[g] = Scalar(0);
            };
            for (int i = 1; i <= rs.l; ++i) add_primitive(GenSym::cartan_lin(Lambda::unit(rs.l, i), 0));
            add_primitive(GenSym::cartan_lin(Lambda::c_hat(rs.l), 0));
            for (const auto& r : rs.simple_roots) {
                add_primitive(GenSym::root_vec(r));
                add_primitive(GenSym::root_vec(-r));
            }
            GenSym xi = GenSym::xi_classical(rs.theta);
            hd.generators.push_back(xi);
            hd.delta[xi] = yangian_xi_delta(rs, xi);
            hd.antipode[xi] = yangian_xi_antipode(rs, xi);
            hd.counit[xi] = Scalar(0);
            break;
        }
    }
    return hd;
}

TensorExpr coproduct(const NcExpr& x, const HopfData& hd) { return Extension(hd).delta(x); }
NcExpr antipode(const NcExpr& x, const HopfData& hd) { return Extension(hd).antipode(x); }
Scalar counit(const NcExpr& x, const HopfData& hd) { return Extension(hd).counit(x); }

Tensor3Expr coproduct_left(const TensorExpr& x, const HopfData& hd) {
    Extension ext(hd);
    std::vector<Tensor3Expr::Term> terms;
    for (const auto& t : x.terms()) {
        TensorExpr d = ext.delta(NcExpr::single({t.key[0]}, Scalar(1)));
        for (const auto& u : d.terms()) terms.push_back({{u.key[0], u.key[1], t.key[1]}, t.coeff * u.coeff});
    }
    return Tensor3Expr::from_terms(std::move(terms));
}

Tensor3Expr coproduct_right(const TensorExpr& x, const HopfData& hd) {
    Extension ext(hd);
    std::vector<Tensor3Expr::Term> terms;
    for (const auto& t : x.terms()) {
        TensorExpr d = ext.delta(NcExpr::single({t.key[1]}, Scalar(1)));
        for (const auto& u : d.terms()) terms.push_back({{t.key[0], u.key[0], u.key[1]}, t.coeff * u.coeff});
    }
    return Tensor3Expr::from_terms(std::move(terms));
}

namespace {

// Matrix images of Delta and S, built letter by letter: (rho_a (x) rho_b)(Delta(w))
// is the product of the letter images, which avoids expanding long coproducts.
class MatrixImages {
public:
    MatrixImages(const HopfData& hd, const Representation& a, const Representation& b)
        : hd_(hd), ext_(hd), a_(a), b_(b) {}

    Scalar coeff(const Scalar& c) const { return a_.specialization.empty() ? c : specialize(c, a_.specialization); }

    Matrix rho(const Word& w) {
        Matrix m = Matrix::identity(a_.n);
        for (const auto& g : w) m = m * a_.letter(g);
        return m;
    }

    const Matrix& delta_letter(const GenSym& g) {
        if (auto it = delta_.find(g); it != delta_.end()) return it->second;
        Matrix m = ext_.composite(g) && !hd_.delta.count(g) ? delta(*ext_.composite(g)) : tensor_image(ext_.delta(g));
        return delta_.emplace(g, std::move(m)).first->second;
    }
    Matrix delta(const Word& w) {
        Matrix m = Matrix::identity(a_.n * b_.n);
        for (const auto& g : w) m = m * delta_letter(g);
        return m;
    }
    Matrix delta(const NcExpr& x) {
        Matrix out(a_.n * b_.n);
        for (const auto& t : x.terms()) {
            Scalar c = coeff(t.coeff);
            if (!c.is_zero()) out += c * delta(t.key[0]);
        }
        return out;
    }

    const Matrix& antipode_letter(const GenSym& g) {
        if (auto it = antipode_.find(g); it != antipode_.end()) return it->second;
        return antipode_.emplace(g, evaluate(a_, ext_.antipode(g))).first->second;
    }
    Matrix antipode(const Word& w) {
        Matrix m = Matrix::identity(a_.n);
        for (auto g = w.rbegin(); g != w.rend(); ++g) m = m * antipode_letter(*g);
        return m;
    }

    Scalar counit(const Word& w) {
        Scalar c(1);
        for (const auto& g : w) {
            c *= coeff(ext_.counit(g));
            if (c.is_zero()) break;
        }
        return c;
    }

    Extension& ext() { return ext_; }

private:
    Matrix tensor_image(const TensorExpr& x) { return evaluate(a_, b_, x); }

    const HopfData& hd_;
    Extension ext_;
    const Representation& a_;
    const Representation& b_;
    std::map<GenSym, Matrix> delta_;
    std::map<GenSym, Matrix> antipode_;
};

void check_generator(const Representation& rep, const HopfData& hd, const GenSym& g, const std::string& prefix,
                     std::vector<RelationResult>& out) {
    MatrixImages img(hd, rep, rep);
    const std::string base = prefix + g.str();
    auto record = [&](const std::string& what, const Matrix& defect) {
        out.push_back({base + "/" + what, what + ":" + g.str(), defect.is_zero(), defect.nonzeros(), ""});
    };
    try {
        const TensorExpr d = img.ext().delta(g);
        const int n = rep.n;
        const Matrix rho_g = evaluate(rep, gen(g));
        const Scalar eps = img.coeff(img.ext().counit(g));

        Matrix left(n * n * n), right(n * n * n);
        Matrix cl(n), cr(n), sl(n), sr(n);
        for (const auto& t : d.terms()) {
            const Scalar c = img.coeff(t.coeff);
            if (c.is_zero()) continue;
            const Matrix ra = img.rho(t.key[0]), rb = img.rho(t.key[1]);
            left += c * kron(img.delta(t.key[0]), rb);
            right += c * kron(ra, img.delta(t.key[1]));
            cl += (c * img.counit(t.key[0])) * rb;
            cr += (c * img.counit(t.key[1])) * ra;
            sl += c * (img.antipode(t.key[0]) * rb);
            sr += c * (ra * img.antipode(t.key[1]));
        }
        const Matrix unit = eps * Matrix::identity(n);
        record("coassociativity", left - right);
        record("counit-left", cl - rho_g);
        record("counit-right", cr - rho_g);
        record("antipode-left", sl - unit);
        record("antipode-right", sr - unit);
    } catch (const UnknownSymbol& e) {
        out.push_back({base, "axioms:" + g.str(), false, 0, e.what()});
    }
}

}  // namespace

Report check_hopf_axioms(const Representation& rep, const HopfData& hd) {
    Report report;
    report.title = "Hopf axioms " + hd.tag() + " in " + rep.tag;
    for (const auto& g : hd.generators) check_generator(rep, hd, g, "hopf/" + hd.rs.label() + "/", report.results);
    return report;
}

Report check_reported_hopf(const Representation& rep, const HopfData& hd) {
    Report report;
    report.title = "verbatim Hopf displays " + hd.tag() + " in " + rep.tag;
    for (const auto& v : hd.reported) {
        HopfData h = hd;
        h.reported.clear();
        if (v.delta) h.delta[v.generator] = *v.delta;
        if (v.antipode) h.antipode[v.generator] = *v.antipode;
        std::vector<RelationResult> res;
        check_generator(rep, h, v.generator, v.id + "/", res);
        for (auto& r : res) {
            r.note = "verbatim display";
            report.results.push_back(std::move(r));
        }
    }
    return report;
}

Report check_coproduct_relations(const Representation& a, const Representation& b, const HopfData& hd,
                                 const Catalog& cat) {
    Report report;
    report.title = "coproduct of " + cat.label() + " in " + a.tag + " (x) " + b.tag;
    MatrixImages img(hd, a, b);
    for (const auto& r : cat.relations) {
        try {
            Matrix d = img.delta(r.difference());
            report.results.push_back({r.id, r.key, d.is_zero(), d.nonzeros(), ""});
        } catch (const UnknownSymbol& e) {
            report.results.push_back({r.id, r.key, false, 0, e.what()});
        }
    }
    return report;
}

Report check_coproduct_relations(const Representation& rep, const HopfData& hd, const Catalog& cat) {
    return check_coproduct_relations(rep, rep, hd, cat);
}

}  // namespace qkmv

#include "qkmv/limits.hpp"

namespace qkmv {

namespace {

std::string strip_sign(std::string key) {
    if (!key.empty() && (key.back() == '+' || key.back() == '-')) key.pop_back();
    return key;
}

RelationResult compare(const Relation& r, const std::string& key, const NcExpr& a, const NcExpr& b,
                       const std::string& how) {
    RelationResult res{r.id, key, false, 0, ""};
    auto c = proportionality(a, b);
    if (!c) {
        res.defect = static_cast<int>((a - b).size());
        res.note = how + ": not proportional";
        return res;
    }
    res.pass = true;
    res.note = how + ", ratio " + c->str();
    return res;
}

}  // namespace

std::string classical_counterpart_key(const std::string& key) {
    if (key.rfind("weight:", 0) == 0 || key.rfind("central:", 0) == 0) return strip_sign(key);
    return key;
}

std::string current_counterpart_key(const std::string& key) {
    const std::string central = "central:xi";
    if (key.rfind(central, 0) == 0) return "central:e_{d-t}" + key.substr(central.size());
    return key;
}

NcExpr rename_affine(const NcExpr& x) {
    return substitute(x, [](const GenSym& g) -> std::optional<NcExpr> {
        if (g.kind == SymKind::Xi || g.kind == SymKind::XiClassical) return gen(GenSym::affine_vec(-g.weight()));
        return std::nullopt;
    });
}

Report classical_limit(const RootSystem& rs) {
    const Catalog d = relation_catalog(Family::DrinfeldianExplicit, rs);
    const Catalog y = relation_catalog(Family::YangianExplicit, rs);
    Report report;
    report.title = "q -> 1 limit " + rs.label();
    for (const auto& r : d.relations) {
        const std::string key = classical_counterpart_key(r.key);
        const Relation* yr = y.find(key);
        if (!yr) {
            report.results.push_back({r.id, r.key, false, 0, "no Yangian relation " + key});
            continue;
        }
        try {
            auto [c0, c1] = jet_classical(expand_composites(r.difference(), rs));
            const bool first = c0.is_zero();
            const NcExpr target = specialize_expr(expand_composites(yr->difference(), rs), {{Var::v, Scalar(1)}});
            report.results.push_back(compare(r, r.key, first ? c1 : c0, target, first ? "order 1" : "order 0"));
        } catch (const PoleError& e) {
            report.results.push_back({r.id, r.key, false, 0, std::string("pole at q = 1: ") + e.what()});
        }
    }
    return report;
}

Report eta_zero_limit(const RootSystem& rs) {
    const Catalog d = relation_catalog(Family::DrinfeldianExplicit, rs);
    const Catalog qc = relation_catalog(Family::QuantumCurrent, rs);
    Report report;
    report.title = "eta -> 0 limit " + rs.label();
    for (const auto& r : d.relations) {
        const std::string key = current_counterpart_key(r.key);
        const Relation* qr = qc.find(key);
        if (!qr) {
            report.results.push_back({r.id, r.key, false, 0, "no quantum-current relation " + key});
            continue;
        }
        NcExpr x = rename_affine(specialize_expr(r.difference(), {{Var::eta, Scalar(0)}}));
        report.results.push_back(
            compare(r, r.key, expand_composites(x, rs), expand_composites(qr->difference(), rs), "normal form"));
    }
    return report;
}

namespace {

LetterMap affine_renaming() {
    return [](const GenSym& g) -> std::optional<NcExpr> {
        if (g.kind == SymKind::Xi || g.kind == SymKind::XiClassical) return gen(GenSym::affine_vec(-g.weight()));
        return std::nullopt;
    };
}

GenSym renamed(const GenSym& g) { return g.kind == SymKind::Xi ? GenSym::affine_vec(-g.weight()) : g; }

// Applies f to every tensor slot of a two-fold tensor.
TensorExpr per_slot(const TensorExpr& x, const std::function<NcExpr(const NcExpr&)>& f) {
    TensorExpr out;
    for (const auto& t : x.terms())
        out += t.coeff * tensor(f(NcExpr::single({t.key[0]}, Scalar(1))), f(NcExpr::single({t.key[1]}, Scalar(1))));
    return out;
}

}  // namespace

Report hopf_eta_zero_limit(const RootSystem& rs) {
    const HopfData d = hopf_data(HopfAlgebra::Drinfeldian, rs);
    const HopfData qc = hopf_data(HopfAlgebra::QuantumCurrent, rs);
    const Assignment eta0{{Var::eta, Scalar(0)}};
    Report report;
    report.title = "eta -> 0 limit of the Hopf data " + rs.label();
    for (const auto& g : d.generators) {
        const GenSym h = renamed(g);
        const std::string id = "hopf-limit/" + rs.label() + "/" + g.str();
        const TensorExpr dd = substitute_multi(specialize_expr(d.delta.at(g), eta0), affine_renaming());
        const NcExpr ds = rename_affine(specialize_expr(d.antipode.at(g), eta0));
        const bool known = qc.delta.count(h) > 0;
        report.results.push_back({id + "/delta", "delta:" + g.str(), known && dd == qc.delta.at(h), 0, ""});
        report.results.push_back({id + "/antipode", "antipode:" + g.str(), known && ds == qc.antipode.at(h), 0, ""});
        report.results.push_back(
            {id + "/counit", "counit:" + g.str(), known && specialize(d.counit.at(g), eta0) == qc.counit.at(h), 0, ""});
    }
    return report;
}

Report hopf_classical_limit(const RootSystem& rs) {
    if (rs.series != Series::A) throw Unsupported("the Yangian Hopf data is given for gl only");
    const HopfData d = hopf_data(HopfAlgebra::Drinfeldian, rs);
    const HopfData y = hopf_data(HopfAlgebra::Yangian, rs);
    const GenSym xi = GenSym::xi(rs.theta), yxi = GenSym::xi_classical(rs.theta);
    Report report;
    report.title = "q -> 1 limit of the Hopf data " + rs.label();
    const std::string id = "hopf-limit/" + rs.label() + "/";
    try {
        TensorExpr j = jet_classical(d.delta.at(xi)).first;
        j = per_slot(j, cartan_lin_left_form);
        const TensorExpr target = per_slot(y.delta.at(yxi), cartan_lin_left_form);
        report.results.push_back({id + "delta:xi", "delta:xi", j == target, static_cast<int>((j - target).size()), ""});
        const NcExpr s = cartan_lin_left_form(jet_classical(d.antipode.at(xi)).first);
        const NcExpr st = cartan_lin_left_form(y.antipode.at(yxi));
        report.results.push_back(
            {id + "antipode:xi", "antipode:xi", s == st, static_cast<int>((s - st).size()), ""});
    } catch (const PoleError& e) {
        report.results.push_back({id + "xi", "pole", false, 0, e.what()});
    }
    return report;
}

}  // namespace qkmv

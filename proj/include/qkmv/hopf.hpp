#pragma once

#include "qkmv/reps.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qkmv {

enum class HopfAlgebra { Uqg, QuantumCurrent, Drinfeldian, Yangian };

std::string hopf_algebra_name(HopfAlgebra a);
HopfAlgebra hopf_algebra_from_name(const std::string& name);

// A display that the shipped data replaces; checked and reported, never gated.
struct HopfVariant {
    std::string id;
    GenSym generator;
    std::optional<TensorExpr> delta;
    std::optional<NcExpr> antipode;
};

// Images of the generators. Cartan letters follow fixed rules (group-like
// q^lambda, primitive Cartan elements) and composite root vectors are expanded
// before the maps are applied, so every letter of the algebra is covered.
struct HopfData {
    HopfAlgebra algebra{};
    RootSystem rs;
    bool classical = false;
    std::vector<GenSym> generators;
    std::map<GenSym, TensorExpr> delta;
    std::map<GenSym, NcExpr> antipode;
    std::map<GenSym, Scalar> counit;
    std::vector<HopfVariant> reported;

    std::string tag() const { return hopf_algebra_name(algebra) + "/" + rs.label(); }
    bool has_affine() const { return algebra != HopfAlgebra::Uqg; }
};

// Yangian data exists for gl only; every algebra needs a rank-l >= 2 system.
HopfData hopf_data(HopfAlgebra a, const RootSystem& rs);

// Delta and S of xi from the general formulas, with Delta_q(e~) and S_q(e~)
// obtained by extending the uqg data over the word e~. Shipped for B, C, D;
// for gl they serve as a cross-check of the explicit displays.
TensorExpr general_xi_delta(const RootSystem& rs);
NcExpr general_xi_antipode(const RootSystem& rs);
// The gl antipode of xi exactly as printed (chain coefficient (q - q^{-1})^{k-1}).
NcExpr gl_xi_antipode_printed(const RootSystem& rs);

// Multiplicative extension of Delta and epsilon, anti-multiplicative for S.
// Throws UnknownSymbol for letters outside the alphabet of hd.
TensorExpr coproduct(const NcExpr& x, const HopfData& hd);
NcExpr antipode(const NcExpr& x, const HopfData& hd);
Scalar counit(const NcExpr& x, const HopfData& hd);

// (Delta (x) id) and (id (x) Delta) applied to a two-fold tensor.
Tensor3Expr coproduct_left(const TensorExpr& x, const HopfData& hd);
Tensor3Expr coproduct_right(const TensorExpr& x, const HopfData& hd);

// Coassociativity, both counit identities and both antipode identities on
// every generator, evaluated in rep, rep (x) rep and rep (x) rep (x) rep.
Report check_hopf_axioms(const Representation& rep, const HopfData& hd);
// The same checks restricted to the replaced verbatim displays.
Report check_reported_hopf(const Representation& rep, const HopfData& hd);

// (rho_a (x) rho_b)(Delta(lhs) - Delta(rhs)) = 0 for every relation.
Report check_coproduct_relations(const Representation& a, const Representation& b, const HopfData& hd,
                                 const Catalog& cat);
Report check_coproduct_relations(const Representation& rep, const HopfData& hd, const Catalog& cat);

}  // namespace qkmv

#pragma once

#include "qkmv/freealg.hpp"
#include "qkmv/rootsys.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qkmv {

enum class Family { ClassicalCurrent, Uqg, QuantumCurrent, DrinfeldianGeneral, DrinfeldianExplicit, YangianExplicit };

std::string family_name(Family f);
Family family_from_name(const std::string& name);
const std::vector<Family>& all_families();

struct Unsupported : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A relation lhs = rhs. The key pairs corresponding relations across
// families, e.g. "minus:2" is the commutator of e_{-alpha_2} with the affine
// generator in every catalog that has one.
struct Relation {
    std::string id;
    std::string key;
    std::string anchor;
    NcExpr lhs;
    NcExpr rhs;
    int xi_degree = 0;

    NcExpr difference() const { return lhs - rhs; }
};

struct Catalog {
    Family family{};
    RootSystem rs;
    std::vector<Relation> relations;
    // Verbatim transcriptions that the catalog replaces by a corrected form.
    // They are expected to fail and are reported, never gated.
    std::vector<Relation> reported;

    const Relation* find(const std::string& key) const;
    std::string label() const { return family_name(family) + "/" + rs.label(); }
};

// Throws Unsupported for combinations that do not exist: gl_2 only has the
// uqg and drinfeldian-general catalogs.
Catalog relation_catalog(Family f, const RootSystem& rs);

// One relation per line: id, lhs, rhs separated by tabs.
std::string dump_catalog(const Catalog& c);

// Root vector symbol for any root; non-simple roots are composite letters
// that expand_composites rewrites in Chevalley generators.
NcExpr root_vector(const Root& r);
bool is_simple_or_negative_simple(const RootSystem& rs, const Root& r);

// Chevalley-word expansion of every non-simple root vector, built by the
// series recursion along the normal ordering.
std::map<Root, NcExpr> composite_root_vectors(const RootSystem& rs);
// Series A only: e_{i,-j} (or e_{j,-i}) through the intermediate index k.
NcExpr composite_a_via(const RootSystem& rs, int i, int j, int k);
NcExpr expand_composites(const NcExpr& x, const RootSystem& rs);

// q^{...} times the lowest root vector of weight -theta, composites expanded.
NcExpr tilde_e(const RootSystem& rs);
// Same element with the composite vector kept as a single letter.
NcExpr tilde_e_atomic(const RootSystem& rs);

// k_alpha = q^{h_alpha}; k_{delta-theta} = q^{c-hat - h_theta}.
Lambda k_lambda(const Root& alpha);
Lambda k_affine_lambda(const RootSystem& rs);

}  // namespace qkmv

#pragma once

#include "qkmv/hopf.hpp"

namespace qkmv {

// Key of the yangian-explicit relation paired with a drinfeldian-explicit key
// (the two q-forms of a weight relation share one classical relation).
std::string classical_counterpart_key(const std::string& key);
// Key of the quantum-current relation paired with a drinfeldian-explicit key.
std::string current_counterpart_key(const std::string& key);

// Order-0 jet at q = 1 of every drinfeldian-explicit relation (order 1 when
// order 0 vanishes) against its Yangian counterpart, up to one scalar per
// relation. Composite letters are expanded on both sides; the Yangian side
// uses the classical composites (v := 1). A pole is a failure.
Report classical_limit(const RootSystem& rs);

// eta := 0 in every drinfeldian-explicit relation with xi renamed to the
// affine root vector, compared with the quantum-current relation.
Report eta_zero_limit(const RootSystem& rs);

// eta := 0 in the Drinfeldian Hopf data with xi renamed, compared symbol for
// symbol with the quantum-current data on every generator.
Report hopf_eta_zero_limit(const RootSystem& rs);

// gl only: order-0 jets of Delta(xi) and S(xi) against the Yangian displays,
// compared after moving Cartan elements to the front.
Report hopf_classical_limit(const RootSystem& rs);

// The renaming xi -> e_{delta-theta} (and xi' -> e_{delta-theta}).
NcExpr rename_affine(const NcExpr& x);

}  // namespace qkmv

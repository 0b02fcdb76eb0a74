#pragma once

#include <string>
#include <vector>

#include "nka/amenability.hpp"
#include "nka/descriptor.hpp"

namespace nka {

// One row of the norm catalogue: an amenability norm of a named group
// family at a prime, with the dispatcher rule that justified it.
struct CatalogueRow {
    std::string family;
    std::string params;
    long prime = 0;
    ExtendedNorm norm = ExtendedNorm::one();
    bool certified = false;
    std::string rule;
};

// The built-in catalogue: matrix-group chains, the Suzuki chain, tree
// stabilizers, Pruefer groups, integer and full points of the ell-adic
// field, and the integral matrix group as a pro-ell-by-finite extension.
// Deterministic row order; every row is recomputed on each call.
std::vector<CatalogueRow> norm_catalogue(int depth = 5);

// CSV with header family,params,prime,norm,certified,theorem_tag.
std::string catalogue_csv(const std::vector<CatalogueRow>& rows);

}  // namespace nka

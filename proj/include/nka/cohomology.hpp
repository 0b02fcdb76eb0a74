#pragma once

#include <vector>

#include "nka/cochain.hpp"
#include "nka/field.hpp"
#include "nka/group.hpp"

namespace nka {

struct CohomologySummary {
    int degree = 0;
    long dim_cocycles = 0;
    long dim_coboundaries = 0;
    long dim_cohomology = 0;  // dim_cocycles - dim_coboundaries
    std::vector<Cochain> sample_representatives;
};

// Enumeration budget for the bar complex: |G|^(degree+1) cells.  The default
// admits |G| <= 12 at degree <= 3 and can be overridden with the
// NKA_ENUM_BUDGET environment variable.  Exceeding it raises budget_error.
std::size_t enumeration_budget();

// Kernel/image dimensions of the coboundary maps on the bar complex of a
// finite group with trivial coefficients, by exact elimination over the
// rationals (field_char = 0) or over the prime field (field_char = p).
// Representatives are kernel vectors independent of the coboundary space,
// produced deterministically.
CohomologySummary cohomology_dim(GroupPtr group, long field_char, int degree);

// Finitely generated abelianization Z^rank + sum Z/torsion_i.
struct AbelianizationData {
    long rank = 0;
    std::vector<Integer> torsion;
};

// Dimension of the degree-one bounded cohomology with trivial coefficients:
// rank over a characteristic-zero field; rank plus the number of cyclic
// summands of p-power order (after p-primary decomposition) over a field of
// characteristic p.
long h1b_dimension(const AbelianizationData& ab, const FieldDescriptor& fd);

}  // namespace nka

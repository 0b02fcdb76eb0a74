#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nka/group.hpp"
#include "nka/prufer.hpp"
#include "nka/rational.hpp"

namespace nka {

// A scalar-valued function on a finite group, measured in the p-adic norm.
// The defect is the sup of |f(xy) - f(x) - f(y)|_p over all pairs.
struct QmTable {
    GroupPtr domain;
    std::vector<Rational> values;  // indexed by element
    long p = 0;
};

// The digit-lift quasimorphism on the order-p^N subgroup of the Pruefer
// group: element k corresponds to k/p^N mod 1 and is mapped to its value in
// [0, 1).  Materializes the domain; meant for moderate p^N.
QmTable section_table(long p, int N);

// Exhaustive defect over all |G|^2 pairs, exact.
Rational defect(const QmTable& f);

// Defect of the digit lift on the order-p^N truncation for any N, without
// materializing pairs.  For values v_j = j/p^N the difference
// v_{(j+k) mod p^N} - v_j - v_k equals -[j + k >= p^N], so the defect is 1
// exactly when some pair overflows, witnessed by the maximal element added
// to itself.
struct SectionDefect {
    Rational defect;
    std::optional<std::pair<Integer, Integer>> attained_at;  // indices in [0, p^N)
};
SectionDefect section_defect(long p, int N);

// Projection of a defect-<=1 table to the Pruefer group.  Verifies that the
// projected map is a homomorphism on every pair and that the lifted
// projection stays within unit distance of f.  Defect above 1 is a
// precondition error.
struct HomCheckReport {
    bool is_homomorphism = false;
    bool lift_within_unit_distance = false;
    std::vector<PruferElement> projected;  // indexed by element
    bool passed() const { return is_homomorphism && lift_within_unit_distance; }
};
HomCheckReport qm_to_hom_check(const QmTable& f);

// max(defect, generator norms): every word value of a quasimorphism with
// these data is bounded by this.
Rational fg_quasimorphism_bound(const Rational& defect_value,
                                const std::vector<Rational>& generator_norms);

// One-sided comparison against a supplied homomorphism h on the same
// domain: h is verified to be a homomorphism, and the returned distance
// max |f - h|_p is checked to dominate the defect of f.
Rational hom_distance_check(const QmTable& f, const QmTable& h);

// Combine tables on G_1..G_k into a table on the direct product by summing
// coordinates.  Inputs must vanish at the identity; the combined defect is
// verified exhaustively to be at most the max of the component defects.
QmTable product_combine(const std::vector<QmTable>& tables);

// The truncated defect group of a Laurent-series field over F_p: tails
// supported in degrees -1..-N with the coefficient-wise group law.  The
// canonical section into Laurent scalars is checked to be a homomorphism
// (defect 0) over every pair of the p^N-element truncation.
struct LaurentSectionReport {
    bool homomorphism = false;
    Rational defect;
    long pairs_checked = 0;
};
LaurentSectionReport laurent_section_check(int N, long p);

}  // namespace nka

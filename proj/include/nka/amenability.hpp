#pragma once

#include <map>
#include <string>
#include <vector>

#include "nka/descriptor.hpp"
#include "nka/field.hpp"
#include "nka/group.hpp"
#include "nka/valuation.hpp"

namespace nka {

// Norm of a finite group of order n over the field described by fd:
//   chi(K) = p > 0:        1 if p does not divide n, else no mean exists;
//   chi(K) = chi(r) = 0:   1;
//   chi(K) = 0, chi(r) = p: p^{nu_p(n)}.
ExtendedNorm finite_group_norm(const Integer& n, const FieldDescriptor& fd);

// The unique left-invariant normed mean of a finite group over a mixed
// characteristic field: averaging with uniform coefficients 1/n.  Its
// operator norm is the exact max over Dirac evaluations.
struct MeanTable {
    GroupPtr group;
    std::vector<Rational> coefficients;  // indexed by element, all 1/n
    ExtendedNorm operator_norm;
};

// Requires a mixed (0, p) working field; verifies left-invariance on the
// Dirac basis and the normalization m(1_G) = 1 before returning.
MeanTable uniform_mean(GroupPtr group, long p);

enum class Reason {
    FiniteOrderValuation,     // finite group: valuation of the order
    LocallyEllipticExponent,  // spherically complete field, exponent finite
    CompactExponent,          // non-spherically complete field, exponent finite
    CharPFree,                // char p field, no p in any index
    EqualCharZero,            // equal characteristic zero: norm 1
    NotLocallyElliptic,
    NotCompact,
    NotPFree,                 // char p field, p divides some index
    ExponentDiverges,
};

bool reason_is_failure(Reason r);
std::string reason_tag(Reason r);

struct AmenabilityVerdict {
    ExtendedNorm norm;
    bool certified = true;
    Reason reason = Reason::FiniteOrderValuation;
};

// Trichotomy dispatcher over descriptor-level facts only: flags plus the
// p-exponent.  Spherically complete fields demand local ellipticity,
// non-spherically complete ones demand compactness.  Unresolvable flags
// raise descriptor_error.
AmenabilityVerdict amenability_norm(const GroupDescriptor& g, const FieldDescriptor& fd,
                                    int depth = 5);

// Per-prime norm table for the simplicity obstruction.  `entries` must
// contain p = 2; `tail_is_one` declares that every prime not listed has
// norm 1.
struct NormTable {
    std::map<long, ExtendedNorm> entries;
    bool tail_is_one = false;
};

// A non-abelian group with norm <= 2 at the prime 2, or with at most one
// odd prime of norm > 1, cannot be topologically simple.
struct ObstructionVerdict {
    bool obstructed = false;
    std::string witness;
};

ObstructionVerdict simplicity_obstruction(const NormTable& norms);

}  // namespace nka

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nka/complex.hpp"
#include "nka/rational.hpp"

namespace nka {

// Cohomology dimensions per degree 0..dim, over the rationals
// (field_char = 0) or the prime field (field_char = p), by exact
// elimination on the dualized boundary matrices.
std::vector<long> cellular_cohomology_dims(const CellComplex& x, long field_char);

// Dualized barycentric subdivision at one degree: every chain map
// coefficient is an integer, so the dual operator does not increase the
// max coefficient norm (checked on the Dirac cochain basis), and the
// induced map on cohomology is an isomorphism (dimension and rank checks).
struct SubdivisionReport {
    bool dual_norm_bounded = false;
    bool dims_preserved = false;  // all degrees
    bool induced_iso = false;     // at the requested degree
    std::vector<long> dims_before;
    std::vector<long> dims_after;
    bool passed() const { return dual_norm_bounded && dims_preserved && induced_iso; }
};
SubdivisionReport subdivision_norm_check(const SimplicialComplex& x, int degree,
                                         long field_char = 0);

// The long exact sequence of a cover X = A u B by subcomplexes, with
// explicit restriction, difference and connecting maps; exactness is
// verified at every node by composite-zero and rank equalities.
struct MayerVietorisReport {
    bool exact = false;
    std::vector<long> dims_x, dims_a, dims_b, dims_ab;
    long alternating_sum = 0;
    std::vector<std::string> failures;
};
MayerVietorisReport mayer_vietoris_check(const SimplicialComplex& x, const SimplicialComplex& a,
                                         const SimplicialComplex& b, long field_char);

// Fundamental cycle of a closed oriented manifold complex: coefficients
// +-1 found by propagating orientations over a spanning tree of the dual
// graph.  Certifies max coefficient norm exactly 1, and that no fundamental
// cycle has all coefficients of norm < 1: such a cycle lies in p times the
// top chain group and cannot generate the infinite cyclic top homology.
struct FundamentalCycleCertificate {
    std::vector<long> cycle;  // per top simplex
    Rational max_norm;        // exactly 1
    long top_kernel_rank = 0; // verified 1
    bool primitive = false;   // gcd of coefficients is 1
    bool lower_bound_certified = false;
};
FundamentalCycleCertificate na_simplicial_volume(const SimplicialComplex& x, long p);

// Built-in complexes: "circle3" (triangle circle), "s2" (boundary of a
// 3-simplex), "torus" (9-vertex triangulated torus), "wedge2" (two triangle
// circles sharing a vertex).
SimplicialComplex builtin_simplicial(const std::string& name);

// Built-in cell complexes: the above plus "torus_cw" (one 0-cell, two
// 1-cells, one 2-cell, zero boundary maps).
CellComplex builtin_cell(const std::string& name);

struct MvInstance {
    SimplicialComplex x, a, b;
};
// "wedge" (the two circles of wedge2) or "torus" (two cylinders overlapping
// in two annuli).
MvInstance builtin_mv(const std::string& name);

}  // namespace nka

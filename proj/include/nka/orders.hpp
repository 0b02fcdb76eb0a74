#pragma once

#include "nka/rational.hpp"

namespace nka {

// Exact orders of the matrix-group families used by the norm catalogue.
//   |GL_n(F_q)|  = prod_{i=0}^{n-1} (q^n - q^i)
//   |SL_n(F_q)|  = |GL_n(F_q)| / (q - 1)
//   |PSL_n(F_q)| = |SL_n(F_q)| / gcd(n, q - 1)
//   |Sz(q)|      = (q^2 + 1) q^2 (q - 1),   q = 2^k with k odd
enum class FamilyTag { GL, SL, PSL, Sz };

Integer gl_order(int n, const Integer& q);
Integer sl_order(int n, const Integer& q);
Integer psl_order(int n, const Integer& q);
Integer sz_order(const Integer& q);

// n is the matrix degree (ignored for Sz).  q must be a prime power;
// Sz additionally requires q = 2^k with k odd.
Integer family_order(FamilyTag tag, int n, const Integer& q);

// Field size at chain index k >= 1: ell^(a^k).
Integer chain_field_size(const Integer& ell, long a, int k);

// Order of the automorphism group of the radius-n ball around a vertex in
// the d-valent tree: |Aut(B_1)| = d!, and
// |Aut(B_{n+1})| = |Aut(B_n)| * (d-1)!^{d (d-1)^{n-1}}.
Integer tree_ball_order(int d, int n);

// Number of vertices on the sphere of radius n: d (d-1)^{n-1}.
Integer tree_sphere_size(int d, int n);

Integer factorial(int n);

}  // namespace nka

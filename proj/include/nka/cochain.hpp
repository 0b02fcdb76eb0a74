#pragma once

#include <span>
#include <vector>

#include "nka/group.hpp"
#include "nka/rational.hpp"

namespace nka {

// A degree-n cochain in the inhomogeneous (bar) model with trivial
// one-dimensional coefficients: a total map from n-tuples of group elements
// to exact scalars.  Degree 0 is a single scalar.  field_char = 0 means
// rational values; field_char = p keeps values reduced mod p (integers in
// [0, p)).
class Cochain {
public:
    Cochain(GroupPtr group, int degree, long field_char);

    const GroupPtr& group() const { return group_; }
    int degree() const { return degree_; }
    long field_char() const { return field_char_; }
    std::size_t size() const { return values_.size(); }  // |G|^degree

    const Rational& operator[](std::size_t flat) const { return values_[flat]; }
    void set(std::size_t flat, const Rational& v);
    const Rational& at(std::span<const int> tuple) const { return values_[flatten(tuple)]; }
    void set(std::span<const int> tuple, const Rational& v) { set(flatten(tuple), v); }

    std::size_t flatten(std::span<const int> tuple) const;
    std::vector<int> unflatten(std::size_t flat) const;

    bool operator==(const Cochain& other) const;

private:
    GroupPtr group_;
    int degree_;
    long field_char_;
    std::vector<Rational> values_;
};

// Inhomogeneous coboundary with trivial action:
//   (df)(g_1..g_{n+1}) = f(g_2..g_{n+1})
//                      + sum_{i=1}^{n} (-1)^i f(g_1,..,g_i g_{i+1},..,g_{n+1})
//                      + (-1)^{n+1} f(g_1..g_n).
// Degree 0: (dv)(g) = v - v = 0.
Cochain coboundary(const Cochain& f);

// max over tuples of |f(.)|_p, exact.  Defined for field_char = 0.
Rational sup_norm(const Cochain& f, long p);

// A degree-n cochain in the homogeneous model: a total map on (n+1)-tuples.
class HomogeneousCochain {
public:
    HomogeneousCochain(GroupPtr group, int degree, long field_char);

    const GroupPtr& group() const { return group_; }
    int degree() const { return degree_; }
    long field_char() const { return field_char_; }
    std::size_t size() const { return values_.size(); }  // |G|^(degree+1)

    const Rational& operator[](std::size_t flat) const { return values_[flat]; }
    void set(std::size_t flat, const Rational& v);
    const Rational& at(std::span<const int> tuple) const { return values_[flatten(tuple)]; }
    void set(std::span<const int> tuple, const Rational& v) { set(flatten(tuple), v); }

    std::size_t flatten(std::span<const int> tuple) const;
    std::vector<int> unflatten(std::size_t flat) const;

    // Invariance under the diagonal action (trivial coefficients):
    // f(g g_0, .., g g_n) = f(g_0, .., g_n) for all g.
    bool is_invariant() const;

    bool operator==(const HomogeneousCochain& other) const;

private:
    GroupPtr group_;
    int degree_;
    long field_char_;
    std::vector<Rational> values_;
};

// Alternating face sum: (dh)(g_0..g_{n+1}) = sum_i (-1)^i h(.., ^g_i, ..).
HomogeneousCochain homogeneous_coboundary(const HomogeneousCochain& h);

Rational sup_norm(const HomogeneousCochain& h, long p);

// Isometric conversions between the two models, mutually inverse and
// commuting with the two coboundaries.  to_inhomogeneous requires an
// invariant input and evaluates it at (1, g_1, g_1 g_2, .., g_1...g_n);
// to_homogeneous evaluates at the consecutive quotients.
Cochain to_inhomogeneous(const HomogeneousCochain& h);
HomogeneousCochain to_homogeneous(const Cochain& f);

// Averaging homotopy for a finite group over a mixed (0, p) field:
//   (j h)(g_0..g_{n-1}) = (1/|G|) sum_g h(g, g_0, .., g_{n-1}),
// satisfying d j + j d = id in every positive degree.  The operator norm of
// j is bounded by the norm of the uniform mean.  Requires invariant input.
HomogeneousCochain contracting_homotopy(const HomogeneousCochain& h, long p);

}  // namespace nka

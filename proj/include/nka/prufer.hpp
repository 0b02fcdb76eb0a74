#pragma once

#include <map>
#include <string>
#include <vector>

#include "nka/rational.hpp"

namespace nka {

// An element of the Pruefer p-group realized as a finite fractional
// expansion sum_{i=1..N} a_{-i} p^{-i} mod 1, digits in [0, p).  Deepest
// zero digits are normalized away; the group law adds with carries, the
// carry past p^{-1} being discarded (addition mod 1).
class PruferElement {
public:
    static PruferElement zero(long p);
    static PruferElement from_digits(long p, std::vector<int> digits);  // digits[i] = a_{-(i-1)-1}
    // The element k / p^N mod 1.
    static PruferElement from_index(long p, int N, const Integer& k);

    long p() const { return p_; }
    const std::vector<int>& digits() const { return digits_; }
    int depth() const { return static_cast<int>(digits_.size()); }
    bool is_zero() const { return digits_.empty(); }

    PruferElement add(const PruferElement& other) const;
    // Exact value in [0, 1) with a p-power denominator.
    Rational value() const;

    bool operator==(const PruferElement& other) const = default;
    std::string str() const;

private:
    long p_ = 0;
    std::vector<int> digits_;
};

// Digit-wise lift to the scalars: the value of the expansion in [0, 1).
// A section of the canonical projection; a quasimorphism of defect 1.
Rational standard_section(const PruferElement& x);

// Fractional part of the p-adic expansion of a rational: the unique Pruefer
// element e with x - standard_section(e) having denominator prime to p.
// Digits are extracted by exact modular inversion and the correctness
// criterion is asserted after every call.
PruferElement project_to_prufer(const Rational& x, long p);

// An element of the defect group of a Laurent-series field over the
// p-element field: finitely many coefficients in negative degrees, added
// coefficient-wise (no carries).
class LaurentTail {
public:
    static LaurentTail zero(long p);
    // coefficients: degree (< 0) -> value in [1, p)
    static LaurentTail from_coefficients(long p, std::map<int, int> coefficients);

    long p() const { return p_; }
    const std::map<int, int>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    LaurentTail add(const LaurentTail& other) const;

    bool operator==(const LaurentTail& other) const = default;

private:
    long p_ = 0;
    std::map<int, int> coeffs_;  // negative degree -> nonzero coefficient
};

}  // namespace nka

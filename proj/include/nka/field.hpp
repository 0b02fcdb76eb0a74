#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nka/rational.hpp"

namespace nka {

// A non-Archimedean valued field, reduced to the data that drives every
// computation here: the characteristic of the field, the characteristic of
// its residue field, spherical completeness and discreteness of the value
// group.  The norm convention in the mixed case is |p|_K = p^{-1}.
struct FieldDescriptor {
    std::string label;
    long char_field = 0;    // 0 or a prime p
    long residue_char = 0;  // 0 or a prime p
    bool spherically_complete = true;
    bool discretely_valued = true;

    // Throws descriptor_error on invariant violation:
    // char_field = p > 0 forces residue_char = p, and residue_char = 0
    // forces char_field = 0.
    void validate() const;

    // Flat key/value record used by the CLI and the registry round-trip.
    std::vector<std::pair<std::string, std::string>> record() const;
};

enum class Trichotomy {
    CharP,          // chi(K) = p > 0
    EqualCharZero,  // chi(K) = chi(r) = 0
    Mixed,          // chi(K) = 0, chi(r) = p > 0
};

struct TrichotomyCase {
    Trichotomy kind;
    long p = 0;  // residue characteristic in the CharP and Mixed cases
};

TrichotomyCase classify_trichotomy(const FieldDescriptor& fd);

// Built-in registry.  Accepted labels:
//   "Qp:<p>"         p-adic numbers
//   "Fp_laurent:<p>" Laurent series over the p-element field
//   "trivial:Q"      rationals with the trivial norm
//   "trivial:Fp:<p>" p-element field with the trivial norm
FieldDescriptor field_from_label(const std::string& label);

}  // namespace nka

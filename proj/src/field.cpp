#include "nka/field.hpp"

#include "nka/errors.hpp"
#include "nka/valuation.hpp"

namespace nka {

void FieldDescriptor::validate() const {
    if (char_field != 0 && !is_prime(Integer(char_field)))
        throw descriptor_error("field '" + label + "': characteristic must be 0 or prime");
    if (residue_char != 0 && !is_prime(Integer(residue_char)))
        throw descriptor_error("field '" + label + "': residue characteristic must be 0 or prime");
    if (char_field > 0 && residue_char != char_field)
        throw descriptor_error("field '" + label +
                               "': positive characteristic forces an equal residue characteristic");
    if (residue_char == 0 && char_field != 0)
        throw descriptor_error("field '" + label +
                               "': residue characteristic 0 forces characteristic 0");
}

std::vector<std::pair<std::string, std::string>> FieldDescriptor::record() const {
    return {
        {"label", label},
        {"char", std::to_string(char_field)},
        {"residue_char", std::to_string(residue_char)},
        {"spherically_complete", spherically_complete ? "true" : "false"},
        {"discretely_valued", discretely_valued ? "true" : "false"},
    };
}

TrichotomyCase classify_trichotomy(const FieldDescriptor& fd) {
    fd.validate();
    if (fd.char_field > 0) return {Trichotomy::CharP, fd.char_field};
    if (fd.residue_char == 0) return {Trichotomy::EqualCharZero, 0};
    return {Trichotomy::Mixed, fd.residue_char};
}

namespace {

long parse_prime_suffix(const std::string& label, const std::string& prefix) {
    const std::string digits = label.substr(prefix.size());
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw input_error("field label '" + label + "': expected a prime after '" + prefix + "'");
    long p = std::stol(digits);
    if (!is_prime(Integer(p)))
        throw input_error("field label '" + label + "': " + digits + " is not prime");
    return p;
}

}  // namespace

FieldDescriptor field_from_label(const std::string& label) {
    FieldDescriptor fd;
    fd.label = label;
    if (label.rfind("Qp:", 0) == 0) {
        long p = parse_prime_suffix(label, "Qp:");
        fd.char_field = 0;
        fd.residue_char = p;
        fd.spherically_complete = true;  // complete and discretely valued
        fd.discretely_valued = true;
    } else if (label.rfind("Fp_laurent:", 0) == 0) {
        long p = parse_prime_suffix(label, "Fp_laurent:");
        fd.char_field = p;
        fd.residue_char = p;
        fd.spherically_complete = true;
        fd.discretely_valued = true;
    } else if (label == "trivial:Q") {
        fd.char_field = 0;
        fd.residue_char = 0;
        fd.spherically_complete = true;
        fd.discretely_valued = true;
    } else if (label.rfind("trivial:Fp:", 0) == 0) {
        long p = parse_prime_suffix(label, "trivial:Fp:");
        fd.char_field = p;
        fd.residue_char = p;
        fd.spherically_complete = true;
        fd.discretely_valued = true;
    } else {
        throw input_error("unknown field label '" + label +
                          "' (expected Qp:<p>, Fp_laurent:<p>, trivial:Q or trivial:Fp:<p>)");
    }
    fd.validate();
    return fd;
}

}  // namespace nka

#include "nka/amenability.hpp"

#include <algorithm>

#include "nka/errors.hpp"

namespace nka {

ExtendedNorm finite_group_norm(const Integer& n, const FieldDescriptor& fd) {
    if (n < 1) throw precondition_error("finite_group_norm: order must be positive");
    const auto tc = classify_trichotomy(fd);
    switch (tc.kind) {
        case Trichotomy::CharP:
            return n % tc.p == 0 ? ExtendedNorm::infinity() : ExtendedNorm::one();
        case Trichotomy::EqualCharZero:
            return ExtendedNorm::one();
        case Trichotomy::Mixed:
            return ExtendedNorm::power(tc.p, padic_valuation(n, Integer(tc.p)));
    }
    throw descriptor_error("finite_group_norm: bad trichotomy");
}

MeanTable uniform_mean(GroupPtr group, long p) {
    if (!group) throw precondition_error("uniform_mean: null group");
    if (!is_prime(Integer(p))) throw precondition_error("uniform_mean: p must be prime");
    const int n = group->order();
    MeanTable mean;
    mean.group = group;
    mean.coefficients.assign(n, Rational(1, n));

    // m(f) = sum_i alpha_i f(g_i).  On the Dirac basis, (g . d_x) = d_{gx},
    // so invariance reads alpha_{gx} = alpha_x; normalization is sum = 1.
    Rational total(0);
    for (int x = 0; x < n; ++x) {
        total += mean.coefficients[x];
        for (int g = 0; g < n; ++g)
            if (mean.coefficients[group->mul(g, x)] != mean.coefficients[x])
                throw precondition_error("uniform_mean: invariance check failed");
    }
    if (total != 1) throw precondition_error("uniform_mean: normalization check failed");

    // ||m||_op as the exact max over Dirac evaluations |m(d_x)|_p = |1/n|_p;
    // scalar sup norms take values in the powers of p, where the two
    // operator norm conventions coincide.
    Rational dirac_max(0);
    for (int x = 0; x < n; ++x)
        dirac_max = std::max(dirac_max, padic_norm(mean.coefficients[x], Integer(p)));
    long exponent = padic_valuation(num(dirac_max), Integer(p)) -
                    padic_valuation(den(dirac_max), Integer(p));
    mean.operator_norm = ExtendedNorm::power(p, exponent);
    return mean;
}

bool reason_is_failure(Reason r) {
    switch (r) {
        case Reason::NotLocallyElliptic:
        case Reason::NotCompact:
        case Reason::NotPFree:
        case Reason::ExponentDiverges:
            return true;
        default:
            return false;
    }
}

std::string reason_tag(Reason r) {
    switch (r) {
        case Reason::FiniteOrderValuation: return "finite_order_valuation";
        case Reason::LocallyEllipticExponent: return "locally_elliptic_exponent";
        case Reason::CompactExponent: return "compact_exponent";
        case Reason::CharPFree: return "char_p_free";
        case Reason::EqualCharZero: return "equal_char_zero";
        case Reason::NotLocallyElliptic: return "not_locally_elliptic";
        case Reason::NotCompact: return "not_compact";
        case Reason::NotPFree: return "not_p_free";
        case Reason::ExponentDiverges: return "exponent_diverges";
    }
    return "?";
}

AmenabilityVerdict amenability_norm(const GroupDescriptor& g, const FieldDescriptor& fd,
                                    int depth) {
    const auto tc = classify_trichotomy(fd);

    // Finite groups short-circuit: every flag is known and the norm is the
    // valuation of the order.
    const bool finite_kind = g.kind() == GroupDescriptor::Kind::Finite ||
                             g.kind() == GroupDescriptor::Kind::Cyclic ||
                             g.kind() == GroupDescriptor::Kind::Symmetric;
    if (finite_kind)
        return {finite_group_norm(g.finite_order(), fd), true, Reason::FiniteOrderValuation};

    const Tri required = fd.spherically_complete ? g.locally_elliptic() : g.compact();
    if (required == Tri::Unknown)
        throw descriptor_error("amenability_norm: descriptor flag (" +
                               std::string(fd.spherically_complete ? "locally elliptic"
                                                                   : "compact") +
                               ") is unresolved for " + g.describe());
    if (required == Tri::False)
        return {ExtendedNorm::infinity(), true,
                fd.spherically_complete ? Reason::NotLocallyElliptic : Reason::NotCompact};

    const Reason success =
        fd.spherically_complete ? Reason::LocallyEllipticExponent : Reason::CompactExponent;
    switch (tc.kind) {
        case Trichotomy::EqualCharZero:
            return {ExtendedNorm::one(), true, Reason::EqualCharZero};
        case Trichotomy::CharP: {
            auto e = g.p_exponent(tc.p, depth);
            if (e.diverges() || *e.value > 0)
                return {ExtendedNorm::infinity(), e.certified, Reason::NotPFree};
            return {ExtendedNorm::one(), e.certified, Reason::CharPFree};
        }
        case Trichotomy::Mixed: {
            auto e = g.p_exponent(tc.p, depth);
            if (e.diverges())
                return {ExtendedNorm::infinity(), e.certified, Reason::ExponentDiverges};
            return {ExtendedNorm::power(tc.p, *e.value), e.certified, success};
        }
    }
    throw descriptor_error("amenability_norm: bad trichotomy");
}

ObstructionVerdict simplicity_obstruction(const NormTable& norms) {
    auto at2 = norms.entries.find(2);
    if (at2 == norms.entries.end())
        throw input_error("simplicity_obstruction: the table must contain p = 2");
    if (!norms.tail_is_one)
        throw input_error("simplicity_obstruction: the table must declare its tail");

    if (at2->second <= ExtendedNorm::power(2, 1))
        return {true, "norm at 2 is at most 2"};

    long odd_above_one = 0;
    for (const auto& [p, norm] : norms.entries) {
        if (p == 2) continue;
        if (!(norm <= ExtendedNorm::one())) ++odd_above_one;
    }
    if (odd_above_one <= 1)
        return {true, odd_above_one == 0 ? "no odd prime has norm above 1"
                                         : "only one odd prime has norm above 1"};
    return {false, "norm at 2 exceeds 2 and two odd primes have norm above 1"};
}

}  // namespace nka

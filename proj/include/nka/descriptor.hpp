#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "nka/group.hpp"
#include "nka/rational.hpp"

namespace nka {

enum class Tri { True, False, Unknown };

Tri tri_and(Tri a, Tri b);

// sup of nu_p over a descriptor's order data.  value == nullopt means the
// supremum is infinite.  An uncertified result is a lower bound computed to
// the requested depth, never a silently truncated "answer".
struct ExponentResult {
    std::optional<long> value;
    bool certified = false;
    bool diverges() const { return !value.has_value(); }
};

// Declared stabilization of nu_p along a formula stream: either the exact
// supremum of the exponent, or divergence.
struct Stabilization {
    long prime = 0;
    std::optional<long> exponent;  // nullopt <=> diverges
};

// Orders of the finite pieces of a profinite group (its finite discrete
// quotients) or of a quotient tower.
class OrderStream {
public:
    // exhaustive: the list is the entire system, so suprema over it are exact.
    // quotient_tower: each entry must divide its successor (checked).
    static OrderStream explicit_orders(std::vector<Integer> orders, bool exhaustive,
                                       bool quotient_tower = false);
    // order_at is 1-based and must be evaluable for every index >= 1.
    // A formula stream is certified at a prime only where a stabilization
    // is declared; finite sampling alone cannot certify a supremum.
    static OrderStream formula(std::function<Integer(int)> order_at,
                               std::vector<Stabilization> stabilizations);

    bool is_explicit() const { return !orders_.empty() || !order_at_; }
    Integer order_at(int k) const;  // 1-based
    const std::vector<Integer>& orders() const { return orders_; }
    bool exhaustive() const { return exhaustive_; }
    bool quotient_tower() const { return quotient_tower_; }

    ExponentResult exponent(long p, int depth) const;

private:
    OrderStream() = default;
    std::vector<Integer> orders_;
    bool exhaustive_ = false;
    bool quotient_tower_ = false;
    std::function<Integer(int)> order_at_;
    std::vector<Stabilization> stabilizations_;
};

// Symbolic model of a t.d.l.c. group, rich enough to evaluate p-exponents
// (and hence amenability norms) for every family in the catalogue.
//
// Family tags and parameters:
//   gl_chain  {ell, a, n=2}  union of GL_n(F_q), q = ell^(a^k)
//   psl_chain {ell, a, n=2}  union of PSL_n(F_q), q = ell^(a^k)
//   sz_chain  {a}            union of Sz(q), q = 2^(a^k), a odd
//   tree_fix  {d}            vertex stabilizer in the d-valent tree
//   prufer    {p}            Pruefer p-group, discrete
//   z_ell     {ell}          additive group of ell-adic integers
//   q_ell     {ell}          additive group of the ell-adic field
class GroupDescriptor {
public:
    enum class Kind { Finite, Cyclic, Symmetric, Profinite, DirectedUnion, Extension, Product, Family };

    static GroupDescriptor finite(Integer order);
    static GroupDescriptor finite(GroupPtr group);
    static GroupDescriptor cyclic(long n);
    static GroupDescriptor symmetric(int n);
    static GroupDescriptor profinite(OrderStream stream);
    static GroupDescriptor directed_union(std::vector<GroupDescriptor> members, bool open_members);
    static GroupDescriptor extension(GroupDescriptor kernel, GroupDescriptor quotient);
    static GroupDescriptor product(std::vector<GroupDescriptor> members);
    static GroupDescriptor family(const std::string& name, std::map<std::string, long> params);

    Kind kind() const { return kind_; }
    Tri compact() const { return compact_; }
    Tri locally_elliptic() const { return locally_elliptic_; }
    const std::string& family_name() const { return family_name_; }
    const std::map<std::string, long>& family_params() const { return params_; }
    const GroupDescriptor& kernel() const { return children_.at(0); }
    const GroupDescriptor& quotient() const { return children_.at(1); }
    const std::vector<GroupDescriptor>& members() const { return children_; }
    bool open_members() const { return open_members_; }
    const Integer& finite_order() const { return order_; }

    ExponentResult p_exponent(long p, int depth) const;

    // Order of the k-th finite piece of a chain family (k >= 1); used to
    // cross-check the closed-form exponents against direct valuations.
    Integer chain_order_at(int k) const;

    nlohmann::json to_json() const;
    static GroupDescriptor from_json(const nlohmann::json& j);

    std::string describe() const;

private:
    GroupDescriptor() = default;
    void validate_family() const;
    ExponentResult family_exponent(long p, int depth) const;

    Kind kind_ = Kind::Finite;
    Tri compact_ = Tri::Unknown;
    Tri locally_elliptic_ = Tri::Unknown;
    Integer order_ = 1;           // Finite / Cyclic / Symmetric
    GroupPtr group_;              // optional concrete group
    std::optional<OrderStream> stream_;
    std::vector<GroupDescriptor> children_;
    bool open_members_ = false;
    std::string family_name_;
    std::map<std::string, long> params_;
};

// Inline descriptor syntax used by the CLI: "prufer:2", "z_ell:3",
// "tree_fix:3", "gl_chain:ell=3,a=3", "psl_chain:q0=3,ell=3,a=odd",
// "sz_chain:a=3", "cyclic:12", "symmetric:4", "finite:48".
GroupDescriptor descriptor_from_string(const std::string& text);

}  // namespace nka

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "nka/rational.hpp"

namespace nka {

// A concrete finite group: elements 0..n-1 and a total multiplication table.
// Construction checks that the table is a Latin square with identity and
// inverses; tables supplied by hand are additionally checked associative.
class FiniteGroup {
public:
    static constexpr int kClosureBound = 10000;

    int order() const { return n_; }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
    int inv(int a) const { return inverse_[a]; }
    const std::string& name() const { return name_; }
    bool is_abelian() const;
    Integer order_integer() const { return Integer(n_); }

    static FiniteGroup trivial();
    static FiniteGroup cyclic(long n);
    static FiniteGroup symmetric(int n);
    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
    static FiniteGroup from_table(const std::vector<std::vector<int>>& table,
                                  std::string name = "table");
    // Closure of permutations of {0..degree-1}; bounded at kClosureBound elements.
    static FiniteGroup from_permutation_generators(int degree,
                                                   const std::vector<std::vector<int>>& generators,
                                                   std::string name = "perm");

private:
    FiniteGroup() = default;
    void finish(bool check_associativity);

    std::string name_;
    int n_ = 0;
    int identity_ = 0;
    std::vector<int> table_;    // n * n, row-major
    std::vector<int> inverse_;  // n
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// p^{nu_p(|G|)}: the order of a p-Sylow subgroup.
Integer sylow_order(const FiniteGroup& g, long p);

// Independent oracle used by the test suites: the maximal order of a
// p-subgroup found by enumerating all subgroups.  Exponential; meant for
// groups of order <= 48.
Integer max_p_subgroup_order_bruteforce(const FiniteGroup& g, long p);

}  // namespace nka

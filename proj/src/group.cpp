#include "nka/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "nka/errors.hpp"
#include "nka/valuation.hpp"

namespace nka {

void FiniteGroup::finish(bool check_associativity) {
    const int n = n_;
    if (n <= 0 || static_cast<int>(table_.size()) != n * n)
        throw input_error("group '" + name_ + "': malformed multiplication table");
    for (int v : table_)
        if (v < 0 || v >= n) throw input_error("group '" + name_ + "': table entry out of range");
    // Latin square: every row and column is a permutation.
    for (int a = 0; a < n; ++a) {
        std::vector<bool> row(n, false), col(n, false);
        for (int b = 0; b < n; ++b) {
            if (row[mul(a, b)]) throw input_error("group '" + name_ + "': repeated entry in row");
            row[mul(a, b)] = true;
            if (col[mul(b, a)]) throw input_error("group '" + name_ + "': repeated entry in column");
            col[mul(b, a)] = true;
        }
    }
    identity_ = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
        if (ok) {
            identity_ = e;
            break;
        }
    }
    if (identity_ < 0) throw input_error("group '" + name_ + "': no identity element");
    inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (mul(a, b) == identity_ && mul(b, a) == identity_) {
                inverse_[a] = b;
                break;
            }
        if (inverse_[a] < 0) throw input_error("group '" + name_ + "': element without inverse");
    }
    if (check_associativity) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                        throw input_error("group '" + name_ + "': table is not associative");
    }
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(long n) {
    if (n < 1 || n > kClosureBound) throw input_error("cyclic: order out of range");
    FiniteGroup g;
    g.name_ = "Z/" + std::to_string(n);
    g.n_ = static_cast<int>(n);
    g.table_.resize(static_cast<std::size_t>(n) * n);
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b) g.table_[a * n + b] = static_cast<int>((a + b) % n);
    g.finish(false);
    return g;
}

FiniteGroup FiniteGroup::symmetric(int n) {
    if (n < 1 || n > 7) throw input_error("symmetric: degree out of range");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    FiniteGroup g;
    g.name_ = "S" + std::to_string(n);
    g.n_ = static_cast<int>(perms.size());
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < g.n_; ++i) index[perms[i]] = i;
    g.table_.resize(static_cast<std::size_t>(g.n_) * g.n_);
    std::vector<int> comp(n);
    for (int a = 0; a < g.n_; ++a)
        for (int b = 0; b < g.n_; ++b) {
            for (int i = 0; i < n; ++i) comp[i] = perms[a][perms[b][i]];
            g.table_[static_cast<std::size_t>(a) * g.n_ + b] = index.at(comp);
        }
    g.finish(false);
    return g;
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    FiniteGroup g;
    g.name_ = a.name_ + "x" + b.name_;
    const long n = static_cast<long>(a.n_) * b.n_;
    if (n > kClosureBound) throw input_error("direct_product: order out of range");
    g.n_ = static_cast<int>(n);
    g.table_.resize(static_cast<std::size_t>(n) * n);
    // element (x, y) <-> x * |B| + y
    for (int x1 = 0; x1 < a.n_; ++x1)
        for (int y1 = 0; y1 < b.n_; ++y1)
            for (int x2 = 0; x2 < a.n_; ++x2)
                for (int y2 = 0; y2 < b.n_; ++y2) {
                    int u = x1 * b.n_ + y1, v = x2 * b.n_ + y2;
                    g.table_[static_cast<std::size_t>(u) * n + v] =
                        a.mul(x1, x2) * b.n_ + b.mul(y1, y2);
                }
    g.finish(false);
    return g;
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table, std::string name) {
    FiniteGroup g;
    g.name_ = std::move(name);
    g.n_ = static_cast<int>(table.size());
    g.table_.reserve(static_cast<std::size_t>(g.n_) * g.n_);
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != g.n_)
            throw input_error("group '" + g.name_ + "': table is not square");
        g.table_.insert(g.table_.end(), row.begin(), row.end());
    }
    g.finish(true);
    return g;
}

FiniteGroup FiniteGroup::from_permutation_generators(int degree,
                                                     const std::vector<std::vector<int>>& generators,
                                                     std::string name) {
    if (degree < 1) throw input_error("permutation group: degree must be positive");
    for (const auto& gen : generators) {
        if (static_cast<int>(gen.size()) != degree)
            throw input_error("permutation group: generator has wrong degree");
        std::vector<bool> seen(degree, false);
        for (int v : gen) {
            if (v < 0 || v >= degree || seen[v])
                throw input_error("permutation group: generator is not a permutation");
            seen[v] = true;
        }
    }
    std::vector<int> id(degree);
    std::iota(id.begin(), id.end(), 0);
    std::set<std::vector<int>> closure{id};
    std::vector<std::vector<int>> frontier{id};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& p : frontier) {
            for (const auto& gen : generators) {
                std::vector<int> q(degree);
                for (int i = 0; i < degree; ++i) q[i] = p[gen[i]];
                if (closure.insert(q).second) {
                    if (static_cast<int>(closure.size()) > kClosureBound)
                        throw budget_error("permutation group: closure exceeds " +
                                           std::to_string(kClosureBound) + " elements");
                    next.push_back(std::move(q));
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<std::vector<int>> elems(closure.begin(), closure.end());
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < static_cast<int>(elems.size()); ++i) index[elems[i]] = i;
    FiniteGroup g;
    g.name_ = std::move(name);
    g.n_ = static_cast<int>(elems.size());
    g.table_.resize(static_cast<std::size_t>(g.n_) * g.n_);
    std::vector<int> comp(degree);
    for (int a = 0; a < g.n_; ++a)
        for (int b = 0; b < g.n_; ++b) {
            for (int i = 0; i < degree; ++i) comp[i] = elems[a][elems[b][i]];
            g.table_[static_cast<std::size_t>(a) * g.n_ + b] = index.at(comp);
        }
    g.finish(false);
    return g;
}

Integer sylow_order(const FiniteGroup& g, long p) {
    long k = padic_valuation(g.order_integer(), Integer(p));
    return pow_integer(Integer(p), static_cast<unsigned long>(k));
}

namespace {

// Closure of a set of elements inside g.
std::vector<int> subgroup_closure(const FiniteGroup& g, std::vector<int> gens) {
    std::set<int> closure(gens.begin(), gens.end());
    closure.insert(g.identity());
    std::vector<int> frontier(closure.begin(), closure.end());
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int a : frontier)
            for (int b : closure) {
                for (int c : {g.mul(a, b), g.mul(b, a), g.inv(a)}) {
                    if (closure.insert(c).second) next.push_back(c);
                }
            }
        frontier = std::move(next);
    }
    return {closure.begin(), closure.end()};
}

}  // namespace

Integer max_p_subgroup_order_bruteforce(const FiniteGroup& g, long p) {
    // Enumerate all subgroups by closing generator sets, breadth-first.
    std::set<std::vector<int>> subgroups;
    subgroups.insert(subgroup_closure(g, {}));
    std::vector<std::vector<int>> frontier(subgroups.begin(), subgroups.end());
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& h : frontier) {
            for (int x = 0; x < g.order(); ++x) {
                if (std::binary_search(h.begin(), h.end(), x)) continue;
                auto gens = h;
                gens.push_back(x);
                auto closed = subgroup_closure(g, gens);
                if (subgroups.insert(closed).second) next.push_back(std::move(closed));
            }
        }
        frontier = std::move(next);
    }
    Integer best = 1;
    for (const auto& h : subgroups) {
        const Integer size(h.size());
        // p-subgroup <=> order is a power of p
        Integer m = size;
        while (m % p == 0) m /= p;
        if (m == 1 && size > best) best = size;
    }
    return best;
}

}  // namespace nka

#include "nka/quasimorphism.hpp"

#include <algorithm>

#include "nka/errors.hpp"
#include "nka/valuation.hpp"

namespace nka {

namespace {

constexpr long kPairBudget = 1L << 26;

void check_table(const QmTable& f) {
    if (!f.domain) throw precondition_error("quasimorphism: null domain");
    if (f.values.size() != static_cast<std::size_t>(f.domain->order()))
        throw precondition_error("quasimorphism: table is not total on the domain");
    if (!is_prime(Integer(f.p))) throw precondition_error("quasimorphism: p must be prime");
}

}  // namespace

QmTable section_table(long p, int N) {
    if (N < 0) throw precondition_error("section_table: negative depth");
    Integer pn = pow_integer(Integer(p), static_cast<unsigned long>(N));
    if (pn > FiniteGroup::kClosureBound)
        throw budget_error("section_table: p^N too large to materialize; use section_defect");
    QmTable f;
    f.p = p;
    f.domain = std::make_shared<FiniteGroup>(FiniteGroup::cyclic(pn.convert_to<long>()));
    f.values.reserve(static_cast<std::size_t>(f.domain->order()));
    for (long k = 0; k < f.domain->order(); ++k)
        f.values.push_back(Rational(k) / Rational(pn));
    return f;
}

Rational defect(const QmTable& f) {
    check_table(f);
    const int n = f.domain->order();
    if (static_cast<long>(n) * n > kPairBudget)
        throw budget_error("defect: pair enumeration over budget");
    Rational best(0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            Rational diff = f.values[static_cast<std::size_t>(f.domain->mul(x, y))] -
                            f.values[static_cast<std::size_t>(x)] -
                            f.values[static_cast<std::size_t>(y)];
            Rational norm = padic_norm(diff, Integer(f.p));
            if (norm > best) best = norm;
        }
    return best;
}

SectionDefect section_defect(long p, int N) {
    if (!is_prime(Integer(p))) throw precondition_error("section_defect: p must be prime");
    if (N < 0) throw precondition_error("section_defect: negative depth");
    SectionDefect result;
    if (N == 0) {
        result.defect = Rational(0);
        return result;
    }
    // The maximal element added to itself overflows: 2 (p^N - 1) >= p^N.
    Integer top = pow_integer(Integer(p), static_cast<unsigned long>(N)) - 1;
    result.defect = Rational(1);
    result.attained_at = std::make_pair(top, top);
    return result;
}

HomCheckReport qm_to_hom_check(const QmTable& f) {
    check_table(f);
    Rational d = defect(f);
    if (d > 1) throw precondition_error("qm_to_hom_check: defect exceeds 1");
    HomCheckReport report;
    const int n = f.domain->order();
    report.projected.reserve(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
        report.projected.push_back(project_to_prufer(f.values[static_cast<std::size_t>(x)], f.p));
    report.is_homomorphism = true;
    for (int x = 0; x < n && report.is_homomorphism; ++x)
        for (int y = 0; y < n; ++y) {
            auto lhs = report.projected[static_cast<std::size_t>(f.domain->mul(x, y))];
            auto rhs = report.projected[static_cast<std::size_t>(x)].add(
                report.projected[static_cast<std::size_t>(y)]);
            if (!(lhs == rhs)) {
                report.is_homomorphism = false;
                break;
            }
        }
    report.lift_within_unit_distance = true;
    for (int x = 0; x < n; ++x) {
        Rational diff = standard_section(report.projected[static_cast<std::size_t>(x)]) -
                        f.values[static_cast<std::size_t>(x)];
        if (padic_norm(diff, Integer(f.p)) > 1) {
            report.lift_within_unit_distance = false;
            break;
        }
    }
    return report;
}

Rational fg_quasimorphism_bound(const Rational& defect_value,
                                const std::vector<Rational>& generator_norms) {
    if (generator_norms.empty())
        throw precondition_error("fg_quasimorphism_bound: empty generator list");
    Rational best = defect_value;
    for (const auto& g : generator_norms) best = std::max(best, g);
    return best;
}

Rational hom_distance_check(const QmTable& f, const QmTable& h) {
    check_table(f);
    check_table(h);
    if (f.domain.get() != h.domain.get() || f.p != h.p)
        throw precondition_error("hom_distance_check: tables live on different domains");
    if (defect(h) != 0) throw precondition_error("hom_distance_check: h is not a homomorphism");
    Rational dist(0);
    for (std::size_t x = 0; x < f.values.size(); ++x)
        dist = std::max(dist, padic_norm(f.values[x] - h.values[x], Integer(f.p)));
    if (dist < defect(f))
        throw precondition_error("hom_distance_check: distance fell below the defect");
    return dist;
}

QmTable product_combine(const std::vector<QmTable>& tables) {
    if (tables.empty()) throw precondition_error("product_combine: no tables");
    for (const auto& t : tables) {
        check_table(t);
        if (t.p != tables.front().p) throw precondition_error("product_combine: mixed primes");
        if (t.values[static_cast<std::size_t>(t.domain->identity())] != 0)
            throw precondition_error("product_combine: table does not vanish at the identity");
    }
    QmTable combined;
    combined.p = tables.front().p;
    auto group = tables.front().domain;
    auto values = tables.front().values;
    for (std::size_t i = 1; i < tables.size(); ++i) {
        const auto& t = tables[i];
        auto prod = std::make_shared<FiniteGroup>(FiniteGroup::direct_product(*group, *t.domain));
        std::vector<Rational> next(static_cast<std::size_t>(prod->order()));
        // element (x, y) <-> x * |B| + y, matching FiniteGroup::direct_product
        for (int x = 0; x < group->order(); ++x)
            for (int y = 0; y < t.domain->order(); ++y)
                next[static_cast<std::size_t>(x) * t.domain->order() + y] =
                    values[static_cast<std::size_t>(x)] + t.values[static_cast<std::size_t>(y)];
        group = std::move(prod);
        values = std::move(next);
    }
    combined.domain = std::move(group);
    combined.values = std::move(values);

    Rational max_component(0);
    for (const auto& t : tables) max_component = std::max(max_component, defect(t));
    if (defect(combined) > max_component)
        throw precondition_error("product_combine: combined defect exceeds component bound");
    return combined;
}

LaurentSectionReport laurent_section_check(int N, long p) {
    if (N < 0) throw precondition_error("laurent_section_check: negative depth");
    if (!is_prime(Integer(p))) throw precondition_error("laurent_section_check: p must be prime");
    Integer count = pow_integer(Integer(p), static_cast<unsigned long>(N));
    if (count * count > kPairBudget)
        throw budget_error("laurent_section_check: pair enumeration over budget");
    // Enumerate all tails supported in degrees -1..-N.
    std::vector<LaurentTail> elements;
    const long total = count.convert_to<long>();
    for (long code = 0; code < total; ++code) {
        std::map<int, int> coeffs;
        long c = code;
        for (int i = 1; i <= N; ++i) {
            int digit = static_cast<int>(c % p);
            c /= p;
            if (digit != 0) coeffs[-i] = digit;
        }
        elements.push_back(LaurentTail::from_coefficients(p, std::move(coeffs)));
    }
    // The section includes a tail as the Laurent scalar with the same
    // coefficients; additions of such scalars are coefficient-wise in F_p,
    // so the section commutes with the group law exactly.
    LaurentSectionReport report;
    report.homomorphism = true;
    report.defect = Rational(0);
    for (const auto& x : elements)
        for (const auto& y : elements) {
            ++report.pairs_checked;
            // scalar sum of the lifts = coefficient-wise sum = lift of x + y
            auto sum = x.add(y);
            std::map<int, int> scalar_sum = x.coefficients();
            for (const auto& [deg, cv] : y.coefficients()) {
                int v = ((scalar_sum.count(deg) ? scalar_sum[deg] : 0) + cv) % static_cast<int>(p);
                if (v == 0)
                    scalar_sum.erase(deg);
                else
                    scalar_sum[deg] = v;
            }
            if (!(scalar_sum == sum.coefficients())) {
                report.homomorphism = false;
                // norm of the nonzero difference: p^{-d} for its lowest degree d
                std::map<int, int> diff = scalar_sum;
                for (const auto& [deg, cv] : sum.coefficients()) {
                    int v = ((diff.count(deg) ? diff[deg] : 0) - cv) % static_cast<int>(p);
                    if (v < 0) v += static_cast<int>(p);
                    if (v == 0)
                        diff.erase(deg);
                    else
                        diff[deg] = v;
                }
                if (!diff.empty())
                    report.defect =
                        std::max(report.defect, pow_rational(Integer(p), -diff.begin()->first));
            }
        }
    return report;
}

}  // namespace nka

#include "nka/cohomology.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <type_traits>

#include "nka/errors.hpp"
#include "nka/linalg.hpp"
#include "nka/valuation.hpp"

namespace nka {

std::size_t enumeration_budget() {
    if (const char* env = std::getenv("NKA_ENUM_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 20736;  // 12^4
}

namespace {

// Rows of the matrix of the coboundary C^n -> C^(n+1) in the Dirac bases:
// one row per output tuple.
template <class F>
std::vector<linalg::SparseRow<F>> coboundary_rows(const F& field, const GroupPtr& group,
                                                  long field_char, int degree) {
    Cochain domain_probe(group, degree, field_char);
    Cochain image_probe(group, degree + 1, field_char);
    const auto& grp = *group;
    std::vector<linalg::SparseRow<F>> rows(image_probe.size());
    std::vector<std::pair<int, typename F::Value>> entries;
    std::vector<int> face(degree);
    for (std::size_t flat = 0; flat < image_probe.size(); ++flat) {
        auto tuple = image_probe.unflatten(flat);
        entries.clear();
        auto add = [&](std::span<const int> t, int sign) {
            entries.emplace_back(static_cast<int>(domain_probe.flatten(t)),
                                 sign > 0 ? field.one() : field.neg(field.one()));
        };
        const int n = degree;
        for (int i = 1; i <= n; ++i) face[i - 1] = tuple[i];
        add(face, +1);
        int sign = -1;
        for (int i = 0; i < n; ++i) {
            int k = 0;
            for (int j = 0; j <= n; ++j) {
                if (j == i) {
                    face[k++] = grp.mul(tuple[i], tuple[i + 1]);
                    ++j;
                } else {
                    face[k++] = tuple[j];
                }
            }
            add(face, sign);
            sign = -sign;
        }
        for (int i = 0; i < n; ++i) face[i] = tuple[i];
        add(face, sign);
        // collect duplicates
        std::sort(entries.begin(), entries.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        linalg::SparseRow<F> row;
        for (const auto& [col, val] : entries) {
            if (!row.empty() && row.back().first == col)
                row.back().second = field.add(row.back().second, val);
            else
                row.emplace_back(col, val);
        }
        row.erase(std::remove_if(row.begin(), row.end(),
                                 [&](const auto& e) { return field.is_zero(e.second); }),
                  row.end());
        rows[flat] = std::move(row);
    }
    return rows;
}

template <class F>
std::vector<linalg::SparseRow<F>> transpose_rows(const std::vector<linalg::SparseRow<F>>& rows,
                                                 int ncols) {
    std::vector<linalg::SparseRow<F>> out(static_cast<std::size_t>(ncols));
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
        for (const auto& [c, v] : rows[static_cast<std::size_t>(r)])
            out[static_cast<std::size_t>(c)].emplace_back(r, v);
    return out;
}

template <class F>
CohomologySummary summarize(const F& field, GroupPtr group, long field_char, int degree) {
    CohomologySummary s;
    s.degree = degree;
    Cochain probe(group, degree, field_char);
    const int dim_domain = static_cast<int>(probe.size());

    // rank of the outgoing coboundary; cocycles by rank-nullity
    auto rows_out = coboundary_rows(field, group, field_char, degree);
    long rank_out = linalg::rank_of(field, rows_out, dim_domain);
    s.dim_cocycles = dim_domain - rank_out;

    linalg::Echelon<F> image(field, dim_domain);
    if (degree > 0) {
        // image of the incoming coboundary = column space of its matrix
        auto rows_in = coboundary_rows(field, group, field_char, degree - 1);
        Cochain below(group, degree - 1, field_char);
        for (auto& col : transpose_rows<F>(rows_in, static_cast<int>(below.size())))
            image.add_row(std::move(col));
    }
    s.dim_coboundaries = image.rank();
    s.dim_cohomology = s.dim_cocycles - s.dim_coboundaries;
    if (s.dim_cohomology < 0)
        throw precondition_error("cohomology_dim: elimination produced negative dimension");

    if (s.dim_cohomology > 0) {
        // representatives: kernel vectors independent of the image span
        auto kernel = linalg::kernel_basis(field, rows_out, dim_domain);
        for (const auto& vec : kernel) {
            if (static_cast<long>(s.sample_representatives.size()) >= s.dim_cohomology) break;
            if (!image.add_row(linalg::to_sparse(field, vec))) continue;
            Cochain rep(group, degree, field_char);
            for (std::size_t i = 0; i < vec.size(); ++i) {
                if constexpr (std::is_same_v<F, linalg::RationalField>)
                    rep.set(i, vec[i]);
                else
                    rep.set(i, Rational(vec[i]));
            }
            s.sample_representatives.push_back(std::move(rep));
        }
    }
    return s;
}

}  // namespace

CohomologySummary cohomology_dim(GroupPtr group, long field_char, int degree) {
    if (!group) throw precondition_error("cohomology_dim: null group");
    if (degree < 0) throw precondition_error("cohomology_dim: negative degree");
    std::size_t cells = 1;
    const auto budget = enumeration_budget();
    for (int i = 0; i <= degree; ++i) {
        cells *= static_cast<std::size_t>(group->order());
        if (cells > budget)
            throw budget_error("cohomology_dim: |G|^(degree+1) exceeds the enumeration budget " +
                               std::to_string(budget) + " (raise NKA_ENUM_BUDGET to override)");
    }
    if (field_char == 0) return summarize(linalg::RationalField{}, group, field_char, degree);
    if (!is_prime(Integer(field_char)))
        throw precondition_error("cohomology_dim: characteristic must be 0 or prime");
    return summarize(linalg::PrimeField{field_char}, group, field_char, degree);
}

long h1b_dimension(const AbelianizationData& ab, const FieldDescriptor& fd) {
    if (ab.rank < 0) throw precondition_error("h1b_dimension: negative rank");
    for (const auto& d : ab.torsion)
        if (d < 1) throw precondition_error("h1b_dimension: bad torsion order");
    fd.validate();
    if (fd.char_field == 0) return ab.rank;
    long with_p_part = 0;
    for (const auto& d : ab.torsion)
        if (d % fd.char_field == 0) ++with_p_part;
    return ab.rank + with_p_part;
}

}  // namespace nka

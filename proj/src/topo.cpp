#include "nka/topo.hpp"

#include <algorithm>
#include <numeric>

#include "nka/errors.hpp"
#include "nka/linalg.hpp"
#include "nka/valuation.hpp"

namespace nka {

namespace {

// The cochain complex of X over a field: C^n = K^{cells[n]} with
// delta^n = transpose of d_{n+1}.
template <class F>
struct CochainSpace {
    F field;
    const CellComplex& x;

    int cells(int n) const {
        if (n < 0 || n > x.dim()) return 0;
        return x.cells[static_cast<std::size_t>(n)];
    }

    // Rows of delta^n : C^n -> C^{n+1}; one row per (n+1)-cell.
    std::vector<linalg::SparseRow<F>> delta_rows(int n) const {
        std::vector<linalg::SparseRow<F>> rows(static_cast<std::size_t>(cells(n + 1)));
        if (n < 0 || n >= x.dim()) return rows;
        const auto& d = x.boundary[static_cast<std::size_t>(n)];  // cells[n] x cells[n+1]
        for (int r = 0; r < cells(n + 1); ++r)
            for (int c = 0; c < cells(n); ++c) {
                long v = d[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
                if (v % modulus() != 0)
                    rows[static_cast<std::size_t>(r)].emplace_back(c, from_long(v));
            }
        return rows;
    }

    long modulus() const {
        if constexpr (std::is_same_v<F, linalg::PrimeField>)
            return field.p;
        else
            return 0x7fffffff;  // no reduction over the rationals
    }

    typename F::Value from_long(long v) const {
        if constexpr (std::is_same_v<F, linalg::PrimeField>)
            return field.norm(v);
        else
            return Rational(v);
    }

    long cohomology_dim(int n) const {
        long kernel = cells(n) - linalg::rank_of(field, delta_rows(n), std::max(cells(n), 1));
        long image = n == 0 ? 0 : linalg::rank_of(field, delta_rows(n - 1), std::max(cells(n - 1), 1));
        return kernel - image;
    }

    // Representatives of a basis of H^n, as dense cochains.
    std::vector<std::vector<typename F::Value>> h_basis(int n) const {
        auto kernel = linalg::kernel_basis(field, delta_rows(n), std::max(cells(n), 1));
        if (cells(n) == 0) return {};
        linalg::Echelon<F> image(field, cells(n));
        if (n > 0) {
            // columns of delta^{n-1} span the coboundaries
            auto rows = delta_rows(n - 1);
            std::vector<linalg::SparseRow<F>> cols(static_cast<std::size_t>(cells(n - 1)));
            for (int r = 0; r < static_cast<int>(rows.size()); ++r)
                for (const auto& [c, v] : rows[static_cast<std::size_t>(r)])
                    cols[static_cast<std::size_t>(c)].emplace_back(r, v);
            for (auto& col : cols) image.add_row(std::move(col));
        }
        std::vector<std::vector<typename F::Value>> basis;
        for (auto& vec : kernel)
            if (image.add_row(linalg::to_sparse(field, vec))) basis.push_back(std::move(vec));
        return basis;
    }

    // All coboundaries delta^{n-1}(Dirac) as dense vectors (spanning set).
    std::vector<std::vector<typename F::Value>> coboundary_span(int n) const {
        std::vector<std::vector<typename F::Value>> span;
        if (n == 0 || cells(n) == 0) return span;
        auto rows = delta_rows(n - 1);
        for (int c = 0; c < cells(n - 1); ++c) {
            std::vector<typename F::Value> col(static_cast<std::size_t>(cells(n)), field.zero());
            for (int r = 0; r < static_cast<int>(rows.size()); ++r)
                for (const auto& [cc, v] : rows[static_cast<std::size_t>(r)])
                    if (cc == c) col[static_cast<std::size_t>(r)] = v;
            span.push_back(std::move(col));
        }
        return span;
    }

    bool is_cocycle(int n, const std::vector<typename F::Value>& z) const {
        for (const auto& row : delta_rows(n)) {
            auto acc = field.zero();
            for (const auto& [c, v] : row) acc = field.add(acc, field.mul(v, z[static_cast<std::size_t>(c)]));
            if (!field.is_zero(acc)) return false;
        }
        return true;
    }

    // Coordinates of the class of z in the given basis of H^n.
    std::vector<typename F::Value> class_coords(
        int n, const std::vector<typename F::Value>& z,
        const std::vector<std::vector<typename F::Value>>& basis) const {
        auto rows = basis;
        auto span = coboundary_span(n);
        for (auto& s : span) rows.push_back(std::move(s));
        auto coords = linalg::coordinates_in_span(field, rows, z);
        if (!coords) throw precondition_error("class_coords: vector is not a cocycle class");
        return std::vector<typename F::Value>(coords->begin(),
                                              coords->begin() + static_cast<long>(basis.size()));
    }
};

template <class F>
std::vector<long> dims_over(const F& field, const CellComplex& x) {
    x.validate();
    CochainSpace<F> space{field, x};
    std::vector<long> dims(static_cast<std::size_t>(x.dim()) + 1, 0);
    for (int n = 0; n <= x.dim(); ++n) dims[static_cast<std::size_t>(n)] = space.cohomology_dim(n);
    return dims;
}

}  // namespace

std::vector<long> cellular_cohomology_dims(const CellComplex& x, long field_char) {
    if (field_char == 0) return dims_over(linalg::RationalField{}, x);
    if (!is_prime(Integer(field_char)))
        throw input_error("cellular_cohomology_dims: characteristic must be 0 or prime");
    return dims_over(linalg::PrimeField{field_char}, x);
}

namespace {

template <class F>
SubdivisionReport subdivision_check_over(const F& field, const SimplicialComplex& x, int degree) {
    if (degree < 0 || degree > x.dim())
        throw precondition_error("subdivision_norm_check: degree out of range");
    SubdivisionReport report;
    auto sub = barycentric_subdivision(x);
    const CellComplex cx = x.to_cells();
    const CellComplex csub = sub.complex.to_cells();

    // (a) every coefficient of the chain map is an integer (in fact +-1), so
    // dualizing a Dirac cochain yields coefficients of p-adic norm <= 1.
    report.dual_norm_bounded = true;
    for (const auto& level : sub.chain_map)
        for (const auto& image : level)
            for (const auto& [piece, coeff] : image) {
                (void)piece;
                if (coeff != 1 && coeff != -1) report.dual_norm_bounded = false;
            }

    // chain map property d o sd = sd o d (integer check, all degrees)
    for (int d = 1; d <= x.dim(); ++d) {
        const auto& bx = cx.boundary[static_cast<std::size_t>(d) - 1];
        const auto& bs = csub.boundary[static_cast<std::size_t>(d) - 1];
        for (int j = 0; j < cx.cells[static_cast<std::size_t>(d)]; ++j) {
            // lhs: d(sd(sigma_j)) in C_{d-1}(X')
            std::vector<long> lhs(static_cast<std::size_t>(sub.complex.count(d - 1)), 0);
            for (const auto& [piece, coeff] : sub.chain_map[static_cast<std::size_t>(d)][static_cast<std::size_t>(j)])
                for (int r = 0; r < sub.complex.count(d - 1); ++r)
                    lhs[static_cast<std::size_t>(r)] +=
                        coeff * bs[static_cast<std::size_t>(r)][static_cast<std::size_t>(piece)];
            // rhs: sd(d(sigma_j))
            std::vector<long> rhs(static_cast<std::size_t>(sub.complex.count(d - 1)), 0);
            for (int f = 0; f < x.count(d - 1); ++f) {
                long c = bx[static_cast<std::size_t>(f)][static_cast<std::size_t>(j)];
                if (c == 0) continue;
                for (const auto& [piece, coeff] : sub.chain_map[static_cast<std::size_t>(d) - 1][static_cast<std::size_t>(f)])
                    rhs[static_cast<std::size_t>(piece)] += c * coeff;
            }
            if (lhs != rhs) throw precondition_error("subdivision: chain map identity failed");
        }
    }

    // (b) dimensions agree in every degree
    report.dims_before = cellular_cohomology_dims(cx, 0);
    report.dims_after = cellular_cohomology_dims(csub, 0);
    report.dims_preserved = report.dims_before == report.dims_after;

    // induced map on cohomology at the requested degree: images of a basis
    // of H^degree(X') under the dual map are independent modulo the
    // coboundaries of X, and match the dimension.
    CochainSpace<F> space_x{field, cx};
    CochainSpace<F> space_sub{field, csub};
    auto basis_sub = space_sub.h_basis(degree);
    auto basis_x = space_x.h_basis(degree);
    report.induced_iso = basis_sub.size() == basis_x.size();
    if (report.induced_iso && !basis_sub.empty()) {
        std::vector<std::vector<typename F::Value>> images;
        for (const auto& phi : basis_sub) {
            // (sd* phi)(sigma) = phi(sd sigma)
            std::vector<typename F::Value> img(static_cast<std::size_t>(x.count(degree)),
                                               field.zero());
            for (int j = 0; j < x.count(degree); ++j)
                for (const auto& [piece, coeff] : sub.chain_map[static_cast<std::size_t>(degree)][static_cast<std::size_t>(j)]) {
                    auto term = field.mul(space_x.from_long(coeff), phi[static_cast<std::size_t>(piece)]);
                    img[static_cast<std::size_t>(j)] = field.add(img[static_cast<std::size_t>(j)], term);
                }
            if (!space_x.is_cocycle(degree, img))
                throw precondition_error("subdivision: dual image is not a cocycle");
            images.push_back(std::move(img));
        }
        // rank of the class matrix must be full
        std::vector<std::vector<typename F::Value>> coord_rows;
        for (const auto& img : images)
            coord_rows.push_back(space_x.class_coords(degree, img, basis_x));
        std::vector<linalg::SparseRow<F>> sparse_rows;
        for (const auto& r : coord_rows) sparse_rows.push_back(linalg::to_sparse(field, r));
        long rank = linalg::rank_of(field, sparse_rows, static_cast<int>(basis_x.size()));
        report.induced_iso = rank == static_cast<long>(basis_x.size());
    }
    return report;
}

}  // namespace

SubdivisionReport subdivision_norm_check(const SimplicialComplex& x, int degree, long field_char) {
    if (field_char == 0)
        return subdivision_check_over(linalg::RationalField{}, x, degree);
    if (!is_prime(Integer(field_char)))
        throw input_error("subdivision_norm_check: characteristic must be 0 or prime");
    return subdivision_check_over(linalg::PrimeField{field_char}, x, degree);
}

namespace {

// Dense restriction of a cochain on X to a subcomplex.
template <class V>
std::vector<V> restrict_cochain(const std::vector<V>& z, int degree, const SimplicialComplex& x,
                                const SimplicialComplex& sub, const V& zero) {
    std::vector<V> out(static_cast<std::size_t>(sub.count(degree)), zero);
    for (int i = 0; i < sub.count(degree); ++i) {
        int j = x.index_of(degree, sub.simplices(degree)[static_cast<std::size_t>(i)]);
        if (j < 0) throw input_error("restrict: simplex missing from the ambient complex");
        out[static_cast<std::size_t>(i)] = z[static_cast<std::size_t>(j)];
    }
    return out;
}

template <class F>
MayerVietorisReport mv_over(const F& field, const SimplicialComplex& x, const SimplicialComplex& a,
                            const SimplicialComplex& b, long field_char) {
    using V = typename F::Value;
    if (!a.is_subcomplex_of(x) || !b.is_subcomplex_of(x))
        throw input_error("mayer_vietoris: A and B must be subcomplexes of X");
    for (int d = 0; d <= x.dim(); ++d)
        for (const auto& s : x.simplices(d))
            if (!a.contains(d, s) && !b.contains(d, s))
                throw input_error("mayer_vietoris: A and B do not cover X");
    const SimplicialComplex ab = a.intersect(b);

    MayerVietorisReport report;
    const CellComplex cx = x.to_cells(), ca = a.to_cells(), cb = b.to_cells(), cab = ab.to_cells();
    report.dims_x = cellular_cohomology_dims(cx, field_char);
    report.dims_a = cellular_cohomology_dims(ca, field_char);
    report.dims_b = cellular_cohomology_dims(cb, field_char);
    report.dims_ab = cellular_cohomology_dims(cab, field_char);

    CochainSpace<F> sx{field, cx}, sa{field, ca}, sb{field, cb}, sab{field, cab};
    const int top = x.dim();

    auto dim_at = [](const std::vector<long>& dims, int n) {
        return (n >= 0 && n < static_cast<int>(dims.size())) ? dims[static_cast<std::size_t>(n)] : 0L;
    };

    // Bases per node and degree.
    std::vector<std::vector<std::vector<V>>> hx(top + 2), ha(top + 2), hb(top + 2), hab(top + 2);
    for (int n = 0; n <= top + 1; ++n) {
        hx[static_cast<std::size_t>(n)] = n <= cx.dim() ? sx.h_basis(n) : std::vector<std::vector<V>>{};
        ha[static_cast<std::size_t>(n)] = n <= ca.dim() ? sa.h_basis(n) : std::vector<std::vector<V>>{};
        hb[static_cast<std::size_t>(n)] = n <= cb.dim() ? sb.h_basis(n) : std::vector<std::vector<V>>{};
        hab[static_cast<std::size_t>(n)] = n <= cab.dim() ? sab.h_basis(n) : std::vector<std::vector<V>>{};
    }

    // Maps as matrices (rows = images of basis vectors, in coordinates).
    // alpha_n : H^n(X) -> H^n(A) + H^n(B) by restriction
    auto alpha = [&](int n) {
        std::vector<std::vector<V>> rows;
        for (const auto& z : hx[static_cast<std::size_t>(n)]) {
            auto za = restrict_cochain(z, n, x, a, field.zero());
            auto zb = restrict_cochain(z, n, x, b, field.zero());
            auto coords_a = ha[static_cast<std::size_t>(n)].empty() && za.empty()
                                ? std::vector<V>{}
                                : sa.class_coords(n, za, ha[static_cast<std::size_t>(n)]);
            auto coords_b = hb[static_cast<std::size_t>(n)].empty() && zb.empty()
                                ? std::vector<V>{}
                                : sb.class_coords(n, zb, hb[static_cast<std::size_t>(n)]);
            std::vector<V> row = coords_a;
            row.insert(row.end(), coords_b.begin(), coords_b.end());
            row.resize(ha[static_cast<std::size_t>(n)].size() + hb[static_cast<std::size_t>(n)].size(), field.zero());
            rows.push_back(std::move(row));
        }
        return rows;
    };
    // beta_n : H^n(A) + H^n(B) -> H^n(A cap B), (u, v) -> u| - v|
    auto beta = [&](int n) {
        std::vector<std::vector<V>> rows;
        auto push = [&](const std::vector<V>& z, const SimplicialComplex& part, bool negate) {
            auto zr = restrict_cochain(z, n, part, ab, field.zero());
            if (negate)
                for (auto& v : zr) v = field.neg(v);
            if (hab[static_cast<std::size_t>(n)].empty())
                rows.emplace_back();
            else
                rows.push_back(sab.class_coords(n, zr, hab[static_cast<std::size_t>(n)]));
        };
        for (const auto& z : ha[static_cast<std::size_t>(n)]) push(z, a, false);
        for (const auto& z : hb[static_cast<std::size_t>(n)]) push(z, b, true);
        for (auto& r : rows) r.resize(hab[static_cast<std::size_t>(n)].size(), field.zero());
        return rows;
    };
    // connecting_n : H^n(A cap B) -> H^{n+1}(X): extend by zero to A, take
    // the coboundary, glue with zero on B.
    auto connecting = [&](int n) {
        std::vector<std::vector<V>> rows;
        for (const auto& c : hab[static_cast<std::size_t>(n)]) {
            // extend to A by zero
            std::vector<V> ext(static_cast<std::size_t>(a.count(n)), field.zero());
            for (int i = 0; i < ab.count(n); ++i) {
                int j = a.index_of(n, ab.simplices(n)[static_cast<std::size_t>(i)]);
                ext[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(i)];
            }
            // coboundary in A
            std::vector<V> delta_ext(static_cast<std::size_t>(a.count(n + 1)), field.zero());
            auto rows_a = sa.delta_rows(n);
            for (int r = 0; r < static_cast<int>(rows_a.size()); ++r) {
                auto acc = field.zero();
                for (const auto& [cc, v] : rows_a[static_cast<std::size_t>(r)])
                    acc = field.add(acc, field.mul(v, ext[static_cast<std::size_t>(cc)]));
                delta_ext[static_cast<std::size_t>(r)] = acc;
            }
            // glue: delta_ext on A-cells, zero on the rest; consistency on
            // A cap B requires delta_ext to vanish there (c is a cocycle).
            std::vector<V> glued(static_cast<std::size_t>(x.count(n + 1)), field.zero());
            for (int i = 0; i < a.count(n + 1); ++i) {
                const auto& s = a.simplices(n + 1)[static_cast<std::size_t>(i)];
                if (ab.contains(n + 1, s) && !field.is_zero(delta_ext[static_cast<std::size_t>(i)]))
                    throw precondition_error("mayer_vietoris: connecting map inconsistency");
                glued[static_cast<std::size_t>(x.index_of(n + 1, s))] = delta_ext[static_cast<std::size_t>(i)];
            }
            if (n + 1 <= cx.dim() && !sx.is_cocycle(n + 1, glued))
                throw precondition_error("mayer_vietoris: connecting image is not a cocycle");
            if (hx[static_cast<std::size_t>(n) + 1].empty())
                rows.emplace_back();
            else
                rows.push_back(sx.class_coords(n + 1, glued, hx[static_cast<std::size_t>(n) + 1]));
        }
        for (auto& r : rows) r.resize(hx[static_cast<std::size_t>(n) + 1].size(), field.zero());
        return rows;
    };

    auto rank_dense = [&](const std::vector<std::vector<V>>& rows, std::size_t ncols) {
        std::vector<linalg::SparseRow<F>> sparse;
        for (const auto& r : rows) sparse.push_back(linalg::to_sparse(field, r));
        return linalg::rank_of(field, sparse, std::max<int>(static_cast<int>(ncols), 1));
    };
    auto compose_is_zero = [&](const std::vector<std::vector<V>>& first,
                               const std::vector<std::vector<V>>& second, std::size_t mid,
                               std::size_t out) {
        // rows of `first` are images in the middle space; push through `second`.
        for (const auto& row : first) {
            std::vector<V> image(out, field.zero());
            for (std::size_t m = 0; m < mid; ++m) {
                if (field.is_zero(row[m])) continue;
                for (std::size_t o = 0; o < out; ++o)
                    image[o] = field.add(image[o], field.mul(row[m], second[m][o]));
            }
            for (const auto& v : image)
                if (!field.is_zero(v)) return false;
        }
        return true;
    };

    report.exact = true;
    auto fail = [&](int n, const std::string& where) {
        report.exact = false;
        report.failures.push_back("degree " + std::to_string(n) + ": not exact at " + where);
    };

    // Node-by-node: im(incoming) = ker(outgoing) via composite zero plus
    // rank(incoming) + rank(outgoing) = dim(node).
    for (int n = 0; n <= top; ++n) {
        auto alpha_n = alpha(n);
        auto beta_n = beta(n);
        auto conn_n = connecting(n);
        auto conn_prev = n > 0 ? connecting(n - 1) : std::vector<std::vector<V>>{};
        const long dx = dim_at(report.dims_x, n);
        const long da_plus_db = dim_at(report.dims_a, n) + dim_at(report.dims_b, n);
        const long dab = dim_at(report.dims_ab, n);

        // at H^n(X): ker(alpha) = im(connecting_{n-1})
        long rank_alpha = rank_dense(alpha_n, static_cast<std::size_t>(da_plus_db));
        long rank_conn_prev = n > 0 ? rank_dense(conn_prev, static_cast<std::size_t>(dx)) : 0;
        if (rank_conn_prev + rank_alpha != dx) fail(n, "H(X)");
        if (n > 0 && !compose_is_zero(conn_prev, alpha_n, static_cast<std::size_t>(dx),
                                      static_cast<std::size_t>(da_plus_db)))
            fail(n, "H(X) composite");

        // at H^n(A)+H^n(B): ker(beta) = im(alpha)
        long rank_beta = rank_dense(beta_n, static_cast<std::size_t>(dab));
        if (rank_alpha + rank_beta != da_plus_db) fail(n, "H(A)+H(B)");
        if (!compose_is_zero(alpha_n, beta_n, static_cast<std::size_t>(da_plus_db),
                             static_cast<std::size_t>(dab)))
            fail(n, "H(A)+H(B) composite");

        // at H^n(A cap B): ker(connecting) = im(beta)
        long rank_conn = rank_dense(conn_n, hx[static_cast<std::size_t>(n) + 1].size());
        if (rank_beta + rank_conn != dab) fail(n, "H(A cap B)");
        if (!compose_is_zero(beta_n, conn_n, static_cast<std::size_t>(dab),
                             hx[static_cast<std::size_t>(n) + 1].size()))
            fail(n, "H(A cap B) composite");
    }

    // node signs alternate along the sequence; per degree the three nodes
    // contribute (-1)^n (dim X - dim A - dim B + dim(A cap B))
    report.alternating_sum = 0;
    int sign = 1;
    for (int n = 0; n <= top; ++n) {
        report.alternating_sum += sign * (dim_at(report.dims_x, n) -
                                          dim_at(report.dims_a, n) - dim_at(report.dims_b, n) +
                                          dim_at(report.dims_ab, n));
        sign = -sign;
    }
    return report;
}

}  // namespace

MayerVietorisReport mayer_vietoris_check(const SimplicialComplex& x, const SimplicialComplex& a,
                                         const SimplicialComplex& b, long field_char) {
    if (field_char == 0) return mv_over(linalg::RationalField{}, x, a, b, field_char);
    if (!is_prime(Integer(field_char)))
        throw input_error("mayer_vietoris_check: characteristic must be 0 or prime");
    return mv_over(linalg::PrimeField{field_char}, x, a, b, field_char);
}

FundamentalCycleCertificate na_simplicial_volume(const SimplicialComplex& x, long p) {
    if (!is_prime(Integer(p))) throw precondition_error("na_simplicial_volume: p must be prime");
    const int d = x.dim();
    if (d < 1) throw precondition_error("na_simplicial_volume: dimension must be >= 1");
    const CellComplex cx = x.to_cells();

    // top integral homology must be infinite cyclic: the kernel of the top
    // boundary map (a subgroup of a free group, so free) must have rank 1
    linalg::RationalField field;
    const auto& bnd = cx.boundary[static_cast<std::size_t>(d) - 1];  // cells[d-1] x cells[d]
    std::vector<linalg::SparseRow<linalg::RationalField>> rows(
        static_cast<std::size_t>(cx.cells[static_cast<std::size_t>(d) - 1]));
    for (int r = 0; r < cx.cells[static_cast<std::size_t>(d) - 1]; ++r)
        for (int c = 0; c < cx.cells[static_cast<std::size_t>(d)]; ++c)
            if (bnd[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0)
                rows[static_cast<std::size_t>(r)].emplace_back(
                    c, Rational(bnd[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]));
    auto kernel = linalg::kernel_basis(field, rows, cx.cells[static_cast<std::size_t>(d)]);

    FundamentalCycleCertificate cert;
    cert.top_kernel_rank = static_cast<long>(kernel.size());
    if (cert.top_kernel_rank != 1)
        throw precondition_error("na_simplicial_volume: top homology is not infinite cyclic");

    // orientation propagation over the dual graph: top simplices adjacent
    // through a shared face get signs that cancel the face
    const int ntop = x.count(d);
    std::vector<std::vector<std::pair<int, long>>> incident(
        static_cast<std::size_t>(x.count(d - 1)));
    for (int c = 0; c < ntop; ++c)
        for (int r = 0; r < x.count(d - 1); ++r) {
            long v = bnd[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (v != 0) incident[static_cast<std::size_t>(r)].emplace_back(c, v);
        }
    std::vector<long> sign(static_cast<std::size_t>(ntop), 0);
    sign[0] = 1;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        for (int r = 0; r < x.count(d - 1); ++r) {
            const auto& inc = incident[static_cast<std::size_t>(r)];
            if (inc.size() != 2) continue;
            for (int side = 0; side < 2; ++side) {
                auto [c1, v1] = inc[static_cast<std::size_t>(side)];
                auto [c2, v2] = inc[static_cast<std::size_t>(1 - side)];
                if (c1 == cur && sign[static_cast<std::size_t>(c2)] == 0) {
                    // cancellation: sign1 * v1 + sign2 * v2 = 0
                    sign[static_cast<std::size_t>(c2)] =
                        -sign[static_cast<std::size_t>(c1)] * v1 * v2;
                    stack.push_back(c2);
                }
            }
        }
    }
    for (long s : sign)
        if (s == 0)
            throw precondition_error("na_simplicial_volume: dual graph is not connected");

    // verify the propagated signs form a cycle
    for (int r = 0; r < x.count(d - 1); ++r) {
        long acc = 0;
        for (const auto& [c, v] : incident[static_cast<std::size_t>(r)])
            acc += sign[static_cast<std::size_t>(c)] * v;
        if (acc != 0)
            throw precondition_error("na_simplicial_volume: orientations cannot be made compatible");
    }

    cert.cycle = sign;
    long g = 0;
    Rational max_norm(0);
    for (long s : cert.cycle) {
        g = std::gcd(g, std::abs(s));
        Rational norm = padic_norm(Rational(s), Integer(p));
        if (norm > max_norm) max_norm = norm;
    }
    cert.max_norm = max_norm;
    cert.primitive = g == 1;
    if (cert.max_norm != 1 || !cert.primitive)
        throw precondition_error("na_simplicial_volume: produced cycle is not a norm-1 generator");
    // Lower bound: a fundamental cycle with all coefficient norms < 1 has
    // integer coefficients divisible by p, so it is p times another cycle
    // and generates p Z inside the infinite cyclic top homology, never the
    // whole group.  With the rank-1 kernel and a primitive generator in
    // hand, no representative beats norm 1.
    cert.lower_bound_certified = cert.top_kernel_rank == 1 && cert.primitive;
    return cert;
}

SimplicialComplex builtin_simplicial(const std::string& name) {
    if (name == "circle3")
        return SimplicialComplex::from_maximal(3, {{0, 1}, {1, 2}, {0, 2}});
    if (name == "s2")
        return SimplicialComplex::from_maximal(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    if (name == "wedge2")
        return SimplicialComplex::from_maximal(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}});
    if (name == "torus") {
        // 3x3 grid torus: vertex (i, j) = 3 i + j, each unit square split in two
        std::vector<std::vector<int>> tris;
        auto v = [](int i, int j) { return 3 * ((i + 3) % 3) + ((j + 3) % 3); };
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                tris.push_back({v(i, j), v(i + 1, j), v(i, j + 1)});
                tris.push_back({v(i + 1, j), v(i, j + 1), v(i + 1, j + 1)});
            }
        return SimplicialComplex::from_maximal(9, tris);
    }
    throw input_error("unknown built-in complex '" + name + "'");
}

CellComplex builtin_cell(const std::string& name) {
    if (name == "torus_cw") {
        CellComplex cc;
        cc.cells = {1, 2, 1};
        cc.boundary = {{{0, 0}}, {{0}, {0}}};
        cc.validate();
        return cc;
    }
    return builtin_simplicial(name).to_cells();
}

MvInstance builtin_mv(const std::string& name) {
    if (name == "wedge") {
        auto x = builtin_simplicial("wedge2");
        auto a = x.subcomplex({{0, 1}, {1, 2}, {0, 2}});
        auto b = x.subcomplex({{0, 3}, {3, 4}, {0, 4}});
        return {std::move(x), std::move(a), std::move(b)};
    }
    if (name == "torus") {
        // 4x3 grid torus so that the two cylinders overlap in two genuine
        // annuli (the square strips at i = 0 and i = 2)
        auto v = [](int i, int j) { return 3 * ((i + 4) % 4) + ((j + 3) % 3); };
        auto strip = [&](std::initializer_list<int> is) {
            std::vector<std::vector<int>> tris;
            for (int i : is)
                for (int j = 0; j < 3; ++j) {
                    tris.push_back({v(i, j), v(i + 1, j), v(i, j + 1)});
                    tris.push_back({v(i + 1, j), v(i, j + 1), v(i + 1, j + 1)});
                }
            return tris;
        };
        auto x = SimplicialComplex::from_maximal(12, strip({0, 1, 2, 3}));
        auto a = x.subcomplex(strip({0, 1, 2}));  // cylinder, rows 0 to 3
        auto b = x.subcomplex(strip({2, 3, 0}));  // cylinder, rows 2 to 1
        return {std::move(x), std::move(a), std::move(b)};
    }
    throw input_error("unknown built-in cover '" + name + "'");
}

}  // namespace nka

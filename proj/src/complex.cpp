#include "nka/complex.hpp"

#include <algorithm>
#include <set>

#include "nka/errors.hpp"

namespace nka {

void CellComplex::validate() const {
    if (cells.empty()) throw input_error("cell complex: no cells");
    if (boundary.size() + 1 != cells.size())
        throw input_error("cell complex: boundary matrix count does not match dimensions");
    for (int k = 0; k < dim(); ++k) {
        const auto& m = boundary[static_cast<std::size_t>(k)];
        if (static_cast<int>(m.size()) != cells[static_cast<std::size_t>(k)])
            throw input_error("cell complex: boundary matrix has wrong row count");
        for (const auto& row : m)
            if (static_cast<int>(row.size()) != cells[static_cast<std::size_t>(k) + 1])
                throw input_error("cell complex: boundary matrix has wrong column count");
    }
    // d_k o d_{k+1} = 0
    for (int k = 0; k + 1 < dim(); ++k) {
        const auto& a = boundary[static_cast<std::size_t>(k)];      // cells[k] x cells[k+1]
        const auto& b = boundary[static_cast<std::size_t>(k) + 1];  // cells[k+1] x cells[k+2]
        for (int i = 0; i < cells[static_cast<std::size_t>(k)]; ++i)
            for (int j = 0; j < cells[static_cast<std::size_t>(k) + 2]; ++j) {
                long acc = 0;
                for (int t = 0; t < cells[static_cast<std::size_t>(k) + 1]; ++t)
                    acc += a[i][t] * b[t][j];
                if (acc != 0) throw input_error("cell complex: boundary squared is nonzero");
            }
    }
}

SimplicialComplex SimplicialComplex::from_maximal(int nverts,
                                                  std::vector<std::vector<int>> maximal) {
    if (nverts < 1) throw input_error("simplicial complex: need at least one vertex");
    std::set<std::vector<int>> faces;
    for (auto s : maximal) {
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw input_error("simplicial complex: repeated vertex in a simplex");
        for (int v : s)
            if (v < 0 || v >= nverts) throw input_error("simplicial complex: vertex out of range");
        // all nonempty subsets
        const int n = static_cast<int>(s.size());
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            std::vector<int> face;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) face.push_back(s[static_cast<std::size_t>(i)]);
            faces.insert(std::move(face));
        }
    }
    int dim = 0;
    for (const auto& f : faces) dim = std::max(dim, static_cast<int>(f.size()) - 1);
    SimplicialComplex sc;
    sc.nverts_ = nverts;
    sc.simplices_.resize(static_cast<std::size_t>(dim) + 1);
    sc.index_.resize(static_cast<std::size_t>(dim) + 1);
    for (const auto& f : faces)
        sc.simplices_[f.size() - 1].push_back(f);
    for (auto& level : sc.simplices_) std::sort(level.begin(), level.end());
    for (int d = 0; d <= dim; ++d)
        for (int i = 0; i < static_cast<int>(sc.simplices_[static_cast<std::size_t>(d)].size()); ++i)
            sc.index_[static_cast<std::size_t>(d)][sc.simplices_[static_cast<std::size_t>(d)]
                                                       [static_cast<std::size_t>(i)]] = i;
    return sc;
}

int SimplicialComplex::count(int d) const {
    if (d < 0 || d > dim()) return 0;
    return static_cast<int>(simplices_[static_cast<std::size_t>(d)].size());
}

int SimplicialComplex::index_of(int d, const std::vector<int>& sorted_vertices) const {
    if (d < 0 || d > dim()) return -1;
    auto it = index_[static_cast<std::size_t>(d)].find(sorted_vertices);
    return it == index_[static_cast<std::size_t>(d)].end() ? -1 : it->second;
}

bool SimplicialComplex::contains(int d, const std::vector<int>& sorted_vertices) const {
    return index_of(d, sorted_vertices) >= 0;
}

CellComplex SimplicialComplex::to_cells() const {
    CellComplex cc;
    cc.cells.resize(static_cast<std::size_t>(dim()) + 1);
    for (int d = 0; d <= dim(); ++d) cc.cells[static_cast<std::size_t>(d)] = count(d);
    cc.boundary.resize(static_cast<std::size_t>(dim()));
    for (int d = 1; d <= dim(); ++d) {
        auto& m = cc.boundary[static_cast<std::size_t>(d) - 1];
        m.assign(static_cast<std::size_t>(count(d - 1)),
                 std::vector<long>(static_cast<std::size_t>(count(d)), 0));
        for (int j = 0; j < count(d); ++j) {
            const auto& s = simplices(d)[static_cast<std::size_t>(j)];
            int sign = 1;
            for (int i = 0; i <= d; ++i) {
                std::vector<int> face;
                face.reserve(static_cast<std::size_t>(d));
                for (int t = 0; t <= d; ++t)
                    if (t != i) face.push_back(s[static_cast<std::size_t>(t)]);
                int r = index_of(d - 1, face);
                if (r < 0) throw input_error("simplicial complex: missing face");
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] += sign;
                sign = -sign;
            }
        }
    }
    cc.validate();
    return cc;
}

SimplicialComplex SimplicialComplex::subcomplex(const std::vector<std::vector<int>>& simps) const {
    for (auto s : simps) {
        std::sort(s.begin(), s.end());
        if (!contains(static_cast<int>(s.size()) - 1, s))
            throw input_error("subcomplex: a listed simplex is not in the complex");
    }
    return from_maximal(nverts_, simps);
}

SimplicialComplex SimplicialComplex::intersect(const SimplicialComplex& other) const {
    std::vector<std::vector<int>> common;
    for (int d = 0; d <= dim(); ++d)
        for (const auto& s : simplices(d))
            if (other.contains(d, s)) common.push_back(s);
    if (common.empty()) throw input_error("intersect: empty intersection");
    return from_maximal(nverts_, common);
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
    for (int d = 0; d <= dim(); ++d)
        for (const auto& s : simplices(d))
            if (!other.contains(d, s)) return false;
    return true;
}

Subdivision barycentric_subdivision(const SimplicialComplex& x) {
    // One vertex of the subdivision per face of x; faces are numbered by
    // dimension blocks, so ids along a flag are strictly increasing.
    std::vector<int> offset(static_cast<std::size_t>(x.dim()) + 1, 0);
    for (int d = 1; d <= x.dim(); ++d)
        offset[static_cast<std::size_t>(d)] = offset[static_cast<std::size_t>(d) - 1] + x.count(d - 1);
    const int nfaces = offset[static_cast<std::size_t>(x.dim())] + x.count(x.dim());
    auto face_id = [&](int d, int idx) { return offset[static_cast<std::size_t>(d)] + idx; };

    // All chains in the face poset; a subset of a chain is a chain, so the
    // flags form a simplicial complex on the face ids.
    std::vector<std::vector<int>> flags;  // each ascending by id
    // chains ending at a given face, built by increasing dimension
    std::vector<std::vector<std::vector<int>>> ending(static_cast<std::size_t>(nfaces));
    for (int d = 0; d <= x.dim(); ++d) {
        for (int idx = 0; idx < x.count(d); ++idx) {
            const int id = face_id(d, idx);
            const auto& s = x.simplices(d)[static_cast<std::size_t>(idx)];
            ending[static_cast<std::size_t>(id)].push_back({id});
            // proper faces: nonempty proper subsets
            const int n = static_cast<int>(s.size());
            for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
                std::vector<int> face;
                for (int i = 0; i < n; ++i)
                    if (mask & (1u << i)) face.push_back(s[static_cast<std::size_t>(i)]);
                int fidx = x.index_of(static_cast<int>(face.size()) - 1, face);
                const int fid = face_id(static_cast<int>(face.size()) - 1, fidx);
                for (const auto& chain : ending[static_cast<std::size_t>(fid)]) {
                    auto extended = chain;
                    extended.push_back(id);
                    ending[static_cast<std::size_t>(id)].push_back(std::move(extended));
                }
            }
        }
    }
    for (const auto& per_face : ending)
        for (const auto& chain : per_face) flags.push_back(chain);

    SimplicialComplex sub = SimplicialComplex::from_maximal(nfaces, flags);

    // Subdivision chain map, built by the cone recursion: a vertex maps to
    // its barycenter; an n-simplex maps to the cone from its barycenter over
    // the subdivided boundary.  Tuples are kept ascending; appending the
    // cone vertex b (largest id) to a k-simplex equals prepending it up to
    // the parity (-1)^(k+1).
    Subdivision result;
    result.chain_map.resize(static_cast<std::size_t>(x.dim()) + 1);
    // dense per-simplex accumulation: map flag-index -> coefficient
    std::vector<std::vector<std::map<int, int>>> sd(static_cast<std::size_t>(x.dim()) + 1);
    for (int d = 0; d <= x.dim(); ++d)
        sd[static_cast<std::size_t>(d)].resize(static_cast<std::size_t>(x.count(d)));

    for (int idx = 0; idx < x.count(0); ++idx) {
        std::vector<int> flag = {face_id(0, idx)};
        sd[0][static_cast<std::size_t>(idx)][sub.index_of(0, flag)] = 1;
    }
    for (int d = 1; d <= x.dim(); ++d) {
        for (int idx = 0; idx < x.count(d); ++idx) {
            const auto& s = x.simplices(d)[static_cast<std::size_t>(idx)];
            const int b = face_id(d, idx);
            auto& acc = sd[static_cast<std::size_t>(d)][static_cast<std::size_t>(idx)];
            int face_sign = 1;
            for (int i = 0; i <= d; ++i) {
                std::vector<int> face;
                for (int t = 0; t <= d; ++t)
                    if (t != i) face.push_back(s[static_cast<std::size_t>(t)]);
                const int fidx = x.index_of(d - 1, face);
                // cone over sd(face): append b with parity (-1)^((d-1)+1)
                const int cone_sign = (d % 2 == 0) ? 1 : -1;  // (-1)^d
                for (const auto& [piece, coeff] :
                     sd[static_cast<std::size_t>(d) - 1][static_cast<std::size_t>(fidx)]) {
                    auto tuple = sub.simplices(d - 1)[static_cast<std::size_t>(piece)];
                    tuple.push_back(b);  // b exceeds every id in the flag
                    const int target = sub.index_of(d, tuple);
                    acc[target] += face_sign * cone_sign * coeff;
                }
                face_sign = -face_sign;
            }
        }
    }
    for (int d = 0; d <= x.dim(); ++d) {
        auto& level = result.chain_map[static_cast<std::size_t>(d)];
        level.resize(static_cast<std::size_t>(x.count(d)));
        for (int idx = 0; idx < x.count(d); ++idx)
            for (const auto& [piece, coeff] : sd[static_cast<std::size_t>(d)][static_cast<std::size_t>(idx)])
                if (coeff != 0) level[static_cast<std::size_t>(idx)].emplace_back(piece, coeff);
    }
    result.complex = std::move(sub);
    return result;
}

SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::vector<std::vector<int>> simps;
    for (int d = 0; d <= a.dim(); ++d)
        for (const auto& s : a.simplices(d)) simps.push_back(s);
    for (int d = 0; d <= b.dim(); ++d)
        for (const auto& s : b.simplices(d)) {
            auto shifted = s;
            for (int& v : shifted) v += a.vertex_count();
            simps.push_back(std::move(shifted));
        }
    return SimplicialComplex::from_maximal(a.vertex_count() + b.vertex_count(), std::move(simps));
}

}  // namespace nka

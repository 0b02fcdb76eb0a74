#pragma once

#include <map>
#include <string>
#include <vector>

#include "nka/rational.hpp"

namespace nka {

// A finite complex given by per-dimension cell counts and integer boundary
// matrices.  boundary[k] is the matrix of d_{k+1} : C_{k+1} -> C_k, with
// rows indexed by k-cells and columns by (k+1)-cells.  Construction checks
// d o d = 0.
struct CellComplex {
    std::vector<int> cells;                               // count per dimension
    std::vector<std::vector<std::vector<long>>> boundary; // size dim(), boundary[k]: cells[k] x cells[k+1]

    int dim() const { return static_cast<int>(cells.size()) - 1; }
    void validate() const;
};

// A finite simplicial complex: simplices are stored as sorted vertex tuples,
// listed in lexicographic order per dimension; orientation signs come from
// permutation parity against the sorted order.
class SimplicialComplex {
public:
    // Faces of the given simplices are closed over automatically.
    static SimplicialComplex from_maximal(int nverts, std::vector<std::vector<int>> maximal);

    int vertex_count() const { return nverts_; }
    int dim() const { return static_cast<int>(simplices_.size()) - 1; }
    int count(int d) const;
    const std::vector<std::vector<int>>& simplices(int d) const { return simplices_.at(d); }
    // -1 when absent
    int index_of(int d, const std::vector<int>& sorted_vertices) const;
    bool contains(int d, const std::vector<int>& sorted_vertices) const;

    CellComplex to_cells() const;

    // Subcomplex spanned by the listed simplices (faces closed), preserving
    // the parent's vertex numbering.  Every listed simplex must be present.
    SimplicialComplex subcomplex(const std::vector<std::vector<int>>& simps) const;

    // Intersection with another subcomplex of the same vertex set.
    SimplicialComplex intersect(const SimplicialComplex& other) const;

    bool is_subcomplex_of(const SimplicialComplex& other) const;

    SimplicialComplex() = default;  // empty; fill via from_maximal

private:
    int nverts_ = 0;
    std::vector<std::vector<std::vector<int>>> simplices_;
    std::vector<std::map<std::vector<int>, int>> index_;
};

// Barycentric subdivision together with the subdivision chain map on
// integer chains.  chain_map[d][j] lists (index of a d-simplex of the
// subdivision, sign) pairs making up the image of the j-th d-simplex of the
// original complex; every sign is +-1.
struct Subdivision {
    SimplicialComplex complex;
    std::vector<std::vector<std::vector<std::pair<int, int>>>> chain_map;
};

Subdivision barycentric_subdivision(const SimplicialComplex& x);

// Disjoint union, shifting the vertices of the right summand.
SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace nka

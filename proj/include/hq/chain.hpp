#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "hq/hquandle.hpp"
#include "hq/quandle.hpp"

namespace hq {

/* Chain complex of a hierarchical quandle (Y over base X).  Degree-n
 * chains are spanned by tuples (y1..yn)^{x1..xn}; the subspace spanned
 * by tuples with an adjacent repeated column (x_i,y_i) = (x_{i+1},y_{i+1})
 * is degenerate and quotiented away, so the working basis is the
 * non-degenerate tuples only, ordered lexicographically by
 * (x1,y1,x2,y2,...). */
using ChainTuple = std::vector<std::pair<int, int>>; // (x, y) columns

bool is_degenerate(const ChainTuple& t);

/* lambda_{n,i}: acts on the prefix and drops column i (1-based):
 *   (y1 *_{x1}^{xi} yi, .., y_{i-1} *_{x_{i-1}}^{xi} yi, y_{i+1}, .., yn)
 *   with labels (x1*xi, .., x_{i-1}*xi, x_{i+1}, .., xn)
 * rho_{n,i} just drops column i.  For i = 1 the two agree. */
ChainTuple apply_lambda(const Quandle& base, const HierarchicalQuandle& h,
                        const ChainTuple& t, int i);
ChainTuple apply_rho(const ChainTuple& t, int i);

/* The four alternating-sum maps assembled from lambda/rho:
 *   Lambda = l_n = sum_i (-1)^{i+1} lambda_{n,i}
 *   Rho    = r_n = sum_i (-1)^{i+1} rho_{n,i}
 *   Standard = l_n - r_n   (the boundary; squares to zero)
 *   Positive = l_n + r_n   (also squares to zero)
 */
enum class BoundaryKind { Lambda, Rho, Standard, Positive };

// Sparse chain vector with integer coefficients.
using ChainVector = std::map<ChainTuple, long long>;

/* Applies the chosen map columnwise and projects the result back into
 * the non-degenerate quotient (degenerate tuples are erased).  Degree-1
 * input maps to zero (degree-0 chains vanish). */
ChainVector boundary(const Quandle& base, const HierarchicalQuandle& h,
                     const ChainVector& v, BoundaryKind kind = BoundaryKind::Standard);

struct ChainCaps {
    int max_degree = 4;
    long long max_columns = 1000000;
};

/* Ordered basis of non-degenerate degree-n tuples.  Codes pack the pair
 * codes p_k = x_k*y_size + y_k as base-(x_size*y_size) digits, most
 * significant first, so code order is lexicographic tuple order. */
class ChainBasis {
public:
    ChainBasis(int x_size, int y_size, int degree, const ChainCaps& caps = {});

    int x_size() const { return x_size_; }
    int y_size() const { return y_size_; }
    int degree() const { return degree_; }
    long long size() const { return static_cast<long long>(codes_.size()); }

    uint64_t encode(const ChainTuple& t) const;
    ChainTuple decode(uint64_t code) const;
    ChainTuple at(long long index) const { return decode(codes_[index]); }
    // -1 when the tuple is degenerate / out of range
    long long index_of(uint64_t code) const;

private:
    int x_size_, y_size_, degree_;
    uint64_t radix_;
    std::vector<uint64_t> codes_;
};

/* Integer matrix in triplet form, entries sorted by (col, row).
 * Rows index the degree-(n-1) basis, columns the degree-n basis. */
struct SparseIntMatrix {
    long long rows = 0;
    long long cols = 0;
    std::vector<std::array<long long, 3>> entries; // {row, col, value}
};

SparseIntMatrix boundary_matrix(const Quandle& base, const HierarchicalQuandle& h,
                                int degree, BoundaryKind kind = BoundaryKind::Standard,
                                const ChainCaps& caps = {});

SparseIntMatrix sparse_multiply(const SparseIntMatrix& a, const SparseIntMatrix& b);

} // namespace hq

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hq/quandle.hpp"

namespace hq {

/* A hierarchical quandle over a base quandle X: a set Y = {0,..,size-1}
 * with one binary operation per pair of base elements, stored flat:
 *   tables[((x1*m + x2)*n + y1)*n + y2] = y1 *_{x1}^{x2} y2
 * where m = base_size, n = size.  Axioms, with x-arithmetic in the base:
 *   (1) y *_{x}^{x} y = y
 *   (2) for fixed (x1,x2,a), y -> y *_{x1}^{x2} a is a bijection
 *   (3) (y1 *_{x1}^{x2} y2) *_{x1*x2}^{x3} y3
 *         = (y1 *_{x1}^{x3} y3) *_{x1*x3}^{x2*x3} (y2 *_{x2}^{x3} y3)
 */
struct HierarchicalQuandle {
    int base_size = 0;
    int size = 0;
    std::vector<int> tables;

    int op(int x1, int x2, int y1, int y2) const {
        return tables[((static_cast<size_t>(x1) * base_size + x2) * size + y1) * size + y2];
    }

    // unique y with y *_{x1}^{x2} a == b
    int div(int x1, int x2, int b, int a) const {
        size_t col = (static_cast<size_t>(x1) * base_size + x2) * size;
        for (int y = 0; y < size; ++y)
            if (tables[(col + y) * size + a] == b) return y;
        return -1;
    }
};

// base must be a valid quandle (axiom 3 multiplies base labels).
VerifyReport verify_hquandle(const HierarchicalQuandle& h, const Quandle& base);

// every operation equals the given quandle on Y
HierarchicalQuandle make_constant_family(const Quandle& base, const Quandle& y);

// y1 *_{x1}^{x2} y2 = y1 for all labels; valid over any base
HierarchicalQuandle make_left_projection(const Quandle& base, int y_size);

/* Product quandle on X x Y:
 *   (x1,y1) o (x2,y2) = (x1*x2, y1 *_{x1}^{x2} y2)
 * with pairs encoded as x*size + y. */
Quandle product_quandle(const Quandle& base, const HierarchicalQuandle& h);

struct DecomposeResult {
    bool ok = false;
    Quandle base;
    HierarchicalQuandle family;
    std::string reason;          // when !ok
    std::vector<int> witness;    // offending elements, when !ok
};

/* Inverse of product_quandle along a pairing of q's elements with (x,y)
 * pairs.  pairing[e] = {x,y}; pass empty to use e = x*fiber + y.
 * Fails with a witness when the first coordinate is not a homomorphism
 * onto a well-defined base table, or when an extracted table violates
 * the axioms. */
DecomposeResult decompose_over_projection(const Quandle& q, int base_size, int fiber_size,
                                          const std::vector<std::pair<int, int>>& pairing = {});

struct SearchConstraints {
    // force every diagonal table t[x][x] to this y_size^2 quandle table
    std::optional<std::vector<int>> diagonal_table;
};

/* Enumerates all hierarchical quandles of the given fiber size over the
 * base, in lexicographic table order, calling sink for each; sink
 * returns false to stop.  limit <= 0 means no limit.  Returns the number
 * emitted.  Refuses (ErrorKind::cap) when the unpruned branch estimate
 * exceeds ~1e9 candidates. */
long long search_hquandles(const Quandle& base, int y_size, long long limit,
                           const SearchConstraints& constraints,
                           const std::function<bool(const HierarchicalQuandle&)>& sink);

std::vector<HierarchicalQuandle> search_hquandles(const Quandle& base, int y_size,
                                                  long long limit = 0,
                                                  const SearchConstraints& constraints = {});

} // namespace hq

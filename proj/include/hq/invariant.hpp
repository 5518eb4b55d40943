#pragma once

#include <vector>

#include "hq/cohomology.hpp"
#include "hq/coloring.hpp"
#include "hq/diagram.hpp"
#include "hq/multiset.hpp"

namespace hq {

/* Weight of one crossing under a degree-2 cochain w:
 *   positive:  +w((y_in,  y_over)^{x_in,  x_over})
 *   negative:  -w((y_out, y_over)^{x_out, x_over})
 * where in/out refer to the under-strand and the negative case reads its
 * colours off the outgoing arc. */
long long crossing_weight(const Quandle& base, const HierarchicalQuandle& h, const Cochain& w,
                          const Crossing& c, const QColoring& xi, const HColoring& zeta);

// sum of crossing weights in w's ring
long long state_sum_weight(const Diagram& d, const Quandle& base, const HierarchicalQuandle& h,
                           const Cochain& w, const QColoring& xi, const HColoring& zeta);

// multiset of state sums over all hierarchical colourings above xi
Multiset<long long> invariant_for_base(const Diagram& d, const Quandle& base,
                                       const HierarchicalQuandle& h, const Cochain& w,
                                       const QColoring& xi);

/* Two-level invariant: per base colouring (in enumeration order) the
 * multiset of state sums; compared as a multiset of multisets. */
struct InvariantValue {
    RingSpec ring;
    std::vector<Multiset<long long>> per_base;

    Multiset<long long> flattened() const;
    Multiset<Multiset<long long>> canonical() const;

    bool operator==(const InvariantValue& o) const { return canonical() == o.canonical(); }
};

InvariantValue full_invariant(const Diagram& d, const Quandle& base,
                              const HierarchicalQuandle& h, const Cochain& w);

} // namespace hq

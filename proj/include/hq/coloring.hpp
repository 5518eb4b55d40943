#pragma once

#include <vector>

#include "hq/diagram.hpp"
#include "hq/hquandle.hpp"
#include "hq/multiset.hpp"
#include "hq/quandle.hpp"

namespace hq {

/* A quandle colouring assigns an element of X to every arc so that at
 * each crossing
 *   positive:  xi(under_out) = xi(under_in) * xi(over)
 *   negative:  xi(under_out) = xi(under_in) / xi(over)
 */
using QColoring = std::vector<int>;

/* A hierarchical colouring over a fixed quandle colouring xi assigns an
 * element of Y to every arc so that at each crossing
 *   positive:  z(out) = z(in) *_{xi(in)}^{xi(over)}  z(over)
 *   negative:  z(out) = z(in) /_{xi(out)}^{xi(over)} z(over)
 * (for a negative crossing xi(out) = xi(in)/xi(over) already holds).
 */
using HColoring = std::vector<int>;

bool verify_qcoloring(const Diagram& d, const Quandle& q, const QColoring& xi);
bool verify_hcoloring(const Diagram& d, const Quandle& base, const HierarchicalQuandle& h,
                      const QColoring& xi, const HColoring& zeta);

// Enumeration is lexicographic in the assignment vector.
std::vector<QColoring> enumerate_qcolorings(const Diagram& d, const Quandle& q);
long long count_qcolorings(const Diagram& d, const Quandle& q);

// xi must be a valid colouring by h's base; ErrorKind::invalid otherwise.
std::vector<HColoring> enumerate_hcolorings(const Diagram& d, const Quandle& base,
                                            const HierarchicalQuandle& h, const QColoring& xi);
long long count_hcolorings(const Diagram& d, const Quandle& base,
                           const HierarchicalQuandle& h, const QColoring& xi);

// multiset of count_hcolorings over all base colourings
Multiset<long long> hcoloring_spectrum(const Diagram& d, const Quandle& base,
                                       const HierarchicalQuandle& h);

} // namespace hq

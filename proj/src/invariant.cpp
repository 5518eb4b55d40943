#include "hq/invariant.hpp"

namespace hq {

namespace {

void require_weight_cochain(const Quandle& base, const HierarchicalQuandle& h, const Cochain& w) {
    if (w.degree != 2) fail_invalid("crossing weights need a degree-2 cochain");
    if (w.x_size != base.size || w.y_size != h.size)
        fail_invalid("cochain sized for a different pair of sets");
}

} // namespace

long long crossing_weight(const Quandle& base, const HierarchicalQuandle& h, const Cochain& w,
                          const Crossing& c, const QColoring& xi, const HColoring& zeta) {
    require_weight_cochain(base, h, w);
    ChainTuple t(2);
    long long s;
    if (c.sign > 0) {
        t[0] = {xi[c.under_in], zeta[c.under_in]};
        s = 1;
    } else {
        t[0] = {xi[c.under_out], zeta[c.under_out]};
        s = -1;
    }
    t[1] = {xi[c.over], zeta[c.over]};
    return w.ring.canon(s * w.eval(t));
}

long long state_sum_weight(const Diagram& d, const Quandle& base, const HierarchicalQuandle& h,
                           const Cochain& w, const QColoring& xi, const HColoring& zeta) {
    if (!verify_hcoloring(d, base, h, xi, zeta))
        fail_invalid("state sum needs a valid hierarchical colouring");
    long long acc = 0;
    for (const Crossing& c : d.crossings) acc += crossing_weight(base, h, w, c, xi, zeta);
    return w.ring.canon(acc);
}

Multiset<long long> invariant_for_base(const Diagram& d, const Quandle& base,
                                       const HierarchicalQuandle& h, const Cochain& w,
                                       const QColoring& xi) {
    require_weight_cochain(base, h, w);
    Multiset<long long> sums;
    for (const HColoring& zeta : enumerate_hcolorings(d, base, h, xi)) {
        long long acc = 0;
        for (const Crossing& c : d.crossings) acc += crossing_weight(base, h, w, c, xi, zeta);
        sums.add(w.ring.canon(acc));
    }
    return sums;
}

Multiset<long long> InvariantValue::flattened() const {
    Multiset<long long> flat;
    for (const auto& ms : per_base)
        for (const auto& [v, count] : ms.items()) flat.add(v, count);
    return flat;
}

Multiset<Multiset<long long>> InvariantValue::canonical() const {
    Multiset<Multiset<long long>> out;
    for (const auto& ms : per_base) out.add(ms);
    return out;
}

InvariantValue full_invariant(const Diagram& d, const Quandle& base,
                              const HierarchicalQuandle& h, const Cochain& w) {
    require_weight_cochain(base, h, w);
    InvariantValue out;
    out.ring = w.ring;
    for (const QColoring& xi : enumerate_qcolorings(d, base))
        out.per_base.push_back(invariant_for_base(d, base, h, w, xi));
    return out;
}

} // namespace hq

#include <algorithm>

#include "hq/coloring.hpp"

namespace hq {

namespace {

void require_valid_diagram(const Diagram& d) {
    DiagramReport r = validate(d);
    if (!r.valid) fail_invalid("diagram fails validation: " + r.problems.front());
}

void require_valid_quandle(const Quandle& q, const char* what) {
    if (!verify_quandle(q).valid) fail_invalid(std::string(what) + " is not a quandle");
}

void require_valid_hquandle(const HierarchicalQuandle& h, const Quandle& base) {
    if (!verify_hquandle(h, base).valid)
        fail_invalid("family is not a hierarchical quandle over this base");
}

void require_assignment(const std::vector<int>& v, int arc_count, int range, const char* what) {
    if (static_cast<int>(v.size()) != arc_count)
        fail_invalid(std::string(what) + " has wrong length");
    for (int c : v)
        if (c < 0 || c >= range) fail_invalid(std::string(what) + " entry out of range");
}

/* Shared backtracking core.  Rules supply, per crossing, the forward map
 * out = f(in, over) and its inverse in = g(out, over); over colours are
 * never derived (the maps need not be injective in that slot).  Branching
 * always picks the lowest unset arc and tries colours ascending, which
 * makes the emission order lexicographic in the final vector. */
struct Propagator {
    const Diagram& d;
    int colours;
    std::function<int(const Crossing&, int, int)> forward; // (in, over) -> out
    std::function<int(const Crossing&, int, int)> inverse; // (out, over) -> in

    bool propagate(std::vector<int>& val) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const Crossing& c : d.crossings) {
                int vin = val[c.under_in], vover = val[c.over], vout = val[c.under_out];
                if (vover < 0) continue;
                if (vin >= 0) {
                    int want = forward(c, vin, vover);
                    if (vout < 0) {
                        val[c.under_out] = want;
                        changed = true;
                    } else if (vout != want)
                        return false;
                } else if (vout >= 0) {
                    val[c.under_in] = inverse(c, vout, vover);
                    changed = true;
                }
            }
        }
        return true;
    }

    void run(std::vector<int>& val, const std::function<void(const std::vector<int>&)>& emit) const {
        int arc = 0;
        while (arc < d.arc_count && val[arc] >= 0) ++arc;
        if (arc == d.arc_count) {
            emit(val);
            return;
        }
        for (int colour = 0; colour < colours; ++colour) {
            std::vector<int> branch = val;
            branch[arc] = colour;
            if (propagate(branch)) run(branch, emit);
        }
    }
};

} // namespace

bool verify_qcoloring(const Diagram& d, const Quandle& q, const QColoring& xi) {
    require_valid_diagram(d);
    require_valid_quandle(q, "colouring quandle");
    require_assignment(xi, d.arc_count, q.size, "colouring");
    for (const Crossing& c : d.crossings) {
        int want = c.sign > 0 ? q.op(xi[c.under_in], xi[c.over])
                              : q.div(xi[c.under_in], xi[c.over]);
        if (xi[c.under_out] != want) return false;
    }
    return true;
}

bool verify_hcoloring(const Diagram& d, const Quandle& base, const HierarchicalQuandle& h,
                      const QColoring& xi, const HColoring& zeta) {
    require_valid_hquandle(h, base);
    if (!verify_qcoloring(d, base, xi)) fail_invalid("base colouring does not colour the diagram");
    require_assignment(zeta, d.arc_count, h.size, "hierarchical colouring");
    for (const Crossing& c : d.crossings) {
        int want = c.sign > 0
                       ? h.op(xi[c.under_in], xi[c.over], zeta[c.under_in], zeta[c.over])
                       : h.div(xi[c.under_out], xi[c.over], zeta[c.under_in], zeta[c.over]);
        if (zeta[c.under_out] != want) return false;
    }
    return true;
}

std::vector<QColoring> enumerate_qcolorings(const Diagram& d, const Quandle& q) {
    require_valid_diagram(d);
    require_valid_quandle(q, "colouring quandle");
    Propagator p{d, q.size,
                 [&](const Crossing& c, int in, int over) {
                     return c.sign > 0 ? q.op(in, over) : q.div(in, over);
                 },
                 [&](const Crossing& c, int out, int over) {
                     return c.sign > 0 ? q.div(out, over) : q.op(out, over);
                 }};
    std::vector<QColoring> out;
    std::vector<int> val(d.arc_count, -1);
    p.run(val, [&](const std::vector<int>& v) { out.push_back(v); });
    return out;
}

long long count_qcolorings(const Diagram& d, const Quandle& q) {
    return static_cast<long long>(enumerate_qcolorings(d, q).size());
}

std::vector<HColoring> enumerate_hcolorings(const Diagram& d, const Quandle& base,
                                            const HierarchicalQuandle& h, const QColoring& xi) {
    require_valid_hquandle(h, base);
    if (!verify_qcoloring(d, base, xi)) fail_invalid("base colouring does not colour the diagram");
    Propagator p{d, h.size,
                 [&](const Crossing& c, int in, int over) {
                     return c.sign > 0 ? h.op(xi[c.under_in], xi[c.over], in, over)
                                       : h.div(xi[c.under_out], xi[c.over], in, over);
                 },
                 [&](const Crossing& c, int out, int over) {
                     return c.sign > 0 ? h.div(xi[c.under_in], xi[c.over], out, over)
                                       : h.op(xi[c.under_out], xi[c.over], out, over);
                 }};
    std::vector<HColoring> out;
    std::vector<int> val(d.arc_count, -1);
    p.run(val, [&](const std::vector<int>& v) { out.push_back(v); });
    return out;
}

long long count_hcolorings(const Diagram& d, const Quandle& base, const HierarchicalQuandle& h,
                           const QColoring& xi) {
    return static_cast<long long>(enumerate_hcolorings(d, base, h, xi).size());
}

Multiset<long long> hcoloring_spectrum(const Diagram& d, const Quandle& base,
                                       const HierarchicalQuandle& h) {
    require_valid_hquandle(h, base);
    Multiset<long long> spectrum;
    for (const QColoring& xi : enumerate_qcolorings(d, base))
        spectrum.add(count_hcolorings(d, base, h, xi));
    return spectrum;
}

} // namespace hq

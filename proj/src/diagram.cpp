#include "hq/diagram.hpp"

#include <algorithm>
#include <numeric>

namespace hq {

DiagramReport validate(const Diagram& d) {
    DiagramReport r;
    int A = d.arc_count;
    if (A < 0) { r.problems.push_back("negative arc count"); return r; }
    if (d.component_of.size() != static_cast<size_t>(A)) {
        r.problems.push_back("component_of has " + std::to_string(d.component_of.size()) +
                             " entries, want " + std::to_string(A));
        return r;
    }
    for (size_t i = 0; i < d.crossings.size(); ++i) {
        const Crossing& c = d.crossings[i];
        if (c.sign != 1 && c.sign != -1)
            r.problems.push_back("crossing " + std::to_string(i) + ": sign must be +1 or -1");
        for (ArcId a : {c.under_in, c.over, c.under_out})
            if (a < 0 || a >= A) {
                r.problems.push_back("crossing " + std::to_string(i) + ": arc id out of range");
                return r;
            }
    }
    if (!r.problems.empty()) return r;

    std::vector<int> in_count(A, 0), out_count(A, 0);
    std::vector<ArcId> succ(A, -1);
    for (size_t i = 0; i < d.crossings.size(); ++i) {
        const Crossing& c = d.crossings[i];
        ++in_count[c.under_in];
        ++out_count[c.under_out];
        succ[c.under_in] = c.under_out;
    }
    for (ArcId a = 0; a < A; ++a) {
        if (in_count[a] != out_count[a] || in_count[a] > 1)
            r.problems.push_back("arc " + std::to_string(a) + " enters " +
                                 std::to_string(in_count[a]) + " and leaves " +
                                 std::to_string(out_count[a]) +
                                 " under-passes (each must be 0 or 1, equal)");
    }
    if (!r.problems.empty()) return r;

    // components = cycles of the under-strand succession; arcs without
    // under-passes close on themselves
    std::vector<int> root(A, -1);
    for (ArcId a = 0; a < A; ++a) {
        if (root[a] >= 0) continue;
        ArcId b = a;
        do {
            root[b] = a;
            b = succ[b] < 0 ? b : succ[b];
        } while (b != a && root[b] < 0);
    }
    for (size_t i = 0; i < d.crossings.size(); ++i) {
        const Crossing& c = d.crossings[i];
        if (d.component_of[c.under_in] != d.component_of[c.under_out])
            r.problems.push_back("crossing " + std::to_string(i) +
                                 ": under arcs in different components");
    }
    int comps = 0;
    for (int v : d.component_of) comps = std::max(comps, v + 1);
    bool consistent = true;
    std::vector<int> comp_root(comps, -1), root_comp(A, -1);
    std::vector<char> used(comps, 0);
    for (ArcId a = 0; a < A && consistent; ++a) {
        int comp = d.component_of[a];
        if (comp < 0) { consistent = false; break; }
        used[comp] = 1;
        // one component <-> one succession cycle, both ways
        if (comp_root[comp] < 0) comp_root[comp] = root[a];
        else if (comp_root[comp] != root[a]) consistent = false;
        if (root_comp[root[a]] < 0) root_comp[root[a]] = comp;
        else if (root_comp[root[a]] != comp) consistent = false;
    }
    for (char u : used)
        if (!u) consistent = false;
    if (!consistent)
        r.problems.push_back("component_of does not match the under-strand succession cycles");

    r.valid = r.problems.empty();
    return r;
}

Diagram make_unknot() { return make_unlink(1); }

Diagram make_unlink(int components) {
    if (components < 0) fail_structural("component count must be non-negative");
    Diagram d;
    d.arc_count = components;
    d.component_of.resize(components);
    std::iota(d.component_of.begin(), d.component_of.end(), 0);
    return d;
}

namespace {

void require_arc(const Diagram& d, ArcId a, const char* what) {
    if (a < 0 || a >= d.arc_count)
        fail_structural(std::string(what) + " arc " + std::to_string(a) + " out of range");
}

// crossing index whose under_in is a, or -1 when a has no terminating under-pass
int terminating_crossing(const Diagram& d, ArcId a) {
    for (size_t i = 0; i < d.crossings.size(); ++i)
        if (d.crossings[i].under_in == a) return static_cast<int>(i);
    return -1;
}

} // namespace

Diagram r1_add(const Diagram& d, ArcId arc, int chirality) {
    require_arc(d, arc, "kink");
    if (chirality != 1 && chirality != -1) fail_structural("chirality must be +1 or -1");
    Diagram out = d;
    int end = terminating_crossing(d, arc);
    if (end < 0) {
        // closed loop: the kink makes it a one-arc kink component
        out.crossings.push_back({chirality, arc, arc, arc});
        return out;
    }
    // cut just before the terminating under-pass; the trailing half gets a
    // fresh id and carries the over-pass of the kink
    ArcId tail = out.arc_count++;
    out.component_of.push_back(d.component_of[arc]);
    out.crossings[end].under_in = tail;
    out.crossings.push_back({chirality, arc, tail, tail});
    return out;
}

Diagram r2_add(const Diagram& d, ArcId arc_over, ArcId arc_under) {
    require_arc(d, arc_over, "over");
    require_arc(d, arc_under, "under");
    Diagram out = d;
    int end = terminating_crossing(d, arc_under);
    int comp = d.component_of[arc_under];
    if (end < 0) {
        // closed loop: two cuts make two arcs
        ArcId mid = out.arc_count++;
        out.component_of.push_back(comp);
        ArcId over = arc_over; // may equal arc_under; both cuts sit past the over-passes
        out.crossings.push_back({+1, arc_under, over, mid});
        out.crossings.push_back({-1, mid, over, arc_under});
        return out;
    }
    ArcId mid = out.arc_count++;
    out.component_of.push_back(comp);
    ArcId tail = out.arc_count++;
    out.component_of.push_back(comp);
    out.crossings[end].under_in = tail;
    ArcId over = arc_over; // self-poke keeps its over-passes on the leading piece
    out.crossings.push_back({+1, arc_under, over, mid});
    out.crossings.push_back({-1, mid, over, tail});
    return out;
}

Diagram random_moves(const Diagram& d, int r1_count, int r2_count, uint64_t seed) {
    if (r1_count < 0 || r2_count < 0) fail_structural("move counts must be non-negative");
    Diagram cur = d;
    Lcg64 rng(seed);
    for (int i = 0; i < r1_count; ++i) {
        if (cur.arc_count == 0) break;
        ArcId arc = static_cast<ArcId>(rng.below(cur.arc_count));
        int chirality = (rng.next() & 1) ? -1 : +1;
        cur = r1_add(cur, arc, chirality);
    }
    for (int i = 0; i < r2_count; ++i) {
        if (cur.arc_count == 0) break;
        ArcId over = static_cast<ArcId>(rng.below(cur.arc_count));
        ArcId under = static_cast<ArcId>(rng.below(cur.arc_count));
        cur = r2_add(cur, over, under);
    }
    return cur;
}

} // namespace hq

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hq/error.hpp"

namespace hq {

using ArcId = int;

/* One crossing of an oriented link diagram.  Arcs are the segments
 * between consecutive under-passes; the under-strand enters as under_in
 * and leaves as under_out, passing under the arc over.  sign is +1 or -1
 * (right- or left-handed). */
struct Crossing {
    int sign = 0;
    ArcId under_in = 0;
    ArcId over = 0;
    ArcId under_out = 0;
};

struct Diagram {
    int arc_count = 0;
    std::vector<int> component_of; // arc -> component index
    std::vector<Crossing> crossings;

    int writhe() const {
        int w = 0;
        for (auto& c : crossings) w += c.sign;
        return w;
    }
};

struct DiagramReport {
    bool valid = false;
    std::vector<std::string> problems;
};

/* Structural validity: ids in range, signs in {-1,+1}, each arc occurs
 * as under_in exactly as often as under_out (0 or 1 times), and
 * component_of matches the partition of arcs into under-strand
 * succession cycles (arcs free of under-passes are their own
 * single-arc components). */
DiagramReport validate(const Diagram& d);

Diagram make_unknot();
Diagram make_unlink(int components);

/* PD notation: whitespace-separated terms X[a,b,c,d], positive edge
 * labels 1..2N, each appearing exactly twice; a is the incoming
 * under-edge and c the outgoing one; edges are numbered sequentially
 * along each oriented component, wrapping at component boundaries.
 * The over-strand direction follows the numbering: successor of d equal
 * to b means the over-strand runs d->b and the crossing is positive;
 * successor of b equal to d means b->d and negative.  unknots appends
 * that many crossing-free loop components.  Malformed or ambiguous
 * input raises ErrorKind::structural naming the offending term. */
Diagram parse_pd(const std::string& text, int unknots = 0);

/* Inserts a kink of the given sign (+1/-1) near the end of arc: the arc
 * is cut at the new under-pass into a leading half keeping its id and a
 * trailing half with a fresh id which also carries the over-pass.  A
 * crossing-free loop becomes a one-arc kink and keeps its arc count. */
Diagram r1_add(const Diagram& d, ArcId arc, int chirality);

/* Pokes arc_over across arc_under near the end of arc_under, adding a
 * positive then a negative crossing along the under-strand.  The two cut
 * points give arc_under one or two fresh trailing arcs (one when it is a
 * closed loop).  arc_over == arc_under is allowed; the over-passes then
 * sit on the leading piece. */
Diagram r2_add(const Diagram& d, ArcId arc_over, ArcId arc_under);

/* 64-bit linear congruential generator used for reproducible move
 * sequences: state <- state * 6364136223846793005 + 1442695040888963407. */
struct Lcg64 {
    uint64_t state = 0;
    explicit Lcg64(uint64_t seed = 0) : state(seed) {}
    uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state;
    }
    // next() reduced mod n
    uint64_t below(uint64_t n) { return next() % n; }
};

/* Applies r1_count random kinks then r2_count random pokes, drawing
 * choices from Lcg64(seed): for each kink, an arc (next mod arc_count)
 * then a chirality (next bit 0 -> +1, 1 -> -1); for each poke, an over
 * arc then an under arc. */
Diagram random_moves(const Diagram& d, int r1_count, int r2_count, uint64_t seed);

} // namespace hq

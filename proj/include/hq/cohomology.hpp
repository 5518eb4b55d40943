#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hq/chain.hpp"
#include "hq/ring.hpp"

namespace hq {

/* A cochain of the given degree: a ring-valued function on the
 * non-degenerate degree-n tuples, stored sparsely by basis code
 * (missing = 0, degenerate tuples evaluate to 0 by construction). */
struct Cochain {
    int degree = 0;
    int x_size = 0;
    int y_size = 0;
    RingSpec ring;
    std::map<uint64_t, long long> values;

    uint64_t encode(const ChainTuple& t) const;
    long long eval_code(uint64_t code) const {
        auto it = values.find(code);
        return it == values.end() ? 0 : it->second;
    }
    long long eval(const ChainTuple& t) const;
    void set(const ChainTuple& t, long long v);
    bool is_zero() const;
};

/* (d^n w)(T) = w(boundary T), a degree n+1 cochain. */
Cochain coboundary(const Quandle& base, const HierarchicalQuandle& h, const Cochain& w);

// witness tuple where w(boundary T) != 0, or nullopt when w is a cocycle
std::optional<ChainTuple> cocycle_defect(const Quandle& base, const HierarchicalQuandle& h,
                                         const Cochain& w);
bool is_cocycle(const Quandle& base, const HierarchicalQuandle& h, const Cochain& w);

// basis/generating set of the cocycles of the given degree
std::vector<Cochain> cocycle_space(const Quandle& base, const HierarchicalQuandle& h,
                                   int degree, const RingSpec& ring,
                                   const ChainCaps& caps = {});

// generating set of the coboundaries of the given degree
std::vector<Cochain> coboundary_space(const Quandle& base, const HierarchicalQuandle& h,
                                      int degree, const RingSpec& ring,
                                      const ChainCaps& caps = {});

// preimage cochain delta with coboundary(delta) = w, when one exists
std::optional<Cochain> coboundary_preimage(const Quandle& base, const HierarchicalQuandle& h,
                                           const Cochain& w, const ChainCaps& caps = {});
bool is_coboundary(const Quandle& base, const HierarchicalQuandle& h, const Cochain& w,
                   const ChainCaps& caps = {});

/* Cohomology in one degree.  Over Z: free rank (betti) plus torsion
 * invariant factors.  Over Z/m: the group is a direct sum of cyclic
 * factors d1 | d2 | ... | dk (each > 1, each dividing m); for prime m
 * that is just dim-many copies of m.  representatives hold one cocycle
 * per summand, normalized on the first nonzero coordinate. */
struct CohomologyResult {
    RingSpec ring;
    int degree = 0;
    long long betti = 0;               // Z only
    std::vector<long long> torsion;    // Z only, factors > 1
    std::vector<long long> factors;    // Zm only, cyclic orders d1 | d2 | ...
    std::vector<Cochain> representatives;

    long long dimension() const { return static_cast<long long>(factors.size()); }
};

/* Route selection: Z via integer Smith normal form; Z/p (prime) via
 * mod-p elimination; Z/m (composite) by lifting the integer SNF.
 * cohomology_zm_via_snf runs the lifting route for any m and exists so
 * the two routes can be compared. */
CohomologyResult cohomology(const Quandle& base, const HierarchicalQuandle& h, int degree,
                            const RingSpec& ring, bool want_representatives = true,
                            const ChainCaps& caps = {});
CohomologyResult cohomology_zm_via_snf(const Quandle& base, const HierarchicalQuandle& h,
                                       int degree, long long m, bool want_representatives = true,
                                       const ChainCaps& caps = {});

} // namespace hq

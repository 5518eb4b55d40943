#include <doctest.h>

#include <vector>

#include "hq/cohomology.hpp"
#include "hq/coloring.hpp"
#include "hq/error.hpp"
#include "hq/invariant.hpp"
#include "hq/quandle.hpp"
#include "support/builders.hpp"
#include "support/oracles.hpp"

using namespace hq;
using support::load_hquandle;
using support::thrown_kind;

namespace {

Multiset<long long> ms(std::vector<std::pair<long long, long long>> items) {
    Multiset<long long> m;
    for (auto& [v, c] : items) m.add(v, c);
    return m;
}

Cochain indicator01(const RingSpec& ring) {
    Cochain w;
    w.degree = 2;
    w.x_size = 1;
    w.y_size = 3;
    w.ring = ring;
    w.set({{0, 0}, {0, 1}}, 1);
    return w;
}

} // namespace

TEST_CASE("crossing weights follow the sign convention") {
    Quandle t1 = make_trivial(1);
    HierarchicalQuandle h = make_constant_family(t1, make_dihedral(3));
    Cochain w = indicator01(RingSpec::zm(3));

    QColoring xi = {0, 0, 0};
    HColoring zeta = {0, 1, 2};

    Crossing pos{+1, 0, 1, 2}; // weight reads the incoming under-arc
    CHECK(crossing_weight(t1, h, w, pos, xi, zeta) == 1);
    Crossing neg{-1, 2, 1, 0}; // weight reads the outgoing under-arc, negated
    CHECK(crossing_weight(t1, h, w, neg, xi, zeta) == 2);
    Crossing neg_miss{-1, 0, 2, 1};
    CHECK(crossing_weight(t1, h, w, neg_miss, xi, zeta) == 0);
}

TEST_CASE("state sum multisets distinguish the two trefoils") {
    Quandle t1 = make_trivial(1);
    HierarchicalQuandle h = make_constant_family(t1, make_dihedral(3));
    Cochain w = indicator01(RingSpec::zm(3));
    QColoring xi = {0, 0, 0};

    CHECK(invariant_for_base(support::trefoil(), t1, h, w, xi) == ms({{0, 6}, {2, 3}}));
    CHECK(invariant_for_base(support::std_trefoil(), t1, h, w, xi) == ms({{0, 6}, {1, 3}}));

    InvariantValue full = full_invariant(support::trefoil(), t1, h, w);
    REQUIRE(full.per_base.size() == 1);
    CHECK(full.per_base[0] == ms({{0, 6}, {2, 3}}));
    CHECK(full.flattened() == ms({{0, 6}, {2, 3}}));

    // over the integers the signs survive uncanonicalized
    Cochain wz = indicator01(RingSpec::z());
    CHECK(invariant_for_base(support::trefoil(), t1, h, wz, xi) == ms({{0, 6}, {-1, 3}}));
    CHECK(invariant_for_base(support::std_trefoil(), t1, h, wz, xi) == ms({{0, 6}, {1, 3}}));

    // the state sums agree with the independent accumulation
    for (auto& zeta : enumerate_hcolorings(support::trefoil(), t1, h, xi))
        CHECK(state_sum_weight(support::trefoil(), t1, h, w, xi, zeta) ==
              oracle::state_sum(support::trefoil(), h, w, xi, zeta));
}

TEST_CASE("kinks contribute nothing") {
    Quandle t2 = make_trivial(2);
    HierarchicalQuandle ch = load_hquandle("const_r3_over_t2.json");
    for (uint64_t seed : {1u, 2u, 3u}) {
        Cochain w = oracle::random_cochain(2, 3, 2, RingSpec::zm(5), seed);
        for (const Diagram& d : {support::kink_pos(), support::kink_neg()}) {
            for (auto& xi : enumerate_qcolorings(d, t2))
                for (auto& zeta : enumerate_hcolorings(d, t2, ch, xi))
                    CHECK(state_sum_weight(d, t2, ch, w, xi, zeta) == 0);
            InvariantValue v = full_invariant(d, t2, ch, w);
            CHECK(v.flattened() == ms({{0, 6}})); // 2 base colourings x 3 fiber colourings
        }
    }
}

TEST_CASE("coboundaries produce the zero invariant") {
    Quandle t2 = make_trivial(2);
    HierarchicalQuandle ch = load_hquandle("const_r3_over_t2.json");
    HierarchicalQuandle lp = load_hquandle("leftproj2_over_t2.json");

    for (auto& [name, d] : support::shipped_diagrams()) {
        CAPTURE(name);
        for (const RingSpec& ring : {RingSpec::zm(3), RingSpec::zm(5), RingSpec::z()}) {
            for (const HierarchicalQuandle& h : {ch, lp}) {
                Cochain u = oracle::random_cochain(2, h.size, 1, ring, 31 * h.size + ring.modulus);
                Cochain w = coboundary(t2, h, u);
                for (auto& xi : enumerate_qcolorings(d, t2))
                    for (auto& zeta : enumerate_hcolorings(d, t2, h, xi))
                        CHECK(state_sum_weight(d, t2, h, w, xi, zeta) == 0);
            }
        }
    }
}

TEST_CASE("cohomologous cocycles give the same invariant") {
    Quandle t2 = make_trivial(2);
    HierarchicalQuandle lp = load_hquandle("leftproj2_over_t2.json");
    CohomologyResult reps = cohomology(t2, lp, 2, RingSpec::zm(3));
    REQUIRE_FALSE(reps.representatives.empty());

    for (size_t i = 0; i < reps.representatives.size() && i < 3; ++i) {
        const Cochain& w = reps.representatives[i];
        Cochain u = oracle::random_cochain(2, 2, 1, RingSpec::zm(3), 100 + i);
        Cochain shifted = support::cochain_add(w, coboundary(t2, lp, u));
        for (const Diagram& d : {support::trefoil(), support::hopf(), support::figure8()}) {
            InvariantValue a = full_invariant(d, t2, lp, w);
            InvariantValue b = full_invariant(d, t2, lp, shifted);
            CHECK(a == b);
            REQUIRE(a.per_base.size() == b.per_base.size());
            for (size_t k = 0; k < a.per_base.size(); ++k) CHECK(a.per_base[k] == b.per_base[k]);
        }
    }
}

TEST_CASE("the invariant survives Reidemeister moves") {
    Quandle t2 = make_trivial(2);
    HierarchicalQuandle lp = load_hquandle("leftproj2_over_t2.json");
    HierarchicalQuandle ch = load_hquandle("const_r3_over_t2.json");

    std::vector<Cochain> weights;
    for (auto& rep : cohomology(t2, lp, 2, RingSpec::zm(3)).representatives)
        if (weights.size() < 2) weights.push_back(rep);
    REQUIRE_FALSE(weights.empty());

    for (const Cochain& w : weights)
        for (uint64_t seed : {7u, 19u}) {
            Diagram moved = random_moves(support::trefoil(), 2, 1, seed);
            CHECK(full_invariant(support::trefoil(), t2, lp, w) ==
                  full_invariant(moved, t2, lp, w));
        }

    for (auto& rep : cohomology(t2, ch, 2, RingSpec::zm(3)).representatives) {
        Diagram moved = random_moves(support::hopf(), 1, 1, 5);
        CHECK(full_invariant(support::hopf(), t2, ch, rep) ==
              full_invariant(moved, t2, ch, rep));
    }

    // the paired diagrams describe the same link
    for (const Cochain& w : weights)
        CHECK(full_invariant(support::r3_pair_a(), t2, lp, w) ==
              full_invariant(support::r3_pair_b(), t2, lp, w));
}

TEST_CASE("invariant values compare as a multiset of multisets") {
    InvariantValue a{RingSpec::zm(3), {ms({{0, 2}}), ms({{1, 1}, {2, 1}})}};
    InvariantValue b{RingSpec::zm(3), {ms({{1, 1}, {2, 1}}), ms({{0, 2}})}};
    CHECK(a == b);
    CHECK(a.flattened() == ms({{0, 2}, {1, 1}, {2, 1}}));
    CHECK(a.canonical() == b.canonical());

    InvariantValue c{RingSpec::zm(3), {ms({{0, 2}}), ms({{1, 2}})}};
    CHECK_FALSE(a == c);
}

TEST_CASE("weight cochains are validated") {
    Quandle t2 = make_trivial(2);
    HierarchicalQuandle ch = load_hquandle("const_r3_over_t2.json");
    Diagram tref = support::trefoil();
    QColoring xi = {0, 0, 0};
    HColoring zeta = {0, 0, 0};

    Cochain wrong_degree = oracle::random_cochain(2, 3, 1, RingSpec::zm(3), 1);
    CHECK(thrown_kind([&] { state_sum_weight(tref, t2, ch, wrong_degree, xi, zeta); }) ==
          ErrorKind::invalid);
    CHECK(thrown_kind([&] { full_invariant(tref, t2, ch, wrong_degree); }) == ErrorKind::invalid);

    Cochain wrong_size = oracle::random_cochain(2, 2, 2, RingSpec::zm(3), 1);
    CHECK(thrown_kind([&] { state_sum_weight(tref, t2, ch, wrong_size, xi, zeta); }) ==
          ErrorKind::invalid);

    Cochain proper = oracle::random_cochain(2, 3, 2, RingSpec::zm(3), 2);
    HColoring bad_zeta = {0, 1, 0};
    CHECK(thrown_kind([&] { state_sum_weight(tref, t2, ch, proper, xi, bad_zeta); }) ==
          ErrorKind::invalid);
}

#include <doctest.h>

#include <vector>

#include "hq/chain.hpp"
#include "hq/error.hpp"
#include "hq/hquandle.hpp"
#include "hq/quandle.hpp"
#include "support/builders.hpp"
#include "support/oracles.hpp"

using namespace hq;
using support::load_hquandle;
using support::thrown_kind;

namespace {

struct Pair {
    const char* name;
    Quandle base;
    HierarchicalQuandle h;
};

std::vector<Pair> standard_pairs() {
    Quandle t1 = make_trivial(1);
    Quandle t2 = make_trivial(2);
    Quandle r3 = make_dihedral(3);
    return {
        {"t1_r3", t1, make_constant_family(t1, r3)},
        {"t2_const_r3", t2, load_hquandle("const_r3_over_t2.json")},
        {"t2_leftproj2", t2, load_hquandle("leftproj2_over_t2.json")},
        {"t1_s3conj", t1, make_constant_family(t1, support::s3_conjugation())},
    };
}

bool all_zero(const SparseIntMatrix& m) {
    for (auto& e : m.entries)
        if (e[2] != 0) return false;
    return true;
}

} // namespace

TEST_CASE("degenerate tuples and single maps") {
    CHECK(is_degenerate({{0, 1}, {0, 1}}));
    CHECK_FALSE(is_degenerate({{0, 1}, {1, 1}}));
    CHECK_FALSE(is_degenerate({}));

    Quandle r3 = make_dihedral(3);
    HierarchicalQuandle h = make_constant_family(r3, make_trivial(3));
    ChainTuple t = {{0, 0}, {1, 1}, {2, 2}};
    CHECK(apply_lambda(r3, h, t, 2) == ChainTuple{{2, 0}, {2, 2}});
    CHECK(apply_rho(t, 2) == ChainTuple{{0, 0}, {2, 2}});
    CHECK(apply_lambda(r3, h, t, 1) == apply_rho(t, 1));
    CHECK(thrown_kind([&] { apply_lambda(r3, h, t, 4); }) == ErrorKind::invalid);
}

TEST_CASE("boundary of a pair drops to the frozen formula") {
    // over a one-point base with constant fiber Y: d(y1,y2) = (y1) - (y1*y2)
    Quandle t1 = make_trivial(1);
    Quandle r3 = make_dihedral(3);
    HierarchicalQuandle h = make_constant_family(t1, r3);

    ChainVector v;
    v[{{0, 0}, {0, 1}}] = 1;
    ChainVector d = boundary(t1, h, v);
    ChainVector expected;
    expected[{{0, 0}}] = 1;
    expected[{{0, r3.op(0, 1)}}] = -1;
    CHECK(d == expected);

    // degree-1 chains map to zero
    ChainVector one;
    one[{{0, 2}}] = 5;
    CHECK(boundary(t1, h, one).empty());

    // linearity in the coefficient
    ChainVector v2;
    v2[{{0, 0}, {0, 1}}] = 3;
    ChainVector d2 = boundary(t1, h, v2);
    for (auto& [t, c] : expected) CHECK(d2[t] == 3 * c);
}

TEST_CASE("basis enumeration, codes and caps") {
    ChainBasis b(2, 3, 2);
    CHECK(b.size() == 30); // M(M-1) with M = 6
    CHECK(ChainBasis(2, 3, 1).size() == 6);
    CHECK(ChainBasis(2, 3, 3).size() == 150);
    CHECK(ChainBasis(2, 3, 4).size() == 750);
    CHECK(ChainBasis(2, 3, 0).size() == 0);

    for (long long i = 0; i < b.size(); ++i) {
        ChainTuple t = b.at(i);
        CHECK_FALSE(is_degenerate(t));
        CHECK(b.index_of(b.encode(t)) == i);
    }
    // lexicographic tuple order
    for (long long i = 0; i + 1 < b.size(); ++i) CHECK(b.at(i) < b.at(i + 1));
    CHECK(b.index_of(b.encode({{0, 0}, {0, 0}})) == -1);

    CHECK(thrown_kind([] { ChainBasis(2, 3, 5); }) == ErrorKind::cap);
    CHECK(thrown_kind([] { ChainBasis(2, 3, 2, ChainCaps{4, 10}); }) == ErrorKind::cap);
    CHECK(thrown_kind([] { ChainBasis(0, 3, 1); }) == ErrorKind::invalid);
    CHECK(thrown_kind([] {
              Quandle t2 = make_trivial(2);
              boundary_matrix(t2, make_constant_family(t2, make_dihedral(3)), 2,
                              BoundaryKind::Standard, ChainCaps{4, 10});
          }) == ErrorKind::cap);
    CHECK(thrown_kind([] {
              Quandle t1 = make_trivial(1);
              boundary_matrix(t1, make_constant_family(t1, t1), 0);
          }) == ErrorKind::invalid);
}

TEST_CASE("boundary matrices match the dense second opinion") {
    for (auto& p : standard_pairs()) {
        CAPTURE(p.name);
        for (int degree = 1; degree <= 4; ++degree) {
            for (auto [kind, okind] : {std::pair{BoundaryKind::Lambda, oracle::Kind::Lambda},
                                       {BoundaryKind::Rho, oracle::Kind::Rho},
                                       {BoundaryKind::Standard, oracle::Kind::Standard},
                                       {BoundaryKind::Positive, oracle::Kind::Positive}}) {
                SparseIntMatrix m = boundary_matrix(p.base, p.h, degree, kind);
                oracle::Dense want = oracle::boundary_dense(p.base, p.h, degree, okind);
                CHECK(oracle::from_sparse(m) == want);
            }
        }
    }
}

TEST_CASE("degree-one boundaries vanish") {
    for (auto& p : standard_pairs()) {
        CAPTURE(p.name);
        SparseIntMatrix m = boundary_matrix(p.base, p.h, 1);
        CHECK(m.rows == 0);
        CHECK(m.entries.empty());
    }
}

TEST_CASE("the complexes square to zero") {
    for (auto& p : standard_pairs()) {
        CAPTURE(p.name);
        for (int degree = 2; degree <= 4; ++degree) {
            SparseIntMatrix lo_l = boundary_matrix(p.base, p.h, degree - 1, BoundaryKind::Lambda);
            SparseIntMatrix hi_l = boundary_matrix(p.base, p.h, degree, BoundaryKind::Lambda);
            SparseIntMatrix lo_r = boundary_matrix(p.base, p.h, degree - 1, BoundaryKind::Rho);
            SparseIntMatrix hi_r = boundary_matrix(p.base, p.h, degree, BoundaryKind::Rho);

            CHECK(sparse_multiply(lo_l, hi_l).entries.empty());
            CHECK(sparse_multiply(lo_r, hi_r).entries.empty());

            // lambda rho + rho lambda = 0
            oracle::Dense lr = oracle::from_sparse(sparse_multiply(lo_l, hi_r));
            oracle::Dense rl = oracle::from_sparse(sparse_multiply(lo_r, hi_l));
            REQUIRE(lr.rows == rl.rows);
            REQUIRE(lr.cols == rl.cols);
            for (size_t i = 0; i < lr.a.size(); ++i) CHECK(lr.a[i] + rl.a[i] == 0);

            for (BoundaryKind k : {BoundaryKind::Standard, BoundaryKind::Positive}) {
                SparseIntMatrix lo = boundary_matrix(p.base, p.h, degree - 1, k);
                SparseIntMatrix hi = boundary_matrix(p.base, p.h, degree, k);
                SparseIntMatrix prod = sparse_multiply(lo, hi);
                CHECK(all_zero(prod));
                CHECK(prod.entries.empty());
            }
        }
    }
}

TEST_CASE("one-point base recovers the one-level complex") {
    Quandle t1 = make_trivial(1);
    for (const Quandle& y : {make_trivial(2), make_dihedral(3), support::s3_conjugation()}) {
        HierarchicalQuandle h = make_constant_family(t1, y);
        for (int degree = 1; degree <= 4; ++degree) {
            oracle::Dense ours = oracle::from_sparse(boundary_matrix(t1, h, degree));
            oracle::Dense classical = oracle::classical_boundary_dense(y, degree);
            CHECK(ours == classical);
        }
    }
}

TEST_CASE("sparse multiply checks shapes") {
    SparseIntMatrix a{2, 3, {}};
    SparseIntMatrix b{4, 2, {}};
    CHECK(thrown_kind([&] { sparse_multiply(a, b); }) == ErrorKind::invalid);

    SparseIntMatrix c{3, 4, {{0, 0, 2}, {2, 3, -1}}};
    SparseIntMatrix prod = sparse_multiply(a, c);
    CHECK(prod.rows == 2);
    CHECK(prod.cols == 4);
    CHECK(prod.entries.empty());
}

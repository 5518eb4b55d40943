#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "hq/chain.hpp"

namespace hq {

// gmpxx has no long long overloads; route through the decimal form
inline mpz_class mpz_ll(long long v) { return mpz_class(std::to_string(v)); }

// Dense integer matrix, row-major, arbitrary-precision entries.
struct ZMatrix {
    long long rows = 0;
    long long cols = 0;
    std::vector<mpz_class> a;

    ZMatrix() = default;
    ZMatrix(long long r, long long c) : rows(r), cols(c), a(r * c) {}

    mpz_class& at(long long r, long long c) { return a[r * cols + c]; }
    const mpz_class& at(long long r, long long c) const { return a[r * cols + c]; }

    static ZMatrix identity(long long n);
    static ZMatrix from_sparse(const SparseIntMatrix& m);
};

/* Smith normal form s = u * A * v with u, v unimodular; uinv, vinv are
 * their inverses.  diag holds the nonzero invariant factors d1 | d2 | ...
 * all positive.  Pivoting picks a minimal-absolute-value nonzero entry. */
struct SnfResult {
    ZMatrix s, u, v, uinv, vinv;
    std::vector<mpz_class> diag;
    long long rank() const { return static_cast<long long>(diag.size()); }
};

SnfResult smith_normal_form(const ZMatrix& A);

// x with A x = b over the integers, via a precomputed SNF of A
std::optional<std::vector<mpz_class>> solve_integer(const SnfResult& f,
                                                    const std::vector<mpz_class>& b);

// x with A x = b mod m (m >= 2, need not be prime)
std::optional<std::vector<long long>> solve_mod(const SnfResult& f,
                                                const std::vector<long long>& b, long long m);

/* Dense matrix over Z/p, p prime.  Elimination uses the first nonzero
 * entry of each column as pivot, so results are deterministic. */
struct ModMatrix {
    long long rows = 0;
    long long cols = 0;
    long long p = 0;
    std::vector<long long> a; // canonical residues, row-major

    ModMatrix() = default;
    ModMatrix(long long r, long long c, long long p_) : rows(r), cols(c), p(p_), a(r * c) {}
    long long& at(long long r, long long c) { return a[r * cols + c]; }
    long long at(long long r, long long c) const { return a[r * cols + c]; }

    static ModMatrix from_sparse(const SparseIntMatrix& m, long long p);
};

long long mod_inverse(long long x, long long p);
long long mod_rank(ModMatrix m);
// in-place reduced row echelon form; returns the count of nonzero rows
long long mod_row_reduce(ModMatrix& m);
// basis of {x : m x = 0}, each vector of length m.cols, leading entry 1
std::vector<std::vector<long long>> mod_nullspace(const ModMatrix& m);
std::optional<std::vector<long long>> mod_solve(const ModMatrix& m,
                                                const std::vector<long long>& b);

/* Incremental column-span tracker over Z/p: feed columns, learn which
 * extend the span.  Used to pick coset representatives. */
class ModSpan {
public:
    ModSpan(long long dim, long long p) : dim_(dim), p_(p) {}
    // true when v was outside the span (v is then absorbed)
    bool add(std::vector<long long> v);
    long long rank() const { return static_cast<long long>(rows_.size()); }

private:
    long long dim_, p_;
    std::vector<std::pair<long long, std::vector<long long>>> rows_; // (pivot, vector)
};

} // namespace hq

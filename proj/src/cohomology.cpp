#include <algorithm>
#include <numeric>

#include "hq/cohomology.hpp"
#include "hq/linalg.hpp"

namespace hq {

uint64_t Cochain::encode(const ChainTuple& t) const {
    uint64_t radix = static_cast<uint64_t>(x_size) * y_size;
    uint64_t code = 0;
    for (auto [x, y] : t) {
        if (x < 0 || x >= x_size || y < 0 || y >= y_size)
            fail_invalid("cochain tuple entry out of range");
        code = code * radix + (static_cast<uint64_t>(x) * y_size + y);
    }
    return code;
}

long long Cochain::eval(const ChainTuple& t) const {
    if (static_cast<int>(t.size()) != degree) fail_invalid("cochain degree mismatch");
    if (is_degenerate(t)) return 0;
    return eval_code(encode(t));
}

void Cochain::set(const ChainTuple& t, long long v) {
    if (static_cast<int>(t.size()) != degree) fail_invalid("cochain degree mismatch");
    if (is_degenerate(t)) fail_invalid("cochain value on a degenerate tuple");
    v = ring.canon(v);
    if (v == 0)
        values.erase(encode(t));
    else
        values[encode(t)] = v;
}

bool Cochain::is_zero() const { return values.empty(); }

namespace {

void require_compatible(const Quandle& base, const HierarchicalQuandle& h, const Cochain& w) {
    if (w.x_size != base.size || w.y_size != h.size)
        fail_invalid("cochain sized for a different pair of sets");
}

SparseIntMatrix transpose_sparse(const SparseIntMatrix& m) {
    SparseIntMatrix t;
    t.rows = m.cols;
    t.cols = m.rows;
    for (const auto& e : m.entries) t.entries.push_back({e[1], e[0], e[2]});
    std::sort(t.entries.begin(), t.entries.end(),
              [](const auto& a, const auto& b) {
                  return a[1] != b[1] ? a[1] < b[1] : a[0] < b[0];
              });
    return t;
}

std::vector<long long> cochain_vector(const Cochain& w, const ChainBasis& basis) {
    std::vector<long long> v(basis.size(), 0);
    for (const auto& [code, val] : w.values) {
        long long idx = basis.index_of(code);
        if (idx < 0) fail_invalid("cochain holds a value outside the basis");
        v[idx] = val;
    }
    return v;
}

Cochain vector_cochain(const std::vector<long long>& v, const ChainBasis& basis,
                       const RingSpec& ring) {
    Cochain w;
    w.degree = basis.degree();
    w.x_size = basis.x_size();
    w.y_size = basis.y_size();
    w.ring = ring;
    for (long long i = 0; i < basis.size(); ++i) {
        long long val = ring.canon(v[i]);
        if (val != 0) w.set(basis.at(i), val);
    }
    return w;
}

long long to_ll(const mpz_class& x) {
    if (!x.fits_slong_p()) fail_cap("integer entry exceeds machine range");
    return x.get_si();
}

bool is_prime_ll(long long m) {
    if (m < 2) return false;
    for (long long d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

// Z vectors: flip so the first nonzero entry is positive
void normalize_sign(std::vector<long long>& v) {
    for (long long x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (long long& y : v) y = -y;
        return;
    }
}

/* Z/m vectors: multiply by a unit so the first nonzero entry becomes
 * gcd(entry, m), the canonical generator of the cyclic group it spans. */
void normalize_unit(std::vector<long long>& v, long long m) {
    long long c = 0;
    for (long long x : v)
        if (x % m != 0) {
            c = ((x % m) + m) % m;
            break;
        }
    if (c == 0) return;
    long long g = std::gcd(c, m);
    long long u = 1;
    if (m / g > 1) {
        long long u0 = mod_inverse((c / g) % (m / g), m / g);
        u = u0;
        while (std::gcd(u, m) != 1) u += m / g; // lands on a unit within g steps
    }
    for (long long& x : v) x = ((x % m) * (u % m) % m + m) % m;
}

struct CyclicSummand {
    long long order = 0;
    std::vector<long long> rep;
};

/* Rebuilds a list of cyclic summands into the invariant factor chain
 * d1 | d2 | ... (ascending), combining representatives through the
 * primary decomposition: factor k takes, for each prime, the k-th
 * largest exponent present, and its representative adds the matching
 * scaled generators. */
void canonicalize_zm(const std::vector<CyclicSummand>& parts, long long m, long long dim,
                     bool want_reps, std::vector<long long>& factors,
                     std::vector<std::vector<long long>>& reps) {
    factors.clear();
    reps.clear();
    std::map<long long, std::vector<std::pair<int, size_t>>> by_prime; // p -> (exp, part)
    for (size_t i = 0; i < parts.size(); ++i) {
        long long o = parts[i].order;
        for (long long p = 2; p * p <= o; ++p)
            if (o % p == 0) {
                int e = 0;
                while (o % p == 0) {
                    o /= p;
                    ++e;
                }
                by_prime[p].push_back({e, i});
            }
        if (o > 1) by_prime[o].push_back({1, i});
    }
    size_t chain = 0;
    for (auto& [p, lst] : by_prime) {
        std::sort(lst.begin(), lst.end(),
                  [](const auto& a, const auto& b) {
                      return a.first != b.first ? a.first > b.first : a.second < b.second;
                  });
        chain = std::max(chain, lst.size());
    }
    for (size_t k = 0; k < chain; ++k) {
        long long d = 1;
        std::vector<long long> rep(dim, 0);
        for (auto& [p, lst] : by_prime) {
            if (k >= lst.size()) continue;
            auto [e, part] = lst[k];
            long long pe = 1;
            for (int j = 0; j < e; ++j) pe *= p;
            d *= pe;
            if (want_reps) {
                const CyclicSummand& s = parts[part];
                long long scale = s.order / pe; // generator of the p-part
                for (long long c = 0; c < dim; ++c)
                    rep[c] = (rep[c] + s.rep[c] % m * (scale % m)) % m;
            }
        }
        factors.push_back(d);
        if (want_reps) {
            for (long long& x : rep) x = (x % m + m) % m;
            normalize_unit(rep, m);
            reps.push_back(std::move(rep));
        }
    }
    std::reverse(factors.begin(), factors.end()); // ascending divisibility
    std::reverse(reps.begin(), reps.end());
}

// dense column extraction helpers
std::vector<long long> zcolumn(const ZMatrix& m, long long col) {
    std::vector<long long> v(m.rows);
    for (long long r = 0; r < m.rows; ++r) v[r] = to_ll(m.at(r, col));
    return v;
}

} // namespace

Cochain coboundary(const Quandle& base, const HierarchicalQuandle& h, const Cochain& w) {
    require_compatible(base, h, w);
    Cochain out;
    out.degree = w.degree + 1;
    out.x_size = w.x_size;
    out.y_size = w.y_size;
    out.ring = w.ring;
    ChainBasis basis(base.size, h.size, w.degree + 1);
    for (long long i = 0; i < basis.size(); ++i) {
        ChainTuple t = basis.at(i);
        ChainVector v;
        v[t] = 1;
        long long acc = 0;
        for (const auto& [img, coeff] : boundary(base, h, v, BoundaryKind::Standard))
            acc += coeff * w.eval(img);
        acc = w.ring.canon(acc);
        if (acc != 0) out.set(t, acc);
    }
    return out;
}

std::optional<ChainTuple> cocycle_defect(const Quandle& base, const HierarchicalQuandle& h,
                                         const Cochain& w) {
    require_compatible(base, h, w);
    ChainBasis basis(base.size, h.size, w.degree + 1);
    for (long long i = 0; i < basis.size(); ++i) {
        ChainTuple t = basis.at(i);
        ChainVector v;
        v[t] = 1;
        long long acc = 0;
        for (const auto& [img, coeff] : boundary(base, h, v, BoundaryKind::Standard))
            acc += coeff * w.eval(img);
        if (w.ring.canon(acc) != 0) return t;
    }
    return std::nullopt;
}

bool is_cocycle(const Quandle& base, const HierarchicalQuandle& h, const Cochain& w) {
    return !cocycle_defect(base, h, w).has_value();
}

std::vector<Cochain> cocycle_space(const Quandle& base, const HierarchicalQuandle& h,
                                   int degree, const RingSpec& ring, const ChainCaps& caps) {
    if (degree < 1) fail_invalid("cocycles live in degree >= 1");
    ChainBasis basis(base.size, h.size, degree, caps);
    SparseIntMatrix constraint =
        transpose_sparse(boundary_matrix(base, h, degree + 1, BoundaryKind::Standard, caps));
    std::vector<Cochain> out;
    if (!ring.is_z() && is_prime_ll(ring.modulus)) {
        ModMatrix a = ModMatrix::from_sparse(constraint, ring.modulus);
        for (auto& v : mod_nullspace(a)) out.push_back(vector_cochain(v, basis, ring));
        return out;
    }
    SnfResult f = smith_normal_form(ZMatrix::from_sparse(constraint));
    long long n = basis.size();
    if (ring.is_z()) {
        for (long long i = f.rank(); i < n; ++i) {
            std::vector<long long> v = zcolumn(f.v, i);
            normalize_sign(v);
            out.push_back(vector_cochain(v, basis, ring));
        }
        return out;
    }
    long long m = ring.modulus;
    for (long long i = 0; i < n; ++i) {
        long long scale = 1;
        if (i < f.rank()) {
            mpz_class g = gcd(f.diag[i], mpz_ll(m));
            scale = m / to_ll(g);
            if (scale % m == 0) continue; // column contributes nothing mod m
        }
        std::vector<long long> v = zcolumn(f.v, i);
        for (long long& x : v) x = ((x % m) * (scale % m) % m + m) % m;
        normalize_unit(v, m);
        out.push_back(vector_cochain(v, basis, ring));
    }
    return out;
}

std::vector<Cochain> coboundary_space(const Quandle& base, const HierarchicalQuandle& h,
                                      int degree, const RingSpec& ring, const ChainCaps& caps) {
    if (degree < 1) fail_invalid("coboundaries live in degree >= 1");
    ChainBasis basis(base.size, h.size, degree, caps);
    SparseIntMatrix image =
        transpose_sparse(boundary_matrix(base, h, degree, BoundaryKind::Standard, caps));
    std::vector<Cochain> out;
    if (image.cols == 0) return out; // degree 1: nothing below
    if (!ring.is_z() && is_prime_ll(ring.modulus)) {
        // column space of the image map, reduced to echelon rows
        ModMatrix cols = ModMatrix::from_sparse(image, ring.modulus);
        ModMatrix rowed(cols.cols, cols.rows, ring.modulus);
        for (long long r = 0; r < cols.rows; ++r)
            for (long long c = 0; c < cols.cols; ++c) rowed.at(c, r) = cols.at(r, c);
        long long nonzero = mod_row_reduce(rowed);
        for (long long r = 0; r < nonzero; ++r) {
            std::vector<long long> v(rowed.cols);
            for (long long c = 0; c < rowed.cols; ++c) v[c] = rowed.at(r, c);
            out.push_back(vector_cochain(v, basis, ring));
        }
        return out;
    }
    SnfResult f = smith_normal_form(ZMatrix::from_sparse(image));
    if (ring.is_z()) {
        for (long long i = 0; i < f.rank(); ++i) {
            std::vector<long long> v = zcolumn(f.uinv, i);
            long long d = to_ll(f.diag[i]);
            for (long long& x : v) x *= d;
            normalize_sign(v);
            out.push_back(vector_cochain(v, basis, ring));
        }
        return out;
    }
    long long m = ring.modulus;
    for (long long i = 0; i < f.rank(); ++i) {
        long long d = to_ll(f.diag[i] % mpz_ll(m));
        if (d % m == 0) continue;
        std::vector<long long> v = zcolumn(f.uinv, i);
        for (long long& x : v) x = ((x % m) * (d % m) % m + m) % m;
        normalize_unit(v, m);
        if (std::any_of(v.begin(), v.end(), [](long long x) { return x != 0; }))
            out.push_back(vector_cochain(v, basis, ring));
    }
    return out;
}

std::optional<Cochain> coboundary_preimage(const Quandle& base, const HierarchicalQuandle& h,
                                           const Cochain& w, const ChainCaps& caps) {
    require_compatible(base, h, w);
    if (w.degree < 1) fail_invalid("coboundaries live in degree >= 1");
    ChainBasis basis(base.size, h.size, w.degree, caps);
    ChainBasis below(base.size, h.size, w.degree - 1, caps);
    std::vector<long long> b = cochain_vector(w, basis);
    if (below.size() == 0) {
        if (std::all_of(b.begin(), b.end(), [](long long x) { return x == 0; })) {
            Cochain zero;
            zero.degree = w.degree - 1;
            zero.x_size = w.x_size;
            zero.y_size = w.y_size;
            zero.ring = w.ring;
            return zero;
        }
        return std::nullopt;
    }
    SparseIntMatrix image =
        transpose_sparse(boundary_matrix(base, h, w.degree, BoundaryKind::Standard, caps));
    SnfResult f = smith_normal_form(ZMatrix::from_sparse(image));
    if (w.ring.is_z()) {
        std::vector<mpz_class> bz(b.size());
        for (size_t i = 0; i < b.size(); ++i) bz[i] = mpz_ll(b[i]);
        auto x = solve_integer(f, bz);
        if (!x) return std::nullopt;
        std::vector<long long> xl(x->size());
        for (size_t i = 0; i < x->size(); ++i) xl[i] = to_ll((*x)[i]);
        return vector_cochain(xl, below, w.ring);
    }
    auto x = solve_mod(f, b, w.ring.modulus);
    if (!x) return std::nullopt;
    return vector_cochain(*x, below, w.ring);
}

bool is_coboundary(const Quandle& base, const HierarchicalQuandle& h, const Cochain& w,
                   const ChainCaps& caps) {
    return coboundary_preimage(base, h, w, caps).has_value();
}

namespace {

CohomologyResult cohomology_z(const Quandle& base, const HierarchicalQuandle& h, int degree,
                              bool want_reps, const ChainCaps& caps) {
    CohomologyResult out;
    out.ring = RingSpec::z();
    out.degree = degree;
    ChainBasis basis(base.size, h.size, degree, caps);
    SparseIntMatrix a =
        transpose_sparse(boundary_matrix(base, h, degree + 1, BoundaryKind::Standard, caps));
    SparseIntMatrix bmat =
        transpose_sparse(boundary_matrix(base, h, degree, BoundaryKind::Standard, caps));
    SnfResult fa = smith_normal_form(ZMatrix::from_sparse(a));
    long long n = basis.size();
    long long f = n - fa.rank();
    // kernel coordinates: rows [rank..n) of vinv * coboundary columns
    ZMatrix c(f, bmat.cols);
    ZMatrix bz = ZMatrix::from_sparse(bmat);
    for (long long i = 0; i < f; ++i)
        for (long long j = 0; j < bmat.cols; ++j) {
            mpz_class acc = 0;
            for (long long k = 0; k < n; ++k)
                acc += fa.vinv.at(fa.rank() + i, k) * bz.at(k, j);
            c.at(i, j) = acc;
        }
    SnfResult fc = smith_normal_form(c);
    out.betti = f - fc.rank();
    for (long long j = 0; j < fc.rank(); ++j)
        if (fc.diag[j] > 1) out.torsion.push_back(to_ll(fc.diag[j]));
    if (want_reps) {
        // torsion representatives first, then the free ones
        auto rep_from_kernel_coords = [&](long long col) {
            std::vector<long long> v(n, 0);
            for (long long r = 0; r < n; ++r) {
                mpz_class acc = 0;
                for (long long i = 0; i < f; ++i)
                    acc += fa.v.at(r, fa.rank() + i) * fc.uinv.at(i, col);
                v[r] = to_ll(acc);
            }
            normalize_sign(v);
            return v;
        };
        for (long long j = 0; j < fc.rank(); ++j)
            if (fc.diag[j] > 1)
                out.representatives.push_back(
                    vector_cochain(rep_from_kernel_coords(j), basis, out.ring));
        for (long long j = fc.rank(); j < f; ++j)
            out.representatives.push_back(
                vector_cochain(rep_from_kernel_coords(j), basis, out.ring));
    }
    return out;
}

CohomologyResult cohomology_mod_prime(const Quandle& base, const HierarchicalQuandle& h,
                                      int degree, long long p, bool want_reps,
                                      const ChainCaps& caps) {
    CohomologyResult out;
    out.ring = RingSpec::zm(p);
    out.degree = degree;
    ChainBasis basis(base.size, h.size, degree, caps);
    SparseIntMatrix a =
        transpose_sparse(boundary_matrix(base, h, degree + 1, BoundaryKind::Standard, caps));
    SparseIntMatrix bmat =
        transpose_sparse(boundary_matrix(base, h, degree, BoundaryKind::Standard, caps));
    ModMatrix ap = ModMatrix::from_sparse(a, p);
    ModMatrix bp = ModMatrix::from_sparse(bmat, p);
    auto kernel = mod_nullspace(ap);
    ModSpan span(basis.size(), p);
    long long brank = 0;
    for (long long j = 0; j < bp.cols; ++j) {
        std::vector<long long> col(bp.rows);
        for (long long r = 0; r < bp.rows; ++r) col[r] = bp.at(r, j);
        if (span.add(std::move(col))) ++brank;
    }
    long long dim = static_cast<long long>(kernel.size()) - brank;
    for (long long i = 0; i < dim; ++i) out.factors.push_back(p);
    if (want_reps)
        for (auto& v : kernel) {
            std::vector<long long> copy = v;
            if (span.add(std::move(copy)))
                out.representatives.push_back(vector_cochain(v, basis, out.ring));
        }
    return out;
}

} // namespace

CohomologyResult cohomology_zm_via_snf(const Quandle& base, const HierarchicalQuandle& h,
                                       int degree, long long m, bool want_representatives,
                                       const ChainCaps& caps) {
    if (m < 2) fail_invalid("modulus must be at least 2");
    CohomologyResult out;
    out.ring = RingSpec::zm(m);
    out.degree = degree;
    ChainBasis basis(base.size, h.size, degree, caps);
    SparseIntMatrix a =
        transpose_sparse(boundary_matrix(base, h, degree + 1, BoundaryKind::Standard, caps));
    SparseIntMatrix bmat =
        transpose_sparse(boundary_matrix(base, h, degree, BoundaryKind::Standard, caps));
    SnfResult fa = smith_normal_form(ZMatrix::from_sparse(a));
    long long n = basis.size();
    long long f = n - fa.rank();

    /* In the coordinates z = vinv * x the mod-m kernel of the constraint
     * splits: coordinate i < rank contributes the cyclic group generated
     * by m/gcd(d_i, m), coordinates past the rank are free.  The
     * coboundary columns land in the free block (their first rank
     * coordinates vanish over Z because the composite is zero), so the
     * quotient splits too. */
    std::vector<CyclicSummand> parts;
    for (long long i = 0; i < fa.rank(); ++i) {
        long long g = std::gcd(to_ll(fa.diag[i] % mpz_ll(m)), m);
        if (g <= 1) continue;
        CyclicSummand s;
        s.order = g;
        if (want_representatives) {
            s.rep = zcolumn(fa.v, i);
            long long scale = m / g;
            for (long long& x : s.rep) x = ((x % m) * (scale % m) % m + m) % m;
        } else
            s.rep.assign(n, 0);
        parts.push_back(std::move(s));
    }
    // free block: quotient (Z/m)^f by the reduced coboundary rows
    ZMatrix bz = ZMatrix::from_sparse(bmat);
    ZMatrix rp(f, bmat.cols);
    for (long long i = 0; i < f; ++i)
        for (long long j = 0; j < bmat.cols; ++j) {
            mpz_class acc = 0;
            for (long long k = 0; k < n; ++k)
                acc += fa.vinv.at(fa.rank() + i, k) * bz.at(k, j);
            rp.at(i, j) = acc;
        }
    SnfResult fr = smith_normal_form(rp);
    auto kernel_rep = [&](long long col) {
        std::vector<long long> v(n, 0);
        for (long long r = 0; r < n; ++r) {
            mpz_class acc = 0;
            for (long long i = 0; i < f; ++i)
                acc += fa.v.at(r, fa.rank() + i) * fr.uinv.at(i, col);
            mpz_class red = acc % mpz_ll(m);
            if (red < 0) red += mpz_ll(m);
            v[r] = to_ll(red);
        }
        return v;
    };
    for (long long j = 0; j < f; ++j) {
        long long order;
        if (j < fr.rank()) {
            order = std::gcd(to_ll(fr.diag[j] % mpz_ll(m)), m);
            if (order <= 1) continue;
        } else
            order = m;
        CyclicSummand s;
        s.order = order;
        s.rep = want_representatives ? kernel_rep(j) : std::vector<long long>(n, 0);
        parts.push_back(std::move(s));
    }
    std::vector<std::vector<long long>> reps;
    canonicalize_zm(parts, m, n, want_representatives, out.factors, reps);
    if (want_representatives)
        for (auto& v : reps) out.representatives.push_back(vector_cochain(v, basis, out.ring));
    return out;
}

CohomologyResult cohomology(const Quandle& base, const HierarchicalQuandle& h, int degree,
                            const RingSpec& ring, bool want_representatives,
                            const ChainCaps& caps) {
    if (degree < 1) fail_invalid("cohomology lives in degree >= 1");
    if (ring.is_z()) return cohomology_z(base, h, degree, want_representatives, caps);
    if (is_prime_ll(ring.modulus))
        return cohomology_mod_prime(base, h, degree, ring.modulus, want_representatives, caps);
    return cohomology_zm_via_snf(base, h, degree, ring.modulus, want_representatives, caps);
}

} // namespace hq

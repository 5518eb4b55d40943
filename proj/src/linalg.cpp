#include <algorithm>

#include "hq/error.hpp"
#include "hq/linalg.hpp"

namespace hq {

ZMatrix ZMatrix::identity(long long n) {
    ZMatrix m(n, n);
    for (long long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ZMatrix ZMatrix::from_sparse(const SparseIntMatrix& s) {
    ZMatrix m(s.rows, s.cols);
    for (const auto& e : s.entries) m.at(e[0], e[1]) = mpz_ll(e[2]);
    return m;
}

namespace {

/* Row and column operation helpers keeping s = u * A * v in sync: a row
 * operation on s is mirrored on u and inverted on uinv; columns likewise
 * on v. */
struct SnfWork {
    ZMatrix s, u, uinv, v, vinv;

    void swap_rows(long long i, long long j) {
        if (i == j) return;
        for (long long c = 0; c < s.cols; ++c) std::swap(s.at(i, c), s.at(j, c));
        for (long long c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
        for (long long r = 0; r < uinv.rows; ++r) std::swap(uinv.at(r, i), uinv.at(r, j));
    }
    void swap_cols(long long i, long long j) {
        if (i == j) return;
        for (long long r = 0; r < s.rows; ++r) std::swap(s.at(r, i), s.at(r, j));
        for (long long r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
        for (long long c = 0; c < vinv.cols; ++c) std::swap(vinv.at(i, c), vinv.at(j, c));
    }
    // row i -= q * row j
    void add_row(long long i, long long j, const mpz_class& q) {
        if (q == 0) return;
        for (long long c = 0; c < s.cols; ++c) s.at(i, c) -= q * s.at(j, c);
        for (long long c = 0; c < u.cols; ++c) u.at(i, c) -= q * u.at(j, c);
        for (long long r = 0; r < uinv.rows; ++r) uinv.at(r, j) += q * uinv.at(r, i);
    }
    // col i -= q * col j
    void add_col(long long i, long long j, const mpz_class& q) {
        if (q == 0) return;
        for (long long r = 0; r < s.rows; ++r) s.at(r, i) -= q * s.at(r, j);
        for (long long r = 0; r < v.rows; ++r) v.at(r, i) -= q * v.at(r, j);
        for (long long c = 0; c < vinv.cols; ++c) vinv.at(j, c) += q * vinv.at(i, c);
    }
    void negate_row(long long i) {
        for (long long c = 0; c < s.cols; ++c) s.at(i, c) = -s.at(i, c);
        for (long long c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
        for (long long r = 0; r < uinv.rows; ++r) uinv.at(r, i) = -uinv.at(r, i);
    }
};

} // namespace

SnfResult smith_normal_form(const ZMatrix& A) {
    SnfWork w;
    w.s = A;
    w.u = ZMatrix::identity(A.rows);
    w.uinv = ZMatrix::identity(A.rows);
    w.v = ZMatrix::identity(A.cols);
    w.vinv = ZMatrix::identity(A.cols);

    long long k = 0;
    long long limit = std::min(A.rows, A.cols);
    while (k < limit) {
        // minimal |entry| pivot in the remaining block
        long long pr = -1, pc = -1;
        mpz_class best;
        for (long long r = k; r < A.rows; ++r)
            for (long long c = k; c < A.cols; ++c) {
                if (w.s.at(r, c) == 0) continue;
                mpz_class m = abs(w.s.at(r, c));
                if (pr < 0 || m < best) {
                    best = m;
                    pr = r;
                    pc = c;
                }
            }
        if (pr < 0) break; // block is zero
        w.swap_rows(k, pr);
        w.swap_cols(k, pc);

        bool reduced = false;
        while (!reduced) {
            reduced = true;
            for (long long r = k + 1; r < A.rows; ++r) {
                if (w.s.at(r, k) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), w.s.at(r, k).get_mpz_t(), w.s.at(k, k).get_mpz_t());
                w.add_row(r, k, q);
                if (w.s.at(r, k) != 0) { // remainder smaller than pivot: promote it
                    w.swap_rows(k, r);
                    reduced = false;
                }
            }
            for (long long c = k + 1; c < A.cols; ++c) {
                if (w.s.at(k, c) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), w.s.at(k, c).get_mpz_t(), w.s.at(k, k).get_mpz_t());
                w.add_col(c, k, q);
                if (w.s.at(k, c) != 0) {
                    w.swap_cols(k, c);
                    reduced = false;
                }
            }
        }
        // divisibility: pivot must divide the rest of the block
        bool again = false;
        for (long long r = k + 1; r < A.rows && !again; ++r)
            for (long long c = k + 1; c < A.cols; ++c)
                if (w.s.at(r, c) % w.s.at(k, k) != 0) {
                    w.add_row(k, r, -1); // fold the offending row in and restart
                    again = true;
                    break;
                }
        if (again) continue;
        if (w.s.at(k, k) < 0) w.negate_row(k);
        ++k;
    }

    SnfResult out;
    for (long long i = 0; i < k; ++i) out.diag.push_back(w.s.at(i, i));
    out.s = std::move(w.s);
    out.u = std::move(w.u);
    out.uinv = std::move(w.uinv);
    out.v = std::move(w.v);
    out.vinv = std::move(w.vinv);
    return out;
}

std::optional<std::vector<mpz_class>> solve_integer(const SnfResult& f,
                                                    const std::vector<mpz_class>& b) {
    // A x = b  <=>  s (vinv x) = u b
    long long rows = f.s.rows, cols = f.s.cols;
    if (static_cast<long long>(b.size()) != rows) fail_invalid("rhs length mismatch");
    std::vector<mpz_class> ub(rows);
    for (long long r = 0; r < rows; ++r)
        for (long long c = 0; c < rows; ++c)
            if (f.u.at(r, c) != 0) ub[r] += f.u.at(r, c) * b[c];
    std::vector<mpz_class> z(cols);
    long long rk = f.rank();
    for (long long i = 0; i < rows; ++i) {
        if (i < rk) {
            if (ub[i] % f.diag[i] != 0) return std::nullopt;
            z[i] = ub[i] / f.diag[i];
        } else if (ub[i] != 0)
            return std::nullopt;
    }
    std::vector<mpz_class> x(cols);
    for (long long r = 0; r < cols; ++r)
        for (long long c = 0; c < cols; ++c)
            if (f.v.at(r, c) != 0) x[r] += f.v.at(r, c) * z[c];
    return x;
}

std::optional<std::vector<long long>> solve_mod(const SnfResult& f,
                                                const std::vector<long long>& b, long long m) {
    if (m < 2) fail_invalid("modulus must be at least 2");
    long long rows = f.s.rows, cols = f.s.cols;
    if (static_cast<long long>(b.size()) != rows) fail_invalid("rhs length mismatch");
    mpz_class mod = mpz_ll(m);
    auto canon = [&](const mpz_class& x) {
        mpz_class r = x % mod;
        if (r < 0) r += mod;
        return r;
    };
    std::vector<mpz_class> ub(rows);
    for (long long r = 0; r < rows; ++r) {
        for (long long c = 0; c < rows; ++c)
            if (f.u.at(r, c) != 0) ub[r] += f.u.at(r, c) * mpz_ll(b[c]);
        ub[r] = canon(ub[r]);
    }
    // d_i z_i = y_i (mod m): solvable iff gcd(d_i, m) | y_i
    std::vector<mpz_class> z(cols);
    long long rk = f.rank();
    for (long long i = 0; i < rows; ++i) {
        if (i < rk) {
            mpz_class g = gcd(f.diag[i], mod);
            if (ub[i] % g != 0) return std::nullopt;
            mpz_class mg = mod / g;
            if (mg == 1) continue; // any z works, keep 0
            mpz_class di = canon(f.diag[i] / g);
            mpz_class inv;
            if (mpz_invert(inv.get_mpz_t(), di.get_mpz_t(), mg.get_mpz_t()) == 0)
                return std::nullopt; // cannot happen: di coprime to mg
            z[i] = canon((ub[i] / g) * inv);
        } else if (ub[i] % mod != 0)
            return std::nullopt;
    }
    std::vector<long long> x(cols);
    for (long long r = 0; r < cols; ++r) {
        mpz_class acc = 0;
        for (long long c = 0; c < cols; ++c)
            if (f.v.at(r, c) != 0) acc += f.v.at(r, c) * z[c];
        x[r] = canon(acc).get_si();
    }
    return x;
}

ModMatrix ModMatrix::from_sparse(const SparseIntMatrix& s, long long p) {
    ModMatrix m(s.rows, s.cols, p);
    for (const auto& e : s.entries) {
        long long v = e[2] % p;
        if (v < 0) v += p;
        m.at(e[0], e[1]) = v;
    }
    return m;
}

long long mod_inverse(long long x, long long p) {
    // extended euclid; p prime and x nonzero mod p
    long long a = x % p;
    if (a < 0) a += p;
    if (a == 0) fail_invalid("no inverse of zero");
    long long t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
        long long q = r / newr;
        t -= q * newt;
        std::swap(t, newt);
        r -= q * newr;
        std::swap(r, newr);
    }
    if (r != 1) fail_invalid("not invertible: modulus not prime?");
    return t < 0 ? t + p : t;
}

namespace {

// reduced row echelon; returns pivot column of each row
std::vector<long long> rref(ModMatrix& m) {
    std::vector<long long> pivots;
    long long row = 0;
    for (long long col = 0; col < m.cols && row < m.rows; ++col) {
        long long pr = -1;
        for (long long r = row; r < m.rows; ++r)
            if (m.at(r, col) != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (long long c = 0; c < m.cols; ++c) std::swap(m.at(pr, c), m.at(row, c));
        long long inv = mod_inverse(m.at(row, col), m.p);
        for (long long c = col; c < m.cols; ++c) m.at(row, c) = m.at(row, c) * inv % m.p;
        for (long long r = 0; r < m.rows; ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            long long f = m.at(r, col);
            for (long long c = col; c < m.cols; ++c)
                m.at(r, c) = (m.at(r, c) - f * m.at(row, c) % m.p + m.p * m.p) % m.p;
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

long long mod_rank(ModMatrix m) { return static_cast<long long>(rref(m).size()); }

long long mod_row_reduce(ModMatrix& m) { return static_cast<long long>(rref(m).size()); }

std::vector<std::vector<long long>> mod_nullspace(const ModMatrix& m0) {
    ModMatrix m = m0;
    std::vector<long long> pivots = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (long long c : pivots) is_pivot[c] = true;
    std::vector<std::vector<long long>> basis;
    for (long long free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<long long> v(m.cols, 0);
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) {
            long long val = m.at(static_cast<long long>(r), free);
            v[pivots[r]] = val == 0 ? 0 : m.p - val;
        }
        // scale so the first nonzero entry is 1
        for (long long c = 0; c < m.cols; ++c)
            if (v[c] != 0) {
                long long inv = mod_inverse(v[c], m.p);
                for (long long k = c; k < m.cols; ++k) v[k] = v[k] * inv % m.p;
                break;
            }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<long long>> mod_solve(const ModMatrix& m0,
                                                const std::vector<long long>& b) {
    if (static_cast<long long>(b.size()) != m0.rows) fail_invalid("rhs length mismatch");
    ModMatrix aug(m0.rows, m0.cols + 1, m0.p);
    for (long long r = 0; r < m0.rows; ++r) {
        for (long long c = 0; c < m0.cols; ++c) aug.at(r, c) = m0.at(r, c);
        long long v = b[r] % m0.p;
        if (v < 0) v += m0.p;
        aug.at(r, m0.cols) = v;
    }
    std::vector<long long> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m0.cols) return std::nullopt; // 0 = 1 row
    std::vector<long long> x(m0.cols, 0);
    for (size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = aug.at(static_cast<long long>(r), m0.cols);
    return x;
}

bool ModSpan::add(std::vector<long long> v) {
    if (static_cast<long long>(v.size()) != dim_) fail_invalid("span vector length mismatch");
    for (long long& x : v) {
        x %= p_;
        if (x < 0) x += p_;
    }
    // rows_ stays sorted by pivot; each row starts with a 1 at its pivot,
    // so reducing in ascending pivot order terminates in one pass
    for (auto& [pivot, row] : rows_) {
        if (v[pivot] == 0) continue;
        long long f = v[pivot];
        for (long long c = pivot; c < dim_; ++c)
            v[c] = (v[c] - f * row[c] % p_ + p_ * p_) % p_;
    }
    long long pivot = -1;
    for (long long c = 0; c < dim_; ++c)
        if (v[c] != 0) {
            pivot = c;
            break;
        }
    if (pivot < 0) return false;
    long long inv = mod_inverse(v[pivot], p_);
    for (long long c = pivot; c < dim_; ++c) v[c] = v[c] * inv % p_;
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                                [](const auto& r, long long p) { return r.first < p; });
    rows_.insert(pos, {pivot, std::move(v)});
    return true;
}

} // namespace hq

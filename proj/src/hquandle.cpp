#include "hq/hquandle.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "hq/error.hpp"

namespace hq {

namespace {

void report(VerifyReport& r, int axiom, std::vector<int> elems, int& count) {
    if (count < kMaxViolationsPerAxiom)
        r.violations.push_back({axiom, std::move(elems)});
    else
        r.truncated = true;
    ++count;
}

} // namespace

VerifyReport verify_hquandle(const HierarchicalQuandle& h, const Quandle& base) {
    VerifyReport r;
    int m = h.base_size, n = h.size;
    if (m < 1 || n < 1) {
        r.structural.push_back("base_size and size must be at least 1");
        return r;
    }
    if (base.size != m) {
        r.structural.push_back("base quandle size " + std::to_string(base.size) +
                               " != base_size " + std::to_string(m));
        return r;
    }
    size_t want = static_cast<size_t>(m) * m * n * n;
    if (h.tables.size() != want) {
        r.structural.push_back("tables have " + std::to_string(h.tables.size()) +
                               " entries, want " + std::to_string(want));
        return r;
    }
    for (int v : h.tables)
        if (v < 0 || v >= n) {
            r.structural.push_back("table entry out of range");
            return r;
        }
    if (!verify_quandle(base).valid) {
        r.structural.push_back("base table is not a quandle");
        return r;
    }

    int c1 = 0, c2 = 0, c3 = 0;
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < n; ++y)
            if (h.op(x, x, y, y) != y) report(r, 1, {x, y}, c1);

    std::vector<int> seen(n);
    for (int x1 = 0; x1 < m; ++x1)
        for (int x2 = 0; x2 < m; ++x2)
            for (int a = 0; a < n; ++a) {
                std::fill(seen.begin(), seen.end(), -1);
                for (int y = 0; y < n; ++y) {
                    int v = h.op(x1, x2, y, a);
                    if (seen[v] >= 0)
                        report(r, 2, {x1, x2, seen[v], y, a}, c2);
                    else
                        seen[v] = y;
                }
            }

    for (int x1 = 0; x1 < m; ++x1)
        for (int x2 = 0; x2 < m; ++x2)
            for (int x3 = 0; x3 < m; ++x3)
                for (int y1 = 0; y1 < n; ++y1)
                    for (int y2 = 0; y2 < n; ++y2)
                        for (int y3 = 0; y3 < n; ++y3) {
                            int lhs = h.op(base.op(x1, x2), x3, h.op(x1, x2, y1, y2), y3);
                            int rhs = h.op(base.op(x1, x3), base.op(x2, x3),
                                           h.op(x1, x3, y1, y3), h.op(x2, x3, y2, y3));
                            if (lhs != rhs)
                                report(r, 3, {x1, x2, x3, y1, y2, y3}, c3);
                        }

    r.valid = r.structural.empty() && r.violations.empty();
    return r;
}

HierarchicalQuandle make_constant_family(const Quandle& base, const Quandle& y) {
    if (base.size < 1 || y.size < 1) fail_structural("sizes must be at least 1");
    int m = base.size, n = y.size;
    HierarchicalQuandle h{m, n, std::vector<int>(static_cast<size_t>(m) * m * n * n)};
    for (int x1 = 0; x1 < m; ++x1)
        for (int x2 = 0; x2 < m; ++x2)
            for (int y1 = 0; y1 < n; ++y1)
                for (int y2 = 0; y2 < n; ++y2)
                    h.tables[((static_cast<size_t>(x1) * m + x2) * n + y1) * n + y2] =
                        y.op(y1, y2);
    return h;
}

HierarchicalQuandle make_left_projection(const Quandle& base, int y_size) {
    if (base.size < 1 || y_size < 1) fail_structural("sizes must be at least 1");
    int m = base.size, n = y_size;
    HierarchicalQuandle h{m, n, std::vector<int>(static_cast<size_t>(m) * m * n * n)};
    for (int x1 = 0; x1 < m; ++x1)
        for (int x2 = 0; x2 < m; ++x2)
            for (int y1 = 0; y1 < n; ++y1)
                for (int y2 = 0; y2 < n; ++y2)
                    h.tables[((static_cast<size_t>(x1) * m + x2) * n + y1) * n + y2] = y1;
    return h;
}

Quandle product_quandle(const Quandle& base, const HierarchicalQuandle& h) {
    if (base.size != h.base_size) fail_structural("base size mismatch");
    int m = base.size, n = h.size, N = m * n;
    Quandle q{N, std::vector<int>(static_cast<size_t>(N) * N)};
    for (int x1 = 0; x1 < m; ++x1)
        for (int y1 = 0; y1 < n; ++y1)
            for (int x2 = 0; x2 < m; ++x2)
                for (int y2 = 0; y2 < n; ++y2) {
                    int a = x1 * n + y1, b = x2 * n + y2;
                    q.table[static_cast<size_t>(a) * N + b] =
                        base.op(x1, x2) * n + h.op(x1, x2, y1, y2);
                }
    return q;
}

DecomposeResult decompose_over_projection(const Quandle& q, int base_size, int fiber_size,
                                          const std::vector<std::pair<int, int>>& pairing) {
    DecomposeResult res;
    int m = base_size, n = fiber_size, N = q.size;
    if (m < 1 || n < 1 || m * n != N) fail_structural("base_size * fiber_size must equal quandle size");
    std::vector<std::pair<int, int>> pair_of = pairing;
    if (pair_of.empty()) {
        pair_of.resize(N);
        for (int e = 0; e < N; ++e) pair_of[e] = {e / n, e % n};
    }
    if (pair_of.size() != static_cast<size_t>(N)) fail_structural("pairing length mismatch");
    std::vector<int> enc_to_elem(N, -1);
    for (int e = 0; e < N; ++e) {
        auto [x, y] = pair_of[e];
        if (x < 0 || x >= m || y < 0 || y >= n) fail_structural("pairing entry out of range");
        int code = x * n + y;
        if (enc_to_elem[code] >= 0) fail_structural("pairing is not a bijection");
        enc_to_elem[code] = e;
    }

    // first coordinate must induce a well-defined table on X
    Quandle bq{m, std::vector<int>(static_cast<size_t>(m) * m, -1)};
    for (int e1 = 0; e1 < N; ++e1)
        for (int e2 = 0; e2 < N; ++e2) {
            int x1 = pair_of[e1].first, x2 = pair_of[e2].first;
            int x3 = pair_of[q.op(e1, e2)].first;
            int& slot = bq.table[x1 * m + x2];
            if (slot < 0) slot = x3;
            else if (slot != x3) {
                res.reason = "projection to the base is not well defined";
                res.witness = {e1, e2};
                return res;
            }
        }

    HierarchicalQuandle h{m, n, std::vector<int>(static_cast<size_t>(m) * m * n * n)};
    for (int x1 = 0; x1 < m; ++x1)
        for (int x2 = 0; x2 < m; ++x2)
            for (int y1 = 0; y1 < n; ++y1)
                for (int y2 = 0; y2 < n; ++y2) {
                    int prod = q.op(enc_to_elem[x1 * n + y1], enc_to_elem[x2 * n + y2]);
                    h.tables[((static_cast<size_t>(x1) * m + x2) * n + y1) * n + y2] =
                        pair_of[prod].second;
                }

    auto base_rep = verify_quandle(bq);
    if (!base_rep.valid) {
        res.reason = "projected base table is not a quandle";
        if (!base_rep.violations.empty()) res.witness = base_rep.violations.front().elements;
        return res;
    }
    auto fam_rep = verify_hquandle(h, bq);
    if (!fam_rep.valid) {
        res.reason = "extracted family violates the axioms";
        if (!fam_rep.violations.empty()) res.witness = fam_rep.violations.front().elements;
        return res;
    }
    res.ok = true;
    res.base = std::move(bq);
    res.family = std::move(h);
    return res;
}

namespace {

/* Search state: one n x n table per base pair (x1,x2), chosen from the
 * column-permutation candidates, diagonal slots restricted to idempotent
 * ones.  Axiom 3 instances are checked as soon as all five slots they
 * touch are assigned. */
struct HqSearch {
    const Quandle& base;
    int m, n;
    long long limit;
    const std::function<bool(const HierarchicalQuandle&)>& sink;

    std::vector<std::vector<std::vector<int>>> candidates; // per slot
    std::vector<const std::vector<int>*> chosen;           // per slot
    // triples (x1,x2,x3) grouped by the last slot their check needs
    std::vector<std::vector<std::array<int, 3>>> checks_at;
    long long emitted = 0;
    bool stopped = false;

    int slot(int x1, int x2) const { return x1 * m + x2; }

    bool axiom3_holds(int x1, int x2, int x3) const {
        const auto& t12 = *chosen[slot(x1, x2)];
        const auto& t12_3 = *chosen[slot(base.op(x1, x2), x3)];
        const auto& t13 = *chosen[slot(x1, x3)];
        const auto& t23 = *chosen[slot(x2, x3)];
        const auto& t13_23 = *chosen[slot(base.op(x1, x3), base.op(x2, x3))];
        for (int y1 = 0; y1 < n; ++y1)
            for (int y2 = 0; y2 < n; ++y2)
                for (int y3 = 0; y3 < n; ++y3) {
                    int lhs = t12_3[t12[y1 * n + y2] * n + y3];
                    int rhs = t13_23[t13[y1 * n + y3] * n + t23[y2 * n + y3]];
                    if (lhs != rhs) return false;
                }
        return true;
    }

    void emit() {
        HierarchicalQuandle h{m, n, std::vector<int>(static_cast<size_t>(m) * m * n * n)};
        for (int s = 0; s < m * m; ++s)
            std::copy(chosen[s]->begin(), chosen[s]->end(),
                      h.tables.begin() + static_cast<size_t>(s) * n * n);
        ++emitted;
        if (!sink(h) || (limit > 0 && emitted >= limit)) stopped = true;
    }

    void rec(int s) {
        if (stopped) return;
        if (s == m * m) { emit(); return; }
        for (const auto& cand : candidates[s]) {
            chosen[s] = &cand;
            bool ok = true;
            for (const auto& [x1, x2, x3] : checks_at[s])
                if (!axiom3_holds(x1, x2, x3)) { ok = false; break; }
            if (ok) rec(s + 1);
            if (stopped) return;
        }
        chosen[s] = nullptr;
    }
};

// all n x n tables whose columns are permutations; idempotent_diag
// additionally forces t[y][y] = y
std::vector<std::vector<int>> column_permutation_tables(int n, bool idempotent_diag) {
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    std::vector<std::vector<int>> out;
    std::vector<int> pick(n, 0); // column a -> index into perms
    while (true) {
        bool ok = true;
        if (idempotent_diag)
            for (int a = 0; a < n && ok; ++a)
                if (perms[pick[a]][a] != a) ok = false;
        if (ok) {
            std::vector<int> t(static_cast<size_t>(n) * n);
            for (int y = 0; y < n; ++y)
                for (int a = 0; a < n; ++a) t[y * n + a] = perms[pick[a]][y];
            out.push_back(std::move(t));
        }
        int i = n - 1;
        while (i >= 0 && pick[i] + 1 == static_cast<int>(perms.size())) pick[i--] = 0;
        if (i < 0) break;
        ++pick[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

long long search_hquandles(const Quandle& base, int y_size, long long limit,
                           const SearchConstraints& constraints,
                           const std::function<bool(const HierarchicalQuandle&)>& sink) {
    if (!verify_quandle(base).valid) fail_invalid("search base is not a quandle");
    if (y_size < 1) fail_structural("fiber size must be at least 1");
    int m = base.size, n = y_size;

    // candidate-table counts per slot: (n!)^n off the diagonal, ((n-1)!)^n on it
    double fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    double any_est = std::pow(fact, n);
    double diag_est = std::pow(fact / std::max(1, n), n);
    if (constraints.diagonal_table) diag_est = 1;
    if ((m > 1 ? any_est : diag_est) > 3e6)
        fail_cap("candidate tables per slot exceed 3e6; shrink the fiber");

    auto any_table = m > 1 ? column_permutation_tables(n, false)
                           : std::vector<std::vector<int>>{};
    std::vector<std::vector<int>> diag_table;
    if (constraints.diagonal_table) {
        const auto& fixed = *constraints.diagonal_table;
        if (fixed.size() != static_cast<size_t>(n) * n)
            fail_structural("diagonal constraint table shape mismatch");
        std::vector<int> seen(n);
        for (int a = 0; a < n; ++a) {
            std::fill(seen.begin(), seen.end(), 0);
            for (int y = 0; y < n; ++y) {
                int v = fixed[y * n + a];
                if (v < 0 || v >= n || seen[v]++)
                    fail_structural("diagonal constraint columns must be permutations");
            }
            if (fixed[a * n + a] != a)
                fail_structural("diagonal constraint must be idempotent");
        }
        diag_table = {fixed};
    } else {
        diag_table = column_permutation_tables(n, true);
    }

    double estimate = 1.0;
    for (int x1 = 0; x1 < m; ++x1)
        for (int x2 = 0; x2 < m; ++x2)
            estimate *= (x1 == x2 ? diag_table.size() : any_table.size());
    if (estimate > 1e9)
        fail_cap("search space estimate " + std::to_string(estimate) +
                 " candidates; add constraints or shrink the sizes");

    HqSearch st{base, m, n, limit, sink, {}, {}, {}, 0, false};
    st.candidates.resize(m * m);
    st.chosen.assign(m * m, nullptr);
    for (int x1 = 0; x1 < m; ++x1)
        for (int x2 = 0; x2 < m; ++x2)
            st.candidates[st.slot(x1, x2)] = (x1 == x2 ? diag_table : any_table);

    st.checks_at.resize(m * m);
    for (int x1 = 0; x1 < m; ++x1)
        for (int x2 = 0; x2 < m; ++x2)
            for (int x3 = 0; x3 < m; ++x3) {
                int last = std::max({st.slot(x1, x2), st.slot(base.op(x1, x2), x3),
                                     st.slot(x1, x3), st.slot(x2, x3),
                                     st.slot(base.op(x1, x3), base.op(x2, x3))});
                st.checks_at[last].push_back({x1, x2, x3});
            }

    st.rec(0);
    return st.emitted;
}

std::vector<HierarchicalQuandle> search_hquandles(const Quandle& base, int y_size,
                                                  long long limit,
                                                  const SearchConstraints& constraints) {
    std::vector<HierarchicalQuandle> out;
    search_hquandles(base, y_size, limit, constraints, [&](const HierarchicalQuandle& h) {
        out.push_back(h);
        return true;
    });
    return out;
}

} // namespace hq

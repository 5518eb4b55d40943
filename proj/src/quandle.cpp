#include "hq/quandle.hpp"

#include <algorithm>

#include "hq/error.hpp"

namespace hq {

namespace {

// push a violation unless its family already hit the cap
void report(VerifyReport& r, int axiom, std::vector<int> elems, int& count) {
    if (count < kMaxViolationsPerAxiom)
        r.violations.push_back({axiom, std::move(elems)});
    else
        r.truncated = true;
    ++count;
}

} // namespace

VerifyReport verify_quandle(const Quandle& q) {
    VerifyReport r;
    int n = q.size;
    if (n < 1) {
        r.structural.push_back("size must be at least 1");
        return r;
    }
    if (q.table.size() != static_cast<size_t>(n) * n) {
        r.structural.push_back("table has " + std::to_string(q.table.size()) +
                               " entries, want " + std::to_string(n * n));
        return r;
    }
    for (size_t i = 0; i < q.table.size(); ++i) {
        if (q.table[i] < 0 || q.table[i] >= n) {
            r.structural.push_back("entry (" + std::to_string(i / n) + "," +
                                   std::to_string(i % n) + ") = " + std::to_string(q.table[i]) +
                                   " out of range");
            if (r.structural.size() >= kMaxViolationsPerAxiom) break;
        }
    }
    if (!r.structural.empty()) return r;

    int c1 = 0, c2 = 0, c3 = 0;
    for (int a = 0; a < n; ++a)
        if (q.op(a, a) != a) report(r, 1, {a}, c1);

    // axiom 2: each column is a permutation
    std::vector<int> seen(n);
    for (int b = 0; b < n; ++b) {
        std::fill(seen.begin(), seen.end(), -1);
        for (int a = 0; a < n; ++a) {
            int v = q.op(a, b);
            if (seen[v] >= 0)
                report(r, 2, {seen[v], a, b}, c2); // two rows collide in column b
            else
                seen[v] = a;
        }
    }

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (q.op(q.op(a, b), c) != q.op(q.op(a, c), q.op(b, c)))
                    report(r, 3, {a, b, c}, c3);

    r.valid = r.violations.empty();
    return r;
}

Quandle make_trivial(int n) {
    if (n < 1) fail_structural("trivial quandle needs size >= 1");
    Quandle q{n, std::vector<int>(static_cast<size_t>(n) * n)};
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) q.table[a * n + b] = a;
    return q;
}

Quandle make_dihedral(int n) {
    if (n < 1) fail_structural("dihedral quandle needs size >= 1");
    Quandle q{n, std::vector<int>(static_cast<size_t>(n) * n)};
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) q.table[a * n + b] = ((2 * b - a) % n + n) % n;
    return q;
}

std::optional<std::string> check_group(const GroupTable& g) {
    int n = g.size;
    if (n < 1) return "group size must be at least 1";
    if (g.table.size() != static_cast<size_t>(n) * n) return "group table shape mismatch";
    for (int v : g.table)
        if (v < 0 || v >= n) return "group table entry out of range";
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c)))
                    return "not associative at (" + std::to_string(a) + "," + std::to_string(b) +
                           "," + std::to_string(c) + ")";
    int e = -1;
    for (int cand = 0; cand < n; ++cand) {
        bool ok = true;
        for (int a = 0; a < n; ++a)
            if (g.op(cand, a) != a || g.op(a, cand) != a) { ok = false; break; }
        if (ok) { e = cand; break; }
    }
    if (e < 0) return "no identity element";
    for (int a = 0; a < n; ++a) {
        bool has = false;
        for (int b = 0; b < n; ++b)
            if (g.op(a, b) == e && g.op(b, a) == e) { has = true; break; }
        if (!has) return "element " + std::to_string(a) + " has no inverse";
    }
    return std::nullopt;
}

Quandle make_conjugation(const GroupTable& g) {
    if (auto err = check_group(g)) fail_structural("not a group: " + *err);
    int n = g.size;
    int e = 0;
    for (int cand = 0; cand < n; ++cand) {
        bool ok = true;
        for (int a = 0; a < n; ++a)
            if (g.op(cand, a) != a) { ok = false; break; }
        if (ok) { e = cand; break; }
    }
    std::vector<int> inv(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.op(a, b) == e) { inv[a] = b; break; }
    Quandle q{n, std::vector<int>(static_cast<size_t>(n) * n)};
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) q.table[a * n + b] = g.op(g.op(inv[b], a), b);
    return q;
}

} // namespace hq

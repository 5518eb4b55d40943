#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <sstream>

#include "hq/diagram.hpp"

namespace hq {

namespace {

/* PD slots of a term X[a,b,c,d]: a (0) is the incoming under-edge and
 * c (2) the outgoing one.  b (1) and d (3) carry the over-strand; its
 * direction is d->b at a positive crossing and b->d at a negative one.
 * An edge terminates where it points in (slot a, or the incoming over
 * slot) and originates where it points out; each edge must do one of
 * each.  That constraint pins most over-directions; whatever it leaves
 * open (components that never pass under) is settled against the
 * sequential edge numbering. */

struct Term {
    std::array<int, 4> e;
    std::string text;
};

std::string term_text(const Term& t) { return t.text; }

[[noreturn]] void bad_term(const Term& t, const std::string& why) {
    fail_structural(why + " at term " + term_text(t));
}

std::vector<Term> tokenize(const std::string& text) {
    std::vector<Term> terms;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        Term t;
        t.text = tok;
        const char* p = tok.c_str();
        auto fail = [&]() { fail_structural("malformed PD term " + tok + " (want X[a,b,c,d])"); };
        if (*p != 'X') fail();
        ++p;
        if (*p != '[') fail();
        ++p;
        for (int k = 0; k < 4; ++k) {
            if (*p < '0' || *p > '9') fail();
            long v = 0;
            while (*p >= '0' && *p <= '9') {
                v = v * 10 + (*p - '0');
                if (v > 1000000) fail();
                ++p;
            }
            t.e[k] = static_cast<int>(v);
            if (k < 3) {
                if (*p != ',') fail();
                ++p;
            }
        }
        if (*p != ']' || *(p + 1) != '\0') fail();
        terms.push_back(std::move(t));
    }
    return terms;
}

// union-find with parity: tracks is_bd(t) xor is_bd(u) for joined terms
struct ParityUF {
    std::vector<int> parent;
    std::vector<int> par; // parity to parent
    explicit ParityUF(int n) : parent(n), par(n, 0) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    std::pair<int, int> find(int x) {
        if (parent[x] == x) return {x, 0};
        auto [r, p] = find(parent[x]);
        parent[x] = r;
        par[x] ^= p;
        return {r, par[x]};
    }
    // relate x and y with is_bd(x) xor is_bd(y) == rel; false on conflict
    bool join(int x, int y, int rel) {
        auto [rx, px] = find(x);
        auto [ry, py] = find(y);
        if (rx == ry) return (px ^ py) == rel;
        parent[rx] = ry;
        par[rx] = px ^ py ^ rel;
        return true;
    }
};

struct Occurrence {
    int term = -1;
    int slot = -1; // 0=a 1=b 2=c 3=d
};

} // namespace

Diagram parse_pd(const std::string& text, int unknots) {
    if (unknots < 0) fail_structural("unknot count must be non-negative");
    std::vector<Term> terms = tokenize(text);
    int N = static_cast<int>(terms.size());
    if (N == 0) return make_unlink(unknots);
    int E = 2 * N;

    std::vector<std::vector<Occurrence>> occ(E + 1);
    for (int t = 0; t < N; ++t)
        for (int k = 0; k < 4; ++k) {
            int e = terms[t].e[k];
            if (e < 1 || e > E)
                bad_term(terms[t], "edge label " + std::to_string(e) + " outside 1.." +
                                       std::to_string(E));
            occ[e].push_back({t, k});
        }
    for (int e = 1; e <= E; ++e)
        if (occ[e].size() != 2) {
            const Term& t = occ[e].empty() ? terms[0] : terms[occ[e][0].term];
            bad_term(t, "edge label " + std::to_string(e) + " appears " +
                            std::to_string(occ[e].size()) + " times (want 2)");
        }

    // propagate over-strand directions from the one-in one-out rule
    ParityUF uf(N + 1);
    const int ground = N; // is_bd(ground) == 0 by convention
    for (int e = 1; e <= E; ++e) {
        auto [t1, s1] = occ[e][0];
        auto [t2, s2] = occ[e][1];
        if (s1 > s2) { std::swap(t1, t2); std::swap(s1, s2); }
        // slot a points in, slot c points out; b points in iff bd, d iff db
        if (s1 == 0 && s2 == 0)
            bad_term(terms[t2], "edge " + std::to_string(e) + " enters two under-passes");
        if (s1 == 2 && s2 == 2)
            bad_term(terms[t2], "edge " + std::to_string(e) + " leaves two under-passes");
        if (s1 == 0 && s2 == 2) continue; // under in, under out
        bool ok = true;
        if (s1 == 0 && s2 == 1) ok = uf.join(t2, ground, 0);      // b out => db
        else if (s1 == 0 && s2 == 3) ok = uf.join(t2, ground, 1); // d out => bd
        else if (s1 == 2 && s2 == 3) ok = uf.join(t2, ground, 0); // d in  => db
        else if (s1 == 1 && s2 == 2) ok = uf.join(t1, ground, 1); // b in  => bd
        else if (s1 == 1 && s2 == 1) ok = uf.join(t1, t2, 1);     // one b in, one b out
        else if (s1 == 3 && s2 == 3) ok = uf.join(t1, t2, 1);
        else if (s1 == 1 && s2 == 3 && t1 != t2) ok = uf.join(t1, t2, 0);
        // b and d of the same term: a loop passing over itself, no constraint
        if (!ok)
            bad_term(terms[t1],
                     "ambiguous orientation (edge " + std::to_string(e) + " over-constrains)");
    }

    // free parity classes: components never forced by an under-pass
    std::vector<int> free_roots;
    for (int t = 0; t < N; ++t) {
        auto [r, p] = uf.find(t);
        if (r != uf.find(ground).first &&
            std::find(free_roots.begin(), free_roots.end(), r) == free_roots.end())
            free_roots.push_back(r);
    }
    if (free_roots.size() > 16)
        fail_structural("too many over-only components to orient");

    struct Candidate {
        std::vector<int> sign;
        std::vector<int> edge_comp;
        int comps = 0;
    };
    std::vector<Candidate> passing;
    std::string first_failure;

    std::vector<int> is_bd(N);
    for (uint32_t mask = 0; mask < (1u << free_roots.size()); ++mask) {
        for (int t = 0; t < N; ++t) {
            auto [r, p] = uf.find(t);
            int base;
            if (r == uf.find(ground).first)
                base = p ^ uf.find(ground).second;
            else {
                int idx = static_cast<int>(std::find(free_roots.begin(), free_roots.end(), r) -
                                           free_roots.begin());
                base = p ^ ((mask >> idx) & 1);
            }
            is_bd[t] = base;
        }
        // successor of each edge along its strand
        std::vector<int> succ(E + 1, 0), from_term(E + 1, 0);
        for (int t = 0; t < N; ++t) {
            const auto& e = terms[t].e;
            succ[e[0]] = e[2];
            from_term[e[0]] = t;
            if (is_bd[t]) { succ[e[1]] = e[3]; from_term[e[1]] = t; }
            else          { succ[e[3]] = e[1]; from_term[e[3]] = t; }
        }
        // each cycle, started from its least edge, must step +1 until it wraps
        std::vector<int> comp(E + 1, -1);
        int comps = 0;
        bool ok = true;
        for (int s = 1; s <= E && ok; ++s) {
            if (comp[s] >= 0) continue;
            int cur = s;
            while (true) {
                comp[cur] = comps;
                int nxt = succ[cur];
                if (nxt == s) break;
                if (nxt != cur + 1) {
                    if (first_failure.empty())
                        first_failure = "edge succession breaks the numbering at term " +
                                        term_text(terms[from_term[cur]]);
                    ok = false;
                    break;
                }
                cur = nxt;
            }
            ++comps;
        }
        if (!ok) continue;
        Candidate cand;
        cand.sign.resize(N);
        for (int t = 0; t < N; ++t) cand.sign[t] = is_bd[t] ? -1 : +1;
        cand.edge_comp = comp;
        cand.comps = comps;
        if (std::none_of(passing.begin(), passing.end(), [&](const Candidate& c) {
                return c.sign == cand.sign && c.edge_comp == cand.edge_comp;
            }))
            passing.push_back(std::move(cand));
    }

    if (passing.empty())
        fail_structural(first_failure.empty()
                            ? "PD code admits no consistent orientation"
                            : first_failure);
    if (passing.size() > 1)
        fail_structural("ambiguous orientation: over strand at term " +
                        term_text(terms[free_roots.empty() ? 0 : free_roots[0]]) +
                        " can be traversed both ways");
    const Candidate& cand = passing.front();

    // arcs: over-passes do not cut the strand, so merge b with d at every term
    std::vector<int> arc_root(E + 1);
    for (int e = 1; e <= E; ++e) arc_root[e] = e;
    std::function<int(int)> find_arc = [&](int x) {
        return arc_root[x] == x ? x : arc_root[x] = find_arc(arc_root[x]);
    };
    for (const Term& t : terms) {
        int a = find_arc(t.e[1]), b = find_arc(t.e[3]);
        if (a != b) arc_root[std::max(a, b)] = std::min(a, b);
    }
    std::map<int, ArcId> arc_id; // root (min edge) -> dense id, in edge order
    for (int e = 1; e <= E; ++e) {
        int r = find_arc(e);
        if (!arc_id.count(r)) arc_id[r] = static_cast<ArcId>(arc_id.size());
    }

    Diagram d;
    d.arc_count = static_cast<int>(arc_id.size());
    d.component_of.assign(d.arc_count, -1);
    // component ids in order of their smallest edge
    std::vector<int> comp_order(cand.comps, -1);
    int next_comp = 0;
    for (int e = 1; e <= E; ++e) {
        int c = cand.edge_comp[e];
        if (comp_order[c] < 0) comp_order[c] = next_comp++;
        d.component_of[arc_id[find_arc(e)]] = comp_order[c];
    }
    for (int t = 0; t < N; ++t) {
        const auto& e = terms[t].e;
        d.crossings.push_back({cand.sign[t], arc_id[find_arc(e[0])], arc_id[find_arc(e[1])],
                               arc_id[find_arc(e[2])]});
    }
    for (int k = 0; k < unknots; ++k) {
        d.component_of.push_back(next_comp++);
        ++d.arc_count;
    }
    return d;
}

} // namespace hq

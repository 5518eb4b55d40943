#pragma once

#include <optional>
#include <string>
#include <vector>

namespace hq {

/* A finite quandle on {0,..,size-1}, stored as a flat Cayley table:
 * table[a*size + b] = a*b.  Axioms:
 *   (1) a*a = a
 *   (2) for each b, a -> a*b is a bijection (division b/a below)
 *   (3) (a*b)*c = (a*c)*(b*c)
 * A table that fails the axioms can still be held in this struct;
 * verify_quandle reports where it breaks.
 */
struct Quandle {
    int size = 0;
    std::vector<int> table;

    int op(int a, int b) const { return table[a * size + b]; }

    // unique x with x*a == b; scans the column (sizes here are tiny)
    int div(int b, int a) const {
        for (int x = 0; x < size; ++x)
            if (table[x * size + a] == b) return x;
        return -1;
    }
};

struct AxiomViolation {
    int axiom = 0;             // 1, 2 or 3
    std::vector<int> elements; // witness tuple
};

struct VerifyReport {
    bool valid = false;
    std::vector<std::string> structural;   // out-of-range entries etc.
    std::vector<AxiomViolation> violations;
    bool truncated = false;    // some family hit the reporting cap
};

inline constexpr int kMaxViolationsPerAxiom = 32;

VerifyReport verify_quandle(const Quandle& q);

Quandle make_trivial(int n);
Quandle make_dihedral(int n);

// Cayley table of a finite group, flat like Quandle::table.
struct GroupTable {
    int size = 0;
    std::vector<int> table;
    int op(int a, int b) const { return table[a * size + b]; }
};

// Checks closure/associativity/identity/inverses; nullopt when g is a group.
std::optional<std::string> check_group(const GroupTable& g);

// conj(a,b) = b^-1 a b; throws hq::error{structural} when g is not a group
Quandle make_conjugation(const GroupTable& g);

} // namespace hq

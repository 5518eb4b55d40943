#pragma once

#include <cstdint>
#include <string>

#include "hq/error.hpp"

namespace hq {

// Coefficient ring: the integers, or integers mod m.  Text form "z" / "zm:<m>".
struct RingSpec {
    enum class Kind { Z, Zm };
    Kind kind = Kind::Z;
    long long modulus = 0; // >= 2 when kind == Zm

    bool is_z() const { return kind == Kind::Z; }

    // canonical representative: least non-negative residue for Zm
    long long canon(long long v) const {
        if (kind == Kind::Z) return v;
        long long r = v % modulus;
        return r < 0 ? r + modulus : r;
    }

    std::string str() const {
        return kind == Kind::Z ? "z" : "zm:" + std::to_string(modulus);
    }

    static RingSpec z() { return {}; }
    static RingSpec zm(long long m) {
        if (m < 2) fail_structural("ring modulus must be >= 2");
        return {Kind::Zm, m};
    }
    static RingSpec parse(const std::string& s) {
        if (s == "z") return z();
        if (s.rfind("zm:", 0) == 0) {
            try {
                size_t pos = 0;
                long long m = std::stoll(s.substr(3), &pos);
                if (pos != s.size() - 3) fail_structural("bad ring spec: " + s);
                return zm(m);
            } catch (const error&) {
                throw;
            } catch (...) {
                fail_structural("bad ring spec: " + s);
            }
        }
        fail_structural("bad ring spec: " + s + " (want z or zm:<m>)");
    }
};

inline bool operator==(const RingSpec& a, const RingSpec& b) {
    return a.kind == b.kind && (a.kind == RingSpec::Kind::Z || a.modulus == b.modulus);
}

} // namespace hq

#pragma once

#include <algorithm>
#include <map>
#include <vector>

namespace hq {

// Multiset kept as a sorted (value, multiplicity) list; equality is
// multiset equality.  T needs operator< and operator==.
template <typename T>
class Multiset {
public:
    Multiset() = default;

    void add(const T& v, long long count = 1) { counts_[v] += count; }

    long long total() const {
        long long t = 0;
        for (auto& [v, c] : counts_) t += c;
        return t;
    }

    std::vector<std::pair<T, long long>> items() const {
        return {counts_.begin(), counts_.end()};
    }

    bool operator==(const Multiset& o) const { return counts_ == o.counts_; }
    bool operator!=(const Multiset& o) const { return !(*this == o); }
    bool operator<(const Multiset& o) const {
        return std::lexicographical_compare(counts_.begin(), counts_.end(),
                                            o.counts_.begin(), o.counts_.end());
    }

private:
    std::map<T, long long> counts_;
};

} // namespace hq

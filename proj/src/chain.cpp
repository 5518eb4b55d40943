#include <algorithm>

#include "hq/chain.hpp"
#include "hq/error.hpp"

namespace hq {

bool is_degenerate(const ChainTuple& t) {
    for (size_t i = 0; i + 1 < t.size(); ++i)
        if (t[i] == t[i + 1]) return true;
    return false;
}

ChainTuple apply_lambda(const Quandle& base, const HierarchicalQuandle& h,
                        const ChainTuple& t, int i) {
    int n = static_cast<int>(t.size());
    if (i < 1 || i > n) fail_invalid("lambda index out of range");
    auto [xi, yi] = t[i - 1];
    ChainTuple out;
    out.reserve(n - 1);
    for (int k = 0; k < i - 1; ++k)
        out.emplace_back(base.op(t[k].first, xi), h.op(t[k].first, xi, t[k].second, yi));
    for (int k = i; k < n; ++k) out.push_back(t[k]);
    return out;
}

ChainTuple apply_rho(const ChainTuple& t, int i) {
    int n = static_cast<int>(t.size());
    if (i < 1 || i > n) fail_invalid("rho index out of range");
    ChainTuple out;
    out.reserve(n - 1);
    for (int k = 0; k < n; ++k)
        if (k != i - 1) out.push_back(t[k]);
    return out;
}

namespace {

void accumulate(ChainVector& acc, const ChainTuple& t, long long coeff) {
    if (is_degenerate(t)) return; // degenerate quotient
    long long& slot = acc[t];
    slot += coeff;
    if (slot == 0) acc.erase(t);
}

} // namespace

ChainVector boundary(const Quandle& base, const HierarchicalQuandle& h,
                     const ChainVector& v, BoundaryKind kind) {
    ChainVector out;
    for (const auto& [t, coeff] : v) {
        int n = static_cast<int>(t.size());
        if (n <= 1) continue;
        for (int i = 1; i <= n; ++i) {
            long long s = (i % 2 == 1) ? 1 : -1;
            bool want_lambda = kind != BoundaryKind::Rho;
            bool want_rho = kind != BoundaryKind::Lambda;
            if (want_lambda)
                accumulate(out, apply_lambda(base, h, t, i), coeff * s);
            if (want_rho) {
                long long rs = s;
                if (kind == BoundaryKind::Standard) rs = -s;
                accumulate(out, apply_rho(t, i), coeff * rs);
            }
        }
    }
    return out;
}

ChainBasis::ChainBasis(int x_size, int y_size, int degree, const ChainCaps& caps)
    : x_size_(x_size), y_size_(y_size), degree_(degree) {
    if (x_size < 1 || y_size < 1) fail_invalid("basis needs non-empty sets");
    if (degree < 0 || degree > caps.max_degree) fail_cap("degree beyond configured cap");
    radix_ = static_cast<uint64_t>(x_size) * y_size;
    // non-degenerate count: M*(M-1)^(degree-1) with M = radix
    if (degree > 0) {
        long double est = static_cast<long double>(radix_);
        for (int k = 1; k < degree; ++k) est *= static_cast<long double>(radix_ - 1);
        if (est > static_cast<long double>(caps.max_columns))
            fail_cap("basis larger than configured column cap");
    }
    if (degree == 0) return; // degree-0 chains vanish: empty basis
    ChainTuple t(degree, {0, 0});
    // odometer over tuples in lexicographic order, skipping degenerate ones
    while (true) {
        if (!is_degenerate(t)) codes_.push_back(encode(t));
        int k = degree - 1;
        while (k >= 0) {
            if (t[k].second + 1 < y_size_) {
                ++t[k].second;
                break;
            }
            t[k].second = 0;
            if (t[k].first + 1 < x_size_) {
                ++t[k].first;
                break;
            }
            t[k].first = 0;
            --k;
        }
        if (k < 0) break;
    }
}

uint64_t ChainBasis::encode(const ChainTuple& t) const {
    uint64_t code = 0;
    for (auto [x, y] : t) {
        if (x < 0 || x >= x_size_ || y < 0 || y >= y_size_)
            fail_invalid("tuple entry out of range");
        code = code * radix_ + (static_cast<uint64_t>(x) * y_size_ + y);
    }
    return code;
}

ChainTuple ChainBasis::decode(uint64_t code) const {
    ChainTuple t(degree_);
    for (int k = degree_ - 1; k >= 0; --k) {
        uint64_t p = code % radix_;
        code /= radix_;
        t[k] = {static_cast<int>(p / y_size_), static_cast<int>(p % y_size_)};
    }
    return t;
}

long long ChainBasis::index_of(uint64_t code) const {
    auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
    if (it == codes_.end() || *it != code) return -1;
    return it - codes_.begin();
}

SparseIntMatrix boundary_matrix(const Quandle& base, const HierarchicalQuandle& h,
                                int degree, BoundaryKind kind, const ChainCaps& caps) {
    if (degree < 1) fail_invalid("boundary needs degree >= 1");
    ChainBasis domain(base.size, h.size, degree, caps);
    ChainBasis target(base.size, h.size, degree - 1, caps);
    SparseIntMatrix m;
    m.rows = target.size();
    m.cols = domain.size();
    for (long long col = 0; col < domain.size(); ++col) {
        ChainVector v;
        v[domain.at(col)] = 1;
        for (const auto& [t, coeff] : boundary(base, h, v, kind))
            m.entries.push_back({target.index_of(target.encode(t)), col, coeff});
    }
    // boundary() emits map order = code order, so entries are (col, row) sorted
    return m;
}

SparseIntMatrix sparse_multiply(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    if (a.cols != b.rows) fail_invalid("matrix shapes do not chain");
    SparseIntMatrix out;
    out.rows = a.rows;
    out.cols = b.cols;
    // rows of a indexed for random access
    std::map<long long, std::vector<std::pair<long long, long long>>> a_by_col;
    for (const auto& e : a.entries) a_by_col[e[1]].push_back({e[0], e[2]});
    std::map<long long, long long> col_acc;
    long long cur_col = -1;
    auto flush = [&]() {
        for (auto& [row, val] : col_acc)
            if (val != 0) out.entries.push_back({row, cur_col, val});
        col_acc.clear();
    };
    for (const auto& e : b.entries) {
        if (e[1] != cur_col) {
            if (cur_col >= 0) flush();
            cur_col = e[1];
        }
        auto it = a_by_col.find(e[0]);
        if (it == a_by_col.end()) continue;
        for (auto& [row, val] : it->second) col_acc[row] += val * e[2];
    }
    if (cur_col >= 0) flush();
    return out;
}

} // namespace hq

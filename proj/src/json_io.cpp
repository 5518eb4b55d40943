#include "hq/json_io.hpp"

namespace hq {

namespace {

[[noreturn]] void bad(const std::string& why) { fail_structural("bad JSON: " + why); }

const json& need(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field ") + key);
    return j.at(key);
}

int need_int(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_number_integer()) bad(std::string(key) + " must be an integer");
    return v.get<int>();
}

std::vector<int> flat_table(const json& rows, int expect_rows, int expect_cols,
                            const char* what) {
    if (!rows.is_array() || static_cast<int>(rows.size()) != expect_rows)
        bad(std::string(what) + " must have " + std::to_string(expect_rows) + " rows");
    std::vector<int> out;
    out.reserve(static_cast<size_t>(expect_rows) * expect_cols);
    for (const json& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != expect_cols)
            bad(std::string(what) + " rows must have " + std::to_string(expect_cols) +
                " entries");
        for (const json& v : row) {
            if (!v.is_number_integer()) bad(std::string(what) + " entries must be integers");
            out.push_back(v.get<int>());
        }
    }
    return out;
}

json table_rows(const std::vector<int>& table, int rows, int cols) {
    json out = json::array();
    for (int r = 0; r < rows; ++r) {
        json row = json::array();
        for (int c = 0; c < cols; ++c) row.push_back(table[r * cols + c]);
        out.push_back(row);
    }
    return out;
}

} // namespace

json parse_json_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) bad("unparseable text");
    return j;
}

json quandle_to_json(const Quandle& q) {
    json j;
    j["size"] = q.size;
    j["table"] = table_rows(q.table, q.size, q.size);
    return j;
}

Quandle quandle_from_json(const json& j) {
    Quandle q;
    q.size = need_int(j, "size");
    if (q.size < 1) bad("size must be positive");
    q.table = flat_table(need(j, "table"), q.size, q.size, "table");
    return q;
}

json group_to_json(const GroupTable& g) {
    json j;
    j["size"] = g.size;
    j["table"] = table_rows(g.table, g.size, g.size);
    return j;
}

GroupTable group_from_json(const json& j) {
    GroupTable g;
    g.size = need_int(j, "size");
    if (g.size < 1) bad("size must be positive");
    g.table = flat_table(need(j, "table"), g.size, g.size, "table");
    return g;
}

json hquandle_to_json(const HierarchicalQuandle& h) {
    json j;
    j["base_size"] = h.base_size;
    j["size"] = h.size;
    json tables = json::array();
    for (int x1 = 0; x1 < h.base_size; ++x1) {
        json row = json::array();
        for (int x2 = 0; x2 < h.base_size; ++x2) {
            json tab = json::array();
            for (int y1 = 0; y1 < h.size; ++y1) {
                json trow = json::array();
                for (int y2 = 0; y2 < h.size; ++y2) trow.push_back(h.op(x1, x2, y1, y2));
                tab.push_back(trow);
            }
            row.push_back(tab);
        }
        tables.push_back(row);
    }
    j["tables"] = tables;
    return j;
}

HierarchicalQuandle hquandle_from_json(const json& j) {
    HierarchicalQuandle h;
    h.base_size = need_int(j, "base_size");
    h.size = need_int(j, "size");
    if (h.base_size < 1 || h.size < 1) bad("sizes must be positive");
    const json& tables = need(j, "tables");
    if (!tables.is_array() || static_cast<int>(tables.size()) != h.base_size)
        bad("tables must have base_size rows");
    h.tables.reserve(static_cast<size_t>(h.base_size) * h.base_size * h.size * h.size);
    for (const json& row : tables) {
        if (!row.is_array() || static_cast<int>(row.size()) != h.base_size)
            bad("tables rows must have base_size entries");
        for (const json& tab : row) {
            std::vector<int> flat = flat_table(tab, h.size, h.size, "inner table");
            h.tables.insert(h.tables.end(), flat.begin(), flat.end());
        }
    }
    return h;
}

json diagram_to_json(const Diagram& d) {
    json j;
    j["arc_count"] = d.arc_count;
    j["component_of"] = d.component_of;
    json cs = json::array();
    for (const Crossing& c : d.crossings) {
        json cj;
        cj["sign"] = c.sign;
        cj["under_in"] = c.under_in;
        cj["over"] = c.over;
        cj["under_out"] = c.under_out;
        cs.push_back(cj);
    }
    j["crossings"] = cs;
    return j;
}

Diagram diagram_from_json(const json& j) {
    Diagram d;
    d.arc_count = need_int(j, "arc_count");
    const json& comps = need(j, "component_of");
    if (!comps.is_array()) bad("component_of must be an array");
    for (const json& v : comps) {
        if (!v.is_number_integer()) bad("component_of entries must be integers");
        d.component_of.push_back(v.get<int>());
    }
    const json& cs = need(j, "crossings");
    if (!cs.is_array()) bad("crossings must be an array");
    for (const json& cj : cs) {
        Crossing c;
        c.sign = need_int(cj, "sign");
        c.under_in = need_int(cj, "under_in");
        c.over = need_int(cj, "over");
        c.under_out = need_int(cj, "under_out");
        d.crossings.push_back(c);
    }
    return d;
}

json verify_report_to_json(const VerifyReport& r) {
    json j;
    j["valid"] = r.valid;
    j["structural"] = r.structural;
    json vs = json::array();
    for (const AxiomViolation& v : r.violations) {
        json vj;
        vj["axiom"] = v.axiom;
        vj["elements"] = v.elements;
        vs.push_back(vj);
    }
    j["violations"] = vs;
    j["truncated"] = r.truncated;
    return j;
}

json diagram_report_to_json(const DiagramReport& r) {
    json j;
    j["valid"] = r.valid;
    j["problems"] = r.problems;
    return j;
}

json multiset_to_json(const Multiset<long long>& m) {
    json j = json::object();
    for (const auto& [v, count] : m.items()) j[std::to_string(v)] = count;
    return j;
}

namespace {

json basis_to_json(const ChainBasis& basis) {
    json out = json::array();
    for (long long i = 0; i < basis.size(); ++i) {
        ChainTuple t = basis.at(i);
        json x = json::array(), y = json::array();
        for (auto [xv, yv] : t) {
            x.push_back(xv);
            y.push_back(yv);
        }
        json el;
        el["x"] = x;
        el["y"] = y;
        out.push_back(el);
    }
    return out;
}

} // namespace

json matrix_to_json(const SparseIntMatrix& m, const ChainBasis& row_basis,
                    const ChainBasis& col_basis) {
    json j;
    j["rows"] = m.rows;
    j["cols"] = m.cols;
    json entries = json::array();
    for (const auto& e : m.entries) entries.push_back(json::array({e[0], e[1], e[2]}));
    j["entries"] = entries;
    j["row_basis"] = basis_to_json(row_basis);
    j["col_basis"] = basis_to_json(col_basis);
    return j;
}

json cochain_to_json(const Cochain& c) {
    json j;
    j["ring"] = c.ring.str();
    j["degree"] = c.degree;
    json entries = json::array();
    uint64_t radix = static_cast<uint64_t>(c.x_size) * c.y_size;
    for (const auto& [code, val] : c.values) {
        ChainTuple t(c.degree);
        uint64_t rest = code;
        for (int k = c.degree - 1; k >= 0; --k) {
            uint64_t p = rest % radix;
            rest /= radix;
            t[k] = {static_cast<int>(p / c.y_size), static_cast<int>(p % c.y_size)};
        }
        json x = json::array(), y = json::array();
        for (auto [xv, yv] : t) {
            x.push_back(xv);
            y.push_back(yv);
        }
        json ej;
        ej["x"] = x;
        ej["y"] = y;
        ej["c"] = val;
        entries.push_back(ej);
    }
    j["entries"] = entries;
    return j;
}

Cochain cochain_from_json(const json& j, int x_size, int y_size) {
    Cochain c;
    const json& ring = need(j, "ring");
    if (!ring.is_string()) bad("ring must be a string");
    c.ring = RingSpec::parse(ring.get<std::string>());
    c.degree = need_int(j, "degree");
    if (c.degree < 1) bad("degree must be positive");
    c.x_size = x_size;
    c.y_size = y_size;
    const json& entries = need(j, "entries");
    if (!entries.is_array()) bad("entries must be an array");
    for (const json& ej : entries) {
        const json& x = need(ej, "x");
        const json& y = need(ej, "y");
        if (!x.is_array() || !y.is_array() || static_cast<int>(x.size()) != c.degree ||
            static_cast<int>(y.size()) != c.degree)
            bad("entry coordinates must have length degree");
        ChainTuple t(c.degree);
        for (int k = 0; k < c.degree; ++k) {
            if (!x[k].is_number_integer() || !y[k].is_number_integer())
                bad("entry coordinates must be integers");
            t[k] = {x[k].get<int>(), y[k].get<int>()};
            if (t[k].first < 0 || t[k].first >= x_size || t[k].second < 0 ||
                t[k].second >= y_size)
                bad("entry coordinate out of range");
        }
        const json& v = need(ej, "c");
        if (!v.is_number_integer()) bad("entry value must be an integer");
        if (is_degenerate(t)) bad("entry on a degenerate tuple");
        c.set(t, v.get<long long>());
    }
    return c;
}

json cohomology_to_json(const CohomologyResult& r, bool with_representatives) {
    json j;
    j["ring"] = r.ring.str();
    j["degree"] = r.degree;
    if (r.ring.is_z()) {
        j["betti"] = r.betti;
        j["torsion"] = r.torsion;
    } else
        j["factors"] = r.factors;
    if (with_representatives) {
        json reps = json::array();
        for (const Cochain& c : r.representatives) reps.push_back(cochain_to_json(c));
        j["representatives"] = reps;
    }
    return j;
}

json invariant_to_json(const InvariantValue& v, bool flatten_only) {
    json j;
    j["ring"] = v.ring.str();
    if (!flatten_only) {
        json per = json::array();
        for (size_t i = 0; i < v.per_base.size(); ++i) {
            json pj;
            pj["base_index"] = i;
            pj["weights"] = multiset_to_json(v.per_base[i]);
            per.push_back(pj);
        }
        j["per_base"] = per;
    }
    j["flattened"] = multiset_to_json(v.flattened());
    return j;
}

json decompose_to_json(const DecomposeResult& r) {
    json j;
    j["ok"] = r.ok;
    if (r.ok) {
        j["base"] = quandle_to_json(r.base);
        j["family"] = hquandle_to_json(r.family);
    } else {
        j["reason"] = r.reason;
        j["witness"] = r.witness;
    }
    return j;
}

} // namespace hq

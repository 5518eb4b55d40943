#include <cstring>
#include <string>

#include "hq/invariant.hpp"
#include "hq/json_io.hpp"
#include "hquandle.h"

struct hq_quandle {
    hq::Quandle q;
};
struct hq_hquandle {
    hq::HierarchicalQuandle h;
};
struct hq_diagram {
    hq::Diagram d;
};

namespace {

thread_local std::string g_last_error;

int set_error(int code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

template <typename F>
int guarded(F&& f) {
    try {
        f();
        return HQ_OK;
    } catch (const hq::error& e) {
        return set_error(static_cast<int>(e.kind), e.what());
    } catch (const std::exception& e) {
        return set_error(HQ_ERR_INVALID, e.what());
    } catch (...) {
        return set_error(HQ_ERR_INVALID, "unknown failure");
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(char** out, const hq::json& j) { *out = dup_string(j.dump()); }

void require_arg(const void* p, const char* name) {
    if (!p) hq::fail_structural(std::string("null argument: ") + name);
}

// verified copies of the inputs for entry points that compute with them
hq::Quandle checked_quandle(const hq_quandle* q, const char* name) {
    require_arg(q, name);
    if (!hq::verify_quandle(q->q).valid)
        hq::fail_invalid(std::string(name) + " is not a valid quandle");
    return q->q;
}

hq::HierarchicalQuandle checked_hquandle(const hq_hquandle* h, const hq::Quandle& base,
                                         const char* name) {
    require_arg(h, name);
    if (!hq::verify_hquandle(h->h, base).valid)
        hq::fail_invalid(std::string(name) + " is not a valid hierarchical quandle over this base");
    return h->h;
}

hq::Diagram checked_diagram(const hq_diagram* d, const char* name) {
    require_arg(d, name);
    hq::DiagramReport r = hq::validate(d->d);
    if (!r.valid) hq::fail_invalid(std::string(name) + " fails validation: " + r.problems.front());
    return d->d;
}

std::vector<int> coloring_from_text(const char* text, const char* name) {
    require_arg(text, name);
    hq::json j = hq::parse_json_text(text);
    if (!j.is_array()) hq::fail_structural(std::string(name) + " must be a JSON array");
    std::vector<int> out;
    for (const hq::json& v : j) {
        if (!v.is_number_integer())
            hq::fail_structural(std::string(name) + " entries must be integers");
        out.push_back(v.get<int>());
    }
    return out;
}

hq::Cochain cochain_from_text(const char* text, const hq::Quandle& base,
                              const hq::HierarchicalQuandle& h) {
    require_arg(text, "cochain");
    return hq::cochain_from_json(hq::parse_json_text(text), base.size, h.size);
}

} // namespace

extern "C" {

const char* hq_last_error(void) { return g_last_error.c_str(); }

void hq_free_str(char* s) { delete[] s; }

int hq_quandle_from_json(const char* text, hq_quandle** out) {
    return guarded([&] {
        require_arg(text, "text");
        require_arg(out, "out");
        *out = new hq_quandle{hq::quandle_from_json(hq::parse_json_text(text))};
    });
}

int hq_quandle_to_json(const hq_quandle* q, char** out) {
    return guarded([&] {
        require_arg(q, "q");
        require_arg(out, "out");
        emit(out, hq::quandle_to_json(q->q));
    });
}

void hq_quandle_free(hq_quandle* q) { delete q; }

int hq_quandle_make(const char* kind, int n, hq_quandle** out) {
    return guarded([&] {
        require_arg(kind, "kind");
        require_arg(out, "out");
        std::string k = kind;
        if (k == "trivial")
            *out = new hq_quandle{hq::make_trivial(n)};
        else if (k == "dihedral")
            *out = new hq_quandle{hq::make_dihedral(n)};
        else
            hq::fail_structural("unknown quandle kind: " + k);
    });
}

int hq_quandle_conjugation(const char* group_text, hq_quandle** out) {
    return guarded([&] {
        require_arg(group_text, "group_text");
        require_arg(out, "out");
        *out = new hq_quandle{
            hq::make_conjugation(hq::group_from_json(hq::parse_json_text(group_text)))};
    });
}

int hq_quandle_verify(const hq_quandle* q, char** report) {
    return guarded([&] {
        require_arg(q, "q");
        require_arg(report, "report");
        emit(report, hq::verify_report_to_json(hq::verify_quandle(q->q)));
    });
}

int hq_quandle_size(const hq_quandle* q, int* out) {
    return guarded([&] {
        require_arg(q, "q");
        require_arg(out, "out");
        *out = q->q.size;
    });
}

int hq_hquandle_from_json(const char* text, hq_hquandle** out) {
    return guarded([&] {
        require_arg(text, "text");
        require_arg(out, "out");
        *out = new hq_hquandle{hq::hquandle_from_json(hq::parse_json_text(text))};
    });
}

int hq_hquandle_to_json(const hq_hquandle* h, char** out) {
    return guarded([&] {
        require_arg(h, "h");
        require_arg(out, "out");
        emit(out, hq::hquandle_to_json(h->h));
    });
}

void hq_hquandle_free(hq_hquandle* h) { delete h; }

int hq_hquandle_constant(const hq_quandle* base, const hq_quandle* fiber, hq_hquandle** out) {
    return guarded([&] {
        require_arg(out, "out");
        hq::Quandle b = checked_quandle(base, "base");
        hq::Quandle f = checked_quandle(fiber, "fiber");
        *out = new hq_hquandle{hq::make_constant_family(b, f)};
    });
}

int hq_hquandle_left_projection(const hq_quandle* base, int y_size, hq_hquandle** out) {
    return guarded([&] {
        require_arg(out, "out");
        hq::Quandle b = checked_quandle(base, "base");
        *out = new hq_hquandle{hq::make_left_projection(b, y_size)};
    });
}

int hq_hquandle_verify(const hq_hquandle* h, const hq_quandle* base, char** report) {
    return guarded([&] {
        require_arg(h, "h");
        require_arg(report, "report");
        hq::Quandle b = checked_quandle(base, "base");
        emit(report, hq::verify_report_to_json(hq::verify_hquandle(h->h, b)));
    });
}

int hq_product_quandle(const hq_quandle* base, const hq_hquandle* h, hq_quandle** out) {
    return guarded([&] {
        require_arg(out, "out");
        hq::Quandle b = checked_quandle(base, "base");
        hq::HierarchicalQuandle hh = checked_hquandle(h, b, "h");
        *out = new hq_quandle{hq::product_quandle(b, hh)};
    });
}

int hq_decompose(const hq_quandle* q, int base_size, int fiber_size, const char* pairing_text,
                 char** out) {
    return guarded([&] {
        require_arg(q, "q");
        require_arg(out, "out");
        std::vector<std::pair<int, int>> pairing;
        if (pairing_text) {
            hq::json j = hq::parse_json_text(pairing_text);
            if (!j.is_array()) hq::fail_structural("pairing must be a JSON array of pairs");
            for (const hq::json& p : j) {
                if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
                    !p[1].is_number_integer())
                    hq::fail_structural("pairing entries must be [x,y] integer pairs");
                pairing.push_back({p[0].get<int>(), p[1].get<int>()});
            }
        }
        emit(out, hq::decompose_to_json(
                      hq::decompose_over_projection(q->q, base_size, fiber_size, pairing)));
    });
}

int hq_search_hquandles(const hq_quandle* base, int y_size, long long limit,
                        const char* diagonal_text, char** out) {
    return guarded([&] {
        require_arg(out, "out");
        hq::Quandle b = checked_quandle(base, "base");
        hq::SearchConstraints constraints;
        if (diagonal_text) {
            hq::json j = hq::parse_json_text(diagonal_text);
            constraints.diagonal_table = hq::quandle_from_json(hq::json{
                {"size", y_size}, {"table", j}}).table;
        }
        hq::json results = hq::json::array();
        long long count = hq::search_hquandles(b, y_size, limit, constraints,
                                               [&](const hq::HierarchicalQuandle& h) {
                                                   results.push_back(hq::hquandle_to_json(h));
                                                   return true;
                                               });
        hq::json j;
        j["count"] = count;
        j["results"] = results;
        emit(out, j);
    });
}

int hq_diagram_from_json(const char* text, hq_diagram** out) {
    return guarded([&] {
        require_arg(text, "text");
        require_arg(out, "out");
        *out = new hq_diagram{hq::diagram_from_json(hq::parse_json_text(text))};
    });
}

int hq_diagram_to_json(const hq_diagram* d, char** out) {
    return guarded([&] {
        require_arg(d, "d");
        require_arg(out, "out");
        emit(out, hq::diagram_to_json(d->d));
    });
}

void hq_diagram_free(hq_diagram* d) { delete d; }

int hq_diagram_unlink(int components, hq_diagram** out) {
    return guarded([&] {
        require_arg(out, "out");
        *out = new hq_diagram{hq::make_unlink(components)};
    });
}

int hq_diagram_parse_pd(const char* text, int unknots, hq_diagram** out) {
    return guarded([&] {
        require_arg(text, "text");
        require_arg(out, "out");
        *out = new hq_diagram{hq::parse_pd(text, unknots)};
    });
}

int hq_diagram_validate(const hq_diagram* d, char** report) {
    return guarded([&] {
        require_arg(d, "d");
        require_arg(report, "report");
        emit(report, hq::diagram_report_to_json(hq::validate(d->d)));
    });
}

int hq_diagram_writhe(const hq_diagram* d, int* out) {
    return guarded([&] {
        require_arg(d, "d");
        require_arg(out, "out");
        *out = d->d.writhe();
    });
}

int hq_diagram_r1(const hq_diagram* d, int arc, int chirality, hq_diagram** out) {
    return guarded([&] {
        require_arg(out, "out");
        *out = new hq_diagram{hq::r1_add(checked_diagram(d, "d"), arc, chirality)};
    });
}

int hq_diagram_r2(const hq_diagram* d, int arc_over, int arc_under, hq_diagram** out) {
    return guarded([&] {
        require_arg(out, "out");
        *out = new hq_diagram{hq::r2_add(checked_diagram(d, "d"), arc_over, arc_under)};
    });
}

int hq_diagram_random_moves(const hq_diagram* d, int r1_count, int r2_count,
                            unsigned long long seed, hq_diagram** out) {
    return guarded([&] {
        require_arg(out, "out");
        *out = new hq_diagram{hq::random_moves(checked_diagram(d, "d"), r1_count, r2_count, seed)};
    });
}

int hq_count_colorings(const hq_diagram* d, const hq_quandle* q, long long* out) {
    return guarded([&] {
        require_arg(d, "d");
        require_arg(q, "q");
        require_arg(out, "out");
        *out = hq::count_qcolorings(d->d, q->q);
    });
}

int hq_enumerate_colorings(const hq_diagram* d, const hq_quandle* q, char** out) {
    return guarded([&] {
        require_arg(d, "d");
        require_arg(q, "q");
        require_arg(out, "out");
        hq::json j = hq::json::array();
        for (const auto& c : hq::enumerate_qcolorings(d->d, q->q)) j.push_back(c);
        emit(out, j);
    });
}

int hq_count_hcolorings(const hq_diagram* d, const hq_quandle* base, const hq_hquandle* h,
                        const char* xi_text, long long* out) {
    return guarded([&] {
        require_arg(d, "d");
        require_arg(base, "base");
        require_arg(h, "h");
        require_arg(out, "out");
        *out = hq::count_hcolorings(d->d, base->q, h->h, coloring_from_text(xi_text, "xi"));
    });
}

int hq_enumerate_hcolorings(const hq_diagram* d, const hq_quandle* base, const hq_hquandle* h,
                            const char* xi_text, char** out) {
    return guarded([&] {
        require_arg(d, "d");
        require_arg(base, "base");
        require_arg(h, "h");
        require_arg(out, "out");
        hq::json j = hq::json::array();
        for (const auto& c :
             hq::enumerate_hcolorings(d->d, base->q, h->h, coloring_from_text(xi_text, "xi")))
            j.push_back(c);
        emit(out, j);
    });
}

int hq_spectrum(const hq_diagram* d, const hq_quandle* base, const hq_hquandle* h, char** out) {
    return guarded([&] {
        require_arg(d, "d");
        require_arg(base, "base");
        require_arg(h, "h");
        require_arg(out, "out");
        emit(out, hq::multiset_to_json(hq::hcoloring_spectrum(d->d, base->q, h->h)));
    });
}

int hq_boundary_matrix(const hq_quandle* base, const hq_hquandle* h, int degree, int positive,
                       long long cap_columns, char** out) {
    return guarded([&] {
        require_arg(out, "out");
        hq::Quandle b = checked_quandle(base, "base");
        hq::HierarchicalQuandle hh = checked_hquandle(h, b, "h");
        hq::ChainCaps caps;
        if (cap_columns > 0) caps.max_columns = cap_columns;
        hq::BoundaryKind kind =
            positive ? hq::BoundaryKind::Positive : hq::BoundaryKind::Standard;
        hq::SparseIntMatrix m = hq::boundary_matrix(b, hh, degree, kind, caps);
        hq::ChainBasis rows(b.size, hh.size, degree - 1, caps);
        hq::ChainBasis cols(b.size, hh.size, degree, caps);
        emit(out, hq::matrix_to_json(m, rows, cols));
    });
}

int hq_cohomology(const hq_quandle* base, const hq_hquandle* h, int degree, const char* ring,
                  int representatives, char** out) {
    return guarded([&] {
        require_arg(ring, "ring");
        require_arg(out, "out");
        hq::Quandle b = checked_quandle(base, "base");
        hq::HierarchicalQuandle hh = checked_hquandle(h, b, "h");
        hq::CohomologyResult r =
            hq::cohomology(b, hh, degree, hq::RingSpec::parse(ring), representatives != 0);
        emit(out, hq::cohomology_to_json(r, representatives != 0));
    });
}

int hq_cochain_check(const hq_quandle* base, const hq_hquandle* h, const char* cochain_text,
                     char** out) {
    return guarded([&] {
        require_arg(out, "out");
        hq::Quandle b = checked_quandle(base, "base");
        hq::HierarchicalQuandle hh = checked_hquandle(h, b, "h");
        hq::Cochain w = cochain_from_text(cochain_text, b, hh);
        hq::json j;
        auto defect = hq::cocycle_defect(b, hh, w);
        j["cocycle"] = !defect.has_value();
        if (defect) {
            hq::json wx = hq::json::array(), wy = hq::json::array();
            for (auto [x, y] : *defect) {
                wx.push_back(x);
                wy.push_back(y);
            }
            j["witness"] = hq::json{{"x", wx}, {"y", wy}};
        } else
            j["witness"] = nullptr;
        j["coboundary"] = hq::is_coboundary(b, hh, w);
        emit(out, j);
    });
}

int hq_invariant(const hq_diagram* d, const hq_quandle* base, const hq_hquandle* h,
                 const char* cochain_text, int flatten_only, char** out) {
    return guarded([&] {
        require_arg(out, "out");
        hq::Diagram dd = checked_diagram(d, "d");
        hq::Quandle b = checked_quandle(base, "base");
        hq::HierarchicalQuandle hh = checked_hquandle(h, b, "h");
        hq::Cochain w = cochain_from_text(cochain_text, b, hh);
        emit(out, hq::invariant_to_json(hq::full_invariant(dd, b, hh, w), flatten_only != 0));
    });
}

} // extern "C"

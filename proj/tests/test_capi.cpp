#include <doctest.h>

#include <json.hpp>
#include <string>

#include "hq/coloring.hpp"
#include "hq/hquandle.hpp"
#include "hq/invariant.hpp"
#include "hq/json_io.hpp"
#include "hq/quandle.hpp"
#include "hquandle.h"
#include "support/builders.hpp"

using nlohmann::ordered_json;
using support::read_data;

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    hq_free_str(s);
    return out;
}

ordered_json take_json(char* s) { return ordered_json::parse(take(s)); }

struct QHandle {
    hq_quandle* p = nullptr;
    ~QHandle() { hq_quandle_free(p); }
};
struct HHandle {
    hq_hquandle* p = nullptr;
    ~HHandle() { hq_hquandle_free(p); }
};
struct DHandle {
    hq_diagram* p = nullptr;
    ~DHandle() { hq_diagram_free(p); }
};

} // namespace

TEST_CASE("quandle handles round trip through JSON") {
    QHandle q;
    REQUIRE(hq_quandle_from_json(read_data("r3.json").c_str(), &q.p) == HQ_OK);
    int n = 0;
    CHECK(hq_quandle_size(q.p, &n) == HQ_OK);
    CHECK(n == 3);

    char* text = nullptr;
    REQUIRE(hq_quandle_to_json(q.p, &text) == HQ_OK);
    CHECK(take_json(text) == ordered_json::parse(read_data("r3.json")));

    char* report = nullptr;
    REQUIRE(hq_quandle_verify(q.p, &report) == HQ_OK);
    ordered_json rep = take_json(report);
    CHECK(rep["valid"] == true);
    CHECK(rep["violations"].empty());

    QHandle made;
    REQUIRE(hq_quandle_make("dihedral", 3, &made.p) == HQ_OK);
    char* made_text = nullptr;
    REQUIRE(hq_quandle_to_json(made.p, &made_text) == HQ_OK);
    CHECK(take_json(made_text) == ordered_json::parse(read_data("r3.json")));

    QHandle bogus;
    CHECK(hq_quandle_make("bogus", 3, &bogus.p) == HQ_ERR_STRUCTURAL);
    CHECK(std::string(hq_last_error()).find("bogus") != std::string::npos);
}

TEST_CASE("loaders accept invalid algebra, computations reject it") {
    QHandle bad;
    REQUIRE(hq_quandle_from_json(read_data("bad_quandle.json").c_str(), &bad.p) == HQ_OK);
    char* report = nullptr;
    REQUIRE(hq_quandle_verify(bad.p, &report) == HQ_OK);
    CHECK(take_json(report)["valid"] == false);

    DHandle d;
    REQUIRE(hq_diagram_parse_pd(read_data("trefoil.pd").c_str(), 0, &d.p) == HQ_OK);
    long long count = -1;
    CHECK(hq_count_colorings(d.p, bad.p, &count) == HQ_ERR_INVALID);
    CHECK(std::string(hq_last_error()).find("is not a quandle") != std::string::npos);

    QHandle none;
    CHECK(hq_quandle_from_json(read_data("malformed.json").c_str(), &none.p) ==
          HQ_ERR_STRUCTURAL);
    CHECK(std::string(hq_last_error()).size() > 0);

    char* out = nullptr;
    CHECK(hq_quandle_verify(nullptr, &out) == HQ_ERR_STRUCTURAL);
    CHECK(std::string(hq_last_error()).find("null argument") != std::string::npos);
}

TEST_CASE("conjugation and hierarchical constructors") {
    ordered_json group = hq::group_to_json(support::s3_table());
    QHandle conj;
    REQUIRE(hq_quandle_conjugation(group.dump().c_str(), &conj.p) == HQ_OK);
    char* text = nullptr;
    REQUIRE(hq_quandle_to_json(conj.p, &text) == HQ_OK);
    CHECK(take_json(text) == hq::quandle_to_json(support::s3_conjugation()));

    QHandle t2;
    REQUIRE(hq_quandle_make("trivial", 2, &t2.p) == HQ_OK);
    QHandle r3;
    REQUIRE(hq_quandle_make("dihedral", 3, &r3.p) == HQ_OK);

    HHandle ch;
    REQUIRE(hq_hquandle_constant(t2.p, r3.p, &ch.p) == HQ_OK);
    char* ch_text = nullptr;
    REQUIRE(hq_hquandle_to_json(ch.p, &ch_text) == HQ_OK);
    CHECK(take_json(ch_text) == ordered_json::parse(read_data("const_r3_over_t2.json")));

    HHandle lp;
    REQUIRE(hq_hquandle_left_projection(t2.p, 2, &lp.p) == HQ_OK);
    char* lp_text = nullptr;
    REQUIRE(hq_hquandle_to_json(lp.p, &lp_text) == HQ_OK);
    CHECK(take_json(lp_text) == ordered_json::parse(read_data("leftproj2_over_t2.json")));

    char* report = nullptr;
    REQUIRE(hq_hquandle_verify(ch.p, t2.p, &report) == HQ_OK);
    CHECK(take_json(report)["valid"] == true);
}

TEST_CASE("product, decompose and search through the C surface") {
    QHandle t2;
    REQUIRE(hq_quandle_make("trivial", 2, &t2.p) == HQ_OK);
    QHandle r3;
    REQUIRE(hq_quandle_make("dihedral", 3, &r3.p) == HQ_OK);
    HHandle ch;
    REQUIRE(hq_hquandle_constant(t2.p, r3.p, &ch.p) == HQ_OK);

    QHandle prod;
    REQUIRE(hq_product_quandle(t2.p, ch.p, &prod.p) == HQ_OK);
    char* prod_text = nullptr;
    REQUIRE(hq_quandle_to_json(prod.p, &prod_text) == HQ_OK);
    hq::Quandle expected =
        hq::product_quandle(hq::make_trivial(2),
                            hq::make_constant_family(hq::make_trivial(2), hq::make_dihedral(3)));
    CHECK(take_json(prod_text) == hq::quandle_to_json(expected));

    char* dec = nullptr;
    REQUIRE(hq_decompose(prod.p, 2, 3, nullptr, &dec) == HQ_OK);
    ordered_json dj = take_json(dec);
    CHECK(dj["ok"] == true);
    CHECK(dj["base"]["size"] == 2);
    CHECK(dj["family"] == ordered_json::parse(read_data("const_r3_over_t2.json")));

    QHandle r4;
    REQUIRE(hq_quandle_make("dihedral", 4, &r4.p) == HQ_OK);
    char* dec2 = nullptr;
    REQUIRE(hq_decompose(r4.p, 2, 2, nullptr, &dec2) == HQ_OK);
    ordered_json dj2 = take_json(dec2);
    CHECK(dj2["ok"] == false);
    CHECK(dj2["reason"].is_string());

    QHandle t1;
    REQUIRE(hq_quandle_make("trivial", 1, &t1.p) == HQ_OK);
    char* found = nullptr;
    REQUIRE(hq_search_hquandles(t1.p, 2, 0, nullptr, &found) == HQ_OK);
    ordered_json fj = take_json(found);
    CHECK(fj["count"] == 1);
    CHECK(fj["results"].size() == 1);

    char* found2 = nullptr;
    REQUIRE(hq_search_hquandles(t2.p, 2, 0, "[[0,0],[1,1]]", &found2) == HQ_OK);
    CHECK(take_json(found2)["count"] == 8);

    char* found3 = nullptr;
    CHECK(hq_search_hquandles(t2.p, 2, 0, "[[1,1],[0,0]]", &found3) == HQ_ERR_STRUCTURAL);
}

TEST_CASE("diagram handles, moves and determinism") {
    DHandle tref;
    REQUIRE(hq_diagram_parse_pd(read_data("trefoil.pd").c_str(), 0, &tref.p) == HQ_OK);
    char* text = nullptr;
    REQUIRE(hq_diagram_to_json(tref.p, &text) == HQ_OK);
    CHECK(take_json(text) == ordered_json::parse(read_data("trefoil.json")));

    int w = 0;
    CHECK(hq_diagram_writhe(tref.p, &w) == HQ_OK);
    CHECK(w == -3);

    char* report = nullptr;
    REQUIRE(hq_diagram_validate(tref.p, &report) == HQ_OK);
    CHECK(take_json(report)["valid"] == true);

    DHandle unl;
    REQUIRE(hq_diagram_unlink(3, &unl.p) == HQ_OK);
    char* unl_text = nullptr;
    REQUIRE(hq_diagram_to_json(unl.p, &unl_text) == HQ_OK);
    CHECK(take_json(unl_text) == ordered_json::parse(read_data("unlink3.json")));

    DHandle kinked;
    REQUIRE(hq_diagram_r1(tref.p, 1, -1, &kinked.p) == HQ_OK);
    char* k_text = nullptr;
    REQUIRE(hq_diagram_to_json(kinked.p, &k_text) == HQ_OK);
    CHECK(take_json(k_text) == hq::diagram_to_json(hq::r1_add(support::trefoil(), 1, -1)));

    DHandle poked;
    REQUIRE(hq_diagram_r2(tref.p, 0, 1, &poked.p) == HQ_OK);
    char* p_text = nullptr;
    REQUIRE(hq_diagram_to_json(poked.p, &p_text) == HQ_OK);
    CHECK(take_json(p_text) == hq::diagram_to_json(hq::r2_add(support::trefoil(), 0, 1)));

    DHandle m1, m2;
    REQUIRE(hq_diagram_random_moves(tref.p, 3, 2, 42, &m1.p) == HQ_OK);
    REQUIRE(hq_diagram_random_moves(tref.p, 3, 2, 42, &m2.p) == HQ_OK);
    char *s1 = nullptr, *s2 = nullptr;
    REQUIRE(hq_diagram_to_json(m1.p, &s1) == HQ_OK);
    REQUIRE(hq_diagram_to_json(m2.p, &s2) == HQ_OK);
    CHECK(take(s1) == take(s2)); // byte-identical

    DHandle bad;
    CHECK(hq_diagram_parse_pd("X[1,2,1,2]", 0, &bad.p) == HQ_ERR_STRUCTURAL);
    CHECK(std::string(hq_last_error()).find("ambiguous") != std::string::npos);
    DHandle bad2;
    CHECK(hq_diagram_r1(tref.p, 9, 1, &bad2.p) == HQ_ERR_STRUCTURAL);
}

TEST_CASE("colourings and spectra through the C surface") {
    DHandle tref;
    REQUIRE(hq_diagram_parse_pd(read_data("trefoil.pd").c_str(), 0, &tref.p) == HQ_OK);
    QHandle r3;
    REQUIRE(hq_quandle_make("dihedral", 3, &r3.p) == HQ_OK);
    QHandle t2;
    REQUIRE(hq_quandle_make("trivial", 2, &t2.p) == HQ_OK);
    HHandle ch;
    REQUIRE(hq_hquandle_constant(t2.p, r3.p, &ch.p) == HQ_OK);

    long long count = 0;
    CHECK(hq_count_colorings(tref.p, r3.p, &count) == HQ_OK);
    CHECK(count == 9);

    char* all = nullptr;
    REQUIRE(hq_enumerate_colorings(tref.p, r3.p, &all) == HQ_OK);
    ordered_json aj = take_json(all);
    REQUIRE(aj.size() == 9);
    CHECK(aj[0] == ordered_json::parse("[0,0,0]"));

    long long hcount = 0;
    CHECK(hq_count_hcolorings(tref.p, t2.p, ch.p, "[0,0,0]", &hcount) == HQ_OK);
    CHECK(hcount == 9);
    char* hz = nullptr;
    REQUIRE(hq_enumerate_hcolorings(tref.p, t2.p, ch.p, "[1,1,1]", &hz) == HQ_OK);
    CHECK(take_json(hz).size() == 9);

    long long dummy = 0;
    CHECK(hq_count_hcolorings(tref.p, t2.p, ch.p, "[0,1,0]", &dummy) == HQ_ERR_INVALID);
    CHECK(hq_count_hcolorings(tref.p, t2.p, ch.p, "oops", &dummy) == HQ_ERR_STRUCTURAL);

    char* spectrum_text = nullptr;
    REQUIRE(hq_spectrum(tref.p, t2.p, ch.p, &spectrum_text) == HQ_OK);
    CHECK(take_json(spectrum_text) == ordered_json::parse("{\"9\":2}"));
}

TEST_CASE("matrices, cohomology, cochains and invariants") {
    QHandle t1;
    REQUIRE(hq_quandle_make("trivial", 1, &t1.p) == HQ_OK);
    QHandle r3;
    REQUIRE(hq_quandle_make("dihedral", 3, &r3.p) == HQ_OK);
    HHandle ch;
    REQUIRE(hq_hquandle_constant(t1.p, r3.p, &ch.p) == HQ_OK);

    char* mat = nullptr;
    REQUIRE(hq_boundary_matrix(t1.p, ch.p, 2, 0, 0, &mat) == HQ_OK);
    ordered_json mj = take_json(mat);
    CHECK(mj["rows"] == 3);
    CHECK(mj["cols"] == 6);
    CHECK(mj["row_basis"].size() == 3);
    CHECK(mj["col_basis"].size() == 6);
    CHECK(mj["col_basis"][0]["x"] == ordered_json::parse("[0,0]"));
    CHECK(mj["col_basis"][0]["y"] == ordered_json::parse("[0,1]"));

    char* mat_cap = nullptr;
    CHECK(hq_boundary_matrix(t1.p, ch.p, 2, 0, 2, &mat_cap) == HQ_ERR_CAP);

    char* coh = nullptr;
    REQUIRE(hq_cohomology(t1.p, ch.p, 1, "z", 1, &coh) == HQ_OK);
    ordered_json cj = take_json(coh);
    CHECK(cj["ring"] == "z");
    CHECK(cj["betti"] == 1);
    CHECK(cj["torsion"].empty());
    CHECK(cj["representatives"].size() == 1);

    char* cohm = nullptr;
    REQUIRE(hq_cohomology(t1.p, ch.p, 1, "zm:3", 0, &cohm) == HQ_OK);
    ordered_json cmj = take_json(cohm);
    CHECK(cmj["factors"] == ordered_json::parse("[3]"));

    char* bad_ring = nullptr;
    CHECK(hq_cohomology(t1.p, ch.p, 1, "q", 0, &bad_ring) == HQ_ERR_STRUCTURAL);
    char* too_deep = nullptr;
    CHECK(hq_cohomology(t1.p, ch.p, 9, "z", 0, &too_deep) == HQ_ERR_CAP);

    QHandle t2;
    REQUIRE(hq_quandle_make("trivial", 2, &t2.p) == HQ_OK);
    HHandle ch2;
    REQUIRE(hq_hquandle_constant(t2.p, r3.p, &ch2.p) == HQ_OK);
    char* zcheck = nullptr;
    REQUIRE(hq_cochain_check(t2.p, ch2.p, read_data("zero2_z3.json").c_str(), &zcheck) == HQ_OK);
    ordered_json zj = take_json(zcheck);
    CHECK(zj["cocycle"] == true);
    CHECK(zj["witness"].is_null());
    CHECK(zj["coboundary"] == true);

    std::string indicator =
        R"({"ring":"zm:3","degree":2,"entries":[{"x":[0,0],"y":[0,1],"c":1}]})";
    char* icheck = nullptr;
    REQUIRE(hq_cochain_check(t1.p, ch.p, indicator.c_str(), &icheck) == HQ_OK);
    ordered_json ij = take_json(icheck);
    CHECK(ij["cocycle"] == false);
    CHECK(ij["witness"].is_object());
    CHECK(ij["coboundary"] == false);

    DHandle tref;
    REQUIRE(hq_diagram_parse_pd(read_data("trefoil.pd").c_str(), 0, &tref.p) == HQ_OK);
    char* inv = nullptr;
    REQUIRE(hq_invariant(tref.p, t1.p, ch.p, indicator.c_str(), 0, &inv) == HQ_OK);
    ordered_json vj = take_json(inv);
    CHECK(vj["ring"] == "zm:3");
    REQUIRE(vj["per_base"].size() == 1);
    CHECK(vj["per_base"][0]["base_index"] == 0);
    CHECK(vj["per_base"][0]["weights"] == ordered_json::parse("{\"0\":6,\"2\":3}"));
    CHECK(vj["flattened"] == ordered_json::parse("{\"0\":6,\"2\":3}"));

    char* flat = nullptr;
    REQUIRE(hq_invariant(tref.p, t1.p, ch.p, indicator.c_str(), 1, &flat) == HQ_OK);
    ordered_json fj = take_json(flat);
    CHECK(fj["flattened"] == ordered_json::parse("{\"0\":6,\"2\":3}"));
    CHECK_FALSE(fj.contains("per_base"));

    std::string bad_degree = R"({"ring":"zm:3","degree":1,"entries":[{"x":[0],"y":[0],"c":1}]})";
    char* bad_inv = nullptr;
    CHECK(hq_invariant(tref.p, t1.p, ch.p, bad_degree.c_str(), 0, &bad_inv) == HQ_ERR_INVALID);

    std::string degen = R"({"ring":"zm:3","degree":2,"entries":[{"x":[0,0],"y":[1,1],"c":1}]})";
    char* degen_out = nullptr;
    CHECK(hq_cochain_check(t1.p, ch.p, degen.c_str(), &degen_out) == HQ_ERR_STRUCTURAL);
}

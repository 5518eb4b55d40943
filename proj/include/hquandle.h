#ifndef HQUANDLE_H
#define HQUANDLE_H

/* C API of the hierarchical quandle library.  All functions return a
 * status code; structured results come back as JSON strings allocated by
 * the library and released with hq_free_str.  Handles are opaque and
 * released with their _free function.  On any nonzero status,
 * hq_last_error() describes the failure (thread-local storage, valid
 * until the next failing call on the same thread). */

#ifdef __cplusplus
extern "C" {
#endif

#define HQ_OK 0
#define HQ_ERR_STRUCTURAL 1 /* malformed input: bad JSON, bad PD code, bad shapes */
#define HQ_ERR_INVALID 2    /* well-formed but mathematically invalid */
#define HQ_ERR_CAP 3        /* configured resource cap exceeded */

typedef struct hq_quandle hq_quandle;
typedef struct hq_hquandle hq_hquandle;
typedef struct hq_diagram hq_diagram;

const char* hq_last_error(void);
void hq_free_str(char* s);

/* quandles */
int hq_quandle_from_json(const char* text, hq_quandle** out);
int hq_quandle_to_json(const hq_quandle* q, char** out);
void hq_quandle_free(hq_quandle* q);
/* kind: "trivial" or "dihedral" */
int hq_quandle_make(const char* kind, int n, hq_quandle** out);
/* conjugation quandle of a group given as {"size":n,"table":[[..]]} */
int hq_quandle_conjugation(const char* group_text, hq_quandle** out);
/* report: {"valid":b,"structural":[..],"violations":[{"axiom":k,"elements":[..]}],"truncated":b} */
int hq_quandle_verify(const hq_quandle* q, char** report);
int hq_quandle_size(const hq_quandle* q, int* out);

/* hierarchical quandles */
int hq_hquandle_from_json(const char* text, hq_hquandle** out);
int hq_hquandle_to_json(const hq_hquandle* h, char** out);
void hq_hquandle_free(hq_hquandle* h);
int hq_hquandle_constant(const hq_quandle* base, const hq_quandle* fiber, hq_hquandle** out);
int hq_hquandle_left_projection(const hq_quandle* base, int y_size, hq_hquandle** out);
int hq_hquandle_verify(const hq_hquandle* h, const hq_quandle* base, char** report);

/* product quandle on pairs encoded x*|Y|+y */
int hq_product_quandle(const hq_quandle* base, const hq_hquandle* h, hq_quandle** out);
/* pairing_text: optional JSON [[x,y],..] (element e -> pair), NULL for e = x*fiber+y;
 * result: {"ok":b, "base":{...}, "family":{...}} or {"ok":false,"reason":s,"witness":[..]} */
int hq_decompose(const hq_quandle* q, int base_size, int fiber_size, const char* pairing_text,
                 char** out);
/* diagonal_text: optional JSON [[..]] quandle table forced on every diagonal slot.
 * result: {"count":N, "results":[{hquandle json},..]} (results capped by limit when > 0) */
int hq_search_hquandles(const hq_quandle* base, int y_size, long long limit,
                        const char* diagonal_text, char** out);

/* diagrams */
int hq_diagram_from_json(const char* text, hq_diagram** out);
int hq_diagram_to_json(const hq_diagram* d, char** out);
void hq_diagram_free(hq_diagram* d);
int hq_diagram_unlink(int components, hq_diagram** out);
/* PD notation: whitespace-separated X[a,b,c,d] terms */
int hq_diagram_parse_pd(const char* text, int unknots, hq_diagram** out);
/* report: {"valid":b,"problems":[..]} */
int hq_diagram_validate(const hq_diagram* d, char** report);
int hq_diagram_writhe(const hq_diagram* d, int* out);
int hq_diagram_r1(const hq_diagram* d, int arc, int chirality, hq_diagram** out);
int hq_diagram_r2(const hq_diagram* d, int arc_over, int arc_under, hq_diagram** out);
int hq_diagram_random_moves(const hq_diagram* d, int r1_count, int r2_count,
                            unsigned long long seed, hq_diagram** out);

/* colourings */
int hq_count_colorings(const hq_diagram* d, const hq_quandle* q, long long* out);
/* [[c0,c1,..],..] in lexicographic order */
int hq_enumerate_colorings(const hq_diagram* d, const hq_quandle* q, char** out);
/* xi_text: JSON array colouring by the base */
int hq_count_hcolorings(const hq_diagram* d, const hq_quandle* base, const hq_hquandle* h,
                        const char* xi_text, long long* out);
int hq_enumerate_hcolorings(const hq_diagram* d, const hq_quandle* base, const hq_hquandle* h,
                            const char* xi_text, char** out);
/* {"count-as-string": multiplicity, ...} over all base colourings */
int hq_spectrum(const hq_diagram* d, const hq_quandle* base, const hq_hquandle* h, char** out);

/* homology and cohomology */
/* matrix of the degree-n boundary (positive != 0 picks l+r over l-r):
 * {"rows":R,"cols":C,"entries":[[r,c,v],..],"row_basis":[..],"col_basis":[..]} */
int hq_boundary_matrix(const hq_quandle* base, const hq_hquandle* h, int degree, int positive,
                       long long cap_columns, char** out);
/* ring: "z" or "zm:<m>"; representatives included when != 0 */
int hq_cohomology(const hq_quandle* base, const hq_hquandle* h, int degree, const char* ring,
                  int representatives, char** out);
/* cochain_text: {"ring":s,"degree":n,"entries":[{"x":[..],"y":[..],"c":v},..]};
 * result: {"cocycle":b, "witness":{"x":[..],"y":[..]}|null, "coboundary":b} */
int hq_cochain_check(const hq_quandle* base, const hq_hquandle* h, const char* cochain_text,
                     char** out);
/* state-sum invariant of a degree-2 cochain:
 * {"ring":s, "per_base":[{"base_index":k,"weights":{v:mult}}], "flattened":{v:mult}} */
int hq_invariant(const hq_diagram* d, const hq_quandle* base, const hq_hquandle* h,
                 const char* cochain_text, int flatten_only, char** out);

#ifdef __cplusplus
}
#endif

#endif

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "hquandle.h"

using json = nlohmann::ordered_json;

namespace {

struct CliError {
    int code;
    std::string msg;
};

[[noreturn]] void die(int code, const std::string& msg) { throw CliError{code, msg}; }

void check(int status) {
    if (status != HQ_OK) die(status, hq_last_error());
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) die(1, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// stdout, or an atomically replaced file when -o was given
void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::string tmp = out_path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) die(1, "cannot write " + tmp);
        out << text << "\n";
        if (!out) die(1, "write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), out_path.c_str()) != 0) die(1, "cannot replace " + out_path);
}

struct Str {
    char* p = nullptr;
    ~Str() { hq_free_str(p); }
    std::string str() const { return p ? p : ""; }
};

template <typename T, void (*Free)(T*)>
struct Handle {
    T* p = nullptr;
    Handle() = default;
    Handle(const Handle&) = delete;
    Handle& operator=(const Handle&) = delete;
    ~Handle() {
        if (p) Free(p);
    }
};

using QuandleHandle = Handle<hq_quandle, hq_quandle_free>;
using HquandleHandle = Handle<hq_hquandle, hq_hquandle_free>;
using DiagramHandle = Handle<hq_diagram, hq_diagram_free>;

bool g_verbose = false;

void note(const std::string& msg) {
    if (g_verbose) std::cerr << msg << "\n";
}

void load_quandle(const std::string& path, QuandleHandle& q) {
    check(hq_quandle_from_json(read_file(path).c_str(), &q.p));
    note("loaded quandle " + path);
}

void load_hquandle(const std::string& path, HquandleHandle& h) {
    check(hq_hquandle_from_json(read_file(path).c_str(), &h.p));
    note("loaded hierarchical quandle " + path);
}

void load_diagram(const std::string& path, DiagramHandle& d) {
    check(hq_diagram_from_json(read_file(path).c_str(), &d.p));
    note("loaded diagram " + path);
}

json parse_report(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) die(2, "library returned unparseable JSON");
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hierarchical quandle toolkit"};
    app.require_subcommand(1);
    app.add_flag("--verbose", g_verbose, "progress notes on stderr");

    std::function<int()> action;

    // check-quandle <table.json>
    {
        auto* cmd = app.add_subcommand("check-quandle", "verify the quandle axioms of a table");
        auto path = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        cmd->add_option("table", *path, "quandle JSON file")->required();
        cmd->add_option("-o,--output", *out, "write the report here");
        cmd->callback([&action, path, out] {
            action = [path, out] {
                QuandleHandle q;
                load_quandle(*path, q);
                Str report;
                check(hq_quandle_verify(q.p, &report.p));
                write_output(report.str(), *out);
                return parse_report(report.str())["valid"].get<bool>() ? 0 : 2;
            };
        });
    }

    // check-hquandle <tables.json> --quandle base.json
    {
        auto* cmd =
            app.add_subcommand("check-hquandle", "verify the hierarchical quandle axioms");
        auto path = std::make_shared<std::string>();
        auto base = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        cmd->add_option("tables", *path, "hierarchical quandle JSON file")->required();
        cmd->add_option("--quandle", *base, "base quandle JSON file")->required();
        cmd->add_option("-o,--output", *out, "write the report here");
        cmd->callback([&action, path, base, out] {
            action = [path, base, out] {
                HquandleHandle h;
                load_hquandle(*path, h);
                QuandleHandle q;
                load_quandle(*base, q);
                Str report;
                check(hq_hquandle_verify(h.p, q.p, &report.p));
                write_output(report.str(), *out);
                return parse_report(report.str())["valid"].get<bool>() ? 0 : 2;
            };
        });
    }

    // parse-pd <text> [--file f] [--unknots n]
    {
        auto* cmd = app.add_subcommand("parse-pd", "parse PD notation into a diagram");
        auto text = std::make_shared<std::string>();
        auto file = std::make_shared<std::string>();
        auto unknots = std::make_shared<int>(0);
        auto out = std::make_shared<std::string>();
        cmd->add_option("pd", *text, "PD text, e.g. \"X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]\"");
        cmd->add_option("--file", *file, "read the PD text from this file");
        cmd->add_option("--unknots", *unknots, "append crossing-free loop components");
        cmd->add_option("-o,--output", *out, "write the diagram here");
        cmd->callback([&action, cmd, text, file, unknots, out] {
            action = [cmd, text, file, unknots, out] {
                if (!file->empty() && cmd->count("pd") > 0)
                    die(1, "give the PD text either inline or with --file, not both");
                std::string pd = file->empty() ? *text : read_file(*file);
                DiagramHandle d;
                check(hq_diagram_parse_pd(pd.c_str(), *unknots, &d.p));
                Str js;
                check(hq_diagram_to_json(d.p, &js.p));
                write_output(js.str(), *out);
                return 0;
            };
        });
    }

    // moves <diagram.json> --r1 k --r2 k --seed s
    {
        auto* cmd = app.add_subcommand("moves", "apply seeded random Reidemeister moves");
        auto path = std::make_shared<std::string>();
        auto r1 = std::make_shared<int>(0);
        auto r2 = std::make_shared<int>(0);
        auto seed = std::make_shared<unsigned long long>(0);
        auto out = std::make_shared<std::string>();
        cmd->add_option("diagram", *path, "diagram JSON file")->required();
        cmd->add_option("--r1", *r1, "number of random kinks");
        cmd->add_option("--r2", *r2, "number of random pokes");
        cmd->add_option("--seed", *seed, "generator seed");
        cmd->add_option("-o,--output", *out, "write the diagram here");
        cmd->callback([&action, path, r1, r2, seed, out] {
            action = [path, r1, r2, seed, out] {
                DiagramHandle d;
                load_diagram(*path, d);
                DiagramHandle moved;
                check(hq_diagram_random_moves(d.p, *r1, *r2, *seed, &moved.p));
                Str js;
                check(hq_diagram_to_json(moved.p, &js.p));
                write_output(js.str(), *out);
                return 0;
            };
        });
    }

    // colorings <diagram.json> --quandle q.json [--count-only]
    {
        auto* cmd = app.add_subcommand("colorings", "enumerate quandle colourings");
        auto path = std::make_shared<std::string>();
        auto quandle = std::make_shared<std::string>();
        auto count_only = std::make_shared<bool>(false);
        auto out = std::make_shared<std::string>();
        cmd->add_option("diagram", *path, "diagram JSON file")->required();
        cmd->add_option("--quandle", *quandle, "colouring quandle JSON file")->required();
        cmd->add_flag("--count-only", *count_only, "print only the count");
        cmd->add_option("-o,--output", *out, "write the result here");
        cmd->callback([&action, path, quandle, count_only, out] {
            action = [path, quandle, count_only, out] {
                DiagramHandle d;
                load_diagram(*path, d);
                QuandleHandle q;
                load_quandle(*quandle, q);
                if (*count_only) {
                    long long n = 0;
                    check(hq_count_colorings(d.p, q.p, &n));
                    json j;
                    j["count"] = n;
                    write_output(j.dump(), *out);
                } else {
                    Str js;
                    check(hq_enumerate_colorings(d.p, q.p, &js.p));
                    write_output(js.str(), *out);
                }
                return 0;
            };
        });
    }

    // hcolorings <diagram.json> --quandle --hquandle (--base-index k | --all)
    {
        auto* cmd = app.add_subcommand("hcolorings", "enumerate hierarchical colourings");
        auto path = std::make_shared<std::string>();
        auto quandle = std::make_shared<std::string>();
        auto hquandle = std::make_shared<std::string>();
        auto base_index = std::make_shared<int>(-1);
        auto all = std::make_shared<bool>(false);
        auto out = std::make_shared<std::string>();
        cmd->add_option("diagram", *path, "diagram JSON file")->required();
        cmd->add_option("--quandle", *quandle, "base quandle JSON file")->required();
        cmd->add_option("--hquandle", *hquandle, "hierarchical quandle JSON file")->required();
        auto* bi = cmd->add_option("--base-index", *base_index,
                                   "index into the enumerated base colourings");
        auto* al = cmd->add_flag("--all", *all, "every base colouring in turn");
        bi->excludes(al);
        cmd->add_option("-o,--output", *out, "write the result here");
        cmd->callback([&action, cmd, path, quandle, hquandle, base_index, all, out] {
            action = [cmd, path, quandle, hquandle, base_index, all, out] {
                if (!*all && cmd->count("--base-index") == 0)
                    die(1, "pick --base-index k or --all");
                DiagramHandle d;
                load_diagram(*path, d);
                QuandleHandle q;
                load_quandle(*quandle, q);
                HquandleHandle h;
                load_hquandle(*hquandle, h);
                Str xi_all;
                check(hq_enumerate_colorings(d.p, q.p, &xi_all.p));
                json xis = parse_report(xi_all.str());
                auto one = [&](const json& xi) {
                    Str js;
                    check(hq_enumerate_hcolorings(d.p, q.p, h.p, xi.dump().c_str(), &js.p));
                    return parse_report(js.str());
                };
                if (*all) {
                    json outj = json::array();
                    for (size_t k = 0; k < xis.size(); ++k) {
                        json row;
                        row["base_index"] = k;
                        row["xi"] = xis[k];
                        row["colorings"] = one(xis[k]);
                        outj.push_back(row);
                    }
                    write_output(outj.dump(), *out);
                } else {
                    if (*base_index < 0 || *base_index >= static_cast<int>(xis.size()))
                        die(2, "base colouring index out of range (have " +
                                   std::to_string(xis.size()) + ")");
                    write_output(one(xis[*base_index]).dump(), *out);
                }
                return 0;
            };
        });
    }

    // spectrum <diagram.json> --quandle --hquandle
    {
        auto* cmd =
            app.add_subcommand("spectrum", "multiset of hierarchical counts per base colouring");
        auto path = std::make_shared<std::string>();
        auto quandle = std::make_shared<std::string>();
        auto hquandle = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        cmd->add_option("diagram", *path, "diagram JSON file")->required();
        cmd->add_option("--quandle", *quandle, "base quandle JSON file")->required();
        cmd->add_option("--hquandle", *hquandle, "hierarchical quandle JSON file")->required();
        cmd->add_option("-o,--output", *out, "write the result here");
        cmd->callback([&action, path, quandle, hquandle, out] {
            action = [path, quandle, hquandle, out] {
                DiagramHandle d;
                load_diagram(*path, d);
                QuandleHandle q;
                load_quandle(*quandle, q);
                HquandleHandle h;
                load_hquandle(*hquandle, h);
                Str js;
                check(hq_spectrum(d.p, q.p, h.p, &js.p));
                write_output(js.str(), *out);
                return 0;
            };
        });
    }

    // homology-matrix --quandle --hquandle --degree n [--positive] [--cap-columns N]
    {
        auto* cmd = app.add_subcommand("homology-matrix", "sparse boundary matrix of a degree");
        auto quandle = std::make_shared<std::string>();
        auto hquandle = std::make_shared<std::string>();
        auto degree = std::make_shared<int>(2);
        auto positive = std::make_shared<bool>(false);
        auto cap = std::make_shared<long long>(0);
        auto out = std::make_shared<std::string>();
        cmd->add_option("--quandle", *quandle, "base quandle JSON file")->required();
        cmd->add_option("--hquandle", *hquandle, "hierarchical quandle JSON file")->required();
        cmd->add_option("--degree", *degree, "source degree n")->required();
        cmd->add_flag("--positive", *positive, "use the sign-free variant l + r");
        cmd->add_option("--cap-columns", *cap, "override the basis size cap");
        cmd->add_option("-o,--output", *out, "write the matrix here");
        cmd->callback([&action, quandle, hquandle, degree, positive, cap, out] {
            action = [quandle, hquandle, degree, positive, cap, out] {
                QuandleHandle q;
                load_quandle(*quandle, q);
                HquandleHandle h;
                load_hquandle(*hquandle, h);
                Str js;
                check(hq_boundary_matrix(q.p, h.p, *degree, *positive ? 1 : 0, *cap, &js.p));
                write_output(js.str(), *out);
                return 0;
            };
        });
    }

    // cohomology --quandle --hquandle --degree n --ring r [--representatives]
    {
        auto* cmd = app.add_subcommand("cohomology", "cohomology of the cochain complex");
        auto quandle = std::make_shared<std::string>();
        auto hquandle = std::make_shared<std::string>();
        auto degree = std::make_shared<int>(2);
        auto ring = std::make_shared<std::string>("z");
        auto reps = std::make_shared<bool>(false);
        auto out = std::make_shared<std::string>();
        cmd->add_option("--quandle", *quandle, "base quandle JSON file")->required();
        cmd->add_option("--hquandle", *hquandle, "hierarchical quandle JSON file")->required();
        cmd->add_option("--degree", *degree, "cochain degree")->required();
        cmd->add_option("--ring", *ring, "coefficients: z or zm:<m>");
        cmd->add_flag("--representatives", *reps, "include representative cocycles");
        cmd->add_option("-o,--output", *out, "write the result here");
        cmd->callback([&action, quandle, hquandle, degree, ring, reps, out] {
            action = [quandle, hquandle, degree, ring, reps, out] {
                QuandleHandle q;
                load_quandle(*quandle, q);
                HquandleHandle h;
                load_hquandle(*hquandle, h);
                Str js;
                check(hq_cohomology(q.p, h.p, *degree, ring->c_str(), *reps ? 1 : 0, &js.p));
                write_output(js.str(), *out);
                return 0;
            };
        });
    }

    // invariant <diagram.json> --quandle --hquandle --cocycle w.json [--flatten]
    {
        auto* cmd = app.add_subcommand("invariant", "cocycle state-sum invariant");
        auto path = std::make_shared<std::string>();
        auto quandle = std::make_shared<std::string>();
        auto hquandle = std::make_shared<std::string>();
        auto cocycle = std::make_shared<std::string>();
        auto flatten = std::make_shared<bool>(false);
        auto out = std::make_shared<std::string>();
        cmd->add_option("diagram", *path, "diagram JSON file")->required();
        cmd->add_option("--quandle", *quandle, "base quandle JSON file")->required();
        cmd->add_option("--hquandle", *hquandle, "hierarchical quandle JSON file")->required();
        cmd->add_option("--cocycle", *cocycle, "degree-2 cochain JSON file")->required();
        cmd->add_flag("--flatten", *flatten, "emit only the flattened multiset");
        cmd->add_option("-o,--output", *out, "write the result here");
        cmd->callback([&action, path, quandle, hquandle, cocycle, flatten, out] {
            action = [path, quandle, hquandle, cocycle, flatten, out] {
                DiagramHandle d;
                load_diagram(*path, d);
                QuandleHandle q;
                load_quandle(*quandle, q);
                HquandleHandle h;
                load_hquandle(*hquandle, h);
                std::string w = read_file(*cocycle);
                Str js;
                check(hq_invariant(d.p, q.p, h.p, w.c_str(), *flatten ? 1 : 0, &js.p));
                write_output(js.str(), *out);
                return 0;
            };
        });
    }

    // product --quandle base.json --hquandle h.json
    {
        auto* cmd = app.add_subcommand("product", "product quandle on labelled pairs");
        auto quandle = std::make_shared<std::string>();
        auto hquandle = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        cmd->add_option("--quandle", *quandle, "base quandle JSON file")->required();
        cmd->add_option("--hquandle", *hquandle, "hierarchical quandle JSON file")->required();
        cmd->add_option("-o,--output", *out, "write the product table here");
        cmd->callback([&action, quandle, hquandle, out] {
            action = [quandle, hquandle, out] {
                QuandleHandle q;
                load_quandle(*quandle, q);
                HquandleHandle h;
                load_hquandle(*hquandle, h);
                QuandleHandle p;
                check(hq_product_quandle(q.p, h.p, &p.p));
                Str js;
                check(hq_quandle_to_json(p.p, &js.p));
                write_output(js.str(), *out);
                return 0;
            };
        });
    }

    // decompose <quandle.json> --base-size m --fiber-size n [--pairing p.json]
    {
        auto* cmd =
            app.add_subcommand("decompose", "split a quandle over the pair projection");
        auto path = std::make_shared<std::string>();
        auto base_size = std::make_shared<int>(0);
        auto fiber_size = std::make_shared<int>(0);
        auto pairing = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        cmd->add_option("table", *path, "quandle JSON file")->required();
        cmd->add_option("--base-size", *base_size, "base size m")->required();
        cmd->add_option("--fiber-size", *fiber_size, "fibre size n")->required();
        cmd->add_option("--pairing", *pairing, "JSON [[x,y],..] element pairing");
        cmd->add_option("-o,--output", *out, "write the result here");
        cmd->callback([&action, path, base_size, fiber_size, pairing, out] {
            action = [path, base_size, fiber_size, pairing, out] {
                QuandleHandle q;
                load_quandle(*path, q);
                std::string ptext;
                if (!pairing->empty()) ptext = read_file(*pairing);
                Str js;
                check(hq_decompose(q.p, *base_size, *fiber_size,
                                   ptext.empty() ? nullptr : ptext.c_str(), &js.p));
                write_output(js.str(), *out);
                return parse_report(js.str())["ok"].get<bool>() ? 0 : 2;
            };
        });
    }

    // search-hquandles --base q.json --y-size n [--limit k] [--fix-diagonal t.json]
    {
        auto* cmd = app.add_subcommand("search-hquandles",
                                       "enumerate hierarchical quandles over a base");
        auto base = std::make_shared<std::string>();
        auto y_size = std::make_shared<int>(0);
        auto limit = std::make_shared<long long>(0);
        auto diag = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        cmd->add_option("--base", *base, "base quandle JSON file")->required();
        cmd->add_option("--y-size", *y_size, "fibre size")->required();
        cmd->add_option("--limit", *limit, "stop after this many results (0 = all)");
        cmd->add_option("--fix-diagonal", *diag, "JSON table forced on diagonal slots");
        cmd->add_option("-o,--output", *out, "write the results here");
        cmd->callback([&action, base, y_size, limit, diag, out] {
            action = [base, y_size, limit, diag, out] {
                QuandleHandle q;
                load_quandle(*base, q);
                std::string dtext;
                if (!diag->empty()) dtext = read_file(*diag);
                Str js;
                check(hq_search_hquandles(q.p, *y_size, *limit,
                                          dtext.empty() ? nullptr : dtext.c_str(), &js.p));
                write_output(js.str(), *out);
                return 0;
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1; // --help exits 0, every parse failure exits 1
    }

    try {
        return action();
    } catch (const CliError& e) {
        std::cerr << "error: " << e.msg << "\n";
        return e.code;
    }
}

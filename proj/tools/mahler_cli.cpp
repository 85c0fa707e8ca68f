#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mahler/mahler.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

std::string g12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

json number(double v) {
    if (std::isfinite(v)) return v;
    return nullptr;
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
    std::vector<std::size_t> row(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t diag = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            std::size_t up = row[j];
            row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
            diag = up;
        }
    }
    return row[b.size()];
}

void suggest(std::string_view what, const std::string& got, std::vector<std::string_view> known) {
    std::stable_sort(known.begin(), known.end(),
                     [&](std::string_view x, std::string_view y) { return edit_distance(got, x) < edit_distance(got, y); });
    std::cerr << "unknown " << what << " '" << got << "'; did you mean:";
    for (std::size_t i = 0; i < known.size() && i < 3; ++i) std::cerr << " " << known[i];
    std::cerr << "\navailable:";
    std::sort(known.begin(), known.end());
    for (auto k : known) std::cerr << " " << k;
    std::cerr << "\n";
}

struct QuadFlags {
    double tol = mahler::QuadratureConfig{}.abs_tol;
    int max_panels = mahler::QuadratureConfig{}.max_panels;
    int grid = mahler::QuadratureConfig{}.grid_2d;

    void attach(CLI::App* app) {
        app->add_option("--tol", tol, "quadrature absolute tolerance")->capture_default_str();
        app->add_option("--max-panels", max_panels, "adaptive panel budget")->capture_default_str();
        app->add_option("--grid", grid, "base grid size for two and more variables")->capture_default_str();
    }
    mahler::QuadratureConfig config() const {
        mahler::QuadratureConfig c;
        c.abs_tol = tol;
        c.max_panels = max_panels;
        c.grid_2d = grid;
        c.validate();
        return c;
    }
};

struct ComputeFlags {
    std::string kind;
    std::vector<std::string> polys;
    std::optional<int> k;
    std::vector<double> s;
    bool as_json = false;
    QuadFlags quad;
};

int run_compute(const ComputeFlags& f) {
    using namespace mahler;
    auto cfg = f.quad.config();
    if (f.polys.empty()) throw DomainError("--poly is required");
    auto polys = parse_polys(f.polys);
    QuadratureResult r;
    if (f.kind == "mm") {
        if (polys.size() != 1) throw DomainError("mm takes exactly one --poly");
        if (!f.k) throw DomainError("mm needs --k");
        r = mm_numeric(polys[0], *f.k, cfg);
    } else if (f.kind == "mmulti") {
        r = multiple_mm_numeric(polys, cfg);
    } else if (f.kind == "zeta") {
        if (polys.size() != 1 || f.s.size() != 1) throw DomainError("zeta takes one --poly and one --s");
        r = zeta_mm_numeric(polys[0], f.s[0], cfg);
    } else {
        if (f.s.size() != polys.size()) throw DomainError("hzeta needs one --s per --poly");
        r = higher_zeta_mm_numeric(polys, f.s, cfg);
    }
    if (f.as_json) {
        json j;
        j["kind"] = f.kind;
        j["polys"] = f.polys;
        if (f.k) j["k"] = *f.k;
        if (!f.s.empty()) j["s"] = f.s;
        j["value"] = number(r.value);
        j["err_estimate"] = number(r.err_estimate);
        j["evals"] = r.evals;
        j["converged"] = r.converged;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "value        " << g12(r.value) << "\n"
                  << "err_estimate " << g12(r.err_estimate) << "\n"
                  << "evals        " << r.evals << "\n"
                  << "converged    " << (r.converged ? "yes" : "no") << "\n";
    }
    if (!r.converged) std::cerr << "warning: quadrature did not reach the requested tolerance\n";
    return exit_ok;
}

int run_closed_form(const std::string& name, const mahler::NamedArgs& args, bool as_json) {
    std::string key = name;
    std::replace(key.begin(), key.end(), '_', '-');
    auto known = mahler::named_formulas();
    if (std::find(known.begin(), known.end(), key) == known.end()) {
        suggest("formula", name, known);
        return exit_usage;
    }
    auto r = mahler::evaluate_named(key, args);
    if (as_json) {
        json j;
        j["name"] = r.name;
        if (r.value) j["value"] = number(*r.value);
        if (!r.coefficients.empty()) {
            j["coefficients"] = json::array();
            for (double c : r.coefficients) j["coefficients"].push_back(number(c));
        }
        j["method"] = r.method;
        j["tail_bound"] = number(r.tail_bound);
        j["terms"] = r.terms;
        if (r.exact) j["exact"] = *r.exact;
        if (auto* e = mahler::find_catalogue_entry(r.name)) j["summary"] = std::string(e->summary);
        std::cout << j.dump(2) << "\n";
        return exit_ok;
    }
    if (r.value) std::cout << "value      " << g12(*r.value) << "\n";
    for (std::size_t i = 0; i < r.coefficients.size(); ++i)
        std::cout << "x^" << i << (i < 10 ? "        " : "       ") << g12(r.coefficients[i]) << "\n";
    if (r.exact) std::cout << "exact      " << *r.exact << "\n";
    std::cout << "method     " << r.method << "\n";
    if (r.tail_bound != 0.0) std::cout << "tail_bound " << g12(r.tail_bound) << "\n";
    if (r.terms != 0) std::cout << "terms      " << r.terms << "\n";
    return exit_ok;
}

int run_verify(const std::string& suite, const std::optional<std::string>& json_path, const QuadFlags& quad, int order,
               bool timing) {
    if (!mahler::suite_mask(suite)) {
        suggest("suite", suite, mahler::suite_names());
        return exit_usage;
    }
    mahler::VerifyConfig vc;
    vc.quad = quad.config();
    vc.order = order;
    vc.timing = timing;
    auto report = mahler::run_suite(suite, vc);
    const bool json_to_stdout = json_path && *json_path == "-";
    std::ostream& text = json_to_stdout ? std::cerr : std::cout;
    for (const auto& c : report.checks) {
        text << (c.status == mahler::CheckStatus::Pass ? "PASS" : c.status == mahler::CheckStatus::Fail ? "FAIL" : "SKIP")
             << "  " << c.name << "  lhs=" << g12(c.lhs) << " rhs=" << g12(c.rhs) << " err=" << g12(c.abs_err)
             << " tol=" << g12(c.tol);
        if (!c.note.empty()) text << "  (" << c.note << ")";
        text << "\n";
    }
    text << "suite " << report.suite << ": " << report.pass << " pass, " << report.fail << " fail, " << report.skip
         << " skip\n";
    if (json_path) {
        const std::string dumped = mahler::to_json(report).dump(2) + "\n";
        if (json_to_stdout) {
            std::cout << dumped;
        } else {
            std::ofstream out(*json_path, std::ios::binary);
            if (!out) {
                std::cerr << "cannot write " << *json_path << "\n";
                return exit_usage;
            }
            out << dumped;
        }
    }
    return report.fail == 0 ? exit_ok : exit_fail;
}

int run_table(const std::string& which, const QuadFlags& quad, bool as_json) {
    auto names = mahler::table_names();
    if (std::find(names.begin(), names.end(), which) == names.end()) {
        suggest("table", which, names);
        return exit_usage;
    }
    auto rows = mahler::paper_examples_table(quad.config());
    if (as_json) {
        json j = json::array();
        for (const auto& r : rows)
            j.push_back({{"quantity", r.quantity},
                         {"formula", r.formula},
                         {"value", number(r.value)},
                         {"numeric", r.numeric ? number(*r.numeric) : json(nullptr)}});
        std::cout << j.dump(2) << "\n";
        return exit_ok;
    }
    std::size_t wq = 8, wf = 7;
    for (const auto& r : rows) {
        wq = std::max(wq, r.quantity.size());
        wf = std::max(wf, r.formula.size());
    }
    auto pad = [](std::string s, std::size_t w) {
        s.resize(std::max(s.size(), w), ' ');
        return s;
    };
    std::cout << pad("quantity", wq) << "  " << pad("formula", wf) << "  " << pad("value", 20) << "numeric\n";
    for (const auto& r : rows)
        std::cout << pad(r.quantity, wq) << "  " << pad(r.formula, wf) << "  " << pad(g12(r.value), 20)
                  << (r.numeric ? g12(*r.numeric) : std::string("-")) << "\n";
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Higher and zeta Mahler measures: numerics, closed forms and identity checks"};
    app.require_subcommand(1);

    ComputeFlags cf;
    auto* compute = app.add_subcommand("compute", "numerical measure of Laurent polynomials on the torus");
    compute->add_option("kind", cf.kind, "mm | mmulti | zeta | hzeta")
        ->required()
        ->check(CLI::IsMember({"mm", "mmulti", "zeta", "hzeta"}));
    compute->add_option("--poly", cf.polys, "polynomial, e.g. \"1+x+y\" (repeat for several)");
    compute->add_option("--k", cf.k, "power of the logarithm (mm)");
    compute->add_option("--s", cf.s, "exponent (zeta; repeat for hzeta)");
    compute->add_flag("--json", cf.as_json, "print a JSON record");
    cf.quad.attach(compute);

    std::string formula;
    mahler::NamedArgs na;
    bool cf_json = false;
    std::string bs_text;
    auto* closed = app.add_subcommand("closed-form", "evaluate a catalogue formula by name");
    closed->add_option("name", formula, "formula name (see --list)");
    bool list = false;
    closed->add_flag("--list", list, "list formula names");
    closed->add_option("--alpha", na.alpha, "first parameter (real or complex literal)");
    closed->add_option("--beta", na.beta, "second parameter (real or complex literal)");
    closed->add_option("--k", na.k);
    closed->add_option("--l", na.l);
    closed->add_option("--N", na.N);
    closed->add_option("--order", na.order);
    closed->add_option("--terms", na.terms);
    closed->add_option("--s", na.s);
    closed->add_option("--t", na.t);
    closed->add_option("--c", na.c);
    closed->add_option("--lambda", na.lambda);
    closed->add_option("--poly", na.poly);
    closed->add_option("--method", na.method);
    closed->add_option("--mode", na.mode);
    closed->add_option("--bs", bs_text, "comma separated list, e.g. 2,3,4");
    closed->add_flag("--json", cf_json);

    std::string suite;
    std::optional<std::string> json_path;
    QuadFlags vq;
    int order = mahler::VerifyConfig{}.order;
    bool timing = false;
    auto* verify = app.add_subcommand("verify", "run an identity suite");
    verify->add_option("--suite", suite, "quick | mzv | one-var | two-var | zeta | dyson | all")->required();
    verify->add_option("--json", json_path, "write the report as JSON to this path ('-' for stdout)");
    verify->add_option("--order", order, "series truncation order")->capture_default_str();
    verify->add_flag("--timing", timing, "record per-check runtime in milliseconds");
    vq.attach(verify);

    std::string table;
    QuadFlags tq;
    bool table_json = false;
    auto* tab = app.add_subcommand("table", "print a table of worked examples");
    tab->add_option("which", table, "paper-examples")->required();
    tab->add_flag("--json", table_json);
    tq.attach(tab);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*compute) return run_compute(cf);
        if (*closed) {
            if (list) {
                for (auto n : mahler::named_formulas()) std::cout << n << "\n";
                return exit_ok;
            }
            if (formula.empty()) {
                std::cerr << "closed-form needs a formula name\n";
                return exit_usage;
            }
            std::stringstream ss(bs_text);
            for (std::string item; std::getline(ss, item, ',');) {
                if (item.empty()) continue;
                na.bs.push_back(std::stoi(item));
            }
            return run_closed_form(formula, na, cf_json);
        }
        if (*verify) return run_verify(suite, json_path, vq, order, timing);
        if (*tab) return run_table(table, tq, table_json);
    } catch (const mahler::ConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_fail;
    } catch (const mahler::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: invalid number: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: number out of range\n";
        return exit_usage;
    }
    return exit_usage;
}

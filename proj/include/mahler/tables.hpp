#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "closed_forms.hpp"
#include "parse.hpp"
#include "specfun.hpp"
#include "torus.hpp"

namespace mahler {

struct TableRow {
    std::string quantity;
    std::string formula;
    double value;                   // from the closed form
    std::optional<double> numeric;  // independent numerical route, when one is cheap
};

inline std::vector<std::string_view> table_names() { return {"paper-examples"}; }

// Worked examples: closed-form value next to a numerical evaluation of the same measure.
inline std::vector<TableRow> paper_examples_table(const QuadratureConfig& cfg = {}) {
    const double pi = std::numbers::pi;
    const double z2 = riemann_zeta(2), z3 = riemann_zeta(3), z4 = riemann_zeta(4), z5 = riemann_zeta(5),
                 z6 = riemann_zeta(6);
    auto mm = [&](const char* p, int k) { return mm_numeric(parse_poly(p), k, cfg).value; };
    auto pair = [&](const char* p, const char* q) { return multiple_mm_numeric({parse_poly(p), parse_poly(q)}, cfg).value; };
    std::vector<TableRow> rows;
    rows.push_back({"m2(1-x)", "zeta(2)/2", z2 / 2, mm("1-x", 2)});
    rows.push_back({"m3(1-x)", "-3 zeta(3)/2", -1.5 * z3, mm("1-x", 3)});
    rows.push_back({"m4(1-x)", "(3 zeta(2)^2 + 21 zeta(4))/4", (3 * z2 * z2 + 21 * z4) / 4, mm("1-x", 4)});
    rows.push_back({"m5(1-x)", "-(15 zeta(2) zeta(3) + 45 zeta(5))/2", -(15 * z2 * z3 + 45 * z5) / 2, mm("1-x", 5)});
    rows.push_back({"m6(1-x)", "(930 zeta(6) + 180 zeta(3)^2 + 315 zeta(2) zeta(4) + 15 zeta(2)^3)/8",
                    (930 * z6 + 180 * z3 * z3 + 315 * z2 * z4 + 15 * z2 * z2 * z2) / 8, mm("1-x", 6)});
    rows.push_back({"m(1-x, 1-x)", "pi^2/12", pi * pi / 12, pair("1-x", "1-x")});
    rows.push_back({"m(1-x, 1+x)", "-pi^2/24", -pi * pi / 24, pair("1-x", "1+x")});
    rows.push_back({"m(1-x, 1+ix)", "-pi^2/96", -pi * pi / 96, pair("1-x", "1+1i*x")});
    rows.push_back({"m(x-1, x+1)", "-zeta(2)/4", -z2 / 4, pair("x-1", "x+1")});
    rows.push_back({"m(x-1, x-1, x+1)", "zeta(3)/4", z3 / 4,
                    multiple_mm_numeric({parse_poly("x-1"), parse_poly("x-1"), parse_poly("x+1")}, cfg).value});
    rows.push_back({"Z(2, x-1)", "2", 2.0, zeta_mm_numeric(parse_poly("x-1"), 2.0, cfg).value});
    rows.push_back({"Z(4, x-1)", "6", 6.0, zeta_mm_numeric(parse_poly("x-1"), 4.0, cfg).value});
    rows.push_back({"m(x+y+1)", "(3 sqrt(3)/(4 pi)) L(chi_-3, 2)", paper_constant("smyth-xy1"), mm("x+y+1", 1)});
    rows.push_back({"m(1-x+y(1+x))", "(2/pi) L(chi_-4, 2)", paper_constant("smyth-2"), mm("1-x+y*(1+x)", 1)});
    rows.push_back({"m2(x+y+1)", "5 pi^2/54", paper_constant("m2-x-plus-y-plus-1"), mm("x+y+1", 2)});
    rows.push_back({"m2(1+x+y(1-x))", "Li_{2,1}, zeta(2), log 2 L(chi_-4, 2) assembly", m2_smyth2_printed(),
                    mm("1+x+y*(1-x)", 2)});
    rows.push_back({"m2(x+y+2)", "zeta(2)/2", z2 / 2, mm("x+y+2", 2)});
    rows.push_back({"m3(x+y+2)", "(9/2) log 2 zeta(2) - (15/4) zeta(3)", paper_constant("m3-x-y-2"),
                    m3_x_y_c(2.0, SumMethod::Series).value});
    rows.push_back({"Z(2, x+1/x+y+1/y+5)", "29", 29.0, Z_4cycle(2.0, 5.0).value});
    for (unsigned k = 1; k <= 3; ++k)
        rows.push_back({"Z(" + std::to_string(k) + ", P_2)", "(2k)!/(k!)^2 = " + dyson_Z(2, k).to_string(),
                        dyson_Z(2, k).to_double(), zeta_mm_numeric(parse_poly("(1-x/y)*(1-y/x)"), k, cfg).value});
    return rows;
}

} // namespace mahler

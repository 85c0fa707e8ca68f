#include <cstdio>

#include "mahler/mahler.hpp"

int main() {
    using namespace mahler;

    auto p = parse_poly("1 - x");
    for (int k = 1; k <= 4; ++k) {
        auto r = mm_numeric(p, k);
        std::printf("m_%d(1-x) = %.12f  (closed form %.12f)\n", k, r.value,
                    k == 1 ? 0.0 : mk_one_minus_x(k, MkMethod::ExpSeries));
    }

    auto q = parse_poly("x + y + 2");
    std::printf("Z(1.5, x+y+2) quadrature %.10f, series %.10f\n", zeta_mm_numeric(q, 1.5).value,
                Z_x_y_c(1.5, 2.0).value);

    auto box = parse_poly("x + 1/x + y + 1/y + 5");
    std::printf("CT((x+1/x+y+1/y+5)^4) = %s\n", box.constant_term_power(4).to_string().c_str());

    auto report = run_suite("quick");
    std::printf("quick suite: %d pass, %d fail, %d skip\n", report.pass, report.fail, report.skip);
}

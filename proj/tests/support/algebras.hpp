#pragma once

#include <string>
#include <vector>

#include "cohesion/algfin.hpp"

namespace testsupport {

using namespace cohesion;

// ℚ[x]/(p) for monic p of degree ≥ 1 (coefficients from the constant term),
// basis 1, x, ..., x^{d-1}.
inline StructAlgebra polynomial_quotient(const Polynomial& p) {
    const std::size_t d = p.size() - 1;
    StructAlgebra a;
    for (std::size_t i = 0; i < d; ++i) a.basis.push_back(i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i));
    a.unit.assign(d, 0);
    a.unit[0] = 1;
    // Reduce x^e modulo p, for e < 2d - 1.
    std::vector<Vector> powers;
    Vector cur(d, 0);
    cur[0] = 1;
    for (std::size_t e = 0; e + 1 < 2 * d; ++e) {
        powers.push_back(cur);
        Vector next(d, 0);
        for (std::size_t i = 0; i + 1 < d; ++i) next[i + 1] = cur[i];
        const Rational top = cur[d - 1];
        for (std::size_t i = 0; i < d; ++i) next[i] -= top * p[i];
        cur = next;
    }
    a.mult.assign(d, std::vector<Vector>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) a.mult[i][j] = powers[i + j];
    return a;
}

inline StructAlgebra direct_product(const StructAlgebra& a, const StructAlgebra& b, const std::string& left = "a",
                                    const std::string& right = "b") {
    const std::size_t n = a.dim(), m = b.dim();
    StructAlgebra p;
    for (const auto& s : a.basis) p.basis.push_back(left + "." + s);
    for (const auto& s : b.basis) p.basis.push_back(right + "." + s);
    p.unit = a.unit;
    p.unit.insert(p.unit.end(), b.unit.begin(), b.unit.end());
    p.mult.assign(n + m, std::vector<Vector>(n + m, Vector(n + m, 0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) p.mult[i][j][k] = a.mult[i][j][k];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) p.mult[n + i][n + j][n + k] = b.mult[i][j][k];
    return p;
}

inline StructAlgebra rationals() { return polynomial_quotient({0, 1}); }
inline StructAlgebra dual_numbers() { return polynomial_quotient({0, 0, 1}); }
inline StructAlgebra rationals_squared() { return direct_product(rationals(), rationals()); }
inline StructAlgebra sqrt2_field() { return polynomial_quotient({-2, 0, 1}); }
inline StructAlgebra cube_minus_x() { return polynomial_quotient({0, -1, 0, 1}); }
inline StructAlgebra three_factors() { return direct_product(rationals_squared(), dual_numbers(), "p", "d"); }

// ℚ[x,y]/(x², xy, y²), basis 1, x, y.
inline StructAlgebra square_zero_plane() {
    StructAlgebra a;
    a.basis = {"1", "x", "y"};
    a.unit = {1, 0, 0};
    a.mult.assign(3, std::vector<Vector>(3, Vector(3, 0)));
    for (std::size_t i = 0; i < 3; ++i) {
        a.mult[0][i][i] = 1;
        a.mult[i][0][i] = 1;
    }
    return a;
}

inline Polynomial poly_multiply(const Polynomial& a, const Polynomial& b) {
    Polynomial out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace testsupport

#include "cohesion/algfin.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

#include "cohesion/error.hpp"

namespace cohesion {
namespace {

void require_valid(const StructAlgebra& a) {
    const auto report = validate_algebra(a);
    if (!report.ok()) throw Error(ErrorCode::InvalidInput, "invalid algebra: " + report.violations.front());
}

std::string triple(const StructAlgebra& a, std::size_t i, std::size_t j, std::size_t k) {
    return "(" + a.basis[i] + ", " + a.basis[j] + ", " + a.basis[k] + ")";
}

// The quotient by the radical, on the complement spanned by the non-pivot
// basis vectors.
struct Quotient {
    std::vector<std::size_t> complement;
    StructAlgebra algebra;
};

Quotient semisimple_quotient(const StructAlgebra& a, const std::vector<Vector>& rad) {
    const std::size_t n = a.dim();
    std::vector<bool> pivot(n, false);
    std::vector<std::size_t> pivots;
    for (const auto& r : rad) {
        const auto p = static_cast<std::size_t>(std::ranges::find_if(r, [](const Rational& x) { return x != 0; }) - r.begin());
        pivot[p] = true;
        pivots.push_back(p);
    }
    Quotient q;
    for (std::size_t j = 0; j < n; ++j)
        if (!pivot[j]) q.complement.push_back(j);
    const std::size_t m = q.complement.size();
    auto project = [&](const Vector& v) {
        Vector w = v;
        for (std::size_t i = 0; i < rad.size(); ++i) {
            const Rational coeff = w[pivots[i]];
            if (coeff == 0) continue;
            for (std::size_t j = 0; j < n; ++j) w[j] -= coeff * rad[i][j];
        }
        Vector out(m);
        for (std::size_t c = 0; c < m; ++c) out[c] = w[q.complement[c]];
        return out;
    };
    for (auto j : q.complement) q.algebra.basis.push_back(a.basis[j]);
    q.algebra.unit = project(a.unit);
    q.algebra.mult.assign(m, std::vector<Vector>(m));
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y)
            q.algebra.mult[x][y] = project(a.mult[q.complement[x]][q.complement[y]]);
    return q;
}

Matrix trace_form(const StructAlgebra& a) {
    const std::size_t n = a.dim();
    std::vector<Matrix> ops;
    for (std::size_t i = 0; i < n; ++i) ops.push_back(multiplication_matrix(a, basis_vector(a, i)));
    std::vector<Rational> traces;
    for (const auto& op : ops) traces.push_back(trace(op));
    Matrix t(n, Vector(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) t[i][j] += a.mult[i][j][k] * traces[k];
    return t;
}

std::vector<Vector> unchecked_radical(const StructAlgebra& a) {
    return span_basis(kernel(trace_form(a), a.dim()), a.dim());
}

}  // namespace

ValidationReport validate_algebra(const StructAlgebra& a) {
    ValidationReport report;
    const std::size_t n = a.dim();
    if (a.unit.size() != n) report.violations.push_back("unit has " + std::to_string(a.unit.size()) + " coordinates, expected " + std::to_string(n));
    bool shaped = a.mult.size() == n;
    for (std::size_t i = 0; shaped && i < n; ++i) {
        shaped = a.mult[i].size() == n;
        for (std::size_t j = 0; shaped && j < n; ++j) shaped = a.mult[i][j].size() == n;
    }
    if (!shaped) report.violations.push_back("multiplication table is not " + std::to_string(n) + "x" + std::to_string(n) + "x" + std::to_string(n));
    if (!report.ok()) return report;

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (a.mult[i][j] != a.mult[j][i])
                report.violations.push_back("not commutative: " + a.basis[i] + "*" + a.basis[j] + " != " + a.basis[j] + "*" + a.basis[i]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Vector left = product(a, a.mult[i][j], basis_vector(a, k));
                const Vector right = product(a, basis_vector(a, i), a.mult[j][k]);
                if (left != right) report.violations.push_back("not associative at " + triple(a, i, j, k));
            }
    for (std::size_t i = 0; i < n; ++i)
        if (product(a, a.unit, basis_vector(a, i)) != basis_vector(a, i))
            report.violations.push_back("unit law fails on " + a.basis[i]);
    return report;
}

Vector basis_vector(const StructAlgebra& a, std::size_t i) {
    Vector v(a.dim(), 0);
    v.at(i) = 1;
    return v;
}

Vector product(const StructAlgebra& a, const Vector& x, const Vector& y) {
    const std::size_t n = a.dim();
    Vector out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j] == 0) continue;
            const Rational c = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k) out[k] += c * a.mult[i][j][k];
        }
    }
    return out;
}

Matrix multiplication_matrix(const StructAlgebra& a, const Vector& x) {
    const std::size_t n = a.dim();
    Matrix m(n, Vector(n, 0));
    for (std::size_t j = 0; j < n; ++j) {
        const Vector col = product(a, x, basis_vector(a, j));
        for (std::size_t k = 0; k < n; ++k) m[k][j] = col[k];
    }
    return m;
}

bool is_nilpotent(const StructAlgebra& a, const Vector& x) {
    Vector power = x;
    for (std::size_t i = 1; i < std::max<std::size_t>(a.dim(), 1); ++i) power = product(a, power, x);
    return is_zero(power);
}

std::vector<Vector> radical(const StructAlgebra& a) {
    require_valid(a);
    auto rad = unchecked_radical(a);
    for (const auto& r : rad)
        if (!is_nilpotent(a, r)) throw std::logic_error("trace-form radical contains a non-nilpotent vector");
    const auto q = semisimple_quotient(a, rad);
    if (rank(trace_form(q.algebra)) != q.algebra.dim())
        throw std::logic_error("trace form degenerate on the quotient by the radical");
    return rad;
}

bool is_reduced(const StructAlgebra& a) { return radical(a).empty(); }

std::size_t simple_factor_count(const StructAlgebra& a) {
    const auto q = semisimple_quotient(a, radical(a));
    const StructAlgebra& s = q.algebra;
    const std::size_t m = s.dim();
    if (m == 0) return 0;
    // A generic element generates the quotient, which is a product of
    // number fields; its minimal polynomial then factors once per field.
    // Small coordinates keep the polynomial cheap to factor: basis vectors
    // first, then seeded random vectors with slowly growing entries.
    std::mt19937 rng(1);
    for (std::size_t attempt = 0; attempt < m + 4096; ++attempt) {
        Vector x(m, 0);
        if (attempt < m) {
            x[attempt] = 1;
        } else {
            const int bound = 1 + static_cast<int>((attempt - m) / 64);
            std::uniform_int_distribution<int> coord(-bound, bound);
            for (auto& v : x) v = coord(rng);
        }
        const auto p = minimal_polynomial(multiplication_matrix(s, x));
        if (degree(p) == m) return count_irreducible_factors(p);
    }
    throw std::logic_error("no primitive element found for the semisimple quotient");
}

bool is_local(const StructAlgebra& a) { return simple_factor_count(a) == 1; }

std::size_t count_idempotents(const StructAlgebra& a) {
    const auto b = simple_factor_count(a);
    if (b >= 64) throw Error(ErrorCode::TooLarge, "idempotent count exceeds 2^63");
    return std::size_t{1} << b;
}

std::vector<Vector> rational_points(const StructAlgebra& a) {
    require_valid(a);
    const std::size_t n = a.dim();
    std::vector<std::vector<Rational>> candidates;
    for (std::size_t i = 0; i < n; ++i)
        candidates.push_back(rational_roots(minimal_polynomial(multiplication_matrix(a, basis_vector(a, i)))));
    std::vector<Vector> points;
    Vector lambda(n);
    auto apply_lambda = [&](const Vector& v) {
        Rational r = 0;
        for (std::size_t k = 0; k < n; ++k) r += lambda[k] * v[k];
        return r;
    };
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            if (apply_lambda(a.unit) != 1) return;
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = x; y < n; ++y)
                    if (apply_lambda(a.mult[x][y]) != lambda[x] * lambda[y]) return;
            points.push_back(lambda);
            return;
        }
        for (const auto& c : candidates[i]) {
            lambda[i] = c;
            rec(i + 1);
        }
    };
    if (n > 0) rec(0);
    return points;
}

AlgebraReport is_weil(const StructAlgebra& a) {
    AlgebraReport r;
    r.radical = radical(a);
    const std::size_t n = a.dim();
    r.residue_dim = n - r.radical.size();
    const auto b = simple_factor_count(a);
    r.is_local = b == 1;
    r.idempotent_count = count_idempotents(a);
    r.is_weil = r.is_local && r.residue_dim == 1;

    std::vector<Vector> power = r.radical;
    r.nil_index = 1;
    while (!power.empty()) {
        std::vector<Vector> next;
        for (const auto& p : power)
            for (const auto& q : r.radical) next.push_back(product(a, p, q));
        power = span_basis(next, n);
        ++r.nil_index;
    }
    r.rational_points = rational_points(a);
    return r;
}

}  // namespace cohesion

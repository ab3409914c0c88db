#include "cohesion/rational.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>

namespace cohesion {

std::vector<std::size_t> row_reduce(Matrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        const Rational inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    return pivots;
}

std::size_t rank(Matrix m) { return row_reduce(m).size(); }

std::vector<Vector> kernel(const Matrix& m, std::size_t columns) {
    Matrix r = m;
    const auto pivots = row_reduce(r);
    std::vector<Vector> out;
    std::vector<bool> is_pivot(columns, false);
    for (auto p : pivots) is_pivot[p] = true;
    for (std::size_t free = 0; free < columns; ++free) {
        if (is_pivot[free]) continue;
        Vector v(columns, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r[i][free];
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t dim) {
    Matrix m = vectors;
    for (auto& row : m)
        if (row.size() != dim) throw std::invalid_argument("vector of the wrong dimension");
    row_reduce(m);
    return m;
}

bool in_span(const std::vector<Vector>& basis, const Vector& v) {
    if (basis.empty()) return is_zero(v);
    Matrix m = basis;
    const auto r = rank(m);
    m.push_back(v);
    return rank(m) == r;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size();
    const std::size_t k = b.size();
    const std::size_t p = k ? b.front().size() : 0;
    Matrix out(n, Vector(p, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (std::size_t l = 0; l < p; ++l) out[i][l] += a[i][j] * b[j][l];
        }
    return out;
}

Vector apply(const Matrix& a, const Vector& v) {
    Vector out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
    return out;
}

Rational trace(const Matrix& a) {
    Rational t = 0;
    for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
    return t;
}

bool is_zero(const Vector& v) {
    return std::ranges::all_of(v, [](const Rational& x) { return x == 0; });
}

void normalize(Polynomial& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

std::size_t degree(const Polynomial& p) {
    if (p.empty()) throw std::invalid_argument("degree of the zero polynomial");
    return p.size() - 1;
}

Rational evaluate(const Polynomial& p, const Rational& x) {
    Rational r = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
    return r;
}

std::pair<Polynomial, Polynomial> divide(const Polynomial& p, const Polynomial& d) {
    Polynomial dd = d;
    normalize(dd);
    if (dd.empty()) throw std::invalid_argument("division by the zero polynomial");
    Polynomial r = p;
    normalize(r);
    if (r.size() < dd.size()) return {{}, r};
    Polynomial q(r.size() - dd.size() + 1, 0);
    while (!r.empty() && r.size() >= dd.size()) {
        const std::size_t shift = r.size() - dd.size();
        const Rational f = r.back() / dd.back();
        q[shift] = f;
        for (std::size_t i = 0; i < dd.size(); ++i) r[shift + i] -= f * dd[i];
        normalize(r);
    }
    normalize(q);
    return {q, r};
}

Polynomial minimal_polynomial(const Matrix& a) {
    const std::size_t n = a.size();
    auto flatten = [&](const Matrix& m) {
        Vector v;
        for (const auto& row : m) v.insert(v.end(), row.begin(), row.end());
        return v;
    };
    Matrix power(n, Vector(n, 0));
    for (std::size_t i = 0; i < n; ++i) power[i][i] = 1;
    std::vector<Vector> powers;  // flattened I, A, A², ...
    while (true) {
        const Vector v = flatten(power);
        // Solve Σ c_i A^i = A^k for the current k.
        if (!powers.empty()) {
            const std::size_t k = powers.size();
            Matrix system(n * n, Vector(k + 1, 0));
            for (std::size_t r = 0; r < n * n; ++r) {
                for (std::size_t i = 0; i < k; ++i) system[r][i] = powers[i][r];
                system[r][k] = v[r];
            }
            Matrix reduced = system;
            const auto pivots = row_reduce(reduced);
            if (std::ranges::find(pivots, k) == pivots.end()) {
                Polynomial p(k + 1, 0);
                p[k] = 1;
                for (std::size_t i = 0; i < pivots.size(); ++i) p[pivots[i]] = -reduced[i][k];
                return p;
            }
        }
        powers.push_back(v);
        power = multiply(power, a);
        if (n == 0) return {1};
    }
}

namespace {

// Integer polynomial proportional to p with content 1.
std::vector<mpz_class> primitive_part(const Polynomial& p) {
    mpz_class lcm = 1;
    for (const auto& c : p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> out;
    mpz_class g = 0;
    for (const auto& c : p) {
        mpq_class scaled = c * lcm;
        out.push_back(scaled.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
    }
    if (g != 0)
        for (auto& c : out) c /= g;
    return out;
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
    if (n < 0) n = -n;
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d * d != n) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

Polynomial from_integers(const std::vector<mpz_class>& p) {
    Polynomial out;
    for (const auto& c : p) out.emplace_back(c);
    return out;
}

// Lagrange interpolation through (xs[i], ys[i]).
Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    Polynomial out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Polynomial basis{1};
        Rational denom = 1;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            Polynomial next(basis.size() + 1, 0);
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= basis[k] * xs[j];
            }
            basis = std::move(next);
            denom *= xs[i] - xs[j];
        }
        if (out.size() < basis.size()) out.resize(basis.size(), 0);
        for (std::size_t k = 0; k < basis.size(); ++k) out[k] += basis[k] * ys[i] / denom;
    }
    normalize(out);
    return out;
}

// A factor of degree k with integer coefficients, if there is one.
std::optional<Polynomial> kronecker_factor(const Polynomial& p, std::size_t k) {
    std::vector<Rational> xs;
    std::vector<std::vector<mpz_class>> choices;
    for (long x = 0; xs.size() < k + 1; x = x > 0 ? -x : -x + 1) {
        const Rational v = evaluate(p, x);
        if (v == 0) continue;
        xs.emplace_back(x);
        std::vector<mpz_class> ds;
        for (const auto& d : positive_divisors(v.get_num())) {
            ds.push_back(d);
            ds.push_back(-d);
        }
        choices.push_back(std::move(ds));
    }
    std::vector<Rational> ys(k + 1);
    std::optional<Polynomial> found;
    std::function<bool(std::size_t)> rec = [&](std::size_t i) {
        if (i == k + 1) {
            auto q = interpolate(xs, ys);
            if (q.size() != k + 1) return false;
            for (const auto& c : q)
                if (c.get_den() != 1) return false;
            auto [quot, rem] = divide(p, q);
            if (!rem.empty()) return false;
            found = q;
            return true;
        }
        for (const auto& d : choices[i]) {
            ys[i] = d;
            if (rec(i + 1)) return true;
        }
        return false;
    };
    rec(0);
    return found;
}

std::size_t count_factors_no_linear(const Polynomial& p) {
    const auto d = degree(p);
    if (d == 0) return 0;
    if (d <= 3) return 1;  // no rational roots left
    for (std::size_t k = 2; k <= d / 2; ++k) {
        if (auto q = kronecker_factor(p, k)) {
            auto [quot, rem] = divide(p, *q);
            return count_factors_no_linear(*q) + count_factors_no_linear(quot);
        }
    }
    return 1;
}

}  // namespace

std::vector<Rational> rational_roots(const Polynomial& p) {
    Polynomial q = p;
    normalize(q);
    if (q.empty()) throw std::invalid_argument("roots of the zero polynomial");
    std::vector<Rational> roots;
    std::size_t low = 0;
    while (low < q.size() && q[low] == 0) ++low;
    if (low > 0) {
        roots.emplace_back(0);
        q.erase(q.begin(), q.begin() + static_cast<std::ptrdiff_t>(low));
    }
    if (q.size() > 1) {
        const auto z = primitive_part(q);
        for (const auto& num : positive_divisors(z.front()))
            for (const auto& den : positive_divisors(z.back()))
                for (int sign : {1, -1}) {
                    Rational r(num * sign, den);
                    r.canonicalize();
                    if (evaluate(q, r) == 0 && std::ranges::find(roots, r) == roots.end()) roots.push_back(r);
                }
    }
    std::ranges::sort(roots);
    return roots;
}

std::size_t count_irreducible_factors(const Polynomial& p) {
    Polynomial q = p;
    normalize(q);
    if (q.empty()) throw std::invalid_argument("factors of the zero polynomial");
    std::size_t count = 0;
    for (const auto& r : rational_roots(q)) {
        q = divide(q, Polynomial{-r, 1}).first;
        ++count;
    }
    return count + count_factors_no_linear(from_integers(primitive_part(q)));
}

}  // namespace cohesion

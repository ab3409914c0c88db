#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace cohesion {

using Rational = mpq_class;
using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;  // row-major

// Reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);
std::size_t rank(Matrix m);
// Basis of {v : m v = 0}; columns is needed when m has no rows.
std::vector<Vector> kernel(const Matrix& m, std::size_t columns);
// Canonical basis (reduced echelon rows) of the span.
std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t dim);
bool in_span(const std::vector<Vector>& basis, const Vector& v);

Matrix multiply(const Matrix& a, const Matrix& b);
Vector apply(const Matrix& a, const Vector& v);
Rational trace(const Matrix& a);
bool is_zero(const Vector& v);

// Coefficients from the constant term up; the zero polynomial is empty.
using Polynomial = std::vector<Rational>;

void normalize(Polynomial& p);
std::size_t degree(const Polynomial& p);  // of a nonzero polynomial
Rational evaluate(const Polynomial& p, const Rational& x);
// Quotient and remainder of p by a nonzero d.
std::pair<Polynomial, Polynomial> divide(const Polynomial& p, const Polynomial& d);

// Monic minimal polynomial of a square matrix, by Krylov iteration on the
// powers of the matrix.
Polynomial minimal_polynomial(const Matrix& a);

// Distinct rational roots, ascending.
std::vector<Rational> rational_roots(const Polynomial& p);

// Number of irreducible factors over the rationals of a squarefree
// polynomial, by removing linear factors and then Kronecker's method.
std::size_t count_irreducible_factors(const Polynomial& p);

}  // namespace cohesion

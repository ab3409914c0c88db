#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cohesion/fincat.hpp"
#include "cohesion/rational.hpp"

namespace cohesion {

// A finite-dimensional commutative algebra over the rationals, by structure
// constants: e_i e_j = Σ_k mult[i][j][k] e_k.
struct StructAlgebra {
    std::vector<std::string> basis;
    Vector unit;
    std::vector<std::vector<Vector>> mult;

    [[nodiscard]] std::size_t dim() const { return basis.size(); }
    friend bool operator==(const StructAlgebra&, const StructAlgebra&) = default;
};

// Empty iff the table is well-shaped, commutative, associative and unital.
ValidationReport validate_algebra(const StructAlgebra& a);

Vector product(const StructAlgebra& a, const Vector& x, const Vector& y);
// Matrix of y ↦ x y in basis coordinates.
Matrix multiplication_matrix(const StructAlgebra& a, const Vector& x);
Vector basis_vector(const StructAlgebra& a, std::size_t i);
bool is_nilpotent(const StructAlgebra& a, const Vector& x);

// The operations below throw InvalidInput on an invalid algebra.

// Nilradical as the kernel of the trace form, in reduced echelon form.
std::vector<Vector> radical(const StructAlgebra& a);
bool is_reduced(const StructAlgebra& a);
// Number of simple factors of the quotient by the radical.
std::size_t simple_factor_count(const StructAlgebra& a);
bool is_local(const StructAlgebra& a);
std::size_t count_idempotents(const StructAlgebra& a);
// Unital algebra maps to the rationals, as their values on the basis.
std::vector<Vector> rational_points(const StructAlgebra& a);

struct AlgebraReport {
    std::vector<Vector> radical;
    bool is_local = false;
    std::size_t residue_dim = 0;  // dimension of the quotient by the radical
    std::size_t nil_index = 0;    // least n with radicalⁿ = 0
    bool is_weil = false;
    std::size_t idempotent_count = 0;
    std::vector<Vector> rational_points;
};

AlgebraReport is_weil(const StructAlgebra& a);

}  // namespace cohesion

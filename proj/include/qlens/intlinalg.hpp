#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qlens/errors.hpp"

namespace qlens {

/// Dense matrix over arbitrary-precision integers, row-major.
class IntegerMatrix {
  public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}
    IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<mpz_class> entries);

    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const mpz_class& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    mpz_class& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    IntegerMatrix transpose() const;
    IntegerMatrix operator*(const IntegerMatrix& other) const;
    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

    /// Exact determinant (square only), Bareiss fraction-free elimination.
    mpz_class determinant() const;

    std::string to_json() const;
    static IntegerMatrix from_json(const std::string& text);

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<mpz_class> entries_;
};

/// U * A * V = D with U, V unimodular and D diagonal, the nonzero diagonal
/// entries positive and each dividing the next.
struct SNFResult {
    IntegerMatrix D, U, V;

    /// The positive diagonal entries alpha_1 | alpha_2 | ...
    std::vector<mpz_class> invariant_factors() const;
    std::size_t rank() const { return invariant_factors().size(); }
};

SNFResult smith_normal_form(const IntegerMatrix& A);

/// Finitely generated abelian group in canonical form:
/// Z^free_rank (+) Z/d_1 (+) ... with d_i >= 2 and d_i | d_{i+1}.
struct AbelianGroup {
    std::size_t free_rank = 0;
    std::vector<mpz_class> torsion;

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

    /// "Z^r (+) Z/d1 (+) ...", "0" for the trivial group.
    std::string str() const;
    std::string to_json() const;

    /// Canonical form of Z/t_1 (+) ... (+) Z/t_k (+) Z^r from arbitrary
    /// cyclic orders t_i >= 1 (gcd/lcm pairwise reduction; no SNF involved).
    static AbelianGroup from_cyclic_orders(std::size_t free_rank, std::vector<mpz_class> orders);
};

/// Cokernel of A as a map into Z^ambient_rank (columns index generators).
/// Throws DimensionMismatch if cols(A) > ambient_rank.
AbelianGroup cokernel(const IntegerMatrix& A, std::size_t ambient_rank);

std::size_t matrix_rank(const IntegerMatrix& A);
std::size_t kernel_rank(const IntegerMatrix& A);

/// Delta_i = gcd of all i x i minors (0 if all vanish), for i = 1..max_size.
/// Independent oracle for the invariant factors (alpha_i = Delta_i/Delta_{i-1}).
/// Throws SizeLimitExceeded if max_size > min(rows, cols).
std::vector<mpz_class> minor_gcds(const IntegerMatrix& A, std::size_t max_size);

}  // namespace qlens

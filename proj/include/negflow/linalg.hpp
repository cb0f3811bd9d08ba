#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "negflow/rational.hpp"

namespace negflow::linalg {

/// Dense row-major rational matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void append_row(const std::vector<Rational>& row);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Exact rank. Rows are scaled to integers and reduced with Bareiss'
/// fraction-free elimination, so intermediate values stay integral.
std::size_t rank(const Matrix& a);

enum class SolutionKind { None, Unique, Infinite };

struct LinearSolution {
    SolutionKind kind = SolutionKind::None;
    std::vector<Rational> x;  // filled only when kind == Unique
};

/// Solves A x = b exactly.
LinearSolution solve(const Matrix& a, const std::vector<Rational>& b);

/// Integer-scaled copy of a system, reused across many column subsets.
class IntegerSystem {
public:
    /// Each row of [A | b] is multiplied by the lcm of its denominators.
    IntegerSystem(const Matrix& a, const std::vector<Rational>& b);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    int sign(std::size_t r, std::size_t c) const { return sgn(at(r, c)); }
    int rhs_sign(std::size_t r) const { return sgn(at(r, cols_)); }

    /// Solves the system restricted to `columns` (other unknowns fixed at 0).
    LinearSolution solve_columns(const std::vector<std::size_t>& columns) const;

private:
    const mpz_class& at(std::size_t r, std::size_t c) const { return data_[r * (cols_ + 1) + c]; }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<mpz_class> data_;
};

/// Phase-one simplex (Bland's rule, exact) for { x : A x = b, x >= 0 }.
/// Returns a feasible point, or nothing when the set is empty.
std::optional<std::vector<Rational>> find_nonnegative_solution(const Matrix& a,
                                                               const std::vector<Rational>& b);

}  // namespace negflow::linalg

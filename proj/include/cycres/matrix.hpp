#pragma once

#include <vector>

#include "cycres/polynomial.hpp"
#include "cycres/rational.hpp"

namespace cycres {

// Dense row-major matrix of exact rationals.
class Matrix {
public:
    Matrix(long rows, long cols);
    static Matrix identity(long n);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& at(long i, long j);
    const Rational& at(long i, long j) const;

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    bool operator==(const Matrix& rhs) const = default;

private:
    long rows_ = 0;
    long cols_ = 0;
    std::vector<Rational> entries_;
};

// Exact determinant.  Entries are cleared to a common integer denominator,
// fraction-free Bareiss elimination runs on the integer matrix, and the
// result is divided by denominator^n.  The empty 0x0 matrix has
// determinant 1.
Rational bareiss_determinant(const Matrix& m);

// M^power - I by exact binary exponentiation, power >= 1.
Matrix matrix_power_minus_identity(const Matrix& m, long power);

// Basis of the right kernel over the rationals (exact Gauss-Jordan).
// Empty exactly when m has full column rank.
std::vector<std::vector<Rational>> exact_nullspace(const Matrix& m);

// Companion matrix of f; its characteristic polynomial is f.
Matrix companion_matrix(const MonicPoly& f);

// Res(f, g) as the Sylvester-matrix determinant.  For monic f this equals
// prod g(lambda_i) over the roots of f.
Rational sylvester_resultant(const Poly& f, const Poly& g);

} // namespace cycres

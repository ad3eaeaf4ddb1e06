#pragma once

#include <vector>

#include "cycres/polynomial.hpp"
#include "cycres/rational.hpp"

namespace cycres {

enum class MatchVerdict { exact, negated, mismatch };

// Outcome of a determinant-identity check: the determinant actually
// computed, the closed-form side, and how they compare.
struct FactorizationWitness {
    Rational lhs;
    Rational rhs;
    MatchVerdict match = MatchVerdict::mismatch;
};

const char* to_string(MatchVerdict v);

// For a_n = sum c_i mu_i^n (all c_i, mu_i nonzero, mu_i distinct), the
// ell x ell Toeplitz determinant factors as
//   det A_{ell,n} = (-1)^{ell(ell-1)/2} c_1..c_ell
//                   (mu_1..mu_ell)^{n-ell+1} prod_{i<j} (mu_i - mu_j)^2.
// Negative powers are evaluated exactly, so any integer n is accepted.
FactorizationWitness verify_toeplitz_factorization(const std::vector<Rational>& coeffs,
                                                   const std::vector<Rational>& bases, long n);

// Generalized Vandermonde: for polynomials p_j with deg p_j = ell - j and
// leading coefficients a_j,
//   det(p_j(y_i))_{i,j=0..ell} = a_0..a_ell prod_{i<j} (y_i - y_j).
FactorizationWitness verify_generalized_vandermonde(const std::vector<Rational>& leading,
                                                    const std::vector<Poly>& polys,
                                                    const std::vector<Rational>& ys);

// For monic p of degree ell, Delta(x) = det(p(x-i+j))_{i,j=0..ell} is the
// constant ell!^{ell+1}, independent of p.  Delta is recovered as an actual
// polynomial by evaluation at integer points and exact Newton
// interpolation.
struct ConstantToeplitzCheck {
    bool holds = false;
    Rational expected; // ell!^{ell+1}
    Poly delta;        // the interpolated determinant polynomial
};

ConstantToeplitzCheck verify_constant_toeplitz(const Poly& p);

// det R_n for R_n = (r_{n-i+j})_{i,j=1..2^d} built from actual cyclic
// resultants of the given roots, against the closed form
//   (lambda_1..lambda_d)^{2^{d-1}(n-2^{d-1})}
//     prod_{(S,T) disjoint, not both empty} (lambda_S - lambda_T)^{2^{d-|SuT|}}.
// The product runs over ordered pairs.  Matches are exact or globally
// negated; the verdict records which rather than asserting a sign.
FactorizationWitness verify_rn_factorization(const std::vector<Rational>& roots, long n);

// det R_n = (det R_{2^d+1})^{n-2^d} / (det R_{2^d})^{n-2^d-1} for generic f
// with known rational roots, d <= 3, n >= 2^d.
struct DetRatioCheck {
    bool holds = false;
    Rational det_rn;
    Rational ratio;
};

DetRatioCheck verify_det_ratio(const MonicPoly& f, long n);

// M(d) = sum over all ordered pairs of subsets of {1..d} of max(|S|,|T|),
// the true degree of det R_{2^d} in the roots, against the naive expansion
// degree d*4^d.
struct DegreeCensus {
    int d = 0;
    long m_of_d = 0;
    long naive_degree = 0;
    Rational ratio; // m_of_d / naive_degree
};

DegreeCensus degree_census(int d);

} // namespace cycres

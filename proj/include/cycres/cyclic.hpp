#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cycres/polynomial.hpp"
#include "cycres/rational.hpp"
#include "cycres/sequence.hpp"

namespace cycres {

// Finite exponential sum: n |-> sum c_i * base_i^n, with pairwise distinct
// nonzero bases.
struct ExponentialSum {
    std::vector<std::pair<Rational, Rational>> pairs; // (coefficient, base)

    Rational evaluate(long n) const;
};

// r_m = det(C_f^m - I) over the companion matrix of f.  Equals
// prod(lambda_i^m - 1).
Rational cyclic_resultant(const MonicPoly& f, long m);

// The same value by a structurally different route: Res(f, x^m - 1) as a
// Sylvester determinant.  Kept independent of the companion path so the two
// can cross-validate each other.
Rational cyclic_resultant_oracle(const MonicPoly& f, long m);

// r_1..r_count.  With cross_check set, every term is validated against the
// Sylvester route and a mismatch throws.
Sequence cyclic_sequence(const MonicPoly& f, long count, bool cross_check = false);

// r_n = sum over subsets S of (-1)^{d-|S|} lambda_S^n, one pair per subset.
// Requires known roots; coinciding subset products are an error, never
// merged.
ExponentialSum subset_expansion(const MonicPoly& f);

// Expansion of the resultants of the reciprocal polynomial with root pairs
// lambda_i^{+-1}: 3^{d/2} pairs (2^{d/2-|SuT|} (-1)^{|SuT|}, lambda_S/lambda_T)
// over ordered disjoint pairs (S, T) of subsets of the half spectrum.
ExponentialSum reciprocal_expansion(const std::vector<Rational>& half_roots);

enum class GenericityMode { plain, reciprocal };

// lambda_S / lambda_T as 1-based root index sets; plain-mode products have
// an empty denominator set.
struct SubsetQuotient {
    std::vector<int> num;
    std::vector<int> den;
};

struct GenericityReport {
    GenericityMode mode = GenericityMode::plain;
    bool products_distinct = false;
    bool has_root_of_unity = false; // rational roots of unity: +1 or -1
    bool generic = false;           // products_distinct && !has_root_of_unity
    // On a collision, one witness pair of subset products (or quotients).
    std::optional<std::pair<SubsetQuotient, SubsetQuotient>> collision;
};

// In reciprocal mode the supplied roots are interpreted as the half
// spectrum lambda_1..lambda_{d/2} and the check runs over quotients
// lambda_S/lambda_T for disjoint S, T.
GenericityReport genericity_check(const std::vector<Rational>& roots, GenericityMode mode);
GenericityReport genericity_check(const MonicPoly& f, GenericityMode mode);

std::string describe(const SubsetQuotient& q);

} // namespace cycres

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cycres/matrix.hpp"
#include "cycres/rational.hpp"
#include "cycres/sequence.hpp"

namespace cycres {

// A detected homogeneous linear recurrence in characteristic-polynomial
// convention: coefficients has order+1 entries with coefficients[0] = 1 and
//
//     sum_{j=0}^{order} coefficients[j] * a_{n+order-j} = 0
//
// for every n with a full window inside [verified_from, verified_to].
// "order" counts prior terms (= characteristic roots with multiplicity);
// testing order <= k uses windows of size k+1.
struct RecurrenceReport {
    long order = 0;
    std::vector<Rational> coefficients;
    long verified_from = 0;
    long verified_to = 0;
};

// The ell x ell Toeplitz window with (i, j) entry a_{n-i+j} (1-based i, j).
// Needs indices n-ell+1 .. n+ell-1; a missing index is named in the error.
Matrix toeplitz_window(const Sequence& seq, long ell, long n);

// det of toeplitz_window with the convention det A_{0,n} = 1.
Rational toeplitz_det(const Sequence& seq, long ell, long n);

// Smallest order k <= max_order such that every admissible window
// determinant det A_{k+1,n} vanishes, with coefficients recovered from the
// kernel of a window whose order-k minor is nonsingular and re-verified on
// every available index.  nullopt means no recurrence of order <= max_order
// fits the data.  This is a semi-decision: the criterion quantifies over
// all n, finite data can only check the reported range.
std::optional<RecurrenceReport> detect_linear_recurrence(const Sequence& seq, long max_order);

// Shortest recurrence consistent with all given terms, found by an exact
// Berlekamp-Massey elimination.  Independent of the Toeplitz route; the two
// must agree whenever both succeed.  nullopt = indeterminate (a single
// nonzero term constrains nothing).
std::optional<RecurrenceReport> minimal_recurrence(const Sequence& seq);

// Dodgson condensation identity on Toeplitz windows:
//   det A_{l,m} det A_{l-2,m} = (det A_{l-1,m})^2
//                               - det A_{l-1,m-1} det A_{l-1,m+1}
struct DodgsonCheck {
    Rational det_l_m;
    Rational det_lminus2_m;
    Rational det_lminus1_m;
    Rational det_lminus1_mminus1;
    Rational det_lminus1_mplus1;
    bool holds = false;
};

DodgsonCheck dodgson_check(const Sequence& seq, long ell, long m);

// Appends count terms, each the unique value zeroing the next
// (ell+1)-window determinant, solved through the cofactor of the unknown
// corner entry.  Requires at least 2*ell known terms and a nonsingular
// trailing ell-cofactor at every step.  When the cofactor is singular and
// strict is false, the step drops to the smallest order k >= 1 whose
// (k+1)-windows all vanish on the data and whose trailing cofactor is
// nonsingular; with strict set (or no such k) it throws instead.
Sequence extend_sequence(const Sequence& prefix, long ell, long count, bool strict = false);

// Multivariate polynomial in window variables x_1..x_window vanishing on
// every length-window slice of its sequence.
struct PolyRelation {
    long window = 0;
    long total_degree = 0;
    // (exponent vector of length window, nonzero coefficient), graded-lex
    // descending by monomial.
    std::vector<std::pair<std::vector<int>, Rational>> terms;

    Rational evaluate(const std::vector<Rational>& window_values) const;
};

// All exponent vectors of total degree <= max_degree in `vars` variables,
// graded-lex descending (x_1 > x_2 > ...).
std::vector<std::vector<int>> monomials_graded_lex(long vars, long max_degree);

// Exact nullspace search over the monomial-evaluation matrix: a nonzero P
// of total degree <= total_degree vanishing on every available window,
// re-verified before returning.  Requires 4 surplus windows beyond the
// monomial count.  nullopt = the nullspace is trivial ("none at this
// degree"); that is no proof that longer data admits none.
std::optional<PolyRelation> find_polynomial_recurrence(const Sequence& seq, long window,
                                                       long total_degree);

struct RelationVerdict {
    bool holds = false;
    std::vector<long> violations; // window start indices where P != 0
};

RelationVerdict verify_poly_relation(const PolyRelation& relation, const Sequence& seq);

} // namespace cycres

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cycres/rational.hpp"
#include "cycres/recurrence.hpp"
#include "cycres/sequence.hpp"

namespace cycres {

// Result of a closed-form inversion: the recovered non-leading
// coefficients (highest first) and whether regenerating the input
// resultants from them succeeds.
struct Inversion {
    std::vector<Rational> coefficients;
    bool residual_ok = false;
};

// f = x^2 + ax + b from r_1, r_2:
//   a = (r1^2 - r2) / (2 r1),   b = (r1^2 - 2 r1 + r2) / (2 r1).
// r1 = 0 is degenerate.
Inversion invert_quadratic(const Rational& r1, const Rational& r2);

// f = x^3 + ax^2 + bx + c from r_1..r_4; needs r1, r2 nonzero.
Inversion invert_cubic(const Rational& r1, const Rational& r2, const Rational& r3,
                       const Rational& r4);

struct RecurrenceVerdict {
    bool holds = false;
    std::optional<long> first_failure; // window start index n
};

// r_{n+1} = -a r_n - a - 1 for the resultants of x + a, at every index.
RecurrenceVerdict check_d1_recurrence(const Rational& a, const Sequence& seq);

// The length-3 recurrence for the resultants of x^2 + ax + b; both sides
// are evaluated exactly at every window.
RecurrenceVerdict check_d2_recurrence(const Rational& a, const Rational& b, const Sequence& seq);

// The two sides of the length-3 identity at one window (r_n, r_{n+1}, r_{n+2}).
std::pair<Rational, Rational> d2_recurrence_sides(const Rational& a, const Rational& b,
                                                  const Rational& rn, const Rational& rn1,
                                                  const Rational& rn2);

// The same recurrences as one-sided window relations (x_1 = r_n, ...),
// suitable for verify_poly_relation and for comparison with found
// relations.
PolyRelation d1_recurrence_relation(const Rational& a);
PolyRelation d2_recurrence_relation(const Rational& a, const Rational& b);

struct ReconstructionResult {
    long degree = 0;
    std::vector<Rational> coefficients; // non-leading, highest first
    bool residual_ok = false;           // regenerated r_1..r_N match the full prefix
    bool extension_checked = false;     // ran only when the prefix has 2^{d+1} terms
    bool extension_ok = false;
    std::optional<Rational> extension_term; // the minor-expansion r_{N+1} when checked
};

// Closed-form reconstruction for degree 2 or 3 from a prefix starting at
// r_1.  Regenerates the whole prefix as a residual check; with 2^{d+1}
// terms available it additionally extends the prefix one step through the
// strict Toeplitz recurrence and compares against the recovered
// polynomial's own resultant, so non-generic inputs surface as errors.
ReconstructionResult reconstruct_pipeline(const Sequence& prefix, int degree);

} // namespace cycres

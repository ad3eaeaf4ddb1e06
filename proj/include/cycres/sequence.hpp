#pragma once

#include <vector>

#include "cycres/rational.hpp"

namespace cycres {

// Finite list of exact rationals addressed by absolute index, 1-based by
// default.  Term n is available iff start_index() <= n <= end_index().
class Sequence {
public:
    explicit Sequence(std::vector<Rational> terms, long start_index = 1);

    long start_index() const { return start_; }
    long end_index() const { return start_ + size() - 1; }
    long size() const { return static_cast<long>(terms_.size()); }

    bool has(long n) const { return n >= start_ && n <= end_index(); }
    const Rational& at(long n) const; // throws naming the missing index

    void append(Rational value) { terms_.push_back(std::move(value)); }
    const std::vector<Rational>& terms() const { return terms_; }

    Sequence first_terms(long count) const;

    bool operator==(const Sequence& rhs) const = default;

private:
    long start_;
    std::vector<Rational> terms_;
};

} // namespace cycres

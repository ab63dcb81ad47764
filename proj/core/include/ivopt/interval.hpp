#pragma once

#include <string>

#include "ivopt/errors.hpp"

namespace ivopt {

// Closed bounded interval [lo, hi]. Endpoints are IEEE doubles with
// round-to-nearest arithmetic; no outward rounding.
class Interval {
  public:
    Interval() : lo_(0.0), hi_(0.0) {}
    Interval(double lo, double hi);
    static Interval point(double v) { return Interval(v, v); }

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    double width() const { return hi_ - lo_; }
    bool degenerate() const { return lo_ == hi_; }
    bool contains(double v) const { return lo_ <= v && v <= hi_; }

    bool operator==(const Interval& o) const { return lo_ == o.lo_ && hi_ == o.hi_; }
    bool operator!=(const Interval& o) const { return !(*this == o); }

  private:
    double lo_, hi_;
};

enum class Dominance {
    StrictlyDominates,
    Dominates,
    Equal,
    DominatedBy,
    StrictlyDominatedBy,
    Incomparable,
};

Interval add(const Interval& a, const Interval& b);
Interval sub(const Interval& a, const Interval& b);  // a + (-1)*b
Interval mul(const Interval& a, const Interval& b);
Interval scalar_mul(double lambda, const Interval& a);
Interval div(const Interval& a, const Interval& b);
Interval gh_difference(const Interval& a, const Interval& b);
Interval exp_interval(const Interval& a);

// Exclusive classification: the plain Dominates/DominatedBy outcomes cannot
// occur (non-strict dominance with unequal endpoints forces a strict side).
Dominance compare(const Interval& a, const Interval& b);

// a <= b in the dominance order (includes Equal).
bool dominates(const Interval& a, const Interval& b);
// a < b: dominates with at least one strict endpoint inequality.
bool strictly_dominates(const Interval& a, const Interval& b);

double interval_norm(const Interval& a);

std::string to_string(const Interval& a, int precision = 6);
std::string to_string(Dominance d);

}  // namespace ivopt

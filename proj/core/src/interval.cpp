#include "ivopt/interval.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ivopt {

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi))
        throw InvalidInterval("non-finite endpoint");
    if (lo > hi)
        throw InvalidInterval("lo > hi: [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

Interval add(const Interval& a, const Interval& b) {
    return Interval(a.lo() + b.lo(), a.hi() + b.hi());
}

Interval sub(const Interval& a, const Interval& b) {
    return add(a, scalar_mul(-1.0, b));
}

Interval mul(const Interval& a, const Interval& b) {
    const double p[4] = {a.lo() * b.lo(), a.lo() * b.hi(), a.hi() * b.lo(), a.hi() * b.hi()};
    return Interval(*std::min_element(p, p + 4), *std::max_element(p, p + 4));
}

Interval scalar_mul(double lambda, const Interval& a) {
    if (!std::isfinite(lambda))
        throw InvalidInterval("non-finite scalar");
    if (lambda >= 0.0)
        return Interval(lambda * a.lo(), lambda * a.hi());
    return Interval(lambda * a.hi(), lambda * a.lo());
}

Interval div(const Interval& a, const Interval& b) {
    if (b.lo() <= 0.0 && 0.0 <= b.hi())
        throw DivisorContainsZero("division by " + to_string(b));
    return mul(a, Interval(1.0 / b.hi(), 1.0 / b.lo()));
}

Interval gh_difference(const Interval& a, const Interval& b) {
    const double d1 = a.lo() - b.lo();
    const double d2 = a.hi() - b.hi();
    return Interval(std::min(d1, d2), std::max(d1, d2));
}

Interval exp_interval(const Interval& a) {
    const double lo = std::exp(a.lo());
    const double hi = std::exp(a.hi());
    if (!std::isfinite(hi))
        throw Overflow("exp overflow on " + to_string(a));
    return Interval(lo, hi);
}

Dominance compare(const Interval& a, const Interval& b) {
    if (a == b)
        return Dominance::Equal;
    if (a.lo() <= b.lo() && a.hi() <= b.hi())
        return Dominance::StrictlyDominates;
    if (b.lo() <= a.lo() && b.hi() <= a.hi())
        return Dominance::StrictlyDominatedBy;
    return Dominance::Incomparable;
}

bool dominates(const Interval& a, const Interval& b) {
    return a.lo() <= b.lo() && a.hi() <= b.hi();
}

bool strictly_dominates(const Interval& a, const Interval& b) {
    return dominates(a, b) && (a.lo() < b.lo() || a.hi() < b.hi());
}

double interval_norm(const Interval& a) {
    return std::max(std::fabs(a.lo()), std::fabs(a.hi()));
}

std::string to_string(const Interval& a, int precision) {
    std::ostringstream os;
    os.precision(precision);
    os << "[" << a.lo() << ", " << a.hi() << "]";
    return os.str();
}

std::string to_string(Dominance d) {
    switch (d) {
        case Dominance::StrictlyDominates: return "StrictlyDominates";
        case Dominance::Dominates: return "Dominates";
        case Dominance::Equal: return "Equal";
        case Dominance::DominatedBy: return "DominatedBy";
        case Dominance::StrictlyDominatedBy: return "StrictlyDominatedBy";
        case Dominance::Incomparable: return "Incomparable";
    }
    return "?";
}

}  // namespace ivopt

#include "ivopt/interval_vector.hpp"

namespace ivopt {

IntervalVector::IntervalVector(std::vector<Interval> items) : items_(std::move(items)) {
    if (items_.empty())
        throw InvalidInterval("empty interval vector");
}

IntervalVector::IntervalVector(std::initializer_list<Interval> items)
    : IntervalVector(std::vector<Interval>(items)) {}

static void check_sizes(std::size_t a, std::size_t b) {
    if (a != b)
        throw LengthMismatch("interval vector lengths " + std::to_string(a) + " vs " + std::to_string(b));
}

IntervalVector add(const IntervalVector& a, const IntervalVector& b) {
    check_sizes(a.size(), b.size());
    std::vector<Interval> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out.push_back(add(a[i], b[i]));
    return IntervalVector(std::move(out));
}

IntervalVector gh_difference(const IntervalVector& a, const IntervalVector& b) {
    check_sizes(a.size(), b.size());
    std::vector<Interval> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out.push_back(gh_difference(a[i], b[i]));
    return IntervalVector(std::move(out));
}

IntervalVector scalar_mul(double lambda, const IntervalVector& a) {
    std::vector<Interval> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out.push_back(scalar_mul(lambda, a[i]));
    return IntervalVector(std::move(out));
}

double vector_norm(const IntervalVector& v) {
    double s = 0.0;
    for (const auto& c : v)
        s += interval_norm(c);
    return s;
}

Interval inner_product(const std::vector<double>& d, const IntervalVector& v) {
    check_sizes(d.size(), v.size());
    Interval acc = Interval::point(0.0);
    for (std::size_t i = 0; i < d.size(); ++i)
        acc = add(acc, scalar_mul(d[i], v[i]));
    return acc;
}

}  // namespace ivopt

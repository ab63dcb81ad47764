#pragma once

#include <vector>

#include "ivopt/interval.hpp"

namespace ivopt {

// n-tuple of intervals with componentwise algebra.
class IntervalVector {
  public:
    IntervalVector() = default;
    explicit IntervalVector(std::vector<Interval> items);
    IntervalVector(std::initializer_list<Interval> items);

    std::size_t size() const { return items_.size(); }
    const Interval& operator[](std::size_t i) const { return items_[i]; }
    Interval& operator[](std::size_t i) { return items_[i]; }
    const std::vector<Interval>& items() const { return items_; }

    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }

  private:
    std::vector<Interval> items_;
};

IntervalVector add(const IntervalVector& a, const IntervalVector& b);
IntervalVector gh_difference(const IntervalVector& a, const IntervalVector& b);
IntervalVector scalar_mul(double lambda, const IntervalVector& a);

double vector_norm(const IntervalVector& v);

// d' * v = sum_i d_i * v_i under Moore scalar multiplication and addition.
Interval inner_product(const std::vector<double>& d, const IntervalVector& v);

}  // namespace ivopt

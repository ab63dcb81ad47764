#include "ivopt/problems.hpp"

namespace ivopt {

Ivf example_5_1() {
    Ivf f;
    f.dim = 1;
    f.domain_box = Box{{-3.0, 7.0}};
    f.eval = [](const Point& x) {
        return add(add(scalar_mul(x[0] * x[0], Interval(1, 2)), scalar_mul(x[0], Interval(-8, 0))),
                   Interval(3, 25));
    };
    f.gradient = [](const Point& x) {
        return IntervalVector{add(scalar_mul(x[0], Interval(2, 4)), Interval(-8, 0))};
    };
    return f;
}

Ivf example_5_2() {
    Ivf f;
    f.dim = 2;
    f.domain_box = Box{{0.0, 6.0}, {0.0, 6.0}};
    f.eval = [](const Point& x) {
        const double u = x[0] - 2.0, v = x[1] - 3.0;
        return add(add(scalar_mul(u * u, Interval(2, 6)), scalar_mul(v * v, Interval(5, 7))),
                   Interval(5, 12));
    };
    f.gradient = [](const Point& x) {
        return IntervalVector{scalar_mul(x[0] - 2.0, Interval(4, 12)),
                              scalar_mul(x[1] - 3.0, Interval(10, 14))};
    };
    return f;
}

Ivf builtin_problem(const std::string& name) {
    if (name == "example-5.1")
        return example_5_1();
    if (name == "example-5.2")
        return example_5_2();
    throw Error("unknown builtin problem: " + name);
}

}  // namespace ivopt

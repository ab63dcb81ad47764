#pragma once

#include "ivopt/ivf.hpp"

namespace ivopt {

// Built-in objectives with analytic gradients.

// F(x) = [1,2]x^2 + [-8,0]x + [3,25] on [-3,7]; grad [2,4]x + [-8,0].
Ivf example_5_1();

// F(x) = [2,6](x1-2)^2 + [5,7](x2-3)^2 + [5,12] on [0,6]^2;
// grad ([4,12](x1-2), [10,14](x2-3)).
Ivf example_5_2();

// Names: "example-5.1", "example-5.2"; throws Error on unknown names.
Ivf builtin_problem(const std::string& name);

}  // namespace ivopt

// Reflection-expansion-contraction simplex search (derivative-free), shared
// by the witness search and the conjecture exploration.
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace markdiv {

struct NelderMeadOptions {
    std::size_t max_iters = 2000;
    double initial_step = 0.25;
    double f_tol = 1e-12;   // stop when the simplex value spread drops below
    double alpha = 1.0;     // reflection
    double gamma = 2.0;     // expansion
    double rho = 0.5;       // contraction
    double sigma = 0.5;     // shrink
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    std::size_t iterations = 0;
};

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0, const NelderMeadOptions& opts = {});

} // namespace markdiv

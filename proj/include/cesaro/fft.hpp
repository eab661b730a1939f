#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cesaro/series.hpp"

namespace cesaro::fft {

// Node count for sampling a degree-N series on a circle: a power of two >= 4N.
std::size_t circle_nodes(std::size_t N);

// sum_k c_k r^k e^(i k theta_j) at theta_j = 2 pi j / M. M must be a power of
// two greater than the degree. Plans use FFTW_ESTIMATE, so results do not
// depend on planner timing.
std::vector<cplx> sample_circle(std::span<const cplx> c, double r, std::size_t M);

}  // namespace cesaro::fft

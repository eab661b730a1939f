#include "cesaro/fft.hpp"

#include <fftw3.h>

#include <bit>
#include <cmath>
#include <map>
#include <mutex>

#include "cesaro/error.hpp"

namespace cesaro::fft {

namespace {

std::mutex planner_mutex;

struct Plan {
  fftw_plan p = nullptr;
};

// Plans are created once per size and never destroyed; only creation needs
// the lock, execution with new arrays is thread safe.
fftw_plan plan_for(std::size_t M) {
  static std::map<std::size_t, Plan> plans;
  std::lock_guard lock(planner_mutex);
  auto& slot = plans[M];
  if (!slot.p) {
    auto* in = fftw_alloc_complex(M);
    auto* out = fftw_alloc_complex(M);
    slot.p = fftw_plan_dft_1d(static_cast<int>(M), in, out, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(in);
    fftw_free(out);
    if (!slot.p) throw ParameterError("FFTW could not plan a transform of this size");
  }
  return slot.p;
}

}  // namespace

std::size_t circle_nodes(std::size_t N) { return std::bit_ceil(std::max<std::size_t>(4 * N, 16)); }

std::vector<cplx> sample_circle(std::span<const cplx> c, double r, std::size_t M) {
  if (!std::has_single_bit(M) || M < c.size()) throw ParameterError("circle sampling needs a power of two above the degree");
  std::vector<cplx> in(M, cplx(0.0)), out(M);
  double rk = 1.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    in[k] = c[k] * rk;
    rk *= r;
  }
  fftw_execute_dft(plan_for(M), reinterpret_cast<fftw_complex*>(in.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
  return out;
}

}  // namespace cesaro::fft

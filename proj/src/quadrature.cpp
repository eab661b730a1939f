#include "cesaro/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>

namespace cesaro::quad {

const GaussLegendre32& gauss_legendre_32() {
  static const GaussLegendre32 rule = [] {
    using G = boost::math::quadrature::gauss<double, 32>;
    const auto& a = G::abscissa();
    const auto& w = G::weights();
    GaussLegendre32 r{};
    for (std::size_t i = 0; i < a.size(); ++i) {
      r.node[15 - i] = -a[i];
      r.weight[15 - i] = w[i];
      r.node[16 + i] = a[i];
      r.weight[16 + i] = w[i];
    }
    return r;
  }();
  return rule;
}

}  // namespace cesaro::quad

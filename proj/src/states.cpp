#include "steerlab/states.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace steerlab {

DensityMatrix::DensityMatrix(CMatrix m) : mat_(std::move(m)) {
    if (mat_.dim() != 4) throw std::invalid_argument("DensityMatrix must be 4x4");
    if (!mat_.is_hermitian()) throw std::invalid_argument("DensityMatrix must be Hermitian");
    if (std::abs(mat_.trace().real() - 1.0) > kUnitTol ||
        std::abs(mat_.trace().imag()) > kUnitTol) {
        throw std::invalid_argument("DensityMatrix must have unit trace");
    }
    if (!mat_.is_psd()) throw std::invalid_argument("DensityMatrix must be positive semidefinite");
}

double DensityMatrix::purity() const { return (mat_ * mat_).trace().real(); }

DensityMatrix max_entangled() {
    return partial_entangled(std::numbers::pi / 4.0);
}

DensityMatrix partial_entangled(double alpha) {
    if (!(alpha >= 0.0 && alpha <= std::numbers::pi / 2.0)) {
        throw std::invalid_argument("partial_entangled: alpha must lie in [0, pi/2]");
    }
    const double c = std::cos(alpha);
    const double s = std::sin(alpha);
    CMatrix m(4);
    m.at(0, 0) = c * c;
    m.at(0, 3) = c * s;
    m.at(3, 0) = c * s;
    m.at(3, 3) = s * s;
    return DensityMatrix(m);
}

}  // namespace steerlab

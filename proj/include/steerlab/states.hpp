#pragma once

#include "steerlab/cmatrix.hpp"

namespace steerlab {

// Two-qubit state: 4x4 Hermitian, unit-trace, PSD. Basis order is
// |00>, |01>, |10>, |11> with the first ket on the left tensor slot.
class DensityMatrix {
public:
    explicit DensityMatrix(CMatrix m);

    const CMatrix& mat() const { return mat_; }
    double purity() const;

private:
    CMatrix mat_;
};

// Projector onto (|00> + |11>) / sqrt(2).
DensityMatrix max_entangled();

// Projector onto cos(alpha)|00> + sin(alpha)|11>, alpha in [0, pi/2].
DensityMatrix partial_entangled(double alpha);

}  // namespace steerlab

#pragma once

#include <variant>

#include "steerlab/cmatrix.hpp"
#include "steerlab/states.hpp"

namespace steerlab {

// One intermediate-observer setting: either a projective measurement of an
// observable or an identity measurement (no interaction, deterministic +1
// outcome), followed by a unitary on the measured qubit.
struct MeasurementAction {
    enum class Kind { Projective, Identity };

    Kind kind = Kind::Identity;
    Observable obs;        // meaningful for Projective
    CMatrix post_unitary;  // 2x2 unitary applied after the measurement

    static MeasurementAction projective(const Observable& o,
                                        CMatrix unitary = CMatrix::identity(2));
    static MeasurementAction identity(CMatrix unitary = CMatrix::identity(2));

    // Observable matrix used in first-pair correlators: n.sigma for a
    // projective setting, the identity for an identity setting.
    CMatrix effective_observable() const;

private:
    MeasurementAction() : post_unitary(CMatrix::identity(2)) {}
};

// Weak-measurement pointer: quality F (undisturbed fraction) and precision G
// (information gain), tied by the family constraint.
struct PointerModel {
    enum class Family { Square, Linear };

    Family family = Family::Square;
    double g = 0.0;
    double f = 1.0;

    static PointerModel square(double g);  // F = sqrt(1 - G^2)
    static PointerModel linear(double g);  // F = 1 - G
    static PointerModel make(Family family, double g, double f);
};

// Rank-1 projector (I + outcome * n.sigma) / 2, outcome in {-1, +1}.
CMatrix projector(const Observable& o, int outcome);

// Post-measurement state after one action, summed over outcomes.
DensityMatrix single_action_channel(const DensityMatrix& rho, const MeasurementAction& action);

// Setting-averaged, outcome-summed state seen by the third observer:
// (1/2) sum_y sum_b (I x K_{b|y}) rho (I x K_{b|y})^dagger with
// K = U.projector for a projective action and K = U for an identity action.
DensityMatrix bob_channel(const DensityMatrix& rho, const MeasurementAction& action0,
                          const MeasurementAction& action1);

// Unnormalized conditional state after a weak measurement of `o` on the
// second qubit; the trace equals the outcome probability.
CMatrix weak_channel(const DensityMatrix& rho, const Observable& o, const PointerModel& pointer,
                     int outcome);

// Outcome-summed weak back-action for one setting (trace preserving).
DensityMatrix weak_marginal_channel(const DensityMatrix& rho, const Observable& o,
                                    const PointerModel& pointer);

// Setting-averaged weak analogue of bob_channel.
DensityMatrix weak_average_channel(const DensityMatrix& rho, const Observable& o0,
                                   const Observable& o1, const PointerModel& pointer);

struct WeakMeasurement {
    Observable obs;
    PointerModel pointer;
};

using BobOperation = std::variant<MeasurementAction, WeakMeasurement>;

// P(a, b, c | x, y, z): Alice projective, Bob projective/identity/weak,
// Charlie projective, outcomes in {-1, +1}.
double joint_probability(const DensityMatrix& rho, const Observable& alice,
                         const BobOperation& bob, const Observable& charlie, int a, int b, int c);

}  // namespace steerlab

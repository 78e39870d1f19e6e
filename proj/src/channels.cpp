#include "steerlab/channels.hpp"

#include <cmath>
#include <stdexcept>

namespace steerlab {

namespace {

void check_outcome(int outcome) {
    if (outcome != 1 && outcome != -1) {
        throw std::invalid_argument("outcome must be +1 or -1");
    }
}

void check_unitary(const CMatrix& u) {
    if (u.dim() != 2 || !u.is_unitary()) {
        throw std::invalid_argument("post-measurement unitary must be a 2x2 unitary");
    }
}

// Kraus operators on the second qubit for one action. An identity action has
// a single element U covering the deterministic +1 outcome.
std::vector<CMatrix> kraus_elements(const MeasurementAction& action) {
    if (action.kind == MeasurementAction::Kind::Identity) {
        return {action.post_unitary};
    }
    return {action.post_unitary * projector(action.obs, +1),
            action.post_unitary * projector(action.obs, -1)};
}

CMatrix apply_second(const CMatrix& rho4, const CMatrix& k2) {
    const CMatrix lifted = tensor(CMatrix::identity(2), k2);
    return lifted * rho4 * lifted.adjoint();
}

CMatrix apply_first(const CMatrix& rho4, const CMatrix& k2) {
    const CMatrix lifted = tensor(k2, CMatrix::identity(2));
    return lifted * rho4 * lifted.adjoint();
}

}  // namespace

MeasurementAction MeasurementAction::projective(const Observable& o, CMatrix unitary) {
    check_unitary(unitary);
    MeasurementAction a;
    a.kind = Kind::Projective;
    a.obs = o;
    a.post_unitary = std::move(unitary);
    return a;
}

MeasurementAction MeasurementAction::identity(CMatrix unitary) {
    check_unitary(unitary);
    MeasurementAction a;
    a.kind = Kind::Identity;
    a.post_unitary = std::move(unitary);
    return a;
}

CMatrix MeasurementAction::effective_observable() const {
    return kind == Kind::Projective ? observable_matrix(obs) : CMatrix::identity(2);
}

PointerModel PointerModel::square(double g) {
    if (!(g >= 0.0 && g <= 1.0)) throw std::invalid_argument("pointer precision G must lie in [0,1]");
    PointerModel p;
    p.family = Family::Square;
    p.g = g;
    p.f = std::sqrt(std::max(0.0, 1.0 - g * g));
    return p;
}

PointerModel PointerModel::linear(double g) {
    if (!(g >= 0.0 && g <= 1.0)) throw std::invalid_argument("pointer precision G must lie in [0,1]");
    PointerModel p;
    p.family = Family::Linear;
    p.g = g;
    p.f = 1.0 - g;
    return p;
}

PointerModel PointerModel::make(Family family, double g, double f) {
    if (!(g >= 0.0 && g <= 1.0) || !(f >= 0.0 && f <= 1.0)) {
        throw std::invalid_argument("pointer factors must lie in [0,1]");
    }
    const double constraint =
        family == Family::Square ? g * g + f * f - 1.0 : g + f - 1.0;
    if (std::abs(constraint) > 1e-9) {
        throw std::invalid_argument("pointer violates its family constraint");
    }
    // G^2 + F^2 <= 1 is the positivity boundary of the back-action map;
    // anything beyond it is not a physical pointer.
    if (g * g + f * f > 1.0 + 1e-9) {
        throw std::invalid_argument("pointer (F, G) pair is not physical");
    }
    PointerModel p;
    p.family = family;
    p.g = g;
    p.f = f;
    return p;
}

CMatrix projector(const Observable& o, int outcome) {
    check_outcome(outcome);
    return (CMatrix::identity(2) + observable_matrix(o) * static_cast<double>(outcome)) * 0.5;
}

DensityMatrix single_action_channel(const DensityMatrix& rho, const MeasurementAction& action) {
    CMatrix out(4);
    for (const CMatrix& k : kraus_elements(action)) {
        out = out + apply_second(rho.mat(), k);
    }
    return DensityMatrix(out);
}

DensityMatrix bob_channel(const DensityMatrix& rho, const MeasurementAction& action0,
                          const MeasurementAction& action1) {
    CMatrix out(4);
    for (const MeasurementAction* action : {&action0, &action1}) {
        for (const CMatrix& k : kraus_elements(*action)) {
            out = out + apply_second(rho.mat(), k) * 0.5;
        }
    }
    return DensityMatrix(out);
}

CMatrix weak_channel(const DensityMatrix& rho, const Observable& o, const PointerModel& pointer,
                     int outcome) {
    check_outcome(outcome);
    if (pointer.g * pointer.g + pointer.f * pointer.f > 1.0 + 1e-9) {
        throw std::invalid_argument("pointer (F, G) pair is not physical");
    }
    const double b = static_cast<double>(outcome);
    const CMatrix up = projector(o, +1);
    const CMatrix un = projector(o, -1);
    return rho.mat() * (pointer.f / 2.0) +
           apply_second(rho.mat(), up) * ((1.0 + b * pointer.g - pointer.f) / 2.0) +
           apply_second(rho.mat(), un) * ((1.0 - b * pointer.g - pointer.f) / 2.0);
}

DensityMatrix weak_marginal_channel(const DensityMatrix& rho, const Observable& o,
                                    const PointerModel& pointer) {
    return DensityMatrix(weak_channel(rho, o, pointer, +1) + weak_channel(rho, o, pointer, -1));
}

DensityMatrix weak_average_channel(const DensityMatrix& rho, const Observable& o0,
                                   const Observable& o1, const PointerModel& pointer) {
    return DensityMatrix(weak_marginal_channel(rho, o0, pointer).mat() * 0.5 +
                         weak_marginal_channel(rho, o1, pointer).mat() * 0.5);
}

double joint_probability(const DensityMatrix& rho, const Observable& alice,
                         const BobOperation& bob, const Observable& charlie, int a, int b, int c) {
    check_outcome(a);
    check_outcome(b);
    check_outcome(c);

    const CMatrix after_alice = apply_first(rho.mat(), projector(alice, a));

    CMatrix after_bob(4);
    if (const auto* action = std::get_if<MeasurementAction>(&bob)) {
        if (action->kind == MeasurementAction::Kind::Identity) {
            if (b == -1) return 0.0;  // identity setting reports +1 deterministically
            after_bob = apply_second(after_alice, action->post_unitary);
        } else {
            after_bob = apply_second(after_alice,
                                     action->post_unitary * projector(action->obs, b));
        }
    } else {
        const auto& weak = std::get<WeakMeasurement>(bob);
        // Same pointer formula as weak_channel, applied to the unnormalized
        // post-Alice state.
        const double bb = static_cast<double>(b);
        const CMatrix up = projector(weak.obs, +1);
        const CMatrix un = projector(weak.obs, -1);
        after_bob = after_alice * (weak.pointer.f / 2.0) +
                    apply_second(after_alice, up) *
                        ((1.0 + bb * weak.pointer.g - weak.pointer.f) / 2.0) +
                    apply_second(after_alice, un) *
                        ((1.0 - bb * weak.pointer.g - weak.pointer.f) / 2.0);
    }

    const CMatrix after_charlie = apply_second(after_bob, projector(charlie, c));
    return after_charlie.trace().real();
}

}  // namespace steerlab

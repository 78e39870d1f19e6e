#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "steerlab/strategies.hpp"

namespace steerlab {

// A stretch of the trade-off boundary: either a pure-case arc or a mixing
// line between two cases.
struct EnvelopeLabel {
    bool arc = true;
    CaseId a = CaseId::One;
    CaseId b = CaseId::One;

    bool operator==(const EnvelopeLabel&) const = default;
};

std::string to_string(const EnvelopeLabel& label);

struct EnvelopeSegment {
    EnvelopeLabel label;
    double s1_begin = 0.0;
    double s1_end = 0.0;
};

struct EnvelopeSample {
    double s1 = 0.0;
    double s2 = 0.0;
    std::size_t segment = 0;
};

// Upper boundary of achievable (S1, S2) pairs under the stochastic-mixing
// construction: pure-case arcs plus tangent mixing lines obtained as upper
// concave hulls of case pairs routed through the one-of-each case.
class TradeoffEnvelope {
public:
    double s1_min() const { return xmin_; }
    double s1_max() const { return xmax_; }

    double value_at(double s1) const;
    EnvelopeLabel label_at(double s1) const;

    const std::vector<EnvelopeSegment>& segments() const { return segments_; }
    const std::vector<EnvelopeSample>& samples() const { return samples_; }
    std::vector<double> interior_breakpoints() const;

    // S1 value where the boundary meets the diagonal S2 = S1.
    double diagonal_crossing() const;

private:
    struct Vertex {
        double x = 0.0;
        double y = 0.0;
        int case_idx = -1;
    };
    struct Piece {
        std::vector<Vertex> v;  // strictly increasing x
        bool covers(double x) const;
        double eval(double x) const;
        // Label of the edge containing x (arc vs mixing chord).
        EnvelopeLabel edge_label(double x, const std::vector<CaseId>& ids) const;
    };

    std::vector<Piece> pieces_;
    std::vector<CaseId> case_ids_;
    double xmin_ = 0.0;
    double xmax_ = 0.0;
    std::vector<EnvelopeSegment> segments_;
    std::vector<EnvelopeSample> samples_;

    std::pair<double, EnvelopeLabel> best_at(double x) const;

    friend TradeoffEnvelope build_envelope(const std::vector<StrategyCase>& cases,
                                           int samples_per_case);
};

TradeoffEnvelope build_envelope(const std::vector<StrategyCase>& cases,
                                int samples_per_case = 4096);

}  // namespace steerlab

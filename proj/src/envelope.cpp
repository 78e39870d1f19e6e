#include "steerlab/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace steerlab {

namespace {

// Collinearity threshold for the hull sweep.
constexpr double kCrossTol = 1e-10;

struct RawPoint {
    double x, y;
    int case_idx;
};

double cross(const RawPoint& a, const RawPoint& b, const RawPoint& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

bool is_three_like(CaseId id) {
    return id == CaseId::Three || id == CaseId::ThreeA || id == CaseId::ThreeB;
}

}  // namespace

std::string to_string(const EnvelopeLabel& label) {
    if (label.arc) return "arc(" + to_string(label.a) + ")";
    return "mix(" + to_string(label.a) + "|" + to_string(label.b) + ")";
}

bool TradeoffEnvelope::Piece::covers(double x) const {
    return !v.empty() && x >= v.front().x - 1e-12 && x <= v.back().x + 1e-12;
}

double TradeoffEnvelope::Piece::eval(double x) const {
    if (v.size() == 1) return v.front().y;
    auto it = std::lower_bound(v.begin(), v.end(), x,
                               [](const Vertex& a, double q) { return a.x < q; });
    if (it == v.begin()) return v.front().y;
    if (it == v.end()) return v.back().y;
    const Vertex& hi = *it;
    const Vertex& lo = *(it - 1);
    const double span = hi.x - lo.x;
    if (span <= 0.0) return std::max(lo.y, hi.y);
    const double t = (x - lo.x) / span;
    return lo.y + t * (hi.y - lo.y);
}

EnvelopeLabel TradeoffEnvelope::Piece::edge_label(double x,
                                                  const std::vector<CaseId>& ids) const {
    if (v.size() == 1) {
        return {true, ids[static_cast<std::size_t>(v.front().case_idx)],
                ids[static_cast<std::size_t>(v.front().case_idx)]};
    }
    auto it = std::lower_bound(v.begin(), v.end(), x,
                               [](const Vertex& a, double q) { return a.x < q; });
    if (it == v.begin()) ++it;
    if (it == v.end()) --it;
    const Vertex& hi = *it;
    const Vertex& lo = *(it - 1);
    const auto li = static_cast<std::size_t>(lo.case_idx);
    const auto hi_i = static_cast<std::size_t>(hi.case_idx);
    if (lo.case_idx == hi.case_idx) {
        // Edges inside one case follow its arc (collinear vertices may have
        // been pruned, so the angle gap is no indicator).
        return {true, ids[li], ids[li]};
    }
    CaseId a = ids[li];
    CaseId b = ids[hi_i];
    if (static_cast<int>(a) > static_cast<int>(b)) std::swap(a, b);
    return {false, a, b};
}

std::pair<double, EnvelopeLabel> TradeoffEnvelope::best_at(double x) const {
    double best = -std::numeric_limits<double>::infinity();
    EnvelopeLabel label;
    bool found = false;
    for (const Piece& p : pieces_) {
        if (!p.covers(x)) continue;
        const double y = p.eval(x);
        const EnvelopeLabel l = p.edge_label(x, case_ids_);
        // Prefer the arc label on ties so tangency points resolve cleanly.
        if (!found || y > best + 1e-12 || (std::abs(y - best) <= 1e-12 && l.arc && !label.arc)) {
            best = y;
            label = l;
            found = true;
        }
    }
    if (!found) throw std::out_of_range("envelope query outside its S1 range");
    return {best, label};
}

double TradeoffEnvelope::value_at(double s1) const {
    const double x = std::clamp(s1, xmin_, xmax_);
    return best_at(x).first;
}

EnvelopeLabel TradeoffEnvelope::label_at(double s1) const {
    const double x = std::clamp(s1, xmin_, xmax_);
    return best_at(x).second;
}

std::vector<double> TradeoffEnvelope::interior_breakpoints() const {
    std::vector<double> out;
    for (std::size_t i = 1; i < segments_.size(); ++i) out.push_back(segments_[i].s1_begin);
    return out;
}

double TradeoffEnvelope::diagonal_crossing() const {
    double lo = xmin_;
    double hi = xmax_;
    const auto gap = [this](double x) { return value_at(x) - x; };
    if (gap(lo) <= 0.0) return lo;
    if (gap(hi) >= 0.0) return hi;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (gap(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

TradeoffEnvelope build_envelope(const std::vector<StrategyCase>& cases, int samples_per_case) {
    if (cases.empty()) throw std::invalid_argument("build_envelope: empty case list");
    if (samples_per_case < 100) {
        throw std::invalid_argument("build_envelope: need at least 100 samples per case");
    }

    TradeoffEnvelope env;
    std::vector<std::vector<RawPoint>> arcs(cases.size());
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const StrategyCase& c = cases[i];
        env.case_ids_.push_back(c.id);
        const int n = c.angle_count == 0 ? 1 : samples_per_case;
        const double step =
            n > 1 ? (c.angle_max - c.angle_min) / static_cast<double>(n - 1) : 1.0;
        arcs[i].reserve(static_cast<std::size_t>(n));
        const DensityMatrix rho = partial_entangled(c.alpha);
        for (int k = 0; k < n; ++k) {
            const double angle = c.angle_min + step * static_cast<double>(k);
            const auto [s1, s2] = simulate_case(c, angle, rho);
            arcs[i].push_back({s1, s2, static_cast<int>(i)});
        }
    }

    // Pairings: chords are only drawn through a one-of-each case when one is
    // present; otherwise every pair mixes. A single case stands alone.
    std::vector<std::pair<int, int>> pairings;
    if (cases.size() >= 2) {
        bool any_three = false;
        for (const StrategyCase& c : cases) any_three |= is_three_like(c.id);
        for (std::size_t i = 0; i < cases.size(); ++i) {
            for (std::size_t j = i + 1; j < cases.size(); ++j) {
                if (!any_three || is_three_like(cases[i].id) || is_three_like(cases[j].id)) {
                    pairings.emplace_back(static_cast<int>(i), static_cast<int>(j));
                }
            }
        }
    }

    const auto upper_hull = [](std::vector<RawPoint> pts) {
        std::sort(pts.begin(), pts.end(), [](const RawPoint& a, const RawPoint& b) {
            if (a.x != b.x) return a.x < b.x;
            return a.y > b.y;
        });
        std::vector<RawPoint> dedup;
        for (const RawPoint& p : pts) {
            if (dedup.empty() || p.x > dedup.back().x + 1e-15) dedup.push_back(p);
        }
        std::vector<RawPoint> hull;
        for (const RawPoint& p : dedup) {
            while (hull.size() >= 2 &&
                   cross(hull[hull.size() - 2], hull.back(), p) >= -kCrossTol) {
                hull.pop_back();
            }
            hull.push_back(p);
        }
        return hull;
    };

    const auto to_piece = [](const std::vector<RawPoint>& pts) {
        TradeoffEnvelope::Piece piece;
        piece.v.reserve(pts.size());
        for (const RawPoint& p : pts) piece.v.push_back({p.x, p.y, p.case_idx});
        return piece;
    };

    if (pairings.empty()) {
        // Single case: pointwise upper boundary of its own arc.
        const auto& arc = arcs[0];
        double xlo = arc.front().x, xhi = arc.front().x;
        for (const RawPoint& p : arc) {
            xlo = std::min(xlo, p.x);
            xhi = std::max(xhi, p.x);
        }
        const int grid = std::max(1024, samples_per_case);
        std::vector<RawPoint> boundary;
        for (int k = 0; k <= grid; ++k) {
            const double x = xlo + (xhi - xlo) * static_cast<double>(k) / grid;
            double best = -std::numeric_limits<double>::infinity();
            for (std::size_t s = 0; s + 1 < arc.size(); ++s) {
                const RawPoint& a = arc[s];
                const RawPoint& b = arc[s + 1];
                const double lo = std::min(a.x, b.x), hi = std::max(a.x, b.x);
                if (x < lo - 1e-12 || x > hi + 1e-12) continue;
                const double t = hi > lo ? (x - lo) / (hi - lo) : 0.5;
                const double y = a.x <= b.x ? a.y + t * (b.y - a.y) : b.y + t * (a.y - b.y);
                best = std::max(best, y);
            }
            if (std::isfinite(best)) boundary.push_back({x, best, 0});
        }
        env.pieces_.push_back(to_piece(boundary));
    } else {
        for (const auto& [i, j] : pairings) {
            std::vector<RawPoint> merged = arcs[static_cast<std::size_t>(i)];
            merged.insert(merged.end(), arcs[static_cast<std::size_t>(j)].begin(),
                          arcs[static_cast<std::size_t>(j)].end());
            env.pieces_.push_back(to_piece(upper_hull(std::move(merged))));
        }
    }

    // Reporting domain: from the overall peak rightward, clipped to S1 >= 0.
    double peak_x = 0.0;
    double peak_y = -std::numeric_limits<double>::infinity();
    double xmax = -std::numeric_limits<double>::infinity();
    for (const auto& piece : env.pieces_) {
        for (const auto& vert : piece.v) {
            if (vert.y > peak_y + 1e-12 ||
                (std::abs(vert.y - peak_y) <= 1e-12 && vert.x < peak_x)) {
                peak_y = vert.y;
                peak_x = vert.x;
            }
            xmax = std::max(xmax, vert.x);
        }
    }
    env.xmin_ = std::max(0.0, peak_x);
    env.xmax_ = xmax;

    // Dense sweep with label tracking; segment boundaries refined by bisection.
    const int grid = std::max(2048, samples_per_case);
    std::vector<std::pair<double, EnvelopeLabel>> trace(static_cast<std::size_t>(grid) + 1);
    std::vector<double> xs(static_cast<std::size_t>(grid) + 1);
    for (int k = 0; k <= grid; ++k) {
        xs[static_cast<std::size_t>(k)] =
            env.xmin_ + (env.xmax_ - env.xmin_) * static_cast<double>(k) / grid;
        trace[static_cast<std::size_t>(k)] = env.best_at(xs[static_cast<std::size_t>(k)]);
    }

    std::vector<EnvelopeSegment> segments;
    double seg_start = env.xmin_;
    EnvelopeLabel current = trace.front().second;
    for (std::size_t k = 1; k < trace.size(); ++k) {
        if (trace[k].second == current) continue;
        double lo = xs[k - 1];
        double hi = xs[k];
        for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            (env.best_at(mid).second == current ? lo : hi) = mid;
        }
        const double boundary = 0.5 * (lo + hi);
        segments.push_back({current, seg_start, boundary});
        seg_start = boundary;
        current = trace[k].second;
    }
    segments.push_back({current, seg_start, env.xmax_});

    // Absorb slivers produced by hull vertex jitter into their neighbour,
    // then merge runs that ended up with the same label.
    std::vector<EnvelopeSegment> cleaned;
    const double min_span = (env.xmax_ - env.xmin_) * 1e-4;
    double carry_begin = env.xmin_;
    for (const EnvelopeSegment& s : segments) {
        const bool sliver = (s.s1_end - s.s1_begin) < min_span && segments.size() > 1;
        if (sliver) {
            if (!cleaned.empty()) cleaned.back().s1_end = s.s1_end;
            continue;
        }
        EnvelopeSegment seg = s;
        seg.s1_begin = cleaned.empty() ? carry_begin : cleaned.back().s1_end;
        if (!cleaned.empty() && cleaned.back().label == seg.label) {
            cleaned.back().s1_end = seg.s1_end;
        } else {
            cleaned.push_back(seg);
        }
    }
    if (cleaned.empty()) cleaned = segments;
    env.segments_ = std::move(cleaned);

    env.samples_.reserve(trace.size());
    for (std::size_t k = 0; k < trace.size(); ++k) {
        std::size_t seg = 0;
        while (seg + 1 < env.segments_.size() && xs[k] > env.segments_[seg].s1_end) ++seg;
        env.samples_.push_back({xs[k], trace[k].first, seg});
    }
    return env;
}

}  // namespace steerlab

#pragma once

#include "ballframes/group.hpp"

namespace ballframes {

struct FamilyEntry {
    SVector tvec;        // lattice coordinates in S (length 2n)
    GroupElement x;      // s_from_coords(tvec)
    BallPoint w;         // x . o
    double one_minus_w2; // cached 1 - |w|^2
};

/// A finite point family in S with its orbit points in the ball.  Immutable
/// after construction; construction re-checks w_i = x_i . o and rejects
/// duplicate lattice coordinates.
class PointFamily {
public:
    PointFamily(int n, double epsilon, double box_radius, std::vector<FamilyEntry> entries);

    int n() const noexcept { return n_; }
    double epsilon() const noexcept { return epsilon_; }
    double box_radius() const noexcept { return box_radius_; }
    std::size_t size() const noexcept { return entries_.size(); }
    const FamilyEntry& entry(std::size_t i) const { return entries_[i]; }
    const std::vector<FamilyEntry>& entries() const noexcept { return entries_; }

private:
    int n_;
    double epsilon_;
    double box_radius_;
    std::vector<FamilyEntry> entries_;
};

/// Deterministic lattice in S: tvec ranges over (2 epsilon) Z^{2n} clipped to
/// the coordinate box of radius box_radius, so adjacent epsilon-boxes abut.
/// Throws CapacityExceeded past max_points.
PointFamily generate_lattice(double epsilon, double box_radius, int n,
                             std::size_t max_points = 200'000);

/// Moebius-invariant distance surrogate on the ball:
/// 1 - rho^2 = (1-|z|^2)(1-|w|^2) / |1 - <z,w>|^2.
double pseudo_hyperbolic_distance(const BallPoint& z, const BallPoint& w);

struct SeparationResult {
    bool separated = false;
    double min_distance = 0.0; // min pairwise rho over distinct points
};

/// Checks min pairwise pseudo-hyperbolic distance >= delta.
SeparationResult separation_check(const PointFamily& family, double delta);

/// Fraction of probe points lying within eps_metric (pseudo-hyperbolic) of
/// some family point.
double density_check(const PointFamily& family, double eps_metric,
                     const std::vector<BallPoint>& probes);

} // namespace ballframes

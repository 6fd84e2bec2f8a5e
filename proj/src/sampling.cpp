#include "ballframes/sampling.hpp"

#include <cmath>
#include <set>

namespace ballframes {

PointFamily::PointFamily(int n, double epsilon, double box_radius,
                         std::vector<FamilyEntry> entries)
    : n_(n), epsilon_(epsilon), box_radius_(box_radius), entries_(std::move(entries)) {
    if (epsilon_ <= 0.0) throw DomainError("point family requires epsilon > 0");
    std::set<std::vector<double>> seen;
    for (const auto& e : entries_) {
        const BallPoint img = e.x.act(BallPoint::origin(n_));
        double err = 0.0;
        for (int k = 0; k < n_; ++k) err = std::max(err, std::abs(img[k] - e.w[k]));
        if (err > kTauPt)
            throw DomainError("family entry violates w = x . o (error " + std::to_string(err) + ")");
        std::vector<double> key(e.tvec.data(), e.tvec.data() + e.tvec.size());
        if (!seen.insert(key).second) throw DomainError("duplicate tvec in point family");
    }
}

PointFamily generate_lattice(double epsilon, double box_radius, int n,
                             std::size_t max_points) {
    if (epsilon <= 0.0) throw DomainError("generate_lattice requires epsilon > 0");
    if (box_radius < 0.0) throw DomainError("generate_lattice requires box_radius >= 0");
    const int dim = 2 * n;
    const double step = 2.0 * epsilon;
    const int kmax = static_cast<int>(std::floor(box_radius / step + 1e-12));
    const std::size_t per_axis = static_cast<std::size_t>(2 * kmax + 1);
    std::size_t count = 1;
    for (int d = 0; d < dim; ++d) {
        count *= per_axis;
        if (count > max_points)
            throw CapacityExceeded("lattice would contain more than " +
                                   std::to_string(max_points) + " points");
    }

    std::vector<FamilyEntry> entries;
    entries.reserve(count);
    std::vector<int> k(dim, -kmax);
    while (true) {
        SVector tv(dim);
        for (int d = 0; d < dim; ++d) tv[d] = step * k[d];
        GroupElement x = s_from_coords(n, tv);
        BallPoint w = x.act(BallPoint::origin(n));
        const double omw2 = w.one_minus_norm2();
        entries.push_back({tv, std::move(x), std::move(w), omw2});
        int d = 0;
        while (d < dim && ++k[d] > kmax) k[d++] = -kmax;
        if (d == dim) break;
    }
    return PointFamily(n, epsilon, box_radius, std::move(entries));
}

double pseudo_hyperbolic_distance(const BallPoint& z, const BallPoint& w) {
    const double num = z.one_minus_norm2() * w.one_minus_norm2();
    const double den = std::norm(Complex(1.0) - pairing(z, w));
    const double rho2 = 1.0 - num / den;
    return std::sqrt(std::max(rho2, 0.0));
}

SeparationResult separation_check(const PointFamily& family, double delta) {
    SeparationResult r;
    r.min_distance = 1.0;
    const std::size_t m = family.size();
    if (m < 2) {
        r.separated = true;
        return r;
    }
    double global_min = 1.0;
#pragma omp parallel for schedule(static) reduction(min : global_min)
    for (long long i = 0; i < static_cast<long long>(m); ++i)
        for (std::size_t j = static_cast<std::size_t>(i) + 1; j < m; ++j) {
            const double d = pseudo_hyperbolic_distance(
                family.entry(static_cast<std::size_t>(i)).w, family.entry(j).w);
            global_min = std::min(global_min, d);
        }
    r.min_distance = global_min;
    r.separated = global_min >= delta;
    return r;
}

double density_check(const PointFamily& family, double eps_metric,
                     const std::vector<BallPoint>& probes) {
    if (probes.empty()) return 1.0;
    long long covered = 0;
#pragma omp parallel for schedule(static) reduction(+ : covered)
    for (long long i = 0; i < static_cast<long long>(probes.size()); ++i) {
        for (const auto& e : family.entries()) {
            if (pseudo_hyperbolic_distance(probes[static_cast<std::size_t>(i)], e.w) <=
                eps_metric) {
                ++covered;
                break;
            }
        }
    }
    return static_cast<double>(covered) / static_cast<double>(probes.size());
}

} // namespace ballframes

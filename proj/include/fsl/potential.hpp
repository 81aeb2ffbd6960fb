#pragma once

// Piecewise potential q on T = [0, gamma] u [a, b].  Each segment is backed
// either by a callable or by a uniform sample grid with local cubic
// interpolation.  q(gamma) is stored explicitly: the frozen-argument term and
// several coefficient formulas depend on it, and grid interpolation at a
// segment endpoint would be ambiguous.

#include "fsl/geometry.hpp"
#include "fsl/types.hpp"

#include <functional>
#include <vector>

namespace fsl {

class Potential {
public:
    using Callable = std::function<double(double)>;

    Potential() = default;

    static Potential zero(const Geometry& g);
    static Potential from_callables(const Geometry& g, Callable left, Callable right);
    static Potential from_grids(const Geometry& g, std::vector<double> left,
                                std::vector<double> right, double q_at_gamma);

    // evaluation anywhere on T (domain error outside)
    double operator()(double t) const;
    // per-segment evaluation by local coordinate: left on [0, gamma], right on [a, b]
    double eval_left(double t) const;
    double eval_right(double t) const;

    double q_gamma() const { return q_gamma_; }
    // exactly-zero potential: integral terms are skipped, never quadratured
    bool is_zero() const { return zero_; }
    bool grid_backed() const { return grid_backed_; }

    const Geometry& geometry() const { return geom_; }
    const std::vector<double>& left_grid() const { return left_grid_; }
    const std::vector<double>& right_grid() const { return right_grid_; }

    // uniform resampling (used by serialization)
    std::vector<double> sample_left(int n) const;
    std::vector<double> sample_right(int n) const;

private:
    Geometry geom_{1.0, 1.0, 1.0};
    bool zero_ = true;
    bool grid_backed_ = false;
    Callable left_fn_, right_fn_;
    std::vector<double> left_grid_, right_grid_;
    double q_gamma_ = 0.0;
};

} // namespace fsl

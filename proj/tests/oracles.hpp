#pragma once

// Independent reference computations used only by the test suites. None of
// these share code paths with the library implementations they check.

#include "dolphin/skeleton.hpp"

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cmath>
#include <functional>
#include <limits>
#include <vector>

namespace oracle {

/// Natural cubic spline evaluated from per-piece cubic coefficients obtained
/// by one dense solve of all 4(n-1) interpolation/continuity conditions.
inline std::vector<double> natural_spline_dense(const std::vector<double>& x, const std::vector<double>& y,
                                                const std::vector<double>& query)
{
    const Eigen::Index pieces = static_cast<Eigen::Index>(x.size()) - 1;
    const Eigen::Index n = 4 * pieces;
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
    Eigen::Index row = 0;
    // piece i: y_i + c1 t + c2 t^2 + c3 t^3 with t = x - x_i; unknowns (c0..c3) per piece
    for (Eigen::Index i = 0; i < pieces; ++i) {
        const double h = x[static_cast<std::size_t>(i + 1)] - x[static_cast<std::size_t>(i)];
        const Eigen::Index c = 4 * i;
        a(row, c) = 1.0;
        b(row++) = y[static_cast<std::size_t>(i)];
        a(row, c) = 1.0;
        a(row, c + 1) = h;
        a(row, c + 2) = h * h;
        a(row, c + 3) = h * h * h;
        b(row++) = y[static_cast<std::size_t>(i + 1)];
        if (i + 1 < pieces) {
            // first and second derivative continuity at x_{i+1}
            a(row, c + 1) = 1.0;
            a(row, c + 2) = 2.0 * h;
            a(row, c + 3) = 3.0 * h * h;
            a(row, c + 5) = -1.0;
            ++row;
            a(row, c + 2) = 2.0;
            a(row, c + 3) = 6.0 * h;
            a(row, c + 6) = -2.0;
            ++row;
        }
    }
    a(row, 2) = 2.0; // s''(x_0) = 0
    ++row;
    {
        const double h = x.back() - x[x.size() - 2];
        const Eigen::Index c = 4 * (pieces - 1);
        a(row, c + 2) = 2.0;
        a(row, c + 3) = 6.0 * h; // s''(x_{n-1}) = 0
        ++row;
    }
    const Eigen::VectorXd coef = a.fullPivLu().solve(b);

    std::vector<double> out;
    for (const double q : query) {
        std::size_t i = 0;
        while (i + 2 < x.size() && q > x[i + 1]) ++i;
        const double t = q - x[i];
        const Eigen::Index c = 4 * static_cast<Eigen::Index>(i);
        out.push_back(coef(c) + t * (coef(c + 1) + t * (coef(c + 2) + t * coef(c + 3))));
    }
    return out;
}

using HighPrecision = boost::multiprecision::cpp_bin_float_50;

/// Monomial least-squares coefficients from a 50-digit Householder QR solve.
inline std::vector<double> least_squares_high_precision(const std::vector<double>& x, const std::vector<double>& y,
                                                        int degree)
{
    using Matrix = Eigen::Matrix<HighPrecision, Eigen::Dynamic, Eigen::Dynamic>;
    using Vector = Eigen::Matrix<HighPrecision, Eigen::Dynamic, 1>;
    const auto rows = static_cast<Eigen::Index>(x.size());
    const auto cols = static_cast<Eigen::Index>(degree + 1);
    Matrix a(rows, cols);
    Vector b(rows);
    for (Eigen::Index r = 0; r < rows; ++r) {
        HighPrecision p = 1;
        for (Eigen::Index c = 0; c < cols; ++c) {
            a(r, c) = p;
            p *= HighPrecision(x[static_cast<std::size_t>(r)]);
        }
        b(r) = HighPrecision(y[static_cast<std::size_t>(r)]);
    }
    const Vector sol = a.householderQr().solve(b);
    std::vector<double> out;
    for (Eigen::Index c = 0; c < cols; ++c) out.push_back(static_cast<double>(sol(c)));
    return out;
}

/// Closed-form cable geometry of a uniform skeleton: equal rib spacing
/// `spacing`, horizontal straight spine, guides `half_height` above and below
/// the spine on every rib, pivot at each segment midpoint. The top-guide
/// chord across a segment depends only on that segment's relative angle.
struct UniformTail {
    double spacing;
    double half_height;

    double top_chord(double angle) const
    {
        const double dx = 0.5 * spacing + 0.5 * spacing * std::cos(angle) - half_height * std::sin(angle);
        const double dy = 0.5 * spacing * std::sin(angle) + half_height * std::cos(angle) - half_height;
        return std::hypot(dx, dy);
    }
    double bottom_chord(double angle) const { return top_chord(-angle); }
};

struct GridMinimum {
    std::vector<double> angles;
    double energy = std::numeric_limits<double>::infinity();
};

/// Brute-force energy minimization over three segment angles under a top
/// cable length constraint. Angles 1 and 2 are scanned on a grid (first at
/// 1e-2 rad over [lo, hi], then at 1e-3 rad around the coarse optimum);
/// angle 3 is solved from the constraint by bisection.
inline GridMinimum brute_force_three_segments(const UniformTail& tail, const std::vector<double>& stiffness,
                                              double target_top_length, double lo = -0.2, double hi = 1.4)
{
    auto solve_third = [&](double a1, double a2, double& a3) {
        const double rest = target_top_length - tail.top_chord(a1) - tail.top_chord(a2);
        // top_chord is decreasing on [-pi/2, pi/2) for the geometries used here
        double l = -1.5, h = 1.5;
        if (tail.top_chord(l) < rest || tail.top_chord(h) > rest) return false;
        for (int i = 0; i < 80; ++i) {
            const double m = 0.5 * (l + h);
            (tail.top_chord(m) > rest ? l : h) = m;
        }
        a3 = 0.5 * (l + h);
        return true;
    };
    GridMinimum best;
    auto scan = [&](double lo1, double hi1, double lo2, double hi2, double step) {
        const int n1 = static_cast<int>(std::round((hi1 - lo1) / step));
        const int n2 = static_cast<int>(std::round((hi2 - lo2) / step));
        for (int i = 0; i <= n1; ++i) {
            const double a1 = lo1 + step * i;
            for (int j = 0; j <= n2; ++j) {
                const double a2 = lo2 + step * j;
                double a3 = 0.0;
                if (!solve_third(a1, a2, a3)) continue;
                const double e = 0.5 * (stiffness[0] * a1 * a1 + stiffness[1] * a2 * a2 + stiffness[2] * a3 * a3);
                if (e < best.energy) best = {{a1, a2, a3}, e};
            }
        }
    };
    scan(lo, hi, lo, hi, 1e-2);
    const auto coarse = best.angles;
    scan(coarse[0] - 0.03, coarse[0] + 0.03, coarse[1] - 0.03, coarse[1] + 0.03, 1e-3);
    return best;
}

} // namespace oracle

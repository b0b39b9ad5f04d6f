#pragma once

// Body-profile ingestion and the polynomial description of the upper and
// lower contours of the center-cut body.

#include "dolphin/common.hpp"
#include "dolphin/csv.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <fstream>
#include <istream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

namespace dolphin {

inline constexpr int kDefaultFitDegree = 17;
inline constexpr char kProfileCsvHeader[] = "x_m,y_upper_m,y_lower_m";

/// Discretized upper/lower contour of the body, in meters.
struct ProfileSamples {
    std::vector<Point2> upper;
    std::vector<Point2> lower;
    double body_length = 0.0;

    double x_min() const
    {
        return std::min(upper.front().x, lower.front().x);
    }

    friend bool operator==(const ProfileSamples&, const ProfileSamples&) = default;
};

/// Polynomial y(x) = sum c_i x^i on the normalized chord [0, 1].
struct PolyCurve {
    std::vector<double> coefficients;

    int degree() const { return static_cast<int>(coefficients.size()) - 1; }

    friend bool operator==(const PolyCurve&, const PolyCurve&) = default;
};

struct FitReport {
    double mse_upper = 0.0;    // m^2
    double mse_lower = 0.0;    // m^2
    double residual_max = 0.0; // m, over both curves
    int degree = 0;
};

struct ProfileFit {
    PolyCurve upper;
    PolyCurve lower;
    FitReport report;
};

namespace detail {

inline void check_strictly_increasing(const std::vector<Point2>& points, const char* which)
{
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (!(points[i].x > points[i - 1].x)) {
            throw ValidationError(std::string(which) + " curve: x must be strictly increasing (sample " +
                                  std::to_string(i) + ")");
        }
    }
}

} // namespace detail

/// Checks the ProfileSamples invariants; throws ValidationError on the first breach.
inline void validate(const ProfileSamples& samples, std::size_t min_points = 2)
{
    if (samples.upper.size() < min_points || samples.lower.size() < min_points) {
        throw ValidationError("profile needs at least " + std::to_string(min_points) +
                              " points per curve, got " + std::to_string(samples.upper.size()) +
                              " upper / " + std::to_string(samples.lower.size()) + " lower");
    }
    detail::check_strictly_increasing(samples.upper, "upper");
    detail::check_strictly_increasing(samples.lower, "lower");

    const double lo = std::min(samples.upper.front().x, samples.lower.front().x);
    const double hi = std::max(samples.upper.back().x, samples.lower.back().x);
    if (!(hi - lo > 0.0)) throw ValidationError("profile body length must be positive");
    if (std::abs(samples.body_length - (hi - lo)) > 1e-12 * std::max(1.0, hi - lo)) {
        throw ValidationError("profile body_length does not match the sampled chord extent");
    }

    // Upper above lower wherever both curves are sampled at the same x.
    auto u = samples.upper.begin();
    auto l = samples.lower.begin();
    while (u != samples.upper.end() && l != samples.lower.end()) {
        if (u->x < l->x) {
            ++u;
        } else if (l->x < u->x) {
            ++l;
        } else {
            if (u->y < l->y) {
                throw ValidationError("profile: upper curve below lower curve at x = " +
                                      csv::format_real(u->x));
            }
            ++u;
            ++l;
        }
    }
}

/// Reads the `x_m,y_upper_m,y_lower_m` CSV. At least `min_rows` rows are
/// required so that a degree-(min_rows-2) fit remains overdetermined.
inline ProfileSamples load_profile(std::istream& in, std::size_t min_rows = kDefaultFitDegree + 2)
{
    const auto table = csv::read_numeric(in, kProfileCsvHeader);
    if (table.rows.size() < min_rows) {
        throw ValidationError("profile has " + std::to_string(table.rows.size()) +
                              " rows; at least " + std::to_string(min_rows) + " are required");
    }
    ProfileSamples samples;
    samples.upper.reserve(table.rows.size());
    samples.lower.reserve(table.rows.size());
    for (const auto& row : table.rows) {
        samples.upper.push_back({row[0], row[1]});
        samples.lower.push_back({row[0], row[2]});
    }
    samples.body_length = samples.upper.back().x - samples.upper.front().x;
    validate(samples, min_rows);
    return samples;
}

inline ProfileSamples load_profile_file(const std::string& path,
                                        std::size_t min_rows = kDefaultFitDegree + 2)
{
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open profile '" + path + "'");
    return load_profile(in, min_rows);
}

inline ProfileSamples load_profile_text(const std::string& text,
                                        std::size_t min_rows = kDefaultFitDegree + 2)
{
    std::istringstream in(text);
    return load_profile(in, min_rows);
}

/// Removes upper-contour samples with x in the closed interval [x_lo, x_hi].
/// The lower contour is untouched.
inline ProfileSamples excise_dorsal(const ProfileSamples& samples, double x_lo = 0.40,
                                    double x_hi = 0.61, int degree = kDefaultFitDegree)
{
    if (!(x_lo < x_hi)) throw ValidationError("excision interval requires x_lo < x_hi");
    const double lo = samples.x_min();
    const double hi = lo + samples.body_length;
    if (x_lo < lo || x_hi > hi) {
        throw ValidationError("excision interval [" + csv::format_real(x_lo) + ", " +
                              csv::format_real(x_hi) + "] lies outside the chord");
    }
    ProfileSamples out = samples;
    std::erase_if(out.upper, [&](const Point2& p) { return p.x >= x_lo && p.x <= x_hi; });
    const auto needed = static_cast<std::size_t>(degree) + 2;
    if (out.upper.size() < needed) {
        throw ValidationError("excision leaves " + std::to_string(out.upper.size()) +
                              " upper points; at least " + std::to_string(needed) + " are required");
    }
    // Chord extent is defined by both curves; removing interior points never changes it,
    // but an excision that trims an end of the upper curve may.
    const double new_lo = std::min(out.upper.front().x, out.lower.front().x);
    const double new_hi = std::max(out.upper.back().x, out.lower.back().x);
    out.body_length = new_hi - new_lo;
    return out;
}

/// Natural cubic spline through strictly increasing knots.
class NaturalCubicSpline {
public:
    NaturalCubicSpline(std::vector<double> x, std::vector<double> y)
        : x_(std::move(x)), y_(std::move(y)), m_(x_.size(), 0.0)
    {
        const std::size_t n = x_.size();
        if (n < 4) throw ValidationError("cubic interpolation needs at least 4 points");
        if (y_.size() != n) throw ValidationError("spline knots and values differ in length");
        for (std::size_t i = 1; i < n; ++i) {
            if (!(x_[i] > x_[i - 1])) throw ValidationError("spline knots must be strictly increasing");
        }
        // Second derivatives m_i from the tridiagonal system with m_0 = m_{n-1} = 0.
        std::vector<double> diag(n, 1.0), upper(n, 0.0), rhs(n, 0.0);
        for (std::size_t i = 1; i + 1 < n; ++i) {
            const double h0 = x_[i] - x_[i - 1];
            const double h1 = x_[i + 1] - x_[i];
            const double sub = h0 / 6.0;
            diag[i] = (h0 + h1) / 3.0;
            upper[i] = h1 / 6.0;
            rhs[i] = (y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0;
            // Forward elimination against the previous row.
            const double w = sub / diag[i - 1];
            diag[i] -= w * upper[i - 1];
            rhs[i] -= w * rhs[i - 1];
        }
        for (std::size_t i = n - 2; i >= 1; --i) {
            m_[i] = (rhs[i] - upper[i] * m_[i + 1]) / diag[i];
        }
    }

    double operator()(double x) const
    {
        const auto it = std::upper_bound(x_.begin() + 1, x_.end() - 1, x);
        const std::size_t i = static_cast<std::size_t>(it - x_.begin()) - 1;
        const double h = x_[i + 1] - x_[i];
        const double a = (x_[i + 1] - x) / h;
        const double b = (x - x_[i]) / h;
        return a * y_[i] + b * y_[i + 1] +
               ((a * a * a - a) * m_[i] + (b * b * b - b) * m_[i + 1]) * h * h / 6.0;
    }

    const std::vector<double>& knots() const { return x_; }

private:
    std::vector<double> x_;
    std::vector<double> y_;
    std::vector<double> m_;
};

/// Index i of the widest spacing upper[i] -> upper[i+1], and whether it
/// qualifies as a gap (wider than twice the median spacing).
inline std::pair<std::size_t, bool> find_gap(const std::vector<Point2>& points)
{
    if (points.size() < 2) return {0, false};
    std::vector<double> spacing;
    spacing.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) spacing.push_back(points[i].x - points[i - 1].x);
    const auto widest = static_cast<std::size_t>(
        std::max_element(spacing.begin(), spacing.end()) - spacing.begin());
    const double widest_value = spacing[widest];
    auto sorted = spacing;
    std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
    const double median = sorted[sorted.size() / 2];
    return {widest, widest_value > 2.0 * median};
}

/// Fills the widest gap of the upper contour with `n_fill` points placed
/// uniformly inside it, valued by a natural cubic spline through the
/// surviving upper samples. Existing points are kept unchanged.
inline ProfileSamples interpolate_gap(const ProfileSamples& samples, std::size_t n_fill)
{
    if (n_fill == 0) return samples;
    if (samples.upper.size() < 4) {
        throw ValidationError("cubic interpolation needs at least 4 upper points");
    }
    const auto [gap, is_gap] = find_gap(samples.upper);
    if (!is_gap) throw ValidationError("upper curve has no gap to interpolate");

    std::vector<double> xs, ys;
    xs.reserve(samples.upper.size());
    ys.reserve(samples.upper.size());
    for (const auto& p : samples.upper) {
        xs.push_back(p.x);
        ys.push_back(p.y);
    }
    const NaturalCubicSpline spline(std::move(xs), std::move(ys));

    const double a = samples.upper[gap].x;
    const double b = samples.upper[gap + 1].x;
    std::vector<Point2> filled;
    filled.reserve(n_fill);
    for (std::size_t k = 1; k <= n_fill; ++k) {
        const double x = a + (b - a) * static_cast<double>(k) / static_cast<double>(n_fill + 1);
        filled.push_back({x, spline(x)});
    }
    ProfileSamples out = samples;
    out.upper.insert(out.upper.begin() + static_cast<std::ptrdiff_t>(gap) + 1, filled.begin(),
                     filled.end());
    return out;
}

/// Horner evaluation on the normalized chord. Throws DomainError outside [0, 1].
inline double eval_profile(const PolyCurve& curve, double x)
{
    if (!(x >= 0.0 && x <= 1.0)) {
        throw DomainError("eval_profile: x = " + csv::format_real(x) + " outside [0, 1]");
    }
    double y = 0.0;
    for (auto c = curve.coefficients.rbegin(); c != curve.coefficients.rend(); ++c) y = y * x + *c;
    return y;
}

/// Least-squares polynomial of the given degree through (x, y), solved by
/// column-pivoted Householder QR on a column-equilibrated Vandermonde matrix.
/// The solve runs in extended precision with one step of iterative
/// refinement: degree-17 monomial coefficients lose roughly eleven digits
/// to conditioning, which double precision cannot spare.
inline PolyCurve fit_curve(std::span<const double> x, std::span<const double> y, int degree)
{
    using Real = long double;
    using Matrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
    using Vector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

    if (degree < 1) throw ValidationError("fit degree must be >= 1, got " + std::to_string(degree));
    if (x.size() != y.size()) throw ValidationError("fit: x and y differ in length");
    const auto cols = static_cast<Eigen::Index>(degree) + 1;
    std::vector<double> distinct(x.begin(), x.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (static_cast<Eigen::Index>(distinct.size()) < cols) {
        throw ValidationError("fit: rank-deficient system (" + std::to_string(distinct.size()) +
                              " distinct abscissae for degree " + std::to_string(degree) + ")");
    }

    const auto rows = static_cast<Eigen::Index>(x.size());
    Matrix vander(rows, cols);
    Vector rhs(rows);
    for (Eigen::Index r = 0; r < rows; ++r) {
        Real power = 1.0L;
        for (Eigen::Index c = 0; c < cols; ++c) {
            vander(r, c) = power;
            power *= static_cast<Real>(x[static_cast<std::size_t>(r)]);
        }
        rhs(r) = static_cast<Real>(y[static_cast<std::size_t>(r)]);
    }
    const Vector scale = vander.colwise().norm().transpose();
    Matrix scaled = vander;
    for (Eigen::Index c = 0; c < cols; ++c) scaled.col(c) /= scale(c);

    const Eigen::ColPivHouseholderQR<Matrix> qr(scaled);
    if (qr.rank() < cols) {
        throw ComputationError("fit: rank-deficient Vandermonde system (numerical rank " +
                               std::to_string(qr.rank()) + ")");
    }
    Vector z = qr.solve(rhs);
    // One refinement step: the LS correction of the current residual.
    const Vector residual = rhs - scaled * z;
    z += qr.solve(residual);
    const Vector solution = z.cwiseQuotient(scale);
    PolyCurve curve;
    curve.coefficients.reserve(static_cast<std::size_t>(cols));
    for (Eigen::Index c = 0; c < cols; ++c) curve.coefficients.push_back(static_cast<double>(solution(c)));
    return curve;
}

namespace detail {

struct CurveStats {
    double mse = 0.0;
    double max_abs = 0.0;
};

inline CurveStats residual_stats(const PolyCurve& curve, std::span<const double> x,
                                 std::span<const double> y)
{
    CurveStats stats;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = eval_profile(curve, x[i]) - y[i];
        stats.mse += r * r;
        stats.max_abs = std::max(stats.max_abs, std::abs(r));
    }
    stats.mse /= static_cast<double>(x.size());
    return stats;
}

inline void normalized(const std::vector<Point2>& points, double x0, double length,
                       std::vector<double>& xs, std::vector<double>& ys)
{
    xs.clear();
    ys.clear();
    for (const auto& p : points) {
        xs.push_back(std::clamp((p.x - x0) / length, 0.0, 1.0));
        ys.push_back(p.y);
    }
}

} // namespace detail

/// Fits both contours on the chord normalized to [0, 1]; y stays in meters.
inline ProfileFit fit_polynomial(const ProfileSamples& samples, int degree = kDefaultFitDegree)
{
    if (degree < 1) throw ValidationError("fit degree must be >= 1, got " + std::to_string(degree));
    validate(samples, static_cast<std::size_t>(degree) + 1);

    const double x0 = samples.x_min();
    std::vector<double> xu, yu, xl, yl;
    detail::normalized(samples.upper, x0, samples.body_length, xu, yu);
    detail::normalized(samples.lower, x0, samples.body_length, xl, yl);

    ProfileFit fit;
    fit.upper = fit_curve(xu, yu, degree);
    fit.lower = fit_curve(xl, yl, degree);
    const auto su = detail::residual_stats(fit.upper, xu, yu);
    const auto sl = detail::residual_stats(fit.lower, xl, yl);
    fit.report = FitReport{su.mse, sl.mse, std::max(su.max_abs, sl.max_abs), degree};
    return fit;
}

} // namespace dolphin

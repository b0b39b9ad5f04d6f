#pragma once

// The bundled synthetic reference profile and its standard fitting pipeline.

#include "dolphin/profile.hpp"
#include "dolphin/reference_profile_data.hpp"

namespace dolphin {

inline constexpr double kDorsalExciseLo = 0.40; // m
inline constexpr double kDorsalExciseHi = 0.61; // m
inline constexpr std::size_t kDefaultGapFill = 20;

inline ProfileSamples reference_profile() { return load_profile_text(kReferenceProfileCsv); }

/// Excise the dorsal fin, refill the gap with a natural cubic spline, fit.
inline ProfileFit fit_profile_pipeline(const ProfileSamples& samples, int degree = kDefaultFitDegree,
                                       double excise_lo = kDorsalExciseLo, double excise_hi = kDorsalExciseHi,
                                       std::size_t n_fill = kDefaultGapFill)
{
    const auto excised = excise_dorsal(samples, excise_lo, excise_hi, degree);
    return fit_polynomial(interpolate_gap(excised, n_fill), degree);
}

inline const ProfileFit& reference_fit()
{
    static const ProfileFit fit = fit_profile_pipeline(reference_profile());
    return fit;
}

} // namespace dolphin

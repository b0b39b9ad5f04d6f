#include "dolphin/reference.hpp"
#include "dolphin/tendon.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace dolphin;

namespace {

SkeletonGraph preset(std::size_t index)
{
    const auto& fit = reference_fit();
    return generate_skeleton(six_presets()[index], fit.upper, fit.lower);
}

ActuationCommand pull_top(double d) { return {d, 0.0, 0.0}; }

} // namespace

TEST(RouteCables, OneGuidePerRibOnEachSide)
{
    const auto g = preset(3);
    const auto r = route_cables(g);
    EXPECT_EQ(r.top_guides.size(), 6u);
    EXPECT_EQ(r.bottom_guides.size(), 6u);
    for (int i = 0; i < 6; ++i) {
        EXPECT_EQ(r.top_guides[static_cast<std::size_t>(i)], layout::top(i));
        EXPECT_EQ(r.bottom_guides[static_cast<std::size_t>(i)], layout::bottom(i));
    }
    EXPECT_EQ(r.anchor_top, layout::top(5));
}

TEST(RouteCables, TwoRibSlackIsGuideDistance)
{
    SkeletonSpec spec;
    spec.n_ribs = 2;
    const auto& fit = reference_fit();
    const auto g = generate_skeleton(spec, fit.upper, fit.lower);
    const auto r = route_cables(g);
    const auto& a = g.ribs[0];
    const auto& b = g.ribs[1];
    EXPECT_DOUBLE_EQ(r.slack_length_top, std::hypot(b.x - a.x, b.y_top - a.y_top));
    EXPECT_DOUBLE_EQ(r.slack_length_bottom, std::hypot(b.x - a.x, b.y_bottom - a.y_bottom));
}

TEST(RouteCables, GraphWithoutStringsIsRejected)
{
    auto g = preset(0);
    g.strings.clear();
    EXPECT_THROW(route_cables(g), ValidationError);
    auto one = fixtures::uniform_skeleton({3.0});
    EXPECT_THROW(route_cables(one), ValidationError);
}

TEST(Stiffness, CubicLawOnThickness)
{
    SkeletonSpec spec;
    const auto uniform = segment_stiffnesses(spec);
    for (const double k : uniform) EXPECT_DOUBLE_EQ(k, uniform.front());

    const auto g = fixtures::uniform_skeleton({6.0, 3.0, 3.0});
    const auto k = segment_stiffnesses(g);
    EXPECT_NEAR(k[0] / k[1], 8.0, 1e-12);

    spec.thickness_ratio = 3.0;
    const auto tapered = segment_stiffnesses(spec);
    ASSERT_EQ(tapered.size(), 5u);
    EXPECT_NEAR(tapered.back() / tapered.front(), std::pow(1.4 / 3.0, 3), 1e-12);
    EXPECT_NEAR(tapered.back() / tapered.front(), 0.1016, 1e-4);
    EXPECT_DOUBLE_EQ(tapered.front(), StiffnessModel{}.k_ref);
}

TEST(CableLengths, StraightPoseGivesSlack)
{
    const auto g = preset(3);
    const auto r = route_cables(g);
    const auto len = cable_lengths(g, r, TailPose{std::vector<double>(5, 0.0), {}});
    EXPECT_DOUBLE_EQ(len.top, r.slack_length_top);
    EXPECT_DOUBLE_EQ(len.bottom, r.slack_length_bottom);
    EXPECT_THROW(cable_lengths(g, r, TailPose{std::vector<double>(4, 0.0), {}}), ValidationError);
}

TEST(CableLengths, MirroredPoseSwapsLengthsOnSymmetricTail)
{
    const auto g = fixtures::uniform_skeleton({3, 3, 3, 3, 3});
    const auto r = route_cables(g);
    const std::vector<double> a{0.1, -0.05, 0.2, 0.13};
    std::vector<double> mirrored;
    for (const double v : a) mirrored.push_back(-v);
    const auto l1 = cable_lengths(g, r, {a, {}});
    const auto l2 = cable_lengths(g, r, {mirrored, {}});
    EXPECT_NEAR(l1.top, l2.bottom, 1e-15);
    EXPECT_NEAR(l1.bottom, l2.top, 1e-15);
}

TEST(CableLengths, MatchesClosedFormChords)
{
    const auto g = fixtures::uniform_skeleton({3, 3, 3, 3}, 0.04, 0.01);
    const auto r = route_cables(g);
    const oracle::UniformTail tail{0.04, 0.01};
    const std::vector<double> a{0.2, -0.1, 0.35};
    const auto len = cable_lengths(g, r, {a, {}});
    EXPECT_NEAR(len.top, tail.top_chord(a[0]) + tail.top_chord(a[1]) + tail.top_chord(a[2]), 1e-15);
    EXPECT_NEAR(len.bottom, tail.bottom_chord(a[0]) + tail.bottom_chord(a[1]) + tail.bottom_chord(a[2]), 1e-15);
}

TEST(BendFromCables, ZeroCommandIsStraight)
{
    const auto g = preset(3);
    const auto r = route_cables(g);
    const auto pose = bend_from_cables(g, r, {}, segment_stiffnesses(g));
    for (const double a : pose.segment_angles) EXPECT_EQ(a, 0.0);
    // midline alternates spine node, segment midpoint; at rest it is the undeformed spine
    for (std::size_t i = 0; i < g.ribs.size(); ++i) {
        EXPECT_NEAR(pose.midline[2 * i].x, g.ribs[i].x, 1e-15);
        EXPECT_NEAR(pose.midline[2 * i].y, g.ribs[i].y_spine, 1e-15);
    }
}

TEST(BendFromCables, SlackCableImposesNothing)
{
    const auto g = preset(3);
    const auto r = route_cables(g);
    const auto pose = bend_from_cables(g, r, {0.0, -0.01, 0.0}, segment_stiffnesses(g));
    for (const double a : pose.segment_angles) EXPECT_EQ(a, 0.0);
}

TEST(BendFromCables, RoundTripReproducesCommandedLength)
{
    for (std::size_t type = 0; type < 6; ++type) {
        const auto g = preset(type);
        const auto r = route_cables(g);
        for (const double d : {0.001, 0.004, 0.008, -0.008}) {
            const ActuationCommand cmd{std::max(d, 0.0), std::max(-d, 0.0), 0.0};
            const auto pose = bend_from_cables(g, r, cmd, segment_stiffnesses(g));
            const auto len = cable_lengths(g, r, pose);
            if (d > 0) EXPECT_NEAR(len.top, r.slack_length_top - d, 1e-9) << type;
            else EXPECT_NEAR(len.bottom, r.slack_length_bottom + d, 1e-9) << type;
        }
    }
}

TEST(BendFromCables, UniformTailBendsUniformly)
{
    const auto g = fixtures::uniform_skeleton({3, 3, 3, 3});
    const auto r = route_cables(g);
    const auto pose = bend_from_cables(g, r, pull_top(0.004), segment_stiffnesses(g));
    ASSERT_EQ(pose.segment_angles.size(), 3u);
    EXPECT_GT(pose.segment_angles[0], 0.0);
    for (const double a : pose.segment_angles) EXPECT_NEAR(a, pose.segment_angles[0], 1e-9);

    const oracle::UniformTail tail{0.04, 0.01};
    const auto grid = oracle::brute_force_three_segments(tail, segment_stiffnesses(g), r.slack_length_top - 0.004);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(pose.segment_angles[i], grid.angles[i], 2e-3);
}

TEST(BendFromCables, TaperedTailBendsMoreTowardTheTip)
{
    const auto g = fixtures::uniform_skeleton({3.0, 2.0, 1.0, 1.0});
    const auto r = route_cables(g);
    const auto k = segment_stiffnesses(g);
    const auto pose = bend_from_cables(g, r, pull_top(0.003), k);
    EXPECT_LT(pose.segment_angles[0], pose.segment_angles[1]);
    EXPECT_LT(pose.segment_angles[1], pose.segment_angles[2]);

    const auto grid = oracle::brute_force_three_segments({0.04, 0.01}, k, r.slack_length_top - 0.003);
    EXPECT_LT(grid.angles[0], grid.angles[1]);
    EXPECT_LT(grid.angles[1], grid.angles[2]);
}

TEST(BendFromCables, PresetThreeToOneIncreasesTowardTheTail)
{
    const auto g = preset(2);
    const auto pose = bend_from_cables(g, route_cables(g), pull_top(0.006), segment_stiffnesses(g));
    for (std::size_t i = 1; i < pose.segment_angles.size(); ++i) {
        EXPECT_GT(pose.segment_angles[i], pose.segment_angles[i - 1]);
    }
}

TEST(BendFromCables, EnergyNoWorseThanBruteForceGrid)
{
    for (const auto& thickness : {std::vector<double>{3, 3, 3, 3}, std::vector<double>{3, 2.2, 1.4, 1.4},
                                  std::vector<double>{2, 3, 1.5, 1.5}}) {
        const auto g = fixtures::uniform_skeleton(thickness);
        const auto r = route_cables(g);
        const auto k = segment_stiffnesses(g);
        for (const double d : {0.001, 0.003, 0.006}) {
            const auto pose = bend_from_cables(g, r, pull_top(d), k);
            const auto grid = oracle::brute_force_three_segments({0.04, 0.01}, k, r.slack_length_top - d);
            ASSERT_TRUE(std::isfinite(grid.energy));
            EXPECT_LE(elastic_energy(pose.segment_angles, k), grid.energy * (1.0 + 1e-12)) << d;
        }
    }
}

TEST(BendFromCables, SwappingCablesNegatesAnglesOnSymmetricTail)
{
    const auto g = fixtures::uniform_skeleton({3.0, 2.6, 2.2, 1.8, 1.4, 1.0});
    const auto r = route_cables(g);
    const auto k = segment_stiffnesses(g);
    const auto up = bend_from_cables(g, r, {0.005, -0.005, 0.0}, k);
    const auto down = bend_from_cables(g, r, {-0.005, 0.005, 0.0}, k);
    for (std::size_t i = 0; i < up.segment_angles.size(); ++i) {
        EXPECT_NEAR(up.segment_angles[i], -down.segment_angles[i], 1e-9);
    }
}

TEST(BendFromCables, MidlineIsInextensible)
{
    for (std::size_t type = 0; type < 6; ++type) {
        const auto g = preset(type);
        const auto r = route_cables(g);
        const auto straight = bend_from_cables(g, r, {}, segment_stiffnesses(g));
        const auto bent = bend_from_cables(g, r, pull_top(0.008), segment_stiffnesses(g));
        EXPECT_NEAR(polyline_length(bent.midline), polyline_length(straight.midline), 1e-9) << type;
    }
}

TEST(BendFromCables, TipDeflectionIncreasesWithPull)
{
    const auto g = fixtures::uniform_skeleton({3, 3, 3, 3, 3, 3});
    const auto r = route_cables(g);
    const auto k = segment_stiffnesses(g);
    double previous = 0.0;
    for (int i = 1; i <= 20; ++i) {
        const double d = 0.0005 * i;
        if (d > kTravelLimitFraction * r.slack_length_top) break;
        const auto pose = bend_from_cables(g, r, pull_top(d), k);
        const double tip = pose.midline.back().y;
        EXPECT_GT(tip, previous) << d;
        previous = tip;
    }
}

TEST(BendFromCables, TravelLimitAndInfeasibleCommandsFail)
{
    const auto g = preset(3);
    const auto r = route_cables(g);
    const auto k = segment_stiffnesses(g);
    EXPECT_THROW(bend_from_cables(g, r, pull_top(0.21 * r.slack_length_top), k), ValidationError);
    EXPECT_THROW(bend_from_cables(g, r, {}, std::vector<double>(3, 1.0)), ValidationError);

    // Shortening both cables of a symmetric tail by 10% of slack has no solution.
    const auto sym = fixtures::uniform_skeleton({3, 3, 3});
    const auto rs = route_cables(sym);
    const double d = 0.1 * rs.slack_length_top;
    EXPECT_THROW(bend_from_cables(sym, rs, {d, d, 0.0}, segment_stiffnesses(sym)), ComputationError);
}

TEST(ActuationWaveform, PhaseAndMean)
{
    const double a = 0.008, f = 1.5;
    const auto c0 = actuation_waveform(a, f, 0.0);
    EXPECT_EQ(c0.delta_top, 0.0);
    EXPECT_EQ(c0.delta_bottom, 0.0);
    const auto q = actuation_waveform(a, f, 1.0 / (4.0 * f));
    EXPECT_NEAR(q.delta_top, a, 1e-15);
    EXPECT_NEAR(q.delta_bottom, -a, 1e-15);
    double mean = 0.0;
    const int n = 64;
    for (int i = 0; i < n; ++i) mean += actuation_waveform(a, f, i / (n * f)).delta_top;
    EXPECT_NEAR(mean / n, 0.0, 1e-12);
    EXPECT_THROW(actuation_waveform(a, 0.0, 0.0), ValidationError);
    EXPECT_THROW(actuation_waveform(-a, f, 0.0), ValidationError);
}

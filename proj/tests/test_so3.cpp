#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "flowdepth/so3.hpp"

using namespace flowdepth;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("principal log basics") {
    AxisAngle id = principal_log(Rotation3::Identity());
    CHECK(id.theta == 0.0);

    Rotation3 Rz = exp_rot(Eigen::Vector3d(0, 0, 1), kPi / 2.0);
    AxisAngle aa = principal_log(Rz);
    CHECK(aa.theta == doctest::Approx(kPi / 2.0).epsilon(1e-12));
    CHECK(aa.axis.z() == doctest::Approx(1.0).epsilon(1e-12));

    Eigen::Vector3d diag = Eigen::Vector3d(1, 1, 1).normalized();
    Rotation3 R = exp_rot(diag, 1.0);
    AxisAngle d = principal_log(R);
    CHECK(d.theta == doctest::Approx(1.0).epsilon(1e-12));
    CHECK((d.axis - diag).norm() <= 1e-12);
    CHECK((exp_rot(d.axis, d.theta) - R).norm() <= 1e-10);
}

TEST_CASE("log is stable near the half-turn") {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> gd(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        Eigen::Vector3d axis(gd(rng), gd(rng), gd(rng));
        axis.normalize();
        double theta = kPi - 1e-7;
        Rotation3 R = exp_rot(axis, theta);
        AxisAngle aa = principal_log(R);
        CHECK((exp_rot(aa.axis, aa.theta) - R).norm() <= 1e-9);
    }
}

TEST_CASE("angle metric") {
    Rotation3 Rz = exp_rot(Eigen::Vector3d(0, 0, 1), kPi / 2.0);
    CHECK(d_l2(Rz, Rz) == 0.0);
    CHECK(d_l2(Rotation3::Identity(), Rz) == doctest::Approx(kPi / 2.0).epsilon(1e-12));

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        Rotation3 A = random_rotation(rng), B = random_rotation(rng), Q = random_rotation(rng);
        CHECK(d_l2(Q * A * Q.transpose(), Q * B * Q.transpose()) ==
              doctest::Approx(d_l2(A, B)).epsilon(1e-10));
    }
}

TEST_CASE("bounds for an axial rotation collapse to the angle") {
    Rotation3 Rz = exp_rot(Eigen::Vector3d(0, 0, 1), kPi / 2.0);
    L1Bounds b = d_l1_bounds(Rotation3::Identity(), Rz);
    CHECK(b.lower == doctest::Approx(kPi / 2.0).epsilon(1e-12));
    CHECK(b.log_upper == doctest::Approx(kPi / 2.0).epsilon(1e-12));
    CHECK(b.euler_upper == doctest::Approx(kPi / 2.0).epsilon(1e-12));
}

TEST_CASE("bounds for a diagonal-axis rotation") {
    Eigen::Vector3d diag = Eigen::Vector3d(1, 1, 1).normalized();
    Rotation3 R = exp_rot(diag, 0.3);
    L1Bounds b = d_l1_bounds(Rotation3::Identity(), R);
    CHECK(b.lower == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(b.log_upper == doctest::Approx(0.3 * std::sqrt(3.0)).epsilon(1e-12));
    CHECK(b.euler_upper <= b.log_upper + 1e-9);
    CHECK((b.best_word.compose() - R).norm() <= 1e-9);
}

TEST_CASE("identity gives all zeros") {
    L1Bounds b = d_l1_bounds(Rotation3::Identity(), Rotation3::Identity());
    CHECK(b.lower == 0.0);
    CHECK(b.log_upper == 0.0);
    CHECK(b.euler_upper <= 1e-15);
}

TEST_CASE("sandwich and recomposition over random rotations") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        Rotation3 A = random_rotation(rng), B = random_rotation(rng);
        L1Bounds b = d_l1_bounds(A, B);
        CHECK(b.lower <= b.log_upper + 1e-10);
        CHECK(b.log_upper <= std::sqrt(3.0) * b.lower + 1e-10);
        CHECK(b.lower <= b.euler_upper + 1e-10);
        CHECK((b.best_word.compose() - B * A.transpose()).norm() <= 1e-9);
    }
}

TEST_CASE("rotation validation") {
    Rotation3 bad = Rotation3::Identity();
    bad(0, 0) = 1.5;
    CHECK(!is_rotation(bad));
    CHECK_THROWS(validate_rotation(bad));
    Rotation3 reflect = Rotation3::Identity();
    reflect(2, 2) = -1.0;
    CHECK(!is_rotation(reflect));
}

#ifndef FLOWDEPTH_SO3_HPP
#define FLOWDEPTH_SO3_HPP

#include <Eigen/Dense>
#include <array>
#include <random>

namespace flowdepth {

using Rotation3 = Eigen::Matrix3d;

struct AxisAngle {
    Eigen::Vector3d axis = Eigen::Vector3d::Zero();
    double theta = 0.0;

    Eigen::Vector3d vee() const { return theta * axis; }
};

bool is_rotation(const Rotation3& R, double tol = 1e-10);
void validate_rotation(const Rotation3& R, double tol = 1e-10);

Rotation3 exp_rot(const Eigen::Vector3d& axis, double theta);
Rotation3 exp_rot(const Eigen::Vector3d& w);

/// Principal axis-angle with theta in [0, pi]. Near theta = pi the axis is
/// recovered through quaternion extraction. theta = 0 yields the zero axis.
AxisAngle principal_log(const Rotation3& R);

/// Bi-invariant angle distance theta(R2 R1^T).
double d_l2(const Rotation3& R1, const Rotation3& R2);

struct AxialWord {
    // R = rot(axes[0], angles[0]) * rot(axes[1], angles[1]) * rot(axes[2], angles[2])
    std::array<int, 3> axes{0, 0, 0};
    std::array<double, 3> angles{0.0, 0.0, 0.0};

    Rotation3 compose() const;
    double cost() const;
};

struct L1Bounds {
    double lower = 0.0;        // theta of the relative rotation
    double log_upper = 0.0;    // l1 norm of the principal log
    double euler_upper = 0.0;  // best three-factor axial decomposition cost
    AxialWord best_word;
};

/// Certified sandwich for the transport time under the six axial generators:
/// lower = theta, log_upper = |vee(Log)|_1, euler_upper = min over all
/// three-factor axial words (both repeated-axis and distinct-axis
/// conventions, both branches) of |alpha|+|beta|+|gamma|.
L1Bounds d_l1_bounds(const Rotation3& R1, const Rotation3& R2);

/// Uniform random rotation from a normalized Gaussian quaternion.
Rotation3 random_rotation(std::mt19937_64& rng);

}  // namespace flowdepth

#endif

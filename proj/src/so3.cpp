#include "flowdepth/so3.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "flowdepth/errors.hpp"

namespace flowdepth {

namespace {

constexpr double kDegenerate = 1e-12;

Eigen::Matrix3d hat(const Eigen::Vector3d& a) {
    Eigen::Matrix3d m;
    m << 0.0, -a.z(), a.y(), a.z(), 0.0, -a.x(), -a.y(), a.x(), 0.0;
    return m;
}

Rotation3 axis_rot(int axis, double angle) {
    Eigen::Vector3d e = Eigen::Vector3d::Zero();
    e[axis] = 1.0;
    return exp_rot(e, angle);
}

// Extraction for R = Rz(alpha) Rx(beta) Rz(gamma); branch picks the sign of
// sin(beta). Falls back to a single z-rotation when sin(beta) ~ 0.
struct Angles {
    double a, b, g;
};

Angles extract_zxz(const Rotation3& R, bool positive_branch) {
    double sb = std::sqrt(std::min(1.0, R(0, 2) * R(0, 2) + R(1, 2) * R(1, 2)));
    double cb = R(2, 2);
    if (sb < kDegenerate) {
        double combined = std::atan2(R(1, 0), R(0, 0));
        return cb > 0.0 ? Angles{combined, 0.0, 0.0}
                        : Angles{combined, std::acos(std::clamp(cb, -1.0, 1.0)), 0.0};
    }
    if (positive_branch)
        return {std::atan2(R(0, 2), -R(1, 2)), std::atan2(sb, cb),
                std::atan2(R(2, 0), R(2, 1))};
    return {std::atan2(-R(0, 2), R(1, 2)), std::atan2(-sb, cb),
            std::atan2(-R(2, 0), -R(2, 1))};
}

// Extraction for R = Rx(alpha) Ry(beta) Rz(gamma); branch picks cos(beta)'s
// sign. Falls back to Rx(alpha) Ry(+-pi/2) at gimbal lock.
Angles extract_xyz(const Rotation3& R, bool positive_branch) {
    double sb = std::clamp(R(0, 2), -1.0, 1.0);
    double cb = std::sqrt(std::min(1.0, R(1, 2) * R(1, 2) + R(2, 2) * R(2, 2)));
    if (cb < kDegenerate) {
        // R = Rx(a +- g) Ry(+-pi/2); the sign of the combined angle follows sb.
        double combined = std::atan2(R(1, 0), R(1, 1));
        if (sb > 0.0) return {combined, std::asin(1.0), 0.0};
        return {-combined, std::asin(-1.0), 0.0};
    }
    if (positive_branch)
        return {std::atan2(-R(1, 2), R(2, 2)), std::atan2(sb, cb),
                std::atan2(-R(0, 1), R(0, 0))};
    return {std::atan2(R(1, 2), -R(2, 2)), std::atan2(sb, -cb),
            std::atan2(R(0, 1), -R(0, 0))};
}

// Proper (i, j, i) conventions reduce to ZXZ by conjugating with the proper
// rotation P whose columns send (x, y, z) to (j, i x j, i).
Rotation3 proper_frame(int i, int j) {
    Eigen::Vector3d ei = Eigen::Vector3d::Zero(), ej = Eigen::Vector3d::Zero();
    ei[i] = 1.0;
    ej[j] = 1.0;
    Rotation3 P;
    P.col(0) = ej;
    P.col(1) = ei.cross(ej);
    P.col(2) = ei;
    return P;
}

// Distinct-axis (i, j, k) conventions reduce to XYZ. Odd permutations flip
// the orientation, which negates every extracted angle.
Rotation3 tait_frame(int i, int j, int k, double& parity) {
    Eigen::Matrix3d P = Eigen::Matrix3d::Zero();
    P(i, 0) = P(j, 1) = P(k, 2) = 1.0;
    parity = P.determinant();
    return P;
}

}  // namespace

bool is_rotation(const Rotation3& R, double tol) {
    return (R.transpose() * R - Eigen::Matrix3d::Identity()).norm() <= tol &&
           std::abs(R.determinant() - 1.0) <= tol;
}

void validate_rotation(const Rotation3& R, double tol) {
    if (!is_rotation(R, tol)) throw DomainError("matrix is not a rotation");
}

Rotation3 exp_rot(const Eigen::Vector3d& axis, double theta) {
    if (theta == 0.0 || axis.norm() == 0.0) return Rotation3::Identity();
    Eigen::Vector3d n = axis.normalized();
    Eigen::Matrix3d K = hat(n);
    return Rotation3::Identity() + std::sin(theta) * K + (1.0 - std::cos(theta)) * K * K;
}

Rotation3 exp_rot(const Eigen::Vector3d& w) {
    double theta = w.norm();
    if (theta < 1e-300) return Rotation3::Identity();
    return exp_rot(w / theta, theta);
}

AxisAngle principal_log(const Rotation3& R) {
    Eigen::Quaterniond q(R);
    q.normalize();
    double w = q.w();
    Eigen::Vector3d v = q.vec();
    if (w < 0.0) {
        w = -w;
        v = -v;
    }
    double vn = v.norm();
    AxisAngle out;
    out.theta = 2.0 * std::atan2(vn, w);
    if (vn > 1e-300 && out.theta > 0.0) out.axis = v / vn;
    else out.theta = 0.0;
    return out;
}

double d_l2(const Rotation3& R1, const Rotation3& R2) {
    return principal_log(R2 * R1.transpose()).theta;
}

Rotation3 AxialWord::compose() const {
    return axis_rot(axes[0], angles[0]) * axis_rot(axes[1], angles[1]) *
           axis_rot(axes[2], angles[2]);
}

double AxialWord::cost() const {
    return std::abs(angles[0]) + std::abs(angles[1]) + std::abs(angles[2]);
}

L1Bounds d_l1_bounds(const Rotation3& R1, const Rotation3& R2) {
    Rotation3 R = R2 * R1.transpose();
    AxisAngle log = principal_log(R);

    L1Bounds out;
    out.lower = log.theta;
    out.log_upper = log.vee().lpNorm<1>();

    out.euler_upper = std::numeric_limits<double>::infinity();
    auto consider = [&](const AxialWord& word) {
        double c = word.cost();
        if (c < out.euler_upper) {
            out.euler_upper = c;
            out.best_word = word;
        }
    };

    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            Rotation3 P = proper_frame(i, j);
            Rotation3 Rp = P.transpose() * R * P;
            for (bool branch : {true, false}) {
                Angles ang = extract_zxz(Rp, branch);
                consider({{i, j, i}, {ang.a, ang.b, ang.g}});
            }
            for (int k = 0; k < 3; ++k) {
                if (k == i || k == j) continue;
                double parity = 1.0;
                Rotation3 Q = tait_frame(i, j, k, parity);
                Rotation3 Rq = Q.transpose() * R * Q;
                for (bool branch : {true, false}) {
                    Angles ang = extract_xyz(Rq, branch);
                    consider({{i, j, k}, {parity * ang.a, parity * ang.b, parity * ang.g}});
                }
            }
        }
    }
    return out;
}

Rotation3 random_rotation(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::Quaterniond q(gauss(rng), gauss(rng), gauss(rng), gauss(rng));
    q.normalize();
    return q.toRotationMatrix();
}

}  // namespace flowdepth

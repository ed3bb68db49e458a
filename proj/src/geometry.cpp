#include "hslam/geometry.hpp"

#include <cmath>

namespace hslam {

namespace {

// Rotation part of the exponential plus the V matrix coupling translation.
void rodrigues(const Vec3& phi, Mat3& rotation, Mat3& v_matrix) {
    const double theta2 = phi.squaredNorm();
    const Mat3 hat = skew(phi);
    const Mat3 hat2 = hat * hat;
    if (theta2 < 1e-16) {
        // series around zero keeps exp/log round trips below 1e-9
        rotation = Mat3::Identity() + hat + 0.5 * hat2;
        v_matrix = Mat3::Identity() + 0.5 * hat + (1.0 / 6.0) * hat2;
        return;
    }
    const double theta = std::sqrt(theta2);
    const double a = std::sin(theta) / theta;
    const double b = (1.0 - std::cos(theta)) / theta2;
    const double c = (theta - std::sin(theta)) / (theta2 * theta);
    rotation = Mat3::Identity() + a * hat + b * hat2;
    v_matrix = Mat3::Identity() + b * hat + c * hat2;
}

}  // namespace

Pose se3_exp(const TangentVector& xi) {
    const Vec3 rho = xi.head<3>();
    const Vec3 phi = xi.tail<3>();
    Mat3 rotation, v_matrix;
    rodrigues(phi, rotation, v_matrix);
    return Pose(rotation, v_matrix * rho);
}

TangentVector se3_log(const Pose& pose) {
    const Mat3& rotation = pose.rotation();
    const double cos_theta =
        std::clamp(0.5 * (rotation.trace() - 1.0), -1.0, 1.0);
    const double theta = std::acos(cos_theta);

    Vec3 phi;
    const Vec3 axis_raw(rotation(2, 1) - rotation(1, 2), rotation(0, 2) - rotation(2, 0),
                        rotation(1, 0) - rotation(0, 1));
    if (theta < 1e-8) {
        phi = 0.5 * axis_raw;
    } else {
        phi = theta / (2.0 * std::sin(theta)) * axis_raw;
    }

    // V^{-1} = I - hat/2 + beta * hat^2
    const Mat3 hat = skew(phi);
    const Mat3 hat2 = hat * hat;
    double beta;
    const double t2 = phi.squaredNorm();
    if (t2 < 1e-12) {
        beta = 1.0 / 12.0 + t2 / 720.0;
    } else {
        const double t = std::sqrt(t2);
        beta = 1.0 / t2 - (1.0 + std::cos(t)) / (2.0 * t * std::sin(t));
    }
    const Mat3 v_inv = Mat3::Identity() - 0.5 * hat + beta * hat2;

    TangentVector xi;
    xi.head<3>() = v_inv * pose.translation();
    xi.tail<3>() = phi;
    return xi;
}

std::optional<PixelDepth> warp_pixel(const Vec2& q_c, double depth_obs, const Pose& pose_c,
                                     const Pose& pose_w, const CameraIntrinsics& intr) {
    if (depth_obs <= 0.0)
        throw std::domain_error("warp_pixel: non-positive depth");
    // identical poses warp a pixel onto itself; keep that exact
    if (pose_c.same_bits(pose_w))
        return PixelDepth{q_c, depth_obs};

    const Vec3 point_world = pose_c.transform(backproject(q_c, depth_obs, intr));
    const Vec3 point_w = pose_w.inverse_transform(point_world);
    if (point_w.z() <= 0.0)
        return std::nullopt;
    PixelDepth warped = project(point_w, intr);
    if (!intr.in_bounds(warped.pixel.x(), warped.pixel.y()))
        return std::nullopt;
    return warped;
}

}  // namespace hslam

#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <optional>
#include <stdexcept>

namespace hslam {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

// 6-vector se(3) tangent, ordered (translation, rotation).
using TangentVector = Eigen::Matrix<double, 6, 1>;

struct CameraIntrinsics {
    double fx = 0, fy = 0;
    double cx = 0, cy = 0;
    int width = 0, height = 0;
    double depth_scale = 1.0;  // raw depth unit -> meters

    bool valid() const {
        return fx > 0 && fy > 0 && cx > 0 && cx < width && cy > 0 && cy < height &&
               depth_scale > 0;
    }
    bool in_bounds(double u, double v) const {
        return u >= 0.0 && u <= width - 1.0 && v >= 0.0 && v <= height - 1.0;
    }
};

// Rigid transform, world-from-camera: x_world = R * x_cam + t.
class Pose {
public:
    Pose() : rotation_(Mat3::Identity()), translation_(Vec3::Zero()) {}
    Pose(const Mat3& rotation, const Vec3& translation)
        : rotation_(rotation), translation_(translation) {}

    static Pose identity() { return Pose(); }

    const Mat3& rotation() const { return rotation_; }
    const Vec3& translation() const { return translation_; }

    Vec3 transform(const Vec3& p) const { return rotation_ * p + translation_; }
    Vec3 rotate(const Vec3& v) const { return rotation_ * v; }
    // inverse transform: camera-frame coordinates of a world point
    Vec3 inverse_transform(const Vec3& p) const {
        return rotation_.transpose() * (p - translation_);
    }

    Pose compose(const Pose& rhs) const {
        return Pose(rotation_ * rhs.rotation_, rotation_ * rhs.translation_ + translation_);
    }
    Pose operator*(const Pose& rhs) const { return compose(rhs); }

    Pose inverse() const {
        Mat3 rt = rotation_.transpose();
        return Pose(rt, -(rt * translation_));
    }

    bool same_bits(const Pose& rhs) const {
        return rotation_ == rhs.rotation_ && translation_ == rhs.translation_;
    }

    Eigen::Matrix4d matrix() const {
        Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
        m.block<3, 3>(0, 0) = rotation_;
        m.block<3, 1>(0, 3) = translation_;
        return m;
    }

private:
    Mat3 rotation_;
    Vec3 translation_;
};

inline Mat3 skew(const Vec3& v) {
    Mat3 m;
    m << 0, -v.z(), v.y(), v.z(), 0, -v.x(), -v.y(), v.x(), 0;
    return m;
}

// Rodrigues + V-matrix closed form.
Pose se3_exp(const TangentVector& xi);
// Inverse of se3_exp; rotation angle must be below pi.
TangentVector se3_log(const Pose& pose);

struct PixelDepth {
    Vec2 pixel;
    double depth;
};

// Pinhole projection of a camera-frame point. Throws on z <= 0.
inline PixelDepth project(const Vec3& point_cam, const CameraIntrinsics& intr) {
    if (point_cam.z() <= 0.0)
        throw std::domain_error("project: point behind camera");
    const double inv_z = 1.0 / point_cam.z();
    return {Vec2(intr.fx * point_cam.x() * inv_z + intr.cx,
                 intr.fy * point_cam.y() * inv_z + intr.cy),
            point_cam.z()};
}

// Camera-frame point from pixel + z-depth. Throws on depth <= 0.
inline Vec3 backproject(const Vec2& pixel, double depth, const CameraIntrinsics& intr) {
    if (depth <= 0.0)
        throw std::domain_error("backproject: non-positive depth");
    return Vec3(depth * (pixel.x() - intr.cx) / intr.fx,
                depth * (pixel.y() - intr.cy) / intr.fy, depth);
}

// Reprojects a pixel of frame c (with observed z-depth) into frame w.
// Returns the target pixel and its z-depth in frame w, or nullopt when the
// point lands behind camera w or outside the image.
std::optional<PixelDepth> warp_pixel(const Vec2& q_c, double depth_obs, const Pose& pose_c,
                                     const Pose& pose_w, const CameraIntrinsics& intr);

}  // namespace hslam

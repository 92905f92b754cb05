#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace equilopo {

struct Vec3 {
    double x = 0, y = 0, z = 0;

    double norm() const { return std::sqrt(x * x + y * y + z * z); }
    Vec3 normalized() const {
        double n = norm();
        return {x / n, y / n, z / n};
    }
    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
};

struct Mat3 {
    // row-major
    std::array<std::array<double, 3>, 3> m{};

    Vec3 apply(const Vec3& v) const {
        return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
                m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
                m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
    }
    Mat3 transposed() const {
        Mat3 t;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) t.m[i][j] = m[j][i];
        return t;
    }
};

struct EulerZYZ {
    double alpha = 0, beta = 0, gamma = 0;
};

// Active rotation stored as a unit quaternion, sign-canonicalized so that the
// first nonzero component of (w, x, y, z) is positive. Euler convention is
// ZYZ, R = Rz(alpha) Ry(beta) Rz(gamma), applied to column vectors.
class Rotation {
public:
    Rotation() : w_(1), x_(0), y_(0), z_(0) {}

    static Rotation from_quaternion(double w, double x, double y, double z);
    static Rotation from_euler_zyz(double alpha, double beta, double gamma);
    static Rotation from_axis_angle(const Vec3& axis, double angle);
    static Rotation from_matrix(const Mat3& m);
    static Rotation random(std::mt19937_64& rng);

    Rotation inverse() const { return Rotation(w_, -x_, -y_, -z_, true); }

    // composition: (a * b).apply(v) == a.apply(b.apply(v))
    Rotation operator*(const Rotation& o) const;

    Vec3 apply(const Vec3& v) const { return matrix().apply(v); }

    Mat3 matrix() const;
    EulerZYZ euler_zyz() const;

    double w() const { return w_; }
    double x() const { return x_; }
    double y() const { return y_; }
    double z() const { return z_; }

    double quaternion_norm() const { return std::sqrt(w_ * w_ + x_ * x_ + y_ * y_ + z_ * z_); }

private:
    Rotation(double w, double x, double y, double z, bool canonical_only);
    void normalize_and_canonicalize();

    double w_, x_, y_, z_;
};

// The 24 proper rotations of the cube, with the per-element voxel index map
// for cubic grids. Element 0 is the identity.
const std::vector<Rotation>& octahedral_group();

// Maps voxel index (i,j,k) of an n^3 grid under octahedral element g,
// rotating about the grid center.
std::array<int, 3> octahedral_voxel_map(int g, int n, int i, int j, int k);

}  // namespace equilopo

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace symprod {

using Point2 = Eigen::Vector2d;
using PointN = Eigen::VectorXd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline constexpr const char* kVersion = "0.3.1";

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad parameters, non-star-shaped data, dimension mismatch.
struct InvalidArgument : Error {
    using Error::Error;
};

/// A documented precondition of an experiment does not hold.
struct PreconditionError : Error {
    using Error::Error;
};

/// Numerical integration did not reach the requested tolerance.
struct IntegrationError : Error {
    using Error::Error;
};

/// Angle reduced to [0, 2pi).
inline double wrap_angle(double theta)
{
    double w = theta - kTwoPi * std::floor(theta / kTwoPi);
    return w >= kTwoPi ? 0.0 : w;
}

/// Polar angle in [0, 2pi), counterclockwise from the positive x-axis.
template <typename Derived>
double polar_angle(const Eigen::MatrixBase<Derived>& z)
{
    return wrap_angle(std::atan2(z(1), z(0)));
}

/// Multiplication by i on R^2 = C.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, 2, 1> rotate_quarter(const Eigen::MatrixBase<Derived>& z)
{
    return {-z(1), z(0)};
}

template <typename Scalar>
Eigen::Matrix<Scalar, 2, 1> unit_direction(Scalar theta)
{
    return {std::cos(theta), std::sin(theta)};
}

}  // namespace symprod

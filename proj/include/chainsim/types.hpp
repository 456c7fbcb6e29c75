#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace chainsim {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline constexpr double pi = std::numbers::pi;
inline constexpr cplx I{0.0, 1.0};

enum class Boundary { open, periodic };
enum class Truncation { full, nearest_neighbor };
enum class DecayModel { independent, collective };

/// Raised when a physical precondition is violated (bad distances, invalid
/// states, methods applied outside their validity range).
class PhysicsError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised for malformed configuration; the message carries the field path.
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& field, const std::string& message)
        : std::runtime_error(field + ": " + message), field_(field) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

std::string to_string(Boundary b);
std::string to_string(Truncation t);
std::string to_string(DecayModel d);

}  // namespace chainsim

#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dmlpg {

/// Points are stored in 3-vectors; 2D problems keep the third coordinate at zero.
using Point = Eigen::Vector3d;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = std::ptrdiff_t;

/// Voigt length for a spatial dimension: 3 in 2D, 6 in 3D.
constexpr int voigt_size(int dim) { return dim == 2 ? 3 : 6; }

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The local node configuration does not determine a polynomial of the basis degree.
class NodeDeficiencyError : public Error {
public:
    NodeDeficiencyError(const std::string& what, Point point, double condition, Index node = -1)
        : Error(what), point_(std::move(point)), condition_(condition), node_(node) {}

    const Point& point() const { return point_; }
    double condition() const { return condition_; }
    Index node() const { return node_; }

private:
    Point point_;
    double condition_;
    Index node_;
};

class UnsupportedClipError : public Error {
public:
    UnsupportedClipError(const std::string& what, Index node) : Error(what), node_(node) {}
    Index node() const { return node_; }

private:
    Index node_;
};

class SolveError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    ConfigError(const std::string& what, int line, int column, std::string key = {})
        : Error(what), line_(line), column_(column), key_(std::move(key)) {}

    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& key() const { return key_; }

private:
    int line_;
    int column_;
    std::string key_;
};

}  // namespace dmlpg

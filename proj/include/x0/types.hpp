#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace x0 {

using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;

template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RVec = Vec<Rat>;
using RMat = Mat<Rat>;

// Raised for inputs outside the supported mathematical domain
// (unsupported level, singular curve, malformed profile, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

std::string to_string(const Rat& r);
std::string to_string(const Int& n);
Rat parse_rat(const std::string& s);
Int parse_int(const std::string& s);

// floor and fractional part on exact rationals
Int floor(const Rat& r);
Rat frac(const Rat& r);

}  // namespace x0

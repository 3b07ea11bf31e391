#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include "ordvec/errors.hpp"

namespace ordvec {

/**
 * Exact scalar field. GMP rationals are always kept canonical (lowest terms,
 * positive denominator). Expression templates are disabled so that `auto`
 * never captures a dangling expression.
 */
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer  = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                               boost::multiprecision::et_off>;

using Index = Eigen::Index;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/** Exact coordinate vector; the ambient element type of every exact space. */
using Vec = VectorX<Rational>;
/** Exact dense matrix. Cones and polytopes store one normal/generator per row. */
using Mat = MatrixX<Rational>;

/** Parse "p/q", "p" or a finite decimal such as "-0.125" into a canonical rational. */
Rational parse_rational(std::string_view text);

/** Parse a comma separated list of rationals, e.g. "1/2,-3,0.25". */
Vec parse_vector(std::string_view text);

/** Canonical "p/q" form; integers keep the explicit "/1". */
std::string to_string(const Rational& r);

/** Comma separated "p/q" coordinates. */
std::string to_string(const Vec& v);

/** Shortest decimal that round-trips to the same double. */
std::string to_string(double x);

/** Builds a vector from a brace list of rationals. */
Vec make_vec(std::initializer_list<Rational> coords);

/** e_k in dimension `dim` (0-based k). */
Vec unit_vector(Index dim, Index k);

/** Least integer >= r. */
Integer ceil_integer(const Rational& r);

/** Greatest integer <= r. */
Integer floor_integer(const Rational& r);

/**
 * Positive rescaling of a nonzero vector to the primitive integer vector on the
 * same ray. Two vectors span the same ray iff their primitive forms agree.
 */
Vec primitive_direction(const Vec& v);

/** Rank over Q by exact Gaussian elimination. */
Index exact_rank(const Mat& m);

/** Basis (as rows) of the null space {x : m x = 0}, computed exactly. */
Mat exact_null_space(const Mat& m);

/**
 * Some solution of m x = rhs, or an empty vector if the system is inconsistent.
 * Free variables are set to zero.
 */
Vec exact_solve(const Mat& m, const Vec& rhs);

inline bool is_zero(const Vec& v)
{
    for (Index i = 0; i < v.size(); ++i)
        if (v(i) != 0) return false;
    return true;
}

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

/** Lexicographic comparison of coordinate lists, used to order ray sets canonically. */
bool lexicographically_less(const Vec& a, const Vec& b);

}   // namespace ordvec

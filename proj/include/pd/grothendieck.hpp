#pragma once

// beta-Grothendieck polynomials assembled from pipe dreams, their exact
// specializations, and the volume, Ehrhart, h-vector and reduced-form
// identities tying them to the tree of a permutation.

#include "pd/permutation.hpp"
#include "pd/subdivision.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pd {

using Rational = boost::multiprecision::cpp_rational;

// Monomial in x_1..x_{n-1}, y_1..y_{n-1} and beta.  Exponent vectors carry
// no trailing zeros, so equal monomials compare equal.
struct XYMonomial {
    std::vector<int> x_exp;
    std::vector<int> y_exp;
    int beta_pow = 0;

    friend bool operator==(const XYMonomial&, const XYMonomial&) = default;
};

// beta power ascending, then total degree, then lex on x, then on y.
bool operator<(const XYMonomial& a, const XYMonomial& b);

using XYBetaPolynomial = std::map<XYMonomial, Coefficient>;

// Sum over all pipe dreams P of w (reduced or not) of beta^codim(P) times
// the product over crosses (r,c) of (x_r - y_c), expanded exactly.  Rows
// count top to bottom and columns left to right, both from 1.
XYBetaPolynomial grothendieck(const Permutation& w, int max_n = 6);

// Values for x_1..x_k and y_1..y_k; they must cover every index that
// appears in the polynomial.  When beta is unset it stays formal.
struct Assignment {
    std::vector<Rational> x;
    std::vector<Rational> y;
    std::optional<Rational> beta;
};

// Coefficient vector of beta^0, beta^1, ... after the substitution; a bound
// beta collapses the result to a single entry.
std::vector<Rational> specialize(const XYBetaPolynomial& p, const Assignment& a);

// Rewrites a beta-coefficient vector p(beta) as p(beta - 1).
std::vector<Rational> substitute_beta_minus_one(const std::vector<Rational>& p);

// Normalized volume of P(T(w)) against the x = 1, y = 0, beta = 0
// specialization and the count of reduced pipe dreams; all three must agree.
bool verify_volume(const Permutation& w, std::string* why = nullptr);

// Lattice-point counts of the dilates t * P(T(w)), t = 0..d+1 with
// d = dim P(T(w)), against the power series of the x = 1, y = 0,
// beta -> beta - 1 specialization divided by (1 - beta)^(d+1).
bool verify_ehrhart(const Permutation& w, std::string* why = nullptr);

// h-vector of the pipe dream complex of w against the coefficient vector of
// the x = 1, y = 0, beta -> beta - 1 specialization.
bool verify_h_identity(const Permutation& w, std::string* why = nullptr);

// Tilde t-image of random reduced forms of m[T(w)]: each must equal
// (prod t_i^{g_i}) * G_{w^{-1}}(t^{-1}, 0) with g the region column counts,
// compared exactly as Laurent exponent maps.
bool verify_thm_t(const Permutation& w, int orders = 10, unsigned seed = 1,
                  std::string* why = nullptr);

// Canonical reduced form of m[T(w)] under x_ij -> 1/(x_a - y_b), where
// (a,b) is the region box labelled (i,j), against
// (prod over boxes 1/(x_a - y_b)) * G_w(x, y), compared as exact rationals
// at `samples` pole-free pseudorandom points.
bool verify_thm_gen(const Permutation& w, int samples = 10, unsigned seed = 1,
                    std::string* why = nullptr);

}  // namespace pd

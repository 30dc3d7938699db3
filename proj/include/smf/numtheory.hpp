#pragma once

#include <vector>

#include "smf/rational.hpp"

namespace smf {

// Exact n-th Bernoulli number, convention B_1 = -1/2.
Rat bernoulli(unsigned n);

// Bernoulli polynomial B_n(x) = sum_j C(n,j) B_j x^(n-j).
Rat bernoulli_poly(unsigned n, const Rat& x);

// sum of k-th powers of the divisors of n >= 1
Int sigma(unsigned k, const Int& n);

// Deterministic primality by trial division (inputs here stay tiny).
bool is_prime(const Int& n);

// (prime, exponent) pairs, ascending.
std::vector<std::pair<Int, unsigned>> factorize(Int n);

std::vector<Int> divisors(const Int& n);

int moebius(const Int& n);

// n = s * t^2 with s squarefree, sign on s.
std::pair<Int, Int> squarefree_kernel(const Int& n);

// D = 1, or D = disc of a quadratic field.
bool is_fundamental_discriminant(const Int& D);

// Kronecker symbol (D/n) for fundamental D; rejects non-fundamental D.
int kronecker_chi(const Int& D, const Int& n);

// Generalized Bernoulli number B_{n,chi_D} for fundamental D,
// via |D|^(n-1) * sum_{a=1}^{|D|} chi_D(a) B_n(a/|D|).
Rat gen_bernoulli(unsigned n, const Int& D);

// Cohen's function H(r, N).  H(r, 0) = zeta(1-2r); for N > 0 with
// (-1)^r N = D f^2 (D fundamental) it is
//   L(1-r, chi_D) * sum_{d|f} mu(d) chi_D(d) d^(r-1) sigma_{2r-1}(f/d),
// and 0 whenever (-1)^r N is 2 or 3 mod 4.
Rat cohen_h(unsigned r, const Int& N);

} // namespace smf

#pragma once

#include <vector>

#include "smf/fexp2.hpp"
#include "smf/genus1.hpp"
#include "smf/linalg.hpp"

namespace smf {

// Normalized Siegel-Eisenstein series of degree 2.  a(0) = 1; rank-1
// coefficients are (-2k/B_k) sigma_{k-1}(content); rank-2 coefficients
// are gamma_k sum_{d | content} d^(k-1) H(k-1, det4/d^2) with
// gamma_k = 2k(2k-2)/(B_k B_{2k-2}).
FExp2 siegel_eisenstein2(int k, int boxD);

// Igusa's cusp forms, normalized so a((1,1,1)) = 1.  X10 spans the
// Phi-kernel of <E4 E6, E10>, X12 the Phi-kernel of <E4^3, E6^2, E12>.
FExp2 igusa_x10(int boxD);
FExp2 igusa_x12(int boxD);

// Exponents (a4, a6, a10, a12) with 4a4 + 6a6 + 10a10 + 12a12 = weight.
struct MonomialExp {
    int e4 = 0, e6 = 0, e10 = 0, e12 = 0;
    int weight() const { return 4 * e4 + 6 * e6 + 10 * e10 + 12 * e12; }
    bool cusp() const { return e10 + e12 > 0; }
    std::string str() const;
    auto operator<=>(const MonomialExp&) const = default;
};

std::vector<MonomialExp> monomial_exponents(int k);

struct Monomial2 {
    MonomialExp exp;
    FExp2 form;
};

// All generator monomials of weight k evaluated on the box; a basis of
// M_k for every k handled here.
std::vector<Monomial2> monomial_basis2(int k, int boxD);

// Hecke operator T(2): output box floor(D/2) with
//   a(T(2)F; T) = a(2T) + 2^(k-2) sum_U a(T[U]/2) + 2^(2k-3) a(T/2),
// U running over [[2,0],[0,1]] and [[1,0],[j,2]] (j = 0,1), each term
// present only when its index is semi-integral.
FExp2 hecke_t2(const FExp2& F);

struct HeckeMatrix {
    int weight = 0;
    std::vector<Monomial2> basis;
    Mat entries; // T(2) b_i = sum_j entries[i][j] b_j
};

// Exact matrix of T(2) in the monomial basis, solved on the indices of
// the reduced box floor(D/2); RankDeficient if those indices cannot
// separate the basis.
HeckeMatrix hecke_matrix(int k, int boxD);

// Klingen-Eisenstein series attached to a scaled elliptic eigen cusp
// form f of weight k: the unique F with T(2) F = lambda F for
// lambda = (a(2;f)/a(1;f)) (1 + 2^(k-2)) and Phi(F) = f.  Both the
// eigen-equation and the Phi-image are re-verified after construction.
FExp2 klingen2(const QSeries& f, int k, int boxD);

struct EigenForm2 {
    FExp2 form;            // a((1,1,1)) = 1 when that coefficient is nonzero
    FieldElem eigenvalue_t2;
};

// Hecke eigenforms of the cusp space S_k, over Q or a quadratic field.
std::vector<EigenForm2> cusp_eigenforms2(int k, int boxD);

// Linear combination sum coeff_i * monomial_i of weight-k generator
// monomials, evaluated on the box.
FExp2 explicit_form(int k, const std::vector<std::pair<MonomialExp, FieldElem>>& terms,
                    int boxD);

// T(2) eigenvalue predicted for the Saito-Kurokawa lift of an elliptic
// eigenform of weight 2k-2 with eigenvalue b2.
FieldElem saito_kurokawa_eigenvalue(int k, const FieldElem& b2);

} // namespace smf

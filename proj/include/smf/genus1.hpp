#pragma once

#include <vector>

#include "smf/linalg.hpp"
#include "smf/qseries.hpp"

namespace smf {

// Normalized Eisenstein series 1 - (2k/B_k) sum sigma_{k-1}(n) q^n.
QSeries eisenstein1(int k, int prec);

// Ramanujan's Delta = q prod (1-q^n)^24.
QSeries delta(int prec);

// #{(a,b) : 4a + 6b = k} -- the dimension of M_k for even k >= 0.
int dim_mk1(int k);
int dim_sk1(int k);

struct BasisForm1 {
    QSeries series;
    bool cusp;
};

// Echelonized basis of M_k (pivots q^0 .. q^(d-1)); cusp members flagged.
std::vector<BasisForm1> basis_mk1(int k, int prec);

// a(T(l) f; n) = a(ln) + l^(k-1) a(n/l); output precision floor(prec / l).
QSeries hecke1(const QSeries& f, const Int& l);

// Matrix of T(2) on the echelonized cusp basis of S_k: row i holds the
// coordinates of T(2) g_i.
Mat hecke1_t2_cusp_matrix(int k);

struct EigenForm1 {
    QSeries series;        // normalized, a(1) = 1
    FieldElem eigenvalue_t2;
};

// Normalized Hecke eigenforms of S_k for dim S_k <= 2.  An irreducible
// T(2) characteristic polynomial yields two conjugate forms over the
// canonical quadratic field of its discriminant.
std::vector<EigenForm1> eigenforms1(int k, int prec);

// The unique cusp form of weight k with a(1) = scalar (dim S_k = 1).
QSeries scaled_cusp_form(int k, const FieldElem& scalar, int prec);

// Canonical quadratic field containing sqrt(disc) for a non-square
// rational disc: x^2 - x - (d0-1)/4 when the squarefree kernel d0 is
// 1 mod 4, else x^2 - d0.  Also returns sqrt(disc) as an element.
std::pair<FieldPtr, FieldElem> canonical_sqrt(const Rat& disc);

// Roots of a monic quadratic x^2 + c1 x + c0 over Q or over the
// canonical quadratic field.
std::vector<FieldElem> quadratic_roots(const Rat& c1, const Rat& c0);

} // namespace smf

#include <doctest.h>

#include <algorithm>
#include <vector>

#include "oracles.hpp"
#include "smf/genus2.hpp"
#include "smf/numtheory.hpp"

using namespace smf;
using smf_test::e8_theta_count;
using smf_test::maass_relation_holds;

TEST_CASE("enumerate_box") {
    CHECK(enumerate_box(0) == std::vector<IndexT>{{0, 0, 0}});
    const std::vector<IndexT> expected{{0, 0, 0}, {1, 0, 0}, {0, 0, 1},
                                       {1, 0, 1}, {1, 1, 1}, {1, 2, 1}};
    CHECK(enumerate_box(1) == expected);
    CHECK(IndexT{1, 2, 1}.rank() == 1);
    CHECK(IndexT{1, 1, 1}.rank() == 2);
    CHECK(IndexT{0, 0, 0}.rank() == 0);
    CHECK(IndexT{2, 2, 2}.content() == 2);
    CHECK(IndexT{1, -1, 1}.canonical() == IndexT{1, 1, 1});
    CHECK_THROWS_AS(enumerate_box(-1), Error);
}

TEST_CASE("siegel eisenstein vs the E8 theta series") {
    // M_4 is one-dimensional: E4 equals the degree-2 theta series of E8
    const FExp2 e4 = siegel_eisenstein2(4, 2);
    CHECK(e4.coeff({0, 0, 0}) == FieldElem(1));
    CHECK(e8_theta_count(1, 0, 0) == 240);
    CHECK(e8_theta_count(1, 0, 1) == 30240);
    CHECK(e8_theta_count(1, 1, 1) == 13440);
    CHECK(e4.coeff({1, 0, 0}) == FieldElem(240));
    CHECK(e4.coeff({1, 0, 1}) == FieldElem(30240));
    CHECK(e4.coeff({1, 1, 1}) == FieldElem(13440));
    CHECK(e4.coeff({1, 2, 1}) == FieldElem(e8_theta_count(1, 2, 1)));
    CHECK(e4.coeff({1, 2, 1}) == FieldElem(240)); // rank 1, content 1
}

TEST_CASE("ring operations") {
    const FExp2 e4 = siegel_eisenstein2(4, 4);
    const FExp2 e6 = siegel_eisenstein2(6, 4);

    // 1 * F = F
    FExp2 one(0, 4);
    one.set_coeff({0, 0, 0}, FieldElem(1));
    CHECK(one * e4 == e4);

    // convolution against the constant term only
    const FExp2 prod = e4 * e6;
    CHECK(prod.weight() == 10);
    CHECK(prod.coeff({1, 1, 1}) == e4.coeff({1, 1, 1}) + e6.coeff({1, 1, 1}));

    // E4^2 = E8 coefficientwise: two independent construction routes
    const FExp2 e8 = siegel_eisenstein2(8, 4);
    CHECK(fexp2_pow(e4, 2) == e8);

    // associativity at the expansion level
    CHECK((e4 * e4) * e4 == e4 * (e4 * e4));

    // scalar promotion to a quadratic ring
    const FieldPtr K = make_quad_field(Int(1), Int(12837));
    const FExp2 scaled = e4.scaled(FieldElem(Rat(0), Rat(1), K));
    CHECK(same_field(scaled.ring(), K));
    CHECK(scaled.coeff({1, 0, 1}) == FieldElem(Rat(0), Rat(30240), K));
    const FieldPtr K2 = make_quad_field(Int(0), Int(2));
    CHECK_THROWS_AS(scaled + e4.scaled(FieldElem(Rat(0), Rat(1), K2)), RingMismatch);
}

TEST_CASE("phi operator") {
    for (int k : {4, 6, 10, 12}) {
        const QSeries image = siegel_eisenstein2(k, 6).phi();
        const QSeries expect = eisenstein1(k, 6);
        for (int n = 0; n <= 6; ++n) CHECK(image.coeff(n) == expect.coeff(n));
    }
    CHECK(igusa_x10(4).phi().is_zero());
    CHECK(igusa_x12(4).phi().is_zero());

    // ring homomorphism on generator products
    const FExp2 e4 = siegel_eisenstein2(4, 4);
    const FExp2 e6 = siegel_eisenstein2(6, 4);
    const FExp2 x10 = igusa_x10(4);
    for (const auto& [f, g] : {std::pair{e4, e6}, {e4, x10}, {e6, e6 * e4}}) {
        const QSeries lhs = (f * g).phi();
        const QSeries rhs = f.phi() * g.phi();
        for (int n = 0; n <= lhs.prec(); ++n) CHECK(lhs.coeff(n) == rhs.coeff(n));
    }
}

TEST_CASE("igusa cusp forms") {
    const FExp2 x10 = igusa_x10(3);
    CHECK(x10.coeff({1, 1, 1}) == FieldElem(1));
    CHECK(x10.coeff({1, 0, 1}) == FieldElem(-2));
    for (int m = 0; m <= 3; ++m) CHECK(x10.coeff({m, 0, 0}) == FieldElem(0));

    const FExp2 x12 = igusa_x12(3);
    CHECK(x12.coeff({1, 1, 1}) == FieldElem(1));
    CHECK(x12.coeff({1, 0, 1}) == FieldElem(10));
    for (int m = 0; m <= 3; ++m) CHECK(x12.coeff({m, 0, 0}) == FieldElem(0));
}

TEST_CASE("monomial basis") {
    auto names = [](int k) {
        std::vector<std::string> out;
        for (const MonomialExp& e : monomial_exponents(k)) out.push_back(e.str());
        return out;
    };
    CHECK(monomial_exponents(2).empty());
    CHECK(monomial_exponents(12).size() == 3);
    CHECK(monomial_exponents(20).size() == 5);
    const std::vector<std::string> k20 = names(20);
    for (const char* want : {"E4^5", "E4^2*E6^2", "E4*E6*X10", "X10^2", "E4^2*X12"})
        CHECK(std::find(k20.begin(), k20.end(), want) != k20.end());
    // basis forms carry the exponents' weight
    for (const Monomial2& mono : monomial_basis2(16, 2))
        CHECK(mono.form.weight() == 16);
}

TEST_CASE("hecke operator eigenvalues") {
    for (int k : {4, 6, 12}) {
        const FExp2 e = siegel_eisenstein2(k, 4);
        const FExp2 te = hecke_t2(e);
        const FieldElem ev(Rat((1 + pow_int(Int(2), k - 1)) * (1 + pow_int(Int(2), k - 2))));
        CHECK(te == e.truncated(2).scaled(ev));
    }
    CHECK(hecke_t2(igusa_x10(6)) == igusa_x10(6).truncated(3).scaled(FieldElem(240)));
    CHECK(hecke_t2(igusa_x12(6)) == igusa_x12(6).truncated(3).scaled(FieldElem(2784)));
    CHECK_THROWS_AS(hecke_t2(siegel_eisenstein2(4, 1)), BoxTooSmall);

    // linearity
    const FExp2 f = siegel_eisenstein2(4, 4) * siegel_eisenstein2(6, 4);
    const FExp2 g = igusa_x10(4).scaled(FieldElem(3));
    CHECK(hecke_t2(f + g) == hecke_t2(f) + hecke_t2(g));

    // Phi-compatibility: Phi(T(2) F) = (1 + 2^(k-2)) T(2) Phi(F)
    for (int k : {4, 6, 12}) {
        const FExp2 F = siegel_eisenstein2(k, 6);
        const QSeries lhs = hecke_t2(F).phi();
        const QSeries rhs =
            hecke1(F.phi(), Int(2)).scaled(FieldElem(Rat(1 + pow_int(Int(2), k - 2))));
        for (int n = 0; n <= lhs.prec(); ++n) CHECK(lhs.coeff(n) == rhs.coeff(n));
    }
}

TEST_CASE("hecke matrix weight 12") {
    const HeckeMatrix H = hecke_matrix(12, 6);
    REQUIRE(H.basis.size() == 3);
    const std::vector<FieldElem> cp = charpoly(H.entries);
    for (long ev : {2100225L, -24600L, 2784L})
        CHECK(poly_eval(cp, FieldElem(Rat(ev))) == FieldElem(0));
    // trace = eigenvalue sum
    CHECK(cp[2] == FieldElem(Rat(-(2100225L - 24600L + 2784L))));

    // entries are box-independent once full rank holds
    const HeckeMatrix H7 = hecke_matrix(12, 7);
    CHECK(H7.entries == H.entries);
}

TEST_CASE("hecke matrix weight 16 cusp block field") {
    const HeckeMatrix H = hecke_matrix(16, 6);
    REQUIRE(H.basis.size() == 4);
    std::vector<size_t> cusp;
    for (size_t i = 0; i < H.basis.size(); ++i)
        if (H.basis[i].exp.cusp()) cusp.push_back(i);
    REQUIRE(cusp.size() == 2);
    Mat C(2, Vec(2));
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) C[i][j] = H.entries[cusp[i]][cusp[j]];
    const std::vector<FieldElem> cp = charpoly(C);
    // splitting field: disc(char poly) = square * disc(x^2 - x - 12837)
    const Rat disc = cp[1].u() * cp[1].u() - 4 * cp[0].u();
    const Rat quot = disc / Rat(1 + 4 * 12837);
    CHECK(quot.get_den() == 1);
    CHECK(mpz_perfect_square_p(quot.get_num().get_mpz_t()));
}

TEST_CASE("klingen weight 12") {
    const QSeries f = scaled_cusp_form(12, FieldElem(7), 14);
    const FExp2 F = klingen2(f, 12, 6);
    CHECK(F.coeff({1, 0, 1}) == FieldElem(1242));
    CHECK(F.coeff({1, 1, 1}) == FieldElem(92));
    // Phi-image is f coefficientwise
    const QSeries image = F.phi();
    for (int n = 0; n <= 6; ++n) CHECK(image.coeff(n) == f.coeff(n));
    // the eigen-equation is re-verified internally; a second application
    // here exercises the public surface
    CHECK(hecke_t2(F) == F.truncated(3).scaled(FieldElem(-24600)));
}

TEST_CASE("klingen weight 16") {
    const QSeries f = scaled_cusp_form(16, FieldElem(Rat(539)), 14);
    const FExp2 F = klingen2(f, 16, 2);
    CHECK(F.coeff({1, 0, 1}) == FieldElem(5394));
    CHECK(F.coeff({1, 1, 1}) == FieldElem(124));
}

TEST_CASE("cusp eigenforms weight 12") {
    const std::vector<EigenForm2> eig = cusp_eigenforms2(12, 6);
    REQUIRE(eig.size() == 1);
    CHECK(eig[0].eigenvalue_t2 == FieldElem(2784));
    CHECK(eig[0].form == igusa_x12(6));
}

TEST_CASE("cusp eigenforms weight 16") {
    const std::vector<EigenForm2> eig = cusp_eigenforms2(16, 6);
    REQUIRE(eig.size() == 2);
    const FieldPtr K = eig[0].eigenvalue_t2.field();
    REQUIRE(K != nullptr);
    CHECK(*K == QuadField(Int(1), Int(12837)));
    // eigenvalues -192a + 53568 and its conjugate, consistent with the
    // genus-1 eigenvalue -192a + 4416 through the lift relation
    const FieldElem expected =
        saito_kurokawa_eigenvalue(16, FieldElem(Rat(4416), Rat(-192), K));
    CHECK(expected == FieldElem(Rat(53568), Rat(-192), K));
    bool found = false;
    for (const EigenForm2& e : eig)
        if (e.eigenvalue_t2 == expected) found = true;
    CHECK(found);
    CHECK(eig[0].eigenvalue_t2 == eig[1].eigenvalue_t2.conj());

    // normalized conjugate forms map to each other under a -> b - a
    for (const auto& [T, v] : eig[0].form.coeffs())
        CHECK(v.conj() == eig[1].form.coeff(T));

    // Maass relation for the lifts, over the whole box
    for (const EigenForm2& e : eig) CHECK(maass_relation_holds(e.form));
}

TEST_CASE("maass relation for the Igusa forms") {
    CHECK(maass_relation_holds(igusa_x10(6)));
    CHECK(maass_relation_holds(igusa_x12(6)));
    // Eisenstein series also sit in the Spezialschar
    CHECK(maass_relation_holds(siegel_eisenstein2(4, 6)));
    // ... but the weight-20 non-lift eigenform does not
    const FExp2 f20 = explicit_form(20,
                                    {{{1, 1, 1, 0}, FieldElem(38)},
                                     {{2, 0, 0, 1}, FieldElem(38)},
                                     {{0, 0, 2, 0}, FieldElem(Rat(-38) * Rat(1785600))}},
                                    6);
    CHECK(!maass_relation_holds(f20));
}

TEST_CASE("saito-kurokawa eigenvalue inputs") {
    // b(2) of the weight 18 and 22 elliptic eigenforms feeding the
    // X10/X12 eigenvalues
    CHECK(eigenforms1(18, 6)[0].eigenvalue_t2 == FieldElem(-528));
    CHECK(eigenforms1(22, 6)[0].eigenvalue_t2 == FieldElem(-288));
    CHECK(saito_kurokawa_eigenvalue(10, FieldElem(-528)) == FieldElem(240));
    CHECK(saito_kurokawa_eigenvalue(12, FieldElem(-288)) == FieldElem(2784));
}

TEST_CASE("explicit forms") {
    const FExp2 f20 = explicit_form(20,
                                    {{{1, 1, 1, 0}, FieldElem(38)},
                                     {{2, 0, 0, 1}, FieldElem(38)},
                                     {{0, 0, 2, 0}, FieldElem(Rat(-38) * Rat(1785600))}},
                                    2);
    CHECK(f20.coeff({1, 0, 1}) == FieldElem(304));
    CHECK(f20.coeff({2, 2, 2}) == FieldElem(Rat("-63912960")));

    const Rat c = make_rat(Int(2), Int(9));
    const FExp2 f22 = explicit_form(22,
                                    {{{3, 0, 1, 0}, FieldElem(c * Rat(-61))},
                                     {{0, 2, 1, 0}, FieldElem(c * Rat(-5))},
                                     {{1, 1, 0, 1}, FieldElem(c * Rat(30))},
                                     {{0, 0, 1, 1}, FieldElem(c * Rat(80870400))}},
                                    2);
    CHECK(f22.coeff({1, 1, 1}) == FieldElem(-8));
    CHECK(f22.coeff({2, 0, 2}) == FieldElem(Rat("-313368576")));

    CHECK(explicit_form(20, {}, 2).is_zero());
    CHECK_THROWS_AS(explicit_form(20, {{{1, 1, 1, 1}, FieldElem(1)}}, 2), WeightMismatch);
}

TEST_CASE("coefficient symmetry") {
    for (const FExp2& F :
         {siegel_eisenstein2(6, 4), igusa_x10(4) * siegel_eisenstein2(4, 4)})
        for (const auto& [T, v] : F.coeffs()) CHECK(F.coeff(T.transposed()) == v);
}

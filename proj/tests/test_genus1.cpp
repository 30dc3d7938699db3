#include <doctest.h>

#include "smf/genus1.hpp"
#include "smf/numtheory.hpp"

using namespace smf;

namespace {

// classical closed form, independent of the monomial-count route
int dim_mk1_oracle(int k) {
    if (k < 0 || k % 2 != 0) return 0;
    if (k % 12 == 2) return k / 12;
    return k / 12 + 1;
}

} // namespace

TEST_CASE("eisenstein1") {
    const QSeries e4 = eisenstein1(4, 10);
    CHECK(e4.coeff(0) == FieldElem(1));
    CHECK(e4.coeff(1) == FieldElem(240));
    CHECK(e4.coeff(2) == FieldElem(2160));
    const QSeries e12 = eisenstein1(12, 4);
    CHECK(e12.coeff(0) == FieldElem(1));
    CHECK(e12.coeff(1) == FieldElem(make_rat(Int(65520), Int(691))));
    CHECK_THROWS_AS(eisenstein1(2, 4), Error);
    CHECK_THROWS_AS(eisenstein1(7, 4), Error);
}

TEST_CASE("delta") {
    const QSeries d = delta(12);
    CHECK(d.coeff(0) == FieldElem(0));
    CHECK(d.coeff(1) == FieldElem(1));
    CHECK(d.coeff(2) == FieldElem(-24));
    CHECK(d.coeff(3) == FieldElem(252));
    // independent route: Delta = (E4^3 - E6^2) / 1728
    const QSeries e4 = eisenstein1(4, 12), e6 = eisenstein1(6, 12);
    QSeries alt = qseries_pow(e4, 3) - qseries_pow(e6, 2);
    alt = alt.scaled(FieldElem(make_rat(Int(1), Int(1728))));
    for (int n = 0; n <= 12; ++n) CHECK(alt.coeff(n) == d.coeff(n));
}

TEST_CASE("basis dimensions match the classical formula") {
    for (int k = 0; k <= 60; k += 2) {
        const std::vector<BasisForm1> basis = basis_mk1(k, 8);
        CHECK(static_cast<int>(basis.size()) == dim_mk1_oracle(k));
        int cusp = 0;
        for (size_t i = 0; i < basis.size(); ++i) {
            if (basis[i].cusp) ++cusp;
            // echelon pivot structure
            for (size_t n = 0; n < basis.size(); ++n)
                CHECK(basis[i].series.coeff(static_cast<int>(n)) ==
                      (i == n ? FieldElem(1) : FieldElem(0)));
        }
        CHECK(cusp == (k >= 4 ? dim_mk1_oracle(k) - 1 : 0));
    }
    CHECK(basis_mk1(2, 8).empty());
    CHECK(basis_mk1(12, 8).size() == 2);
    CHECK(basis_mk1(30, 8).size() == 3);
}

TEST_CASE("hecke1") {
    const QSeries d = delta(24);
    const QSeries t2d = hecke1(d, Int(2));
    CHECK(t2d.prec() == 12);
    for (int n = 0; n <= 12; ++n) CHECK(t2d.coeff(n) == FieldElem(-24) * d.coeff(n));

    // T(l) E_k = (1 + l^(k-1)) E_k, coefficientwise
    for (int k : {4, 6, 12}) {
        for (long l : {2L, 3L}) {
            const QSeries e = eisenstein1(k, 18);
            const QSeries te = hecke1(e, Int(l));
            const FieldElem ev(Rat(1 + pow_int(Int(l), k - 1)));
            for (int n = 0; n <= te.prec(); ++n) CHECK(te.coeff(n) == ev * e.coeff(n));
        }
    }

    // commutativity and linearity
    const QSeries f = delta(36) * eisenstein1(4, 36); // weight 16
    const QSeries g = qseries_pow(eisenstein1(4, 36), 4);
    CHECK(hecke1(hecke1(f, Int(2)), Int(3)) == hecke1(hecke1(f, Int(3)), Int(2)));
    CHECK(hecke1(f + g, Int(2)) == hecke1(f, Int(2)) + hecke1(g, Int(2)));
}

TEST_CASE("eigenforms1 rational") {
    const std::vector<EigenForm1> e12 = eigenforms1(12, 12);
    REQUIRE(e12.size() == 1);
    CHECK(e12[0].eigenvalue_t2 == FieldElem(-24));
    CHECK(e12[0].series == delta(12));

    const std::vector<EigenForm1> e22 = eigenforms1(22, 8);
    REQUIRE(e22.size() == 1);
    CHECK(e22[0].series.coeff(2) == FieldElem(-288));
}

TEST_CASE("eigenforms1 weight 30") {
    const std::vector<EigenForm1> forms = eigenforms1(30, 16);
    REQUIRE(forms.size() == 2);
    const FieldPtr K = forms[0].eigenvalue_t2.field();
    REQUIRE(K != nullptr);
    // the canonical eigenvalue field is the ring of the table
    CHECK(*K == QuadField(Int(1), Int(12837)));
    // one conjugate has T(2)-eigenvalue -192a + 4416
    const FieldElem expected(Rat(4416), Rat(-192), K);
    bool found = false;
    for (const EigenForm1& f : forms) {
        if (f.eigenvalue_t2 == expected) found = true;
        CHECK(f.series.coeff(1) == FieldElem(1));
        CHECK(f.series.coeff(2) == f.eigenvalue_t2);
        // eigen-equation up to available precision
        const QSeries image = hecke1(f.series, Int(2));
        for (int n = 0; n <= image.prec(); ++n)
            CHECK(image.coeff(n) == f.eigenvalue_t2 * f.series.coeff(n));
    }
    CHECK(found);
    // conjugates map to each other under a -> b - a
    for (int n = 1; n <= 16; ++n)
        CHECK(forms[0].series.coeff(n).conj() == forms[1].series.coeff(n));
    CHECK(forms[0].eigenvalue_t2 + forms[1].eigenvalue_t2 == FieldElem(8640));
}

TEST_CASE("eigenforms1 degree guard") {
    // dim S_42 = 3: eigenform extraction is out of range
    CHECK(dim_sk1(42) == 3);
    CHECK_THROWS_AS(eigenforms1(42, 8), UnsupportedFieldDegree);
}

TEST_CASE("scaled_cusp_form") {
    const QSeries f12 = scaled_cusp_form(12, FieldElem(7), 8);
    CHECK(f12.coeff(1) == FieldElem(7));
    CHECK(f12.coeff(2) == FieldElem(-168));
    CHECK(scaled_cusp_form(16, FieldElem(Rat(539)), 8).coeff(1) == FieldElem(539));
    CHECK(scaled_cusp_form(20, FieldElem(Rat(55451)), 8).coeff(1) == FieldElem(55451));
    CHECK_THROWS_AS(scaled_cusp_form(24, FieldElem(1), 8), DimensionNotOne);
    CHECK_THROWS_AS(scaled_cusp_form(10, FieldElem(1), 8), DimensionNotOne);
}

TEST_CASE("ramanujan congruence ingredients") {
    const QSeries d = delta(100);
    for (int n = 1; n <= 100; ++n) {
        const Rat tau = d.coeff(n).u();
        REQUIRE(tau.get_den() == 1);
        const Int diff = Int(sigma(11, n)) - tau.get_num();
        CHECK(diff % 691 == 0);
    }
}

#include "smf/genus1.hpp"

#include "smf/numtheory.hpp"

namespace smf {

QSeries eisenstein1(int k, int prec) {
    if (k < 4 || k % 2 != 0) throw Error("eisenstein1: weight must be even >= 4");
    QSeries e(k, prec);
    e.set_coeff(0, FieldElem(1));
    const Rat factor = Rat(-2 * k) / bernoulli(k);
    for (int n = 1; n <= prec; ++n)
        e.set_coeff(n, FieldElem(factor * Rat(sigma(k - 1, n))));
    return e;
}

QSeries delta(int prec) {
    if (prec < 1) throw Error("delta: precision must be >= 1");
    // eta(q)^24 shifted by q: build prod (1-q^n) and raise to the 24th power
    QSeries eta(0, prec);
    eta.set_coeff(0, FieldElem(1));
    for (int n = 1; n <= prec; ++n) {
        QSeries factor(0, prec);
        factor.set_coeff(0, FieldElem(1));
        factor.set_coeff(n, FieldElem(-1));
        eta = eta * factor;
    }
    QSeries eta24 = qseries_pow(eta, 24);
    QSeries d(12, prec);
    for (int n = 1; n <= prec; ++n) d.set_coeff(n, eta24.coeff(n - 1));
    return d;
}

int dim_mk1(int k) {
    if (k < 0 || k % 2 != 0) return 0;
    int count = 0;
    for (int a = 0; 4 * a <= k; ++a)
        if ((k - 4 * a) % 6 == 0) ++count;
    return count;
}

int dim_sk1(int k) {
    int d = dim_mk1(k);
    return d > 0 && k > 0 ? d - 1 : 0;
}

std::vector<BasisForm1> basis_mk1(int k, int prec) {
    if (k % 2 != 0 || k < 0) throw Error("basis_mk1: weight must be even >= 0");
    const int dim = dim_mk1(k);
    if (dim == 0) return {};
    const int work = std::max(prec, 2 * dim + 2);

    std::vector<QSeries> monomials;
    if (k == 0) {
        QSeries one(0, work);
        one.set_coeff(0, FieldElem(1));
        monomials.push_back(one);
    } else {
        const QSeries e4 = eisenstein1(4, work);
        const QSeries e6 = eisenstein1(6, work);
        for (int a = 0; 4 * a <= k; ++a) {
            if ((k - 4 * a) % 6 != 0) continue;
            const int b = (k - 4 * a) / 6;
            monomials.push_back(qseries_pow(e4, a) * qseries_pow(e6, b));
        }
    }

    Mat rows(monomials.size(), Vec(work + 1));
    for (size_t i = 0; i < monomials.size(); ++i)
        for (int n = 0; n <= work; ++n) rows[i][n] = monomials[i].coeff(n);
    std::vector<size_t> pivots = rref(rows);
    if (pivots.size() != static_cast<size_t>(dim))
        throw Error("basis_mk1: unexpected rank");
    for (int i = 0; i < dim; ++i)
        if (pivots[i] != static_cast<size_t>(i))
            throw Error("basis_mk1: non-canonical pivot structure");

    std::vector<BasisForm1> out;
    for (int i = 0; i < dim; ++i) {
        QSeries f(k, prec);
        for (int n = 0; n <= prec && n <= work; ++n) f.set_coeff(n, rows[i][n]);
        out.push_back({std::move(f), i > 0});
    }
    return out;
}

QSeries hecke1(const QSeries& f, const Int& l) {
    if (!is_prime(l)) throw Error("hecke1: l must be prime");
    const long lp = l.get_si();
    const int out_prec = f.prec() / static_cast<int>(lp);
    QSeries r(f.weight(), out_prec, f.ring());
    const FieldElem lk1(Rat(pow_int(l, f.weight() - 1)));
    for (int n = 0; n <= out_prec; ++n) {
        FieldElem acc = f.coeff(static_cast<int>(lp) * n);
        if (n % lp == 0) acc += lk1 * f.coeff(n / static_cast<int>(lp));
        r.set_coeff(n, acc);
    }
    return r;
}

Mat hecke1_t2_cusp_matrix(int k) {
    const int d = dim_sk1(k);
    if (d == 0) return {};
    // echelon cusp basis g_i = q^i + O(q^(d+1)); coordinates of T(2) g_i
    // are read off at the pivot exponents
    const int prec = 4 * (d + 1);
    std::vector<BasisForm1> basis = basis_mk1(k, prec);
    Mat C(d, Vec(d));
    for (int i = 0; i < d; ++i) {
        QSeries t = hecke1(basis[i + 1].series, Int(2));
        for (int j = 0; j < d; ++j) C[i][j] = t.coeff(j + 1);
    }
    return C;
}

std::pair<FieldPtr, FieldElem> canonical_sqrt(const Rat& disc) {
    if (disc == 0) throw Error("canonical_sqrt: zero discriminant");
    // disc = (num/den) = (num*den)/den^2
    const Int scaled = disc.get_num() * disc.get_den();
    auto [d0, t] = squarefree_kernel(scaled);
    if (d0 == 1) throw Error("canonical_sqrt: square discriminant");
    const Rat root_rat = make_rat(t, disc.get_den()); // sqrt(disc) = root_rat * sqrt(d0)
    FieldPtr field;
    FieldElem sqrt_d0;
    if (((d0 % 4) + 4) % 4 == 1) {
        field = make_quad_field(Int(1), (d0 - 1) / 4); // a = (1+sqrt(d0))/2
        sqrt_d0 = FieldElem(Rat(-1), Rat(2), field);
    } else {
        field = make_quad_field(Int(0), d0); // a = sqrt(d0)
        sqrt_d0 = FieldElem(Rat(0), Rat(1), field);
    }
    return {field, sqrt_d0 * FieldElem(root_rat)};
}

std::vector<FieldElem> quadratic_roots(const Rat& c1, const Rat& c0) {
    const Rat disc = c1 * c1 - 4 * c0;
    if (disc == 0) return {FieldElem(-c1 / 2), FieldElem(-c1 / 2)};
    const Int scaled = disc.get_num() * disc.get_den();
    if (scaled > 0 && mpz_perfect_square_p(scaled.get_mpz_t())) {
        Int s;
        mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
        const Rat sq = make_rat(s, disc.get_den());
        return {FieldElem((-c1 - sq) / 2), FieldElem((-c1 + sq) / 2)};
    }
    auto [field, root] = canonical_sqrt(disc);
    const FieldElem half(Rat(1, 2));
    return {(FieldElem(-c1) - root) * half, (FieldElem(-c1) + root) * half};
}

std::vector<EigenForm1> eigenforms1(int k, int prec) {
    const int d = dim_sk1(k);
    if (d == 0) return {};
    if (d > 2)
        throw UnsupportedFieldDegree("eigenforms1: dim S_" + std::to_string(k) +
                                     " = " + std::to_string(d));
    std::vector<BasisForm1> basis = basis_mk1(k, prec);
    if (d == 1) {
        QSeries f = basis[1].series;
        return {{f, f.coeff(2)}};
    }
    const Mat C = hecke1_t2_cusp_matrix(k);
    // char poly x^2 + c1 x + c0
    const std::vector<FieldElem> cp = charpoly(C);
    std::vector<FieldElem> roots = quadratic_roots(cp[1].u(), cp[0].u());
    std::vector<EigenForm1> out;
    for (const FieldElem& lambda : roots) {
        // normalized eigenform q + lambda q^2 + ... = g_1 + lambda g_2
        QSeries f = basis[1].series.scaled(FieldElem(1)) + basis[2].series.scaled(lambda);
        out.push_back({std::move(f), lambda});
    }
    return out;
}

QSeries scaled_cusp_form(int k, const FieldElem& scalar, int prec) {
    if (dim_sk1(k) != 1)
        throw DimensionNotOne("scaled_cusp_form: dim S_" + std::to_string(k) +
                              " = " + std::to_string(dim_sk1(k)));
    return basis_mk1(k, prec)[1].series.scaled(scalar);
}

} // namespace smf

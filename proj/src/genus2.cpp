#include "smf/genus2.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "smf/numtheory.hpp"

namespace smf {

namespace {

// Hecke builds reuse the generator expansions heavily; everything here
// is pure, so a process-wide table is safe behind its lock.
class FormCache {
  public:
    FExp2 eisenstein(int k, int D) {
        return lookup("E" + std::to_string(k), D, [&] { return compute_eisenstein(k, D); });
    }
    FExp2 x10(int D) {
        return lookup("X10", D, [&] { return compute_igusa(10, D); });
    }
    FExp2 x12(int D) {
        return lookup("X12", D, [&] { return compute_igusa(12, D); });
    }

    static FormCache& instance() {
        static FormCache cache;
        return cache;
    }

  private:
    template <class F>
    FExp2 lookup(const std::string& name, int D, F&& compute) {
        const std::string key = name + "@" + std::to_string(D);
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = table_.find(key);
            if (it != table_.end()) return it->second;
        }
        FExp2 value = compute();
        std::lock_guard<std::mutex> lock(mu_);
        return table_.emplace(key, std::move(value)).first->second;
    }

    static FExp2 compute_eisenstein(int k, int D);
    static FExp2 compute_igusa(int k, int D);

    std::mutex mu_;
    std::map<std::string, FExp2> table_;
};

FExp2 FormCache::compute_eisenstein(int k, int D) {
    if (k < 4 || k % 2 != 0)
        throw Error("siegel_eisenstein2: weight must be even >= 4");
    FExp2 e(k, D);
    const Rat rank1 = Rat(-2 * k) / bernoulli(k);
    const Rat gamma = Rat(2 * k * (2 * k - 2)) / (bernoulli(k) * bernoulli(2 * k - 2));
    for (const IndexT& T : enumerate_box(D)) {
        switch (T.rank()) {
            case 0:
                e.set_coeff(T, FieldElem(1));
                break;
            case 1:
                e.set_coeff(T, FieldElem(rank1 * Rat(sigma(k - 1, T.content()))));
                break;
            case 2: {
                Rat acc(0);
                const long det4 = T.det4();
                for (const Int& d : divisors(T.content())) {
                    const long dl = d.get_si();
                    acc += Rat(pow_int(d, k - 1)) *
                           cohen_h(k - 1, Int(det4 / (dl * dl)));
                }
                e.set_coeff(T, FieldElem(gamma * acc));
                break;
            }
        }
    }
    e.check_symmetry("siegel_eisenstein2");
    return e;
}

// Phi-kernel line of a span of weight-k forms, normalized a((1,1,1)) = 1.
FExp2 phi_kernel_line(const std::vector<FExp2>& span, int D, const std::string& what) {
    Mat rows(span.size(), Vec(D + 1));
    for (size_t i = 0; i < span.size(); ++i)
        for (int j = 0; j <= D; ++j) rows[i][j] = span[i].coeff({j, 0, 0});
    std::vector<Vec> ker = kernel_basis(mat_transpose(rows));
    if (ker.size() != 1)
        throw DegenerateKernel(what + ": Phi-kernel dimension " +
                               std::to_string(ker.size()));
    FExp2 f(span[0].weight(), D);
    for (size_t i = 0; i < span.size(); ++i) f += span[i].scaled(ker[0][i]);
    const FieldElem pin = f.coeff({1, 1, 1});
    if (pin.is_zero()) throw DegenerateKernel(what + ": a((1,1,1)) vanishes");
    f = f.scaled(pin.inverse());
    if (!f.phi().is_zero()) throw DegenerateKernel(what + ": kernel line not cuspidal");
    return f;
}

FExp2 FormCache::compute_igusa(int k, int D) {
    if (D < 1) throw Error("igusa cusp forms need box >= 1");
    auto& cache = FormCache::instance();
    std::vector<FExp2> span;
    if (k == 10) {
        span = {cache.eisenstein(4, D) * cache.eisenstein(6, D), cache.eisenstein(10, D)};
    } else {
        const FExp2 e4 = cache.eisenstein(4, D);
        span = {e4 * e4 * e4, fexp2_pow(cache.eisenstein(6, D), 2), cache.eisenstein(12, D)};
    }
    return phi_kernel_line(span, D, "igusa_x" + std::to_string(k));
}

} // namespace

FExp2 siegel_eisenstein2(int k, int boxD) {
    return FormCache::instance().eisenstein(k, boxD);
}

FExp2 igusa_x10(int boxD) { return FormCache::instance().x10(boxD); }
FExp2 igusa_x12(int boxD) { return FormCache::instance().x12(boxD); }

std::string MonomialExp::str() const {
    std::ostringstream os;
    bool any = false;
    auto emit = [&](const char* name, int e) {
        if (e == 0) return;
        if (any) os << "*";
        any = true;
        os << name;
        if (e > 1) os << "^" << e;
    };
    emit("E4", e4);
    emit("E6", e6);
    emit("X10", e10);
    emit("X12", e12);
    if (!any) os << "1";
    return os.str();
}

std::vector<MonomialExp> monomial_exponents(int k) {
    std::vector<MonomialExp> out;
    if (k < 0 || k % 2 != 0) return out;
    for (int e12 = 0; 12 * e12 <= k; ++e12)
        for (int e10 = 0; 12 * e12 + 10 * e10 <= k; ++e10)
            for (int e6 = 0; 12 * e12 + 10 * e10 + 6 * e6 <= k; ++e6) {
                const int rem = k - 12 * e12 - 10 * e10 - 6 * e6;
                if (rem % 4 != 0) continue;
                out.push_back({rem / 4, e6, e10, e12});
            }
    return out;
}

namespace {

FExp2 monomial_form(const MonomialExp& e, int D) {
    auto& cache = FormCache::instance();
    FExp2 f(0, D);
    f.set_coeff({0, 0, 0}, FieldElem(1));
    if (e.e4) f = f * fexp2_pow(cache.eisenstein(4, D), e.e4);
    if (e.e6) f = f * fexp2_pow(cache.eisenstein(6, D), e.e6);
    if (e.e10) f = f * fexp2_pow(cache.x10(D), e.e10);
    if (e.e12) f = f * fexp2_pow(cache.x12(D), e.e12);
    return f;
}

} // namespace

std::vector<Monomial2> monomial_basis2(int k, int boxD) {
    std::vector<Monomial2> out;
    for (const MonomialExp& e : monomial_exponents(k))
        out.push_back({e, monomial_form(e, boxD)});
    return out;
}

FExp2 hecke_t2(const FExp2& F) {
    const int D = F.box();
    if (D < 2) throw BoxTooSmall("hecke_t2: box " + std::to_string(D));
    const int k = F.weight();
    const FieldElem w1(Rat(pow_int(Int(2), k - 2)));
    const FieldElem w2(Rat(pow_int(Int(2), 2 * k - 3)));
    FExp2 out(k, D / 2, F.ring());
    for (const IndexT& T : enumerate_box(D / 2)) {
        const auto [m, r, n] = T;
        FieldElem acc = F.coeff({2 * m, 2 * r, 2 * n});
        FieldElem mid(0);
        if (n % 2 == 0) mid += F.coeff_or_zero({2 * m, r, n / 2});
        for (int j = 0; j <= 1; ++j) {
            const int top = m + r * j + n * j * j;
            if (top % 2 != 0) continue;
            mid += F.coeff_or_zero({top / 2, r + 2 * n * j, 2 * n});
        }
        acc += w1 * mid;
        if (m % 2 == 0 && r % 2 == 0 && n % 2 == 0)
            acc += w2 * F.coeff({m / 2, r / 2, n / 2});
        out.set_coeff(T, std::move(acc));
    }
    out.check_symmetry("hecke_t2");
    return out;
}

HeckeMatrix hecke_matrix(int k, int boxD) {
    HeckeMatrix H;
    H.weight = k;
    H.basis = monomial_basis2(k, boxD);
    const size_t dim = H.basis.size();
    H.entries = Mat(dim, Vec(dim));
    if (dim == 0) return H;

    const std::vector<IndexT> probe = enumerate_box(boxD / 2);
    Mat columns(probe.size(), Vec(dim)); // probe x basis
    for (size_t j = 0; j < dim; ++j)
        for (size_t i = 0; i < probe.size(); ++i)
            columns[i][j] = H.basis[j].form.coeff(probe[i]);
    if (mat_rank(columns) < dim)
        throw RankDeficient("hecke_matrix: basis rank-deficient on box " +
                            std::to_string(boxD / 2));

    for (size_t i = 0; i < dim; ++i) {
        const FExp2 image = hecke_t2(H.basis[i].form);
        Vec rhs(probe.size());
        for (size_t t = 0; t < probe.size(); ++t) rhs[t] = image.coeff(probe[t]);
        H.entries[i] = solve_full_column_rank(columns, rhs);
    }
    return H;
}

namespace {

// coordinates x with (entries^T - lambda I) x = 0
Vec eigen_coordinates(const Mat& entries, const FieldElem& lambda,
                      const std::string& what) {
    const size_t dim = entries.size();
    Mat A(dim, Vec(dim));
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) A[i][j] = entries[j][i];
    for (size_t i = 0; i < dim; ++i) A[i][i] -= lambda;
    std::vector<Vec> ker = kernel_basis(A);
    if (ker.size() != 1)
        throw KernelNotOneDimensional(what + ": eigenspace dimension " +
                                      std::to_string(ker.size()));
    return ker[0];
}

FExp2 combine(const std::vector<Monomial2>& basis, const Vec& coords, int box) {
    FExp2 f(basis[0].form.weight(), box);
    for (size_t i = 0; i < basis.size(); ++i)
        if (!coords[i].is_zero()) f += basis[i].form.truncated(box).scaled(coords[i]);
    return f;
}

void verify_eigen_equation(const FExp2& F, const FieldElem& lambda,
                           const std::string& what) {
    const FExp2 image = hecke_t2(F);
    const FExp2 expect = F.truncated(F.box() / 2).scaled(lambda);
    if (!(image == expect))
        throw EigenRelationViolated(what + ": T(2) image mismatch on box " +
                                    std::to_string(F.box() / 2));
}

} // namespace

FExp2 klingen2(const QSeries& f, int k, int boxD) {
    if (k <= 4 || k % 2 != 0)
        throw Error("klingen2: weight must be even > 4");
    if (f.weight() != k) throw WeightMismatch("klingen2: form weight mismatch");
    if (f.coeff(1).is_zero()) throw Error("klingen2: a(1; f) must not vanish");
    if (f.prec() < 2) throw Error("klingen2: need a(2; f)");

    const int build = std::max(boxD, 6);
    const HeckeMatrix H = hecke_matrix(k, build);
    const FieldElem lambda = (f.coeff(2) / f.coeff(1)) *
                             FieldElem(Rat(1 + pow_int(Int(2), k - 2)));
    const Vec coords = eigen_coordinates(H.entries, lambda, "klingen2");
    FExp2 F = combine(H.basis, coords, build);

    // pin the normalization through the Phi-image
    const QSeries image = F.phi();
    if (image.coeff(1).is_zero())
        throw EigenRelationViolated("klingen2: Phi-image has no q term");
    F = F.scaled(f.coeff(1) / image.coeff(1));

    verify_eigen_equation(F, lambda, "klingen2");
    const QSeries check = F.phi();
    for (int n = 0; n <= std::min(check.prec(), f.prec()); ++n)
        if (check.coeff(n) != f.coeff(n))
            throw EigenRelationViolated("klingen2: Phi(F) != f at q^" +
                                        std::to_string(n));
    return F.truncated(boxD);
}

FieldElem saito_kurokawa_eigenvalue(int k, const FieldElem& b2) {
    return b2 + FieldElem(Rat(pow_int(Int(2), k - 1) + pow_int(Int(2), k - 2)));
}

std::vector<EigenForm2> cusp_eigenforms2(int k, int boxD) {
    const int build = std::max(boxD, 6);
    const HeckeMatrix H = hecke_matrix(k, build);

    std::vector<size_t> cusp_idx;
    for (size_t i = 0; i < H.basis.size(); ++i)
        if (H.basis[i].exp.cusp()) cusp_idx.push_back(i);
    const size_t d = cusp_idx.size();
    if (d == 0) return {};

    // T(2) preserves the cusp space, so rows of cusp monomials must not
    // leak onto the Eisenstein-type monomials
    Mat C(d, Vec(d));
    for (size_t i = 0; i < d; ++i) {
        for (size_t j = 0; j < H.basis.size(); ++j) {
            const bool cusp_col = H.basis[j].exp.cusp();
            const FieldElem& e = H.entries[cusp_idx[i]][j];
            if (!cusp_col && !e.is_zero())
                throw Error("cusp_eigenforms2: T(2) leaves the cusp span");
        }
        for (size_t j = 0; j < d; ++j) C[i][j] = H.entries[cusp_idx[i]][cusp_idx[j]];
    }

    // Split off the Saito-Kurokawa block: its eigenvalues are the
    // genus-1 weight 2k-2 eigenvalues shifted by 2^(k-1) + 2^(k-2).
    // This standard input is only used to locate roots; every eigenform
    // is re-verified against the matrix afterwards.
    std::vector<FieldElem> cp = charpoly(C);
    const Mat C1 = hecke1_t2_cusp_matrix(2 * k - 2);
    std::vector<FieldElem> eigenvalues;
    if (!C1.empty()) {
        const FieldElem shift(Rat(pow_int(Int(2), k - 1) + pow_int(Int(2), k - 2)));
        Mat shifted = C1;
        for (size_t i = 0; i < shifted.size(); ++i) shifted[i][i] += shift;
        std::vector<FieldElem> sk = charpoly(shifted);
        auto [quot, rem] = poly_divmod(cp, sk);
        for (const FieldElem& r : rem)
            if (!r.is_zero())
                throw EigenRelationViolated(
                    "cusp_eigenforms2: Saito-Kurokawa factor does not divide");
        // roots of the Saito-Kurokawa factor
        if (sk.size() == 2) {
            eigenvalues.push_back(-sk[0]);
        } else if (sk.size() == 3) {
            for (const FieldElem& r : quadratic_roots(sk[1].u(), sk[0].u()))
                eigenvalues.push_back(r);
        } else {
            throw UnsupportedFieldDegree("cusp_eigenforms2: Saito-Kurokawa block of degree " +
                                         std::to_string(sk.size() - 1));
        }
        cp = quot;
    }
    // remaining factor
    if (cp.size() == 2) {
        eigenvalues.push_back(-cp[0]);
    } else if (cp.size() == 3) {
        for (const FieldElem& r : quadratic_roots(cp[1].u(), cp[0].u()))
            eigenvalues.push_back(r);
    } else if (cp.size() > 3) {
        throw UnsupportedFieldDegree("cusp_eigenforms2: non-lift block of degree " +
                                     std::to_string(cp.size() - 1));
    }

    std::vector<EigenForm2> out;
    for (const FieldElem& lambda : eigenvalues) {
        Vec coords = eigen_coordinates(C, lambda, "cusp_eigenforms2");
        Vec full(H.basis.size());
        for (size_t i = 0; i < d; ++i) full[cusp_idx[i]] = coords[i];
        FExp2 F = combine(H.basis, full, build);
        const FieldElem pin = F.coeff({1, 1, 1});
        if (!pin.is_zero()) F = F.scaled(pin.inverse());
        verify_eigen_equation(F, lambda, "cusp_eigenforms2");
        if (!F.phi().is_zero())
            throw EigenRelationViolated("cusp_eigenforms2: eigenform not cuspidal");
        out.push_back({F.truncated(boxD), lambda});
    }
    return out;
}

FExp2 explicit_form(int k, const std::vector<std::pair<MonomialExp, FieldElem>>& terms,
                    int boxD) {
    FExp2 out(k, boxD);
    for (const auto& [exp, coeff] : terms) {
        if (exp.weight() != k)
            throw WeightMismatch("explicit_form: monomial " + exp.str() + " has weight " +
                                 std::to_string(exp.weight()));
        out += monomial_form(exp, boxD).scaled(coeff);
    }
    return out;
}

} // namespace smf

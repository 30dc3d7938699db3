#include "smf/numtheory.hpp"

#include <mutex>

namespace smf {

Rat bernoulli(unsigned n) {
    static std::vector<Rat> cache{Rat(1)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
    for (unsigned m = cache.size(); m <= n; ++m) {
        Rat acc(0);
        for (unsigned j = 0; j < m; ++j)
            acc += Rat(binomial(m + 1, j)) * cache[j];
        cache.push_back(-acc / Rat(m + 1));
    }
    return cache[n];
}

Rat bernoulli_poly(unsigned n, const Rat& x) {
    Rat acc(0);
    Rat xpow(1);
    for (unsigned j = 0; j <= n; ++j) {
        // term j of the sum, built from the highest power downwards
        acc += Rat(binomial(n, n - j)) * bernoulli(n - j) * xpow;
        xpow *= x;
    }
    return acc;
}

Int sigma(unsigned k, const Int& n) {
    if (n < 1) throw Error("sigma: n must be >= 1");
    Int total(0);
    for (const Int& d : divisors(n)) total += pow_int(d, k);
    return total;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (Int d(2); d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<Int, unsigned>> factorize(Int n) {
    if (n == 0) throw Error("factorize: zero");
    if (n < 0) n = -n;
    std::vector<std::pair<Int, unsigned>> out;
    for (Int d(2); d * d <= n; ++d) {
        if (n % d != 0) continue;
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<Int> divisors(const Int& n) {
    std::vector<Int> out{Int(1)};
    for (const auto& [p, e] : factorize(n)) {
        const size_t base = out.size();
        Int pk(1);
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    return out;
}

int moebius(const Int& n) {
    int sign = 1;
    for (const auto& [p, e] : factorize(n)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

std::pair<Int, Int> squarefree_kernel(const Int& n) {
    if (n == 0) throw Error("squarefree_kernel: zero");
    Int s(n < 0 ? -1 : 1), t(1);
    for (const auto& [p, e] : factorize(n)) {
        if (e & 1) s *= p;
        t *= pow_int(p, e / 2);
    }
    return {s, t};
}

bool is_fundamental_discriminant(const Int& D) {
    if (D == 1) return true;
    if (D == 0) return false;
    Int mod4 = ((D % 4) + 4) % 4;
    if (mod4 == 1) return squarefree_kernel(D).second == 1;
    if (mod4 != 0) return false;
    Int m = D / 4;
    Int m4 = ((m % 4) + 4) % 4;
    if (m4 != 2 && m4 != 3) return false;
    return squarefree_kernel(m).second == 1;
}

int kronecker_chi(const Int& D, const Int& n) {
    if (!is_fundamental_discriminant(D))
        throw NonFundamentalDiscriminant("kronecker_chi: D = " + D.get_str());
    return mpz_kronecker(D.get_mpz_t(), n.get_mpz_t());
}

Rat gen_bernoulli(unsigned n, const Int& D) {
    if (n < 1) throw Error("gen_bernoulli: n must be >= 1");
    if (!is_fundamental_discriminant(D))
        throw NonFundamentalDiscriminant("gen_bernoulli: D = " + D.get_str());
    Int f = abs(D);
    Rat acc(0);
    for (Int a(1); a <= f; ++a) {
        int chi = mpz_kronecker(D.get_mpz_t(), a.get_mpz_t());
        if (chi == 0) continue;
        acc += Rat(chi) * bernoulli_poly(n, make_rat(a, f));
    }
    return pow_rat(Rat(f), n - 1) * acc;
}

Rat cohen_h(unsigned r, const Int& N) {
    if (r < 1) throw Error("cohen_h: r must be >= 1");
    if (N < 0) throw Error("cohen_h: N must be >= 0");
    if (N == 0) return -bernoulli(2 * r) / Rat(2 * r);
    Int M = (r % 2 == 0) ? N : Int(-N);
    Int m4 = ((M % 4) + 4) % 4;
    if (m4 == 2 || m4 == 3) return Rat(0);
    auto [s, t] = squarefree_kernel(M);
    Int D, f;
    Int s4 = ((s % 4) + 4) % 4;
    if (s4 == 1) {
        D = s;
        f = t;
    } else {
        D = 4 * s;
        f = t / 2; // t is even here, else M would be 2 or 3 mod 4
    }
    Rat lvalue = -gen_bernoulli(r, D) / Rat(r);
    Rat series(0);
    for (const Int& d : divisors(f)) {
        int mu = moebius(d);
        if (mu == 0) continue;
        int chi = mpz_kronecker(D.get_mpz_t(), d.get_mpz_t());
        if (chi == 0) continue;
        series += Rat(mu * chi) * Rat(pow_int(d, r - 1)) * Rat(sigma(2 * r - 1, f / d));
    }
    return lvalue * series;
}

} // namespace smf

// Independent reference computations used by the test suites.  Nothing
// here touches the library's own construction paths: class numbers come
// from reduced forms, theta coefficients from E8 root pairs, Bernoulli
// numbers from the Akiyama-Tanigawa scheme.
#pragma once

#include <array>
#include <vector>

#include "smf/genus2.hpp"
#include "smf/numtheory.hpp"

namespace smf_test {

using namespace smf;

// Akiyama-Tanigawa algorithm, sign-adjusted to the B_1 = -1/2 convention.
inline Rat bernoulli_oracle(unsigned n) {
    std::vector<Rat> row(n + 1);
    for (unsigned m = 0; m <= n; ++m) {
        row[m] = make_rat(Int(1), Int(m + 1));
        for (unsigned j = m; j >= 1; --j) row[j - 1] = Rat(j) * (row[j - 1] - row[j]);
    }
    Rat b = row[0]; // B_n with B_1 = +1/2
    if (n == 1) b = -b;
    return b;
}

// Weighted count of reduced positive definite binary quadratic forms of
// discriminant -N: a x^2 + b xy + c y^2 with |b| <= a <= c and b >= 0
// when |b| = a or a = c; x^2+y^2 counts 1/2, x^2+xy+y^2 counts 1/3.
inline Rat hurwitz_oracle(long N) {
    if (N == 0) return make_rat(Int(-1), Int(12));
    if (N % 4 == 1 || N % 4 == 2) return Rat(0);
    Rat count(0);
    for (long a = 1; 3 * a * a <= N; ++a) {
        for (long b = -a; b <= a; ++b) {
            if ((b * b + N) % (4 * a) != 0) continue;
            const long c = (b * b + N) / (4 * a);
            if (c < a) continue;
            if ((std::abs(b) == a || a == c) && b < 0) continue;
            if (a == b && b == c) count += make_rat(Int(1), Int(3));
            else if (a == c && b == 0) count += make_rat(Int(1), Int(2));
            else count += 1;
        }
    }
    return count;
}

// E8 root system with doubled coordinates: 2x for the 112 integer roots
// +-e_i +- e_j and the 128 half-integer roots (+-1/2)^8 with an even
// number of minus signs.
inline const std::vector<std::array<int, 8>>& e8_roots_doubled() {
    static std::vector<std::array<int, 8>> roots = [] {
        std::vector<std::array<int, 8>> out;
        for (int i = 0; i < 8; ++i)
            for (int j = i + 1; j < 8; ++j)
                for (int si : {-2, 2})
                    for (int sj : {-2, 2}) {
                        std::array<int, 8> v{};
                        v[i] = si;
                        v[j] = sj;
                        out.push_back(v);
                    }
        for (int mask = 0; mask < 256; ++mask) {
            if (__builtin_popcount(mask) % 2 != 0) continue;
            std::array<int, 8> v;
            for (int i = 0; i < 8; ++i) v[i] = (mask >> i & 1) ? -1 : 1;
            out.push_back(v);
        }
        return out;
    }();
    return roots;
}

// #{(x,y) in E8^2 : (x,x) = 2m, (x,y) = r, (y,y) = 2n} for m, n <= 1,
// where only the zero vector and the 240 roots contribute.
inline long e8_theta_count(int m, int r, int n) {
    if (m > 1 || n > 1) throw smf::Error("e8_theta_count: out of range");
    const auto& roots = e8_roots_doubled();
    auto vectors_of_norm = [&](int twice) {
        std::vector<std::array<int, 8>> out;
        if (twice == 0) out.push_back({});
        if (twice == 2) out = roots;
        return out;
    };
    long count = 0;
    for (const auto& x : vectors_of_norm(2 * m))
        for (const auto& y : vectors_of_norm(2 * n)) {
            int dot4 = 0; // 4 * (x . y)
            for (int i = 0; i < 8; ++i) dot4 += x[i] * y[i];
            if (dot4 == 4 * r) ++count;
        }
    return count;
}

// a(m,r,n) = sum_{d | content} d^(k-1) a*((4mn - r^2)/d^2) with
// a*(N) = a(((N + rho^2)/4, rho, 1)), rho = N mod 2, wherever every
// referenced index stays inside the box.
inline bool maass_relation_holds(const FExp2& F) {
    const int k = F.weight();
    bool checked_something = false;
    for (const IndexT& T : enumerate_box(F.box())) {
        if (T.rank() == 0) continue;
        FieldElem acc(0);
        bool in_range = true;
        for (const Int& d : divisors(Int(T.content()))) {
            const long dl = d.get_si();
            const long N = T.det4() / (dl * dl);
            const long rho = N % 2;
            const long mm = (N + rho * rho) / 4;
            if (mm > F.box()) {
                in_range = false;
                break;
            }
            acc += FieldElem(Rat(pow_int(d, k - 1))) *
                   F.coeff({static_cast<int>(mm), static_cast<int>(rho), 1});
        }
        if (!in_range) continue;
        checked_something = true;
        if (!(F.coeff(T) == acc)) return false;
    }
    return checked_something;
}

} // namespace smf_test

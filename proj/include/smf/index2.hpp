#pragma once

#include <compare>
#include <cstdlib>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

#include "smf/errors.hpp"

namespace smf {

// Half-integral index (m, r, n), the matrix [[m, r/2], [r/2, n]] of the
// lattice of symmetric semi-integral matrices.  Canonical storage keeps
// r >= 0; a(m,-r,n) = a(m,r,n) for the even weights handled here.
struct IndexT {
    int m = 0;
    int r = 0;
    int n = 0;

    long det4() const { return 4L * m * n - 1L * r * r; }
    bool is_psd() const { return m >= 0 && n >= 0 && det4() >= 0; }

    int rank() const {
        if (det4() > 0) return 2;
        return (m == 0 && r == 0 && n == 0) ? 0 : 1;
    }

    // gcd(m, r, n); zero for the zero index
    int content() const { return std::gcd(std::gcd(m, std::abs(r)), n); }

    IndexT canonical() const { return {m, std::abs(r), n}; }
    IndexT transposed() const { return {n, r, m}; }

    IndexT operator+(const IndexT& o) const { return {m + o.m, r + o.r, n + o.n}; }

    // enumeration order: lexicographic in (n, m, r), the order of the
    // worked tables
    auto operator<=>(const IndexT& o) const {
        return std::tie(n, m, r) <=> std::tie(o.n, o.m, o.r);
    }
    bool operator==(const IndexT& o) const = default;

    std::string str() const {
        return "(" + std::to_string(m) + ", " + std::to_string(r) + ", " +
               std::to_string(n) + ")";
    }
};

// Truncation box: all semidefinite indices with diagonal entries <= D.
// Closed under splitting a sum T = T1 + T2, since the diagonals of the
// summands are dominated by those of T.
struct Box {
    int D = 0;
    bool contains(const IndexT& T) const { return T.is_psd() && T.m <= D && T.n <= D; }
};

// Canonical (r >= 0) indices of the box, in enumeration order.
std::vector<IndexT> enumerate_box(int D);

// Same set including r < 0.
std::vector<IndexT> enumerate_box_signed(int D);

} // namespace smf

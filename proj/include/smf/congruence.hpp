#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "smf/genus2.hpp"
#include "smf/prime_ideal.hpp"

namespace smf {

// min over the box of the coefficient valuations (a box approximation
// of the valuation of the form).
Valuation vp_expansion(const FExp2& F, const PrimeIdeal& I);

// Same, restricted to indices of the given matrix rank (0, 1 or 2).
Valuation vp_rank(const FExp2& F, const PrimeIdeal& I, int rank);

// True iff every coefficient of Phi(F) has valuation >= m.  Requires
// the whole table to be I-integral.
bool is_mod_pm_cusp(const FExp2& F, const PrimeIdeal& I, unsigned m);

// The index set whose congruence decides congruence of whole forms of
// weight k (Sturm-type bound); only the ranges 10..18 and 20..28 are
// covered.
std::vector<IndexT> sturm_indices(int k);

struct CongruenceRow {
    IndexT index;
    FieldElem lhs, rhs;
    std::optional<Int> residue_lhs, residue_rhs; // present for split/rational ideals
    bool ok = false;
};

struct CongruenceReport {
    int weight = 0;
    std::string ideal;
    unsigned exponent = 1;
    std::vector<CongruenceRow> rows;
    bool verdict = false;

    std::string to_table() const;
    std::string to_json() const;
};

// Row-by-row check of a(T;F) = a(T;G) mod I^m over the Sturm set.
CongruenceReport verify_congruence(const FExp2& F, const FExp2& G, const PrimeIdeal& I,
                                   unsigned m);

// sigma_11(n) = tau(n) mod 691 for all n <= N.
bool ramanujan_check(int N);

struct GeneratorSet {
    std::vector<std::pair<size_t, unsigned>> pure_powers; // (index, alpha_i)
    std::vector<std::vector<unsigned>> mixed;             // exponent tuples
};

// Monomial generators of the graded piece above weight M: minimal pure
// powers f_i^alpha_i with alpha_i k_i > M plus all tuples of weight > M
// with every exponent below 2 alpha_i.
GeneratorSet monomial_generators(unsigned M, const std::vector<unsigned>& weights);

// Prime factors of the two rational constants bounding the degree-3
// exceptional set.
std::set<Int> s3_bound();
std::set<Int> s2_bound();

// One worked weight: builds the scaled elliptic form, its
// Klingen-Eisenstein series and the comparison cusp form, checks the
// mod-cusp-form property and the congruence, and pins every printed
// value against the expected table (TableMismatch otherwise).
struct DriverResult {
    CongruenceReport report;
    FExp2 klingen;
    FExp2 cusp;
};

// root16 overrides the residue of a mod 7 that selects the weight-16
// prime ideal; the default 3 (i.e. a = -4) reproduces the table.
DriverResult example_driver(int weight, int table_box = 2,
                            std::optional<int> root16 = std::nullopt);

} // namespace smf

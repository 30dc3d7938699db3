#include "smf/prime_ideal.hpp"

#include "smf/numtheory.hpp"

namespace smf {

namespace {

Int mod_pos(const Int& x, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int invert_mod(const Int& x, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0)
        throw Error("invert_mod: not invertible");
    return r;
}

Int powm(const Int& base, const Int& e, const Int& m) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

} // namespace

Int sqrt_mod_prime(const Int& a0, const Int& p) {
    Int a = mod_pos(a0, p);
    if (a == 0) return Int(0);
    if (mpz_legendre(a.get_mpz_t(), p.get_mpz_t()) != 1)
        throw Error("sqrt_mod_prime: non-residue");
    if (p % 4 == 3) return powm(a, (p + 1) / 4, p);
    // Tonelli-Shanks
    Int q = p - 1;
    unsigned long s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    Int z(2);
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
    Int m(s), c = powm(z, q, p), t = powm(a, q, p), r = powm(a, (q + 1) / 2, p);
    while (t != 1) {
        Int tt = t;
        long i = 0;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
        }
        Int b = c;
        for (Int j(0); j < m - i - 1; ++j) b = b * b % p;
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return r;
}

PrimeIdeal PrimeIdeal::rational(Int p) {
    return PrimeIdeal(Kind::Rational, nullptr, std::move(p), Int(0));
}

PrimeIdeal PrimeIdeal::split(FieldPtr field, Int p, Int r0) {
    if (!field) throw Error("PrimeIdeal::split: missing field");
    Int check = mod_pos(r0 * r0 - field->b() * r0 - field->c(), p);
    if (check != 0) throw Error("PrimeIdeal::split: r0 is not a root mod p");
    if (mod_pos(2 * r0 - field->b(), p) == 0)
        throw RamifiedPrime("PrimeIdeal::split: double root mod " + p.get_str());
    return PrimeIdeal(Kind::Split, std::move(field), std::move(p), std::move(r0));
}

PrimeIdeal PrimeIdeal::inert(FieldPtr field, Int p) {
    if (!field) throw Error("PrimeIdeal::inert: missing field");
    return PrimeIdeal(Kind::Inert, std::move(field), std::move(p), Int(0));
}

std::vector<PrimeIdeal> prime_ideals_above(const FieldPtr& field, const Int& p) {
    if (!is_prime(p)) throw Error("prime_ideals_above: " + p.get_str() + " is not prime");
    if (!field) return {PrimeIdeal::rational(p)};

    const Int disc = field->discriminant();
    if (disc % p == 0)
        throw RamifiedPrime("prime " + p.get_str() + " ramifies in " + field->str());

    if (p == 2) {
        // disc odd forces b odd; x^2 - bx - c = x^2 + x + c mod 2
        if (mod_pos(field->c(), 2) == 0)
            return {PrimeIdeal::split(field, p, Int(0)),
                    PrimeIdeal::split(field, p, Int(1))};
        return {PrimeIdeal::inert(field, p)};
    }

    int leg = mpz_legendre(disc.get_mpz_t(), p.get_mpz_t());
    if (leg == -1) return {PrimeIdeal::inert(field, p)};
    Int s = sqrt_mod_prime(disc, p);
    Int half = invert_mod(Int(2), p);
    Int r1 = mod_pos((field->b() + s) * half, p);
    Int r2 = mod_pos((field->b() - s) * half, p);
    if (r1 > r2) std::swap(r1, r2);
    return {PrimeIdeal::split(field, p, r1), PrimeIdeal::split(field, p, r2)};
}

Int PrimeIdeal::hensel_root(unsigned m) const {
    if (kind_ != Kind::Split)
        throw InertIdeal("hensel_root: no embedding for " + str());
    if (m == 0) throw Error("hensel_root: m must be >= 1");

    std::lock_guard<std::mutex> lock(memo_->mu);
    auto it = memo_->lifts.find(m);
    if (it != memo_->lifts.end()) return it->second;

    // Newton iteration x <- x - f(x)/f'(x) for f = x^2 - b x - c,
    // doubling the precision each round.
    const Int &b = field_->b(), &c = field_->c();
    Int x = r0_;
    unsigned prec = 1;
    while (prec < m) {
        prec = std::min(2 * prec, m);
        Int mod = pow_int(p_, prec);
        Int fx = mod_pos(x * x - b * x - c, mod);
        Int dfx = invert_mod(mod_pos(2 * x - b, mod), mod);
        x = mod_pos(x - fx * dfx, mod);
    }
    memo_->lifts[m] = x;
    return x;
}

long PrimeIdeal::integral_val(const Int& u, const Int& v) const {
    switch (kind_) {
        case Kind::Rational:
            return vp_int(u, p_);
        case Kind::Inert: {
            if (u == 0) return vp_int(v, p_);
            if (v == 0) return vp_int(u, p_);
            return std::min(vp_int(u, p_), vp_int(v, p_));
        }
        case Kind::Split: {
            // v_p(image) is bounded by v_p(norm), so lifting one digit
            // past that bound pins the valuation exactly.
            const Int norm = u * u + field_->b() * u * v - field_->c() * v * v;
            const long bound = vp_int(norm, p_);
            const unsigned prec = static_cast<unsigned>(bound) + 1;
            Int t = mod_pos(u + v * hensel_root(prec), pow_int(p_, prec));
            if (t == 0) throw Error("PrimeIdeal::val: precision bound violated");
            return vp_int(t, p_);
        }
    }
    throw Error("unreachable");
}

Valuation PrimeIdeal::val(const FieldElem& x) const {
    if (!x.is_rational()) (void)common_field(field_, x.field());
    if (x.is_zero()) return Valuation::infinite();
    const Int d = lcm(x.u().get_den(), x.v().get_den());
    const Int u = x.u().get_num() * (d / x.u().get_den());
    const Int v = x.v().get_num() * (d / x.v().get_den());
    return Valuation::finite(integral_val(u, v) - vp_int(d, p_));
}

Int PrimeIdeal::integral_residue(unsigned m, const Int& u, const Int& v) const {
    const Int mod = pow_int(p_, m);
    if (kind_ == Kind::Rational) return mod_pos(u, mod);
    if (kind_ != Kind::Split)
        throw InertIdeal("residue_mod: no embedding for " + str());
    return mod_pos(u + v * hensel_root(m), mod);
}

Int PrimeIdeal::residue_mod(unsigned m, const FieldElem& x) const {
    if (kind_ == Kind::Inert)
        throw InertIdeal("residue_mod: no embedding for " + str());
    if (m == 0) throw Error("residue_mod: m must be >= 1");
    if (!(val(x) >= 0))
        throw NegativeValuation("residue_mod: " + x.str() + " at " + str());
    if (x.is_zero()) return Int(0);

    const Int d = lcm(x.u().get_den(), x.v().get_den());
    const Int u = x.u().get_num() * (d / x.u().get_den());
    const Int v = x.v().get_num() * (d / x.v().get_den());
    const long e = vp_int(d, p_);
    const Int pe = pow_int(p_, static_cast<unsigned>(e));
    const Int dprime = d / pe;

    Int t = integral_residue(m + static_cast<unsigned>(e), u, v);
    if (t % pe != 0) throw Error("residue_mod: integrality bound violated");
    const Int mod = pow_int(p_, m);
    return mod_pos((t / pe) * invert_mod(mod_pos(dprime, mod), mod), mod);
}

std::string PrimeIdeal::str() const {
    if (kind_ != Kind::Split) return "(" + p_.get_str() + ")";
    return "(" + p_.get_str() + ", a - " + r0_.get_str() + ")";
}

} // namespace smf

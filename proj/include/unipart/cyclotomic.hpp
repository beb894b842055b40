#pragma once

#include "unipart/errors.hpp"
#include "unipart/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace unipart {

// Integer polynomial, coefficients in ascending degree order, no trailing
// zeros (the zero polynomial is the empty vector).
using IntPoly = std::vector<Int>;

long euler_phi(long m);
long gcd_long(long a, long b);
long lcm_long(long a, long b);
bool is_prime_long(long p);

// Conductor guard: operations that would create a field Q(zeta_m) with
// m above the cap throw errc::conductor_overflow. Process-wide, settable
// once per run from the CLI.
long conductor_cap();
void set_conductor_cap(long cap);
inline constexpr long kDefaultConductorCap = 1 << 16;

// The m-th cyclotomic polynomial Phi_m, computed by exact division of
// x^m - 1 by Phi_d over the proper divisors d of m. Results are cached.
IntPoly cyclotomic_polynomial(long m);

// An element of the cyclotomic field Q(zeta_m), stored as the unique
// remainder mod Phi_m in the power basis 1, zeta, ..., zeta^(phi(m)-1).
// Equality is coefficient equality at a shared conductor. Values are
// immutable after construction and safe to share across threads.
class CycNumber {
public:
    static CycNumber zero(long m);
    static CycNumber one(long m);
    static CycNumber from_rational(const Rational& q, long m);
    static CycNumber from_int(long v, long m) { return from_rational(Rational(v), m); }
    // zeta_m^k, any integer k (reduced mod m).
    static CycNumber root_of_unity(long m, long k);
    // From raw power-basis coefficients of any length (reduced mod Phi_m).
    static CycNumber from_coeffs(long m, std::vector<Rational> coeffs);

    long conductor() const { return m_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    // Requires is_rational().
    Rational rational_value() const;

    CycNumber operator+(const CycNumber& other) const;
    CycNumber operator-(const CycNumber& other) const;
    CycNumber operator*(const CycNumber& other) const;
    CycNumber operator-() const;
    CycNumber inv() const;           // errc::division_by_zero on zero
    CycNumber conj() const;          // zeta_m -> zeta_m^(m-1)
    CycNumber pow(long e) const;     // negative e via inv()
    CycNumber embedded(long m2) const; // errc::not_a_divisor unless m | m2

    bool operator==(const CycNumber& other) const;
    bool operator!=(const CycNumber& other) const { return !(*this == other); }

    // Total order used only for canonical, deterministic arrangements
    // (dedup keys, class ordering); compares conductor then coefficients.
    int cmp(const CycNumber& other) const;
    bool operator<(const CycNumber& other) const { return cmp(other) < 0; }

    // Multiplicative order if this is a root of unity, nullopt otherwise.
    // Roots of unity in Q(zeta_m) all have order dividing lcm(2, m).
    std::optional<long> order_as_root_of_unity() const;

    // Compact exact rendering, e.g. "1/2 + (-1/3)*z8^2".
    std::string to_string() const;
    // Canonical serialization usable as a map key.
    std::string key() const;

private:
    CycNumber(long m, std::vector<Rational> c) : m_(m), c_(std::move(c)) {}

    long m_;
    std::vector<Rational> c_;
};

inline CycNumber operator*(const Rational& q, const CycNumber& a) {
    return CycNumber::from_rational(q, a.conductor()) * a;
}

} // namespace unipart

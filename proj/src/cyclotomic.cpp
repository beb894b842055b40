#include "unipart/cyclotomic.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <utility>

namespace unipart {

long gcd_long(long a, long b) {
    return std::gcd(a, b);
}

long lcm_long(long a, long b) {
    if (a == 0 || b == 0) return 0;
    return a / std::gcd(a, b) * b;
}

long euler_phi(long m) {
    long result = m;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

bool is_prime_long(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace {

std::atomic<long> g_conductor_cap{kDefaultConductorCap};

std::mutex& phi_mutex() {
    static std::mutex mu;
    return mu;
}

std::map<long, IntPoly>& phi_cache() {
    static std::map<long, IntPoly> cache;
    return cache;
}

// Quotient of num by a monic divisor; num must be an exact multiple.
IntPoly divide_exact_monic(IntPoly num, const IntPoly& den) {
    const long dd = static_cast<long>(den.size()) - 1;
    const long dn = static_cast<long>(num.size()) - 1;
    IntPoly quot(dn - dd + 1);
    for (long i = dn - dd; i >= 0; --i) {
        Int c = num[i + dd];
        quot[i] = c;
        if (c != 0)
            for (long j = 0; j <= dd; ++j) num[i + j] -= c * den[j];
    }
    return quot;
}

// Remainder of a rational polynomial mod a monic integer polynomial.
std::vector<Rational> reduce_mod(std::vector<Rational> c, const IntPoly& mod) {
    const long deg = static_cast<long>(mod.size()) - 1;
    for (long i = static_cast<long>(c.size()) - 1; i >= deg; --i) {
        if (c[i] != 0) {
            const Rational lead = c[i];
            for (long j = 0; j < deg; ++j) c[i - deg + j] -= lead * Rational(mod[j]);
        }
    }
    c.resize(deg);
    return c;
}

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qmul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

QPoly qsub(QPoly a, const QPoly& b) {
    if (b.size() > a.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

// a = q*b + r with deg r < deg b; b nonzero.
std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b) {
    QPoly q;
    const long db = static_cast<long>(b.size()) - 1;
    const Rational inv_lead = 1 / b.back();
    while (static_cast<long>(a.size()) - 1 >= db && !a.empty()) {
        const long shift = static_cast<long>(a.size()) - 1 - db;
        const Rational coef = a.back() * inv_lead;
        if (static_cast<long>(q.size()) < shift + 1) q.resize(shift + 1);
        q[shift] = coef;
        for (long j = 0; j <= db; ++j) a[shift + j] -= coef * b[j];
        trim(a);
    }
    trim(q);
    return {std::move(q), std::move(a)};
}

std::vector<long> divisors_ascending(long m) {
    std::vector<long> divs;
    for (long d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            divs.push_back(d);
            if (d != m / d) divs.push_back(m / d);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

void check_conductor(long m) {
    if (m < 1) fail(errc::bad_input, "conductor must be positive, got " + std::to_string(m));
    if (m > conductor_cap())
        fail(errc::conductor_overflow, "conductor " + std::to_string(m) + " exceeds cap " +
                                           std::to_string(conductor_cap()));
}

} // namespace

long conductor_cap() { return g_conductor_cap.load(); }

void set_conductor_cap(long cap) {
    if (cap < 1) fail(errc::bad_input, "conductor cap must be positive");
    g_conductor_cap.store(cap);
}

IntPoly cyclotomic_polynomial(long m) {
    if (m < 1) fail(errc::bad_input, "conductor must be positive, got " + std::to_string(m));
    std::lock_guard<std::mutex> lock(phi_mutex());
    auto& cache = phi_cache();
    if (auto it = cache.find(m); it != cache.end()) return it->second;
    // Phi_d = (x^d - 1) / prod of Phi_e over proper divisors e of d; filling
    // the cache bottom-up over the divisors of m keeps this loop-free.
    for (long d : divisors_ascending(m)) {
        if (cache.count(d)) continue;
        IntPoly poly(d + 1);
        poly[0] = -1;
        poly[d] = 1;
        for (long e : divisors_ascending(d))
            if (e != d) poly = divide_exact_monic(std::move(poly), cache.at(e));
        cache.emplace(d, std::move(poly));
    }
    return cache.at(m);
}

CycNumber CycNumber::zero(long m) {
    check_conductor(m);
    return CycNumber(m, std::vector<Rational>(euler_phi(m)));
}

CycNumber CycNumber::one(long m) {
    return from_rational(Rational(1), m);
}

CycNumber CycNumber::from_rational(const Rational& q, long m) {
    check_conductor(m);
    std::vector<Rational> c(euler_phi(m));
    c[0] = q;
    if (c[0].get_den() == 0) fail(errc::division_by_zero, "rational with zero denominator");
    c[0].canonicalize(); // raw mpq_class(a, b) inputs arrive unreduced
    return CycNumber(m, std::move(c));
}

CycNumber CycNumber::root_of_unity(long m, long k) {
    check_conductor(m);
    k %= m;
    if (k < 0) k += m;
    std::vector<Rational> c(k + 1);
    c[k] = 1;
    return from_coeffs(m, std::move(c));
}

CycNumber CycNumber::from_coeffs(long m, std::vector<Rational> coeffs) {
    check_conductor(m);
    for (auto& q : coeffs) {
        if (q.get_den() == 0) fail(errc::division_by_zero, "rational with zero denominator");
        q.canonicalize();
    }
    const IntPoly mod = cyclotomic_polynomial(m);
    auto reduced = reduce_mod(std::move(coeffs), mod);
    reduced.resize(euler_phi(m));
    return CycNumber(m, std::move(reduced));
}

bool CycNumber::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

bool CycNumber::is_rational() const {
    for (std::size_t k = 1; k < c_.size(); ++k)
        if (c_[k] != 0) return false;
    return true;
}

Rational CycNumber::rational_value() const {
    if (!is_rational()) fail(errc::bad_input, "value is not rational: " + to_string());
    return c_[0];
}

namespace {
void require_same_conductor(const CycNumber& a, const CycNumber& b) {
    if (a.conductor() != b.conductor())
        fail(errc::conductor_mismatch, "conductors " + std::to_string(a.conductor()) + " and " +
                                           std::to_string(b.conductor()) +
                                           " differ; embed explicitly first");
}
} // namespace

CycNumber CycNumber::operator+(const CycNumber& other) const {
    require_same_conductor(*this, other);
    std::vector<Rational> c(c_);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] += other.c_[k];
    return CycNumber(m_, std::move(c));
}

CycNumber CycNumber::operator-(const CycNumber& other) const {
    require_same_conductor(*this, other);
    std::vector<Rational> c(c_);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] -= other.c_[k];
    return CycNumber(m_, std::move(c));
}

CycNumber CycNumber::operator-() const {
    std::vector<Rational> c(c_);
    for (auto& q : c) q = -q;
    return CycNumber(m_, std::move(c));
}

CycNumber CycNumber::operator*(const CycNumber& other) const {
    require_same_conductor(*this, other);
    if (c_.empty()) return *this;
    std::vector<Rational> prod(2 * c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < other.c_.size(); ++j) {
            if (other.c_[j] == 0) continue;
            prod[i + j] += c_[i] * other.c_[j];
        }
    }
    auto reduced = reduce_mod(std::move(prod), cyclotomic_polynomial(m_));
    reduced.resize(c_.size());
    return CycNumber(m_, std::move(reduced));
}

CycNumber CycNumber::inv() const {
    if (is_zero()) fail(errc::division_by_zero, "inverse of zero in Q(zeta_" + std::to_string(m_) + ")");
    // Extended Euclid against Phi_m: since Phi_m is irreducible and this is
    // nonzero of smaller degree, the gcd is a nonzero constant.
    const IntPoly phi = cyclotomic_polynomial(m_);
    QPoly r0(phi.begin(), phi.end());
    QPoly r1(c_);
    trim(r1);
    QPoly t0, t1{Rational(1)};
    while (r1.size() > 1) {
        auto [q, r2] = qdivmod(r0, r1);
        QPoly t2 = qsub(std::move(t0), qmul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const Rational unit = r1.at(0);
    for (auto& q : t1) q /= unit;
    t1.resize(c_.size());
    return CycNumber(m_, std::move(t1));
}

CycNumber CycNumber::conj() const {
    // zeta -> zeta^(m-1) = complex conjugation in every complex embedding.
    std::vector<Rational> c(m_);
    for (std::size_t k = 0; k < c_.size(); ++k)
        c[(k * (m_ - 1)) % m_] += c_[k];
    return from_coeffs(m_, std::move(c));
}

CycNumber CycNumber::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    CycNumber acc = one(m_);
    CycNumber base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

CycNumber CycNumber::embedded(long m2) const {
    if (m2 == m_) return *this;
    if (m2 % m_ != 0)
        fail(errc::not_a_divisor, std::to_string(m_) + " does not divide " + std::to_string(m2));
    check_conductor(m2);
    const long scale = m2 / m_;
    std::vector<Rational> c(static_cast<std::size_t>(c_.size() - 1) * scale + 1);
    for (std::size_t k = 0; k < c_.size(); ++k) c[k * scale] = c_[k];
    return from_coeffs(m2, std::move(c));
}

bool CycNumber::operator==(const CycNumber& other) const {
    require_same_conductor(*this, other);
    return c_ == other.c_;
}

int CycNumber::cmp(const CycNumber& other) const {
    if (m_ != other.m_) return m_ < other.m_ ? -1 : 1;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        const int c = ::cmp(c_[k], other.c_[k]);
        if (c != 0) return c;
    }
    return 0;
}

std::optional<long> CycNumber::order_as_root_of_unity() const {
    // Z[zeta_m] is the full ring of integers, so integrality is coefficient
    // integrality; together with unit modulus in every embedding (via
    // a * conj(a) == 1), Kronecker's theorem makes a a root of unity.
    for (const auto& q : c_)
        if (q.get_den() != 1) return std::nullopt;
    if ((*this) * conj() != one(m_)) return std::nullopt;
    // Torsion units of Q(zeta_m) have order dividing lcm(2, m).
    long ord = lcm_long(2, m_);
    for (long p = 2; p <= ord; ++p) {
        if (!is_prime_long(p)) continue;
        while (ord % p == 0 && pow(ord / p) == one(m_)) ord /= p;
    }
    if (pow(ord) != one(m_)) return std::nullopt;
    return ord;
}

std::string CycNumber::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        if (!first) out << " + ";
        first = false;
        if (k == 0) {
            out << format_rational(c_[k]);
            continue;
        }
        if (c_[k] == 1) {
        } else if (c_[k] < 0) {
            out << "(" << format_rational(c_[k]) << ")*";
        } else {
            out << format_rational(c_[k]) << "*";
        }
        out << "z" << m_;
        if (k > 1) out << "^" << k;
    }
    if (first) out << "0";
    return out.str();
}

std::string CycNumber::key() const {
    std::ostringstream out;
    out << m_ << ":";
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (k) out << ",";
        out << format_rational(c_[k]);
    }
    return out.str();
}

} // namespace unipart

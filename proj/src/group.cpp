#include "unipart/group.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace unipart {

FiniteMatrixGroup::FiniteMatrixGroup(long n, long m, std::vector<CMatrix> elements,
                                     std::vector<CMatrix> generators)
    : n_(n), m_(m), elements_(std::move(elements)), generators_(std::move(generators)) {
    std::sort(elements_.begin(), elements_.end(),
              [](const CMatrix& a, const CMatrix& b) { return a.cmp(b) < 0; });
    for (long i = 0; i < order(); ++i) index_[elements_[i].key()] = i;
    identity_ = index_of(CMatrix::identity(n_, m_));
    exponent_ = 1;
    for (long i = 0; i < order(); ++i) exponent_ = lcm_long(exponent_, element_order(i));
}

long FiniteMatrixGroup::index_of(const CMatrix& g) const {
    auto it = index_.find(g.key());
    if (it == index_.end()) fail(errc::bad_input, "matrix is not an element of the group");
    return it->second;
}

bool FiniteMatrixGroup::contains(const CMatrix& g) const {
    return index_.count(g.key()) != 0;
}

long FiniteMatrixGroup::multiply(long i, long j) const {
    return index_of(elements_[i] * elements_[j]);
}

long FiniteMatrixGroup::inverse(long i) const {
    for (long j = 0; j < order(); ++j)
        if (multiply(i, j) == identity_) return j;
    fail(errc::bad_input, "closure violation: element without inverse");
}

long FiniteMatrixGroup::element_order(long i) const {
    long j = i, ord = 1;
    while (j != identity_) {
        j = multiply(j, i);
        ++ord;
    }
    return ord;
}

bool FiniteMatrixGroup::is_abelian() const {
    for (const auto& g : generators_)
        for (const auto& h : generators_)
            if (g * h != h * g) return false;
    return true;
}

FiniteMatrixGroup close(std::vector<CMatrix> generators, long cap) {
    if (generators.empty()) fail(errc::bad_input, "no generators");
    if (cap < 1) fail(errc::bad_input, "closure cap must be positive");
    const long n = generators[0].rows();
    const long m = generators[0].conductor();
    for (const auto& g : generators) {
        if (!g.is_square() || g.rows() != n)
            fail(errc::dimension_mismatch, "generators have mixed dimensions");
        if (g.conductor() != m)
            fail(errc::conductor_mismatch, "generators have mixed conductors");
        if (!g.is_unitary()) fail(errc::not_unitary, "generator is not unitary");
    }
    std::vector<CMatrix> elems{CMatrix::identity(n, m)};
    std::set<std::string> seen{elems[0].key()};
    std::deque<long> frontier{0};
    while (!frontier.empty()) {
        const long i = frontier.front();
        frontier.pop_front();
        for (const auto& g : generators) {
            CMatrix y = elems[i] * g;
            if (!seen.insert(y.key()).second) continue;
            if (static_cast<long>(elems.size()) + 1 > cap)
                fail(errc::cap_exceeded, "closure exceeds cap " + std::to_string(cap));
            elems.push_back(std::move(y));
            frontier.push_back(static_cast<long>(elems.size()) - 1);
        }
    }
    return FiniteMatrixGroup(n, m, std::move(elems), std::move(generators));
}

namespace {

FiniteMatrixGroup subgroup_from(const std::vector<CMatrix>& elements, long parent_order) {
    // The callers pass subsets already closed under the group law, so the
    // closure is a no-op; it re-validates and sorts.
    return close(elements, parent_order);
}

} // namespace

FiniteMatrixGroup center(const FiniteMatrixGroup& g) {
    std::vector<CMatrix> central;
    for (const auto& x : g.elements()) {
        bool commutes = true;
        for (const auto& h : g.generators()) {
            if (x * h != h * x) {
                commutes = false;
                break;
            }
        }
        if (commutes) central.push_back(x);
    }
    return subgroup_from(central, g.order());
}

FiniteMatrixGroup scalar_subgroup(const FiniteMatrixGroup& g) {
    std::vector<CMatrix> scalars;
    for (const auto& x : g.elements())
        if (x.is_scalar()) scalars.push_back(x);
    return subgroup_from(scalars, g.order());
}

std::vector<CMatrix> elements_of_order_p(const FiniteMatrixGroup& g, long p) {
    std::vector<CMatrix> out;
    for (long i = 0; i < g.order(); ++i)
        if (g.element_order(i) == p) out.push_back(g.element(i));
    return out;
}

namespace {
void require_prime(long p) {
    if (!is_prime_long(p)) fail(errc::bad_input, std::to_string(p) + " is not prime");
}
} // namespace

bool is_p_group(const FiniteMatrixGroup& g, long p) {
    require_prime(p);
    long k = g.order();
    while (k % p == 0) k /= p;
    return k == 1;
}

bool is_elementary_abelian(const FiniteMatrixGroup& g, long p) {
    require_prime(p);
    if (!g.is_abelian()) return false;
    for (long i = 0; i < g.order(); ++i) {
        const long ord = g.element_order(i);
        if (ord != 1 && ord != p) return false;
    }
    return true;
}

FiniteMatrixGroup power_commutator_subgroup(const FiniteMatrixGroup& g, long p) {
    if (!is_p_group(g, p))
        fail(errc::not_a_p_group, "group of order " + std::to_string(g.order()) +
                                      " is not a " + std::to_string(p) + "-group");
    std::set<std::string> seen;
    std::vector<CMatrix> gens;
    auto add = [&](long idx) {
        if (seen.insert(g.element(idx).key()).second) gens.push_back(g.element(idx));
    };
    add(g.identity_index());
    for (long i = 0; i < g.order(); ++i) {
        long pw = g.identity_index();
        for (long t = 0; t < p; ++t) pw = g.multiply(pw, i);
        add(pw);
    }
    for (long i = 0; i < g.order(); ++i)
        for (long j = 0; j < g.order(); ++j)
            add(g.multiply(g.multiply(g.inverse(i), g.inverse(j)), g.multiply(i, j)));
    return close(gens, g.order());
}

AbstractQuotient::AbstractQuotient(std::vector<std::vector<long>> table,
                                   std::vector<long> projection, std::vector<CMatrix> section,
                                   long identity)
    : table_(std::move(table)), projection_(std::move(projection)), section_(std::move(section)),
      identity_(identity) {
    const long k = order();
    for (long a = 0; a < k; ++a) {
        if (table_[a][identity_] != a || table_[identity_][a] != a)
            fail(errc::bad_input, "quotient table has no identity");
        bool has_inverse = false;
        for (long b = 0; b < k; ++b) has_inverse |= table_[a][b] == identity_;
        if (!has_inverse) fail(errc::bad_input, "quotient table misses an inverse");
    }
    if (k <= 128) {
        for (long a = 0; a < k; ++a)
            for (long b = 0; b < k; ++b)
                for (long c = 0; c < k; ++c)
                    if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                        fail(errc::bad_input, "quotient table is not associative");
    }
}

long AbstractQuotient::inverse(long a) const {
    for (long b = 0; b < order(); ++b)
        if (table_[a][b] == identity_) return b;
    fail(errc::bad_input, "no inverse in quotient table");
}

long AbstractQuotient::element_order(long a) const {
    long x = a, ord = 1;
    while (x != identity_) {
        x = table_[x][a];
        ++ord;
    }
    return ord;
}

bool AbstractQuotient::is_abelian() const {
    for (long a = 0; a < order(); ++a)
        for (long b = a + 1; b < order(); ++b)
            if (table_[a][b] != table_[b][a]) return false;
    return true;
}

bool AbstractQuotient::is_p_group(long p) const {
    require_prime(p);
    long k = order();
    while (k % p == 0) k /= p;
    return k == 1;
}

bool AbstractQuotient::is_elementary_abelian(long p) const {
    require_prime(p);
    if (!is_abelian()) return false;
    for (long a = 0; a < order(); ++a) {
        const long ord = element_order(a);
        if (ord != 1 && ord != p) return false;
    }
    return true;
}

std::vector<long> AbstractQuotient::center_indices() const {
    std::vector<long> out;
    for (long a = 0; a < order(); ++a) {
        bool central = true;
        for (long b = 0; b < order() && central; ++b) central = table_[a][b] == table_[b][a];
        if (central) out.push_back(a);
    }
    return out;
}

std::vector<long> AbstractQuotient::power_commutator_indices(long p) const {
    std::set<long> closure;
    std::deque<long> frontier;
    auto add = [&](long x) {
        if (closure.insert(x).second) frontier.push_back(x);
    };
    for (long a = 0; a < order(); ++a) {
        long pw = identity_;
        for (long t = 0; t < p; ++t) pw = table_[pw][a];
        add(pw);
        for (long b = 0; b < order(); ++b)
            add(table_[table_[inverse(a)][inverse(b)]][table_[a][b]]);
    }
    // Close under the group law (generated subgroup, not just the word set).
    std::vector<long> gens(closure.begin(), closure.end());
    while (!frontier.empty()) {
        const long x = frontier.front();
        frontier.pop_front();
        for (long gidx : gens) add(table_[x][gidx]);
    }
    return {closure.begin(), closure.end()};
}

AbstractQuotient quotient_by(const FiniteMatrixGroup& g, const FiniteMatrixGroup& n) {
    std::vector<long> n_indices;
    for (const auto& x : n.elements()) {
        if (!g.contains(x)) fail(errc::bad_input, "subgroup element outside the group");
        n_indices.push_back(g.index_of(x));
    }
    std::set<long> n_set(n_indices.begin(), n_indices.end());
    for (long i = 0; i < g.order(); ++i)
        for (long x : n_indices)
            if (!n_set.count(g.multiply(g.multiply(i, x), g.inverse(i))))
                fail(errc::bad_input, "subgroup is not normal");

    // Scanning elements in canonical order makes each unassigned index the
    // minimal representative of its coset, so coset ids follow canonical order.
    std::vector<long> projection(g.order(), -1);
    std::vector<long> reps;
    for (long i = 0; i < g.order(); ++i) {
        if (projection[i] != -1) continue;
        const long coset = static_cast<long>(reps.size());
        for (long x : n_indices) projection[g.multiply(i, x)] = coset;
        reps.push_back(i);
    }
    const long k = static_cast<long>(reps.size());
    std::vector<std::vector<long>> table(k, std::vector<long>(k));
    for (long a = 0; a < k; ++a)
        for (long b = 0; b < k; ++b) table[a][b] = projection[g.multiply(reps[a], reps[b])];
    std::vector<CMatrix> section;
    section.reserve(k);
    for (long r : reps) section.push_back(g.element(r));
    return AbstractQuotient(std::move(table), std::move(projection), std::move(section),
                            projection[g.identity_index()]);
}

AbstractQuotient projective_image(const FiniteMatrixGroup& g) {
    return quotient_by(g, scalar_subgroup(g));
}

AbstractQuotient frattini_quotient(const FiniteMatrixGroup& g, long p) {
    return quotient_by(g, power_commutator_subgroup(g, p));
}

AbstractQuotient trivial_quotient(const FiniteMatrixGroup& g) {
    return quotient_by(g, close({CMatrix::identity(g.n(), g.conductor())}, 1));
}

bool is_projective_elementary_abelian(const FiniteMatrixGroup& g, long p) {
    return projective_image(g).is_elementary_abelian(p);
}

long central_order_p_in_frattini_kernel(const AbstractQuotient& q, long p) {
    if (!q.is_p_group(p))
        fail(errc::not_a_p_group, "quotient is not a " + std::to_string(p) + "-group");
    if (q.is_trivial()) fail(errc::is_trivial, "trivial quotient has no order-p element");
    if (q.is_elementary_abelian(p))
        fail(errc::is_elementary_abelian,
             "elementary abelian quotient: the kernel of Q -> Q/p is trivial");
    const std::vector<long> kernel = q.power_commutator_indices(p);
    const std::vector<long> center = q.center_indices();
    const std::set<long> center_set(center.begin(), center.end());
    for (long x : kernel)
        if (center_set.count(x) && q.element_order(x) == p) return x;
    fail(errc::bad_input, "internal: kernel misses the center, contradicting normality");
}

CMatrix lift_order_p(const CMatrix& a, long p) {
    require_prime(p);
    if (!a.is_square()) fail(errc::non_square, "lift of non-square matrix");
    const CMatrix ap = a.pow(p);
    if (!ap.is_scalar())
        fail(errc::not_projective_order_p, "p-th power is not scalar");
    const CycNumber c = *ap.scalar_value();
    const auto ord = c.order_as_root_of_unity();
    if (!ord) fail(errc::not_projective_order_p, "p-th power scalar is not a root of unity");
    const long e = *ord;
    if (e == 1) return a;
    // c = zeta_e^j for a unique j coprime to e; alpha = zeta_{pe}^j.
    const long shared = lcm_long(a.conductor(), e);
    const CycNumber c_embedded = c.embedded(shared);
    long j = -1;
    for (long t = 1; t < e && j < 0; ++t)
        if (gcd_long(t, e) == 1 && c_embedded == CycNumber::root_of_unity(shared, (shared / e) * t))
            j = t;
    if (j < 0) fail(errc::bad_input, "internal: discrete log of a root of unity failed");
    const long big = lcm_long(a.conductor(), p * e);
    const CycNumber alpha = CycNumber::root_of_unity(big, (big / (p * e)) * j);
    CMatrix b = a.embedded(big).scaled(alpha.inv());
    if (!b.pow(p).is_identity())
        fail(errc::bad_input, "internal: rescaled lift is not of order p");
    return b;
}

} // namespace unipart

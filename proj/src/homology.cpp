#include "unipart/homology.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

namespace unipart {

IntMat identity_int_mat(long n) {
    IntMat m(n, std::vector<Int>(n, 0));
    for (long i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    long r = static_cast<long>(a.size());
    long k = r ? static_cast<long>(a[0].size()) : 0;
    long c = b.empty() ? 0 : static_cast<long>(b[0].size());
    if (static_cast<long>(b.size()) != k) fail(errc::dimension_mismatch, "integer matrix product shape");
    IntMat out(r, std::vector<Int>(c, 0));
    for (long i = 0; i < r; ++i)
        for (long t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (long j = 0; j < c; ++j) out[i][j] += a[i][t] * b[t][j];
        }
    return out;
}

Int determinant(IntMat m) {
    long n = static_cast<long>(m.size());
    for (const auto& row : m)
        if (static_cast<long>(row.size()) != n) fail(errc::non_square, "determinant of a non-square matrix");
    if (n == 0) return 1;
    int sign = 1;
    Int prev = 1;
    for (long k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            long r = -1;
            for (long i = k + 1; i < n; ++i)
                if (m[i][k] != 0) { r = i; break; }
            if (r < 0) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (long i = k + 1; i < n; ++i)
            for (long j = k + 1; j < n; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = t;
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

namespace {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

void row_op(IntMat& m, long dst, long src, const Int& f) {
    long c = static_cast<long>(m[dst].size());
    for (long j = 0; j < c; ++j) m[dst][j] += f * m[src][j];
}

void col_op(IntMat& m, long dst, long src, const Int& f) {
    for (auto& row : m) row[dst] += f * row[src];
}

void swap_cols(IntMat& m, long a, long b) {
    for (auto& row : m) std::swap(row[a], row[b]);
}

} // namespace

SmithDecomposition smith_normal_form(const IntMat& m) {
    long r = static_cast<long>(m.size());
    long c = r ? static_cast<long>(m[0].size()) : 0;
    for (const auto& row : m)
        if (static_cast<long>(row.size()) != c) fail(errc::bad_input, "ragged matrix");
    SmithDecomposition d{identity_int_mat(r), m, identity_int_mat(c)};
    IntMat& s = d.s;
    long t = 0;
    while (t < r && t < c) {
        // Pull the smallest nonzero of the live submatrix to (t, t).
        long pr = -1, pc = -1;
        for (long i = t; i < r; ++i)
            for (long j = t; j < c; ++j) {
                if (s[i][j] == 0) continue;
                if (pr < 0 || abs_int(s[i][j]) < abs_int(s[pr][pc])) { pr = i; pc = j; }
            }
        if (pr < 0) break;
        if (pr != t) { std::swap(s[t], s[pr]); std::swap(d.u[t], d.u[pr]); }
        if (pc != t) { swap_cols(s, t, pc); swap_cols(d.v, t, pc); }

        bool settled = false;
        while (!settled) {
            bool restart = false;
            for (long i = t + 1; i < r && !restart; ++i) {
                if (s[i][t] == 0) continue;
                Int q = s[i][t] / s[t][t];
                row_op(s, i, t, -q);
                row_op(d.u, i, t, -q);
                if (s[i][t] != 0) {
                    std::swap(s[t], s[i]);
                    std::swap(d.u[t], d.u[i]);
                    restart = true;
                }
            }
            if (restart) continue;
            for (long j = t + 1; j < c && !restart; ++j) {
                if (s[t][j] == 0) continue;
                Int q = s[t][j] / s[t][t];
                col_op(s, j, t, -q);
                col_op(d.v, j, t, -q);
                if (s[t][j] != 0) {
                    swap_cols(s, t, j);
                    swap_cols(d.v, t, j);
                    restart = true;
                }
            }
            if (restart) continue;
            // Divisibility chain: the pivot must divide everything that remains.
            settled = true;
            for (long i = t + 1; i < r && settled; ++i)
                for (long j = t + 1; j < c; ++j)
                    if (s[i][j] % s[t][t] != 0) {
                        row_op(s, t, i, 1);
                        row_op(d.u, t, i, 1);
                        settled = false;
                        break;
                    }
        }
        if (s[t][t] < 0) {
            for (long j = 0; j < c; ++j) s[t][j] = -s[t][j];
            for (long j = 0; j < r; ++j) d.u[t][j] = -d.u[t][j];
        }
        ++t;
    }
    return d;
}

SparseIntMat::SparseIntMat(long rows, long cols)
    : rows_(rows), cols_(cols), row_(rows), col_rows_(cols) {}

void SparseIntMat::add(long r, long c, const Int& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) fail(errc::bad_input, "sparse entry out of range");
    if (v == 0) return;
    Int& slot = row_[r][c];
    slot += v;
    if (slot == 0) {
        row_[r].erase(c);
        col_rows_[c].erase(r);
    } else {
        col_rows_[c][r] = 1;
    }
}

long SparseIntMat::nonzeros() const {
    long n = 0;
    for (const auto& rw : row_) n += static_cast<long>(rw.size());
    return n;
}

IntMat SparseIntMat::to_dense() const {
    IntMat m(rows_, std::vector<Int>(cols_, 0));
    for (long i = 0; i < rows_; ++i)
        for (const auto& [j, v] : row_[i]) m[i][j] = v;
    return m;
}

std::vector<Int> SparseIntMat::elementary_divisors() && {
    std::vector<Int> divisors;
    auto axpy_row = [&](long dst, long src, const Int& f) {
        for (const auto& [j, v] : row_[src]) {
            Int& slot = row_[dst][j];
            slot += f * v;
            if (slot == 0) {
                row_[dst].erase(j);
                col_rows_[j].erase(dst);
            } else {
                col_rows_[j][dst] = 1;
            }
        }
    };
    while (true) {
        // Pivot hunt: prefer units, break ties by Markowitz fill estimate.
        long pr = -1, pc = -1;
        Int pv = 0;
        long best_fill = 0;
        bool best_unit = false;
        for (long i = 0; i < rows_; ++i)
            for (const auto& [j, v] : row_[i]) {
                bool unit = (v == 1 || v == -1);
                long fill = (static_cast<long>(row_[i].size()) - 1) *
                            (static_cast<long>(col_rows_[j].size()) - 1);
                bool better;
                if (pr < 0) better = true;
                else if (unit != best_unit) better = unit;
                else if (unit) better = fill < best_fill;
                else better = abs_int(v) < abs_int(pv) ||
                              (abs_int(v) == abs_int(pv) && fill < best_fill);
                if (better) { pr = i; pc = j; pv = v; best_fill = fill; best_unit = unit; }
            }
        if (pr < 0) break;

        bool settled = false;
        while (!settled) {
            bool restart = false;
            std::vector<long> col_snapshot;
            for (const auto& [i, tag] : col_rows_[pc]) { (void)tag; if (i != pr) col_snapshot.push_back(i); }
            for (long i : col_snapshot) {
                auto it = row_[i].find(pc);
                if (it == row_[i].end()) continue;
                Int q = it->second / pv;
                axpy_row(i, pr, -q);
                auto rem = row_[i].find(pc);
                if (rem != row_[i].end()) {
                    pr = i;
                    pv = rem->second;
                    restart = true;
                    break;
                }
            }
            if (restart) continue;
            // Column pc now holds only the pivot, so a column operation
            // touches row pr alone.
            settled = true;
            std::vector<std::pair<long, Int>> row_snapshot(row_[pr].begin(), row_[pr].end());
            for (const auto& [j, x] : row_snapshot) {
                if (j == pc) continue;
                Int q = x / pv;
                Int rem = x - q * pv;
                add(pr, j, -(q * pv));
                if (rem != 0) {
                    pc = j;
                    pv = rem;
                    settled = false;
                    break;
                }
            }
        }
        // Row pr is now {pc: pv} and column pc is clear elsewhere: drop both.
        row_[pr].clear();
        col_rows_[pc].clear();
        divisors.push_back(abs_int(pv));
    }
    // Restore the divisibility chain by pairwise gcd/lcm exchanges.
    std::sort(divisors.begin(), divisors.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < divisors.size(); ++i)
            for (size_t j = i + 1; j < divisors.size(); ++j)
                if (divisors[j] % divisors[i] != 0) {
                    Int g = gcd(divisors[i], divisors[j]);
                    Int l = divisors[i] / g * divisors[j];
                    divisors[i] = g;
                    divisors[j] = l;
                    changed = true;
                }
        if (changed) std::sort(divisors.begin(), divisors.end());
    }
    return divisors;
}

long ChainComplex::total_simplices() const {
    long n = 0;
    for (long d : dimensions) n += d;
    return n;
}

long ChainComplex::euler_characteristic_of_counts() const {
    long chi = 0;
    int sign = 1;
    for (long d : dimensions) {
        chi += sign * d;
        sign = -sign;
    }
    return chi;
}

bool boundaries_compose_to_zero(const ChainComplex& c) {
    for (size_t k = 0; k + 1 < c.boundaries.size(); ++k) {
        IntMat prod = mat_mul(c.boundaries[k].to_dense(), c.boundaries[k + 1].to_dense());
        for (const auto& row : prod)
            for (const auto& v : row)
                if (v != 0) return false;
    }
    return true;
}

namespace {

// Shared boundary-matrix builder: simplices[k] lists k-simplices as ordered
// vertex tuples whose faces (drop one position) are again listed tuples.
ChainComplex build_complex(const std::vector<std::vector<std::vector<long>>>& simplices) {
    ChainComplex c;
    long top = static_cast<long>(simplices.size()) - 1;
    while (top >= 0 && simplices[top].empty()) --top;
    if (top < 0) return c;
    std::vector<std::map<std::vector<long>, long>> index(top + 1);
    for (long k = 0; k <= top; ++k) {
        c.dimensions.push_back(static_cast<long>(simplices[k].size()));
        for (long i = 0; i < c.dimensions.back(); ++i) index[k][simplices[k][i]] = i;
    }
    for (long k = 1; k <= top; ++k) {
        SparseIntMat b(c.dimensions[k - 1], c.dimensions[k]);
        for (long j = 0; j < c.dimensions[k]; ++j) {
            const auto& s = simplices[k][j];
            int sign = 1;
            for (long drop = 0; drop <= k; ++drop) {
                std::vector<long> face;
                face.reserve(k);
                for (long t = 0; t <= k; ++t)
                    if (t != drop) face.push_back(s[t]);
                auto it = index[k - 1].find(face);
                if (it == index[k - 1].end()) fail(errc::bad_input, "missing face in complex");
                b.add(it->second, j, sign);
                sign = -sign;
            }
        }
        c.boundaries.push_back(std::move(b));
    }
    return c;
}

} // namespace

ChainComplex order_complex(const Poset& poset) {
    std::vector<std::vector<std::vector<long>>> simplices;
    std::vector<long> chain;
    auto record = [&]() {
        size_t deg = chain.size() - 1;
        if (simplices.size() <= deg) simplices.resize(deg + 1);
        simplices[deg].push_back(chain);
    };
    auto dfs = [&](auto&& self, long v) -> void {
        chain.push_back(v);
        record();
        for (long w : poset.less[v]) self(self, w);
        chain.pop_back();
    };
    for (long v = 0; v < poset.size; ++v) dfs(dfs, v);
    for (auto& level : simplices) std::sort(level.begin(), level.end());
    return build_complex(simplices);
}

ChainComplex complex_from_facets(long n_vertices, const std::vector<std::vector<long>>& facets) {
    std::vector<std::set<std::vector<long>>> collected;
    for (const auto& facet : facets) {
        std::vector<long> f = facet;
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            fail(errc::bad_input, "facet repeats a vertex");
        for (long v : f)
            if (v < 0 || v >= n_vertices) fail(errc::bad_input, "facet vertex out of range");
        size_t k = f.size();
        // All nonempty subsets, each kept ascending.
        for (unsigned long mask = 1; mask < (1ul << k); ++mask) {
            std::vector<long> sub;
            for (size_t t = 0; t < k; ++t)
                if (mask & (1ul << t)) sub.push_back(f[t]);
            size_t deg = sub.size() - 1;
            if (collected.size() <= deg) collected.resize(deg + 1);
            collected[deg].insert(std::move(sub));
        }
    }
    std::vector<std::vector<std::vector<long>>> simplices(collected.size());
    for (size_t k = 0; k < collected.size(); ++k)
        simplices[k].assign(collected[k].begin(), collected[k].end());
    return build_complex(simplices);
}

bool HomologyResult::is_z_acyclic() const {
    if (betti_minus_one != 0) return false;
    for (long b : betti)
        if (b != 0) return false;
    for (const auto& t : torsion)
        if (!t.empty()) return false;
    return true;
}

std::string HomologyResult::to_string() const {
    std::ostringstream out;
    bool first = true;
    auto emit = [&](long degree, long rank, const std::vector<Int>& tors) {
        if (rank == 0 && tors.empty()) return;
        if (!first) out << "; ";
        first = false;
        out << "H~" << degree << " = ";
        bool inner = false;
        if (rank > 0) {
            out << "Z";
            if (rank > 1) out << "^" << rank;
            inner = true;
        }
        for (const auto& t : tors) {
            if (inner) out << " + ";
            out << "Z/" << t.get_str();
            inner = true;
        }
    };
    emit(-1, betti_minus_one, {});
    for (size_t k = 0; k < betti.size(); ++k)
        emit(static_cast<long>(k), betti[k], k < torsion.size() ? torsion[k] : std::vector<Int>{});
    if (first) out << "0";
    return out.str();
}

HomologyResult homology(const ChainComplex& c) {
    HomologyResult h;
    if (c.empty()) {
        h.betti_minus_one = 1;
        return h;
    }
    long top = c.top_dimension();
    std::vector<long> rank(top + 2, 0);
    h.betti.assign(top + 1, 0);
    h.torsion.assign(top + 1, {});
    for (long k = 1; k <= top; ++k) {
        SparseIntMat copy = c.boundaries[k - 1];
        std::vector<Int> divs = std::move(copy).elementary_divisors();
        rank[k] = static_cast<long>(divs.size());
        for (const auto& d : divs)
            if (d > 1) h.torsion[k - 1].push_back(d);
    }
    h.betti[0] = c.dimensions[0] - 1 - rank[1];
    for (long k = 1; k <= top; ++k) h.betti[k] = c.dimensions[k] - rank[k] - rank[k + 1];
    return h;
}

} // namespace unipart

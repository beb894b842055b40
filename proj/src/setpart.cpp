#include "unipart/setpart.hpp"

#include "unipart/cyclotomic.hpp" // is_prime_long

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

namespace unipart {

Perm identity_perm(long n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm compose(const Perm& f, const Perm& g) {
    if (f.size() != g.size()) fail(errc::dimension_mismatch, "permutation sizes differ");
    Perm h(f.size());
    for (size_t i = 0; i < f.size(); ++i) h[i] = f[g[i]];
    return h;
}

Perm inverse(const Perm& f) {
    Perm h(f.size());
    for (size_t i = 0; i < f.size(); ++i) h[f[i]] = static_cast<int>(i);
    return h;
}

bool is_identity_perm(const Perm& f) {
    for (size_t i = 0; i < f.size(); ++i)
        if (f[i] != static_cast<int>(i)) return false;
    return true;
}

long perm_order(const Perm& f) {
    Perm g = f;
    long k = 1;
    while (!is_identity_perm(g)) {
        g = compose(g, f);
        ++k;
    }
    return k;
}

std::string perm_cycles(const Perm& f) {
    std::ostringstream out;
    std::vector<bool> seen(f.size(), false);
    bool any = false;
    for (size_t start = 0; start < f.size(); ++start) {
        if (seen[start] || f[start] == static_cast<int>(start)) continue;
        any = true;
        out << "(";
        size_t i = start;
        bool first = true;
        while (!seen[i]) {
            seen[i] = true;
            if (!first) out << " ";
            first = false;
            out << (i + 1);
            i = static_cast<size_t>(f[i]);
        }
        out << ")";
    }
    if (!any) return "()";
    return out.str();
}

std::vector<Perm> close_perms(const std::vector<Perm>& gens, long n) {
    for (const auto& g : gens) {
        if (static_cast<long>(g.size()) != n) fail(errc::dimension_mismatch, "generator size differs from n");
        Perm check = g;
        std::sort(check.begin(), check.end());
        if (check != identity_perm(n)) fail(errc::bad_input, "not a permutation");
    }
    std::set<Perm> seen;
    std::vector<Perm> order;
    std::vector<Perm> frontier;
    Perm id = identity_perm(n);
    seen.insert(id);
    order.push_back(id);
    frontier.push_back(id);
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const auto& h : frontier)
            for (const auto& g : gens) {
                Perm w = compose(g, h);
                if (seen.insert(w).second) {
                    order.push_back(w);
                    next.push_back(std::move(w));
                }
            }
        frontier = std::move(next);
    }
    std::sort(order.begin(), order.end());
    return order;
}

bool is_elementary_abelian_perm_group(const std::vector<Perm>& elements, long p) {
    for (const auto& a : elements) {
        if (!is_identity_perm(a) && perm_order(a) != p) return false;
        for (const auto& b : elements)
            if (compose(a, b) != compose(b, a)) return false;
    }
    return true;
}

SetPartition SetPartition::from_blocks(long n, std::vector<std::vector<int>> blocks) {
    if (n < 1) fail(errc::bad_input, "ground set must be nonempty");
    std::vector<bool> seen(n, false);
    long covered = 0;
    bool has_big_block = false;
    for (auto& b : blocks) {
        if (b.empty()) fail(errc::bad_input, "empty block");
        std::sort(b.begin(), b.end());
        for (int x : b) {
            if (x < 0 || x >= n) fail(errc::bad_input, "block point out of range");
            if (seen[x]) fail(errc::bad_input, "point in two blocks");
            seen[x] = true;
            ++covered;
        }
        if (b.size() >= 2) has_big_block = true;
    }
    if (covered != n) fail(errc::bad_input, "blocks do not cover the ground set");
    if (blocks.size() < 2) fail(errc::bad_input, "partition has a single block");
    if (!has_big_block) fail(errc::bad_input, "partition into singletons");
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    return SetPartition(n, std::move(blocks));
}

bool SetPartition::refines(const SetPartition& coarser) const {
    if (n_ != coarser.n_) fail(errc::dimension_mismatch, "partitions of different ground sets");
    std::vector<int> owner(n_, -1);
    for (size_t i = 0; i < coarser.blocks_.size(); ++i)
        for (int x : coarser.blocks_[i]) owner[x] = static_cast<int>(i);
    for (const auto& b : blocks_)
        for (size_t t = 1; t < b.size(); ++t)
            if (owner[b[t]] != owner[b[0]]) return false;
    return true;
}

SetPartition SetPartition::permuted(const Perm& g) const {
    if (static_cast<long>(g.size()) != n_) fail(errc::dimension_mismatch, "permutation size differs");
    std::vector<std::vector<int>> moved;
    moved.reserve(blocks_.size());
    for (const auto& b : blocks_) {
        std::vector<int> nb;
        nb.reserve(b.size());
        for (int x : b) nb.push_back(g[x]);
        moved.push_back(std::move(nb));
    }
    return from_blocks(n_, std::move(moved));
}

bool SetPartition::operator<(const SetPartition& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    if (blocks_.size() != o.blocks_.size()) return blocks_.size() < o.blocks_.size();
    return blocks_ < o.blocks_;
}

std::string SetPartition::to_string() const {
    std::ostringstream out;
    const char* point_sep = n_ > 9 ? "," : "";
    for (size_t i = 0; i < blocks_.size(); ++i) {
        if (i) out << "|";
        for (size_t t = 0; t < blocks_[i].size(); ++t) {
            if (t) out << point_sep;
            out << blocks_[i][t] + 1;
        }
    }
    return out.str();
}

PartitionPoset partition_poset(long n) {
    if (n < 2) fail(errc::bad_input, "partition poset needs n >= 2");
    PartitionPoset poset;
    poset.n = n;
    // Restricted growth strings enumerate each set partition once.
    std::vector<int> assign(n, 0);
    auto emit = [&]() {
        int nblocks = *std::max_element(assign.begin(), assign.end()) + 1;
        if (nblocks < 2 || nblocks >= n) return;
        std::vector<std::vector<int>> blocks(nblocks);
        for (long i = 0; i < n; ++i) blocks[assign[i]].push_back(static_cast<int>(i));
        poset.elements.push_back(SetPartition::from_blocks(n, std::move(blocks)));
    };
    auto rec = [&](auto&& self, long i, int used) -> void {
        if (i == n) {
            emit();
            return;
        }
        for (int b = 0; b <= used; ++b) {
            assign[i] = b;
            self(self, i + 1, b == used ? used + 1 : used);
        }
    };
    rec(rec, 1, 1); // point 0 always sits in block 0
    std::sort(poset.elements.begin(), poset.elements.end());
    long count = static_cast<long>(poset.elements.size());
    poset.less.assign(count, {});
    for (long i = 0; i < count; ++i)
        for (long j = 0; j < count; ++j) {
            if (i == j) continue;
            if (poset.elements[i].block_count() <= poset.elements[j].block_count()) continue;
            if (poset.elements[i].refines(poset.elements[j])) poset.less[i].push_back(j);
        }
    return poset;
}

Poset PartitionPoset::as_poset() const {
    return Poset{static_cast<long>(elements.size()), less};
}

std::vector<long> PartitionPoset::fixed_indices(const std::vector<Perm>& perms) const {
    std::vector<long> fixed;
    for (long i = 0; i < static_cast<long>(elements.size()); ++i) {
        bool ok = true;
        for (const auto& g : perms)
            if (elements[i].permuted(g) != elements[i]) {
                ok = false;
                break;
            }
        if (ok) fixed.push_back(i);
    }
    return fixed;
}

Poset PartitionPoset::induced(const std::vector<long>& indices) const {
    std::map<long, long> pos;
    for (size_t a = 0; a < indices.size(); ++a) pos[indices[a]] = static_cast<long>(a);
    Poset sub;
    sub.size = static_cast<long>(indices.size());
    sub.less.assign(sub.size, {});
    for (size_t a = 0; a < indices.size(); ++a)
        for (long j : less[indices[a]]) {
            auto it = pos.find(j);
            if (it != pos.end()) sub.less[a].push_back(it->second);
        }
    return sub;
}

namespace {

// Conjugacy-canonical form of a subgroup given by its element set: the least
// of the sorted conjugated element lists over the whole symmetric group.
std::vector<Perm> conjugacy_key(const std::vector<Perm>& elements,
                                const std::vector<Perm>& sym) {
    std::vector<Perm> best;
    for (const auto& s : sym) {
        Perm si = inverse(s);
        std::vector<Perm> conj;
        conj.reserve(elements.size());
        for (const auto& g : elements) conj.push_back(compose(s, compose(g, si)));
        std::sort(conj.begin(), conj.end());
        if (best.empty() || conj < best) best = std::move(conj);
    }
    return best;
}

struct SubgroupClass {
    std::vector<Perm> elements; // sorted
    std::vector<Perm> generators;
};

} // namespace

std::vector<SweepRow> sweep(long n, long p, long bound) {
    if (n < 2) fail(errc::bad_input, "sweep needs n >= 2");
    if (p < 2 || !is_prime_long(p)) fail(errc::bad_input, "sweep needs a prime p");
    if (n > bound) fail(errc::bound_exceeded, "sweep ground set exceeds the configured bound");

    std::vector<Perm> sym;
    Perm base = identity_perm(n);
    do sym.push_back(base);
    while (std::next_permutation(base.begin(), base.end()));

    std::vector<Perm> candidates;
    for (const auto& g : sym) {
        if (is_identity_perm(g)) continue;
        long o = perm_order(g);
        while (o % p == 0) o /= p;
        if (o == 1) candidates.push_back(g);
    }

    std::vector<SubgroupClass> classes;
    std::set<std::vector<Perm>> seen;
    std::vector<SubgroupClass> level;
    SubgroupClass trivial{{identity_perm(n)}, {}};
    seen.insert(conjugacy_key(trivial.elements, sym));
    classes.push_back(trivial);
    level.push_back(std::move(trivial));
    while (!level.empty()) {
        std::vector<SubgroupClass> next;
        for (const auto& cls : level) {
            long target = static_cast<long>(cls.elements.size()) * p;
            for (const auto& g : candidates) {
                if (std::binary_search(cls.elements.begin(), cls.elements.end(), g)) continue;
                std::vector<Perm> gens = cls.generators;
                gens.push_back(g);
                std::vector<Perm> grown = close_perms(gens, n);
                if (static_cast<long>(grown.size()) != target) continue;
                auto key = conjugacy_key(grown, sym);
                if (!seen.insert(std::move(key)).second) continue;
                SubgroupClass k{std::move(grown), std::move(gens)};
                classes.push_back(k);
                next.push_back(std::move(k));
            }
        }
        level = std::move(next);
    }
    std::sort(classes.begin(), classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
        if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
        return a.elements < b.elements;
    });

    PartitionPoset pp = partition_poset(n);
    std::vector<SweepRow> rows(classes.size());
    std::atomic<size_t> cursor{0};
    std::exception_ptr failure = nullptr;
    std::mutex failure_lock;
    auto worker = [&]() {
        while (true) {
            size_t i = cursor.fetch_add(1);
            if (i >= classes.size()) return;
            try {
                SweepRow row;
                row.generators = classes[i].generators;
                row.order = static_cast<long>(classes[i].elements.size());
                row.elementary_abelian = is_elementary_abelian_perm_group(classes[i].elements, p);
                std::vector<long> fixed = pp.fixed_indices(classes[i].elements);
                row.fixed_poset_size = static_cast<long>(fixed.size());
                row.fixed_homology = homology(order_complex(pp.induced(fixed)));
                row.acyclic = row.fixed_homology.is_z_acyclic();
                rows[i] = std::move(row);
            } catch (...) {
                std::lock_guard<std::mutex> hold(failure_lock);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(classes.size()));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    return rows;
}

} // namespace unipart

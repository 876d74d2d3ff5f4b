#include "lcmlat/ln.hpp"

#include "lcmlat/errors.hpp"

#include <algorithm>
#include <bit>
#include <thread>
#include <unordered_set>

namespace lcmlat {

namespace {

void require_same_n(const FiniteAtomicLattice& P, const FiniteAtomicLattice& Q) {
    if (P.atom_count() != Q.atom_count())
        fail(Errc::atom_count_mismatch,
             "lattices have " + std::to_string(P.atom_count()) + " and " +
                 std::to_string(Q.atom_count()) + " atoms");
}

void require_navigable(const FiniteAtomicLattice& P) {
    if (P.atom_count() > 6)
        fail(Errc::out_of_supported_range, "L(n) navigation supports n <= 6");
}

} // namespace

bool ln_leq(const FiniteAtomicLattice& Q, const FiniteAtomicLattice& P) {
    require_same_n(P, Q);
    for (AtomSet s : Q.family())
        if (!P.member(s)) return false;
    return true;
}

FiniteAtomicLattice ln_meet(const FiniteAtomicLattice& P, const FiniteAtomicLattice& Q) {
    require_same_n(P, Q);
    std::vector<AtomSet> fam;
    for (AtomSet s : P.family())
        if (Q.member(s)) fam.push_back(s);
    return make_lattice_unchecked(P.atom_count(), std::move(fam)); // closed, ordered
}

FiniteAtomicLattice ln_join(const FiniteAtomicLattice& P, const FiniteAtomicLattice& Q) {
    require_same_n(P, Q);
    std::vector<AtomSet> fam = P.family();
    fam.insert(fam.end(), Q.family().begin(), Q.family().end());
    std::sort(fam.begin(), fam.end());
    fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
    // intersection closure
    bool grew = true;
    while (grew) {
        grew = false;
        size_t m = fam.size();
        for (size_t i = 0; i < m; ++i)
            for (size_t j = i + 1; j < m; ++j) {
                AtomSet t = fam[i] & fam[j];
                if (!std::binary_search(fam.begin(), fam.end(), t)) {
                    fam.push_back(t);
                    std::sort(fam.begin(), fam.end());
                    grew = true;
                }
            }
    }
    return make_lattice_unchecked(P.atom_count(), std::move(fam));
}

std::vector<FiniteAtomicLattice> ln_upper_covers(const FiniteAtomicLattice& P) {
    require_navigable(P);
    int n = P.atom_count();
    std::vector<FiniteAtomicLattice> out;
    uint32_t total = AtomSet::full(n).bits;
    for (uint32_t b = 0; b <= total; ++b) {
        AtomSet sigma(b);
        if (P.member(sigma)) continue;
        bool addable = true;
        for (AtomSet s : P.family()) {
            AtomSet t = sigma & s;
            if (t != sigma && !P.member(t)) {
                addable = false;
                break;
            }
        }
        if (!addable) continue;
        std::vector<AtomSet> fam = P.family();
        fam.insert(std::lower_bound(fam.begin(), fam.end(), sigma), sigma);
        out.push_back(make_lattice_unchecked(n, std::move(fam)));
    }
    return out;
}

std::vector<FiniteAtomicLattice> ln_lower_covers(const FiniteAtomicLattice& P) {
    require_navigable(P);
    int n = P.atom_count();
    std::vector<FiniteAtomicLattice> out;
    for (AtomSet sigma : P.family()) {
        if (sigma.empty() || sigma == AtomSet::full(n) || sigma.count() == 1) continue;
        bool removable = true;
        for (AtomSet a : P.family()) {
            if (a == sigma) continue;
            for (AtomSet b : P.family()) {
                if (b == sigma || b < a) continue;
                if ((a & b) == sigma && !(a == b)) {
                    removable = false;
                    break;
                }
            }
            if (!removable) break;
        }
        if (!removable) continue;
        std::vector<AtomSet> fam;
        for (AtomSet s : P.family())
            if (!(s == sigma)) fam.push_back(s);
        out.push_back(make_lattice_unchecked(n, std::move(fam)));
    }
    return out;
}

std::vector<int> canonical_map(const FiniteAtomicLattice& P, const FiniteAtomicLattice& Q) {
    if (!ln_leq(Q, P))
        fail(Errc::not_comparable, "the target lattice is not below the source in L(n)");
    std::vector<int> f(static_cast<size_t>(P.size()));
    for (int p = 0; p < P.size(); ++p) f[static_cast<size_t>(p)] = Q.join_atoms(P.set_of(p));
    return f;
}

int ln_rank(const FiniteAtomicLattice& P) {
    return P.size() - (P.atom_count() + 2);
}

namespace {

// Enumeration core on bitmask families: subsets of {1..n} are encoded as
// integers < 2^n, a family as a mask with bit s set iff subset s belongs.
struct Enumerator {
    int n;
    uint32_t subset_count;   // 2^n
    uint64_t base_mask;      // empty set, singletons, full set

    explicit Enumerator(int nn) : n(nn) {
        subset_count = 1u << n;
        base_mask = 1ULL; // empty set
        for (int i = 0; i < n; ++i) base_mask |= 1ULL << (1u << i);
        base_mask |= 1ULL << (subset_count - 1);
    }

    bool addable(uint64_t family, uint32_t sigma) const {
        for (uint32_t s = 0; s < subset_count; ++s) {
            if (!((family >> s) & 1)) continue;
            uint32_t t = sigma & s;
            if (t != sigma && !((family >> t) & 1)) return false;
        }
        return true;
    }

    // Visit every closed family whose non-base members above `last` extend
    // `family`. Every closed family is reached exactly once because its
    // non-base members, added in increasing encoding, pass through closed
    // prefixes only.
    template <typename Visit>
    void dfs(uint64_t family, uint32_t last, Visit&& visit) const {
        visit(family);
        for (uint32_t sigma = last + 1; sigma + 1 < subset_count; ++sigma) {
            if ((family >> sigma) & 1) continue;
            if (std::popcount(sigma) < 2) continue;
            if (addable(family, sigma)) dfs(family | (1ULL << sigma), sigma, visit);
        }
    }

    FiniteAtomicLattice to_lattice(uint64_t family) const {
        std::vector<AtomSet> fam;
        for (uint32_t s = 0; s < subset_count; ++s)
            if ((family >> s) & 1) fam.push_back(AtomSet(s));
        return make_lattice_unchecked(n, std::move(fam));
    }
};

void check_enumeration_range(int n) {
    if (n == 6)
        fail(Errc::out_of_supported_range,
             "enumeration of L(6) is out of scope; its size is known to be " +
                 std::to_string(kLnSixCount));
    if (n < 3 || n > 5)
        fail(Errc::out_of_supported_range, "enumeration supports 3 <= n <= 5");
}

} // namespace

long long ln_enumerate_count(int n, int jobs) {
    check_enumeration_range(n);
    Enumerator e(n);
    if (jobs < 1) jobs = 1;

    // top-level branches: first added subset
    std::vector<uint32_t> firsts;
    for (uint32_t sigma = 0; sigma + 1 < e.subset_count; ++sigma) {
        if ((e.base_mask >> sigma) & 1) continue;
        if (std::popcount(sigma) < 2) continue;
        firsts.push_back(sigma); // always addable to the base family
    }
    std::vector<long long> counts(firsts.size(), 0);
    auto work = [&](size_t begin, size_t step) {
        for (size_t i = begin; i < firsts.size(); i += step) {
            long long c = 0;
            e.dfs(e.base_mask | (1ULL << firsts[i]), firsts[i], [&](uint64_t) { ++c; });
            counts[i] = c;
        }
    };
    if (jobs == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(work, static_cast<size_t>(t), static_cast<size_t>(jobs));
        for (auto& th : pool) th.join();
    }
    long long total = 1; // the base family itself
    for (long long c : counts) total += c;
    return total;
}

void ln_enumerate(int n, const std::function<void(const FiniteAtomicLattice&)>& emit, int jobs) {
    check_enumeration_range(n);
    Enumerator e(n);
    if (jobs < 1) jobs = 1;
    emit(e.to_lattice(e.base_mask));

    std::vector<uint32_t> firsts;
    for (uint32_t sigma = 0; sigma + 1 < e.subset_count; ++sigma) {
        if ((e.base_mask >> sigma) & 1) continue;
        if (std::popcount(sigma) < 2) continue;
        firsts.push_back(sigma);
    }
    if (jobs == 1) {
        for (uint32_t f : firsts)
            e.dfs(e.base_mask | (1ULL << f), f, [&](uint64_t fam) { emit(e.to_lattice(fam)); });
        return;
    }
    // Parallel branches buffer their families; emission happens in branch
    // order so the stream does not depend on the worker count.
    std::vector<std::vector<uint64_t>> buffers(firsts.size());
    auto work = [&](size_t begin, size_t step) {
        for (size_t i = begin; i < firsts.size(); i += step)
            e.dfs(e.base_mask | (1ULL << firsts[i]), firsts[i],
                  [&](uint64_t fam) { buffers[i].push_back(fam); });
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(work, static_cast<size_t>(t), static_cast<size_t>(jobs));
    for (auto& th : pool) th.join();
    for (const auto& buf : buffers)
        for (uint64_t fam : buf) emit(e.to_lattice(fam));
}

long long ln_enumerate_bfs_count(int n) {
    if (n < 3 || n > 4)
        fail(Errc::out_of_supported_range, "the BFS oracle supports n = 3, 4");
    Enumerator e(n);
    std::unordered_set<uint64_t> seen;
    std::vector<uint64_t> frontier{e.base_mask};
    seen.insert(e.base_mask);
    while (!frontier.empty()) {
        std::vector<uint64_t> next;
        for (uint64_t fam : frontier) {
            for (uint32_t sigma = 0; sigma + 1 < e.subset_count; ++sigma) {
                if ((fam >> sigma) & 1) continue;
                if (std::popcount(sigma) < 2) continue;
                if (!e.addable(fam, sigma)) continue;
                uint64_t f2 = fam | (1ULL << sigma);
                if (seen.insert(f2).second) next.push_back(f2);
            }
        }
        frontier = std::move(next);
    }
    return static_cast<long long>(seen.size());
}

std::vector<FiniteAtomicLattice> ln_meet_irreducibles(int n) {
    if (n < 3 || n > 6)
        fail(Errc::out_of_supported_range, "meet-irreducibles of L(n) support 3 <= n <= 6");
    std::vector<FiniteAtomicLattice> out;
    uint32_t total = AtomSet::full(n).bits;
    for (int i = 1; i <= n; ++i) {
        uint32_t co_i = total & ~AtomSet::singleton(i).bits;
        for (uint32_t s = 0; s <= total; ++s) {
            if (std::popcount(s) < 2) continue;
            if ((s & ~co_i) != 0) continue; // sigma must avoid atom i
            std::vector<AtomSet> fam;
            for (uint32_t b = 0; b <= total; ++b) {
                bool in_interval = (s & ~b) == 0 && (b & ~co_i) == 0;
                if (!in_interval) fam.push_back(AtomSet(b));
            }
            FiniteAtomicLattice L = FiniteAtomicLattice::from_family(n, std::move(fam));
            if (ln_upper_covers(L).size() != 1)
                fail(Errc::internal, "constructed meet-irreducible of L(n) has more than one cover");
            out.push_back(std::move(L));
        }
    }
    return out;
}

} // namespace lcmlat

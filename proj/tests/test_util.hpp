#pragma once

// Shared fixtures, independent brute-force oracles, and random generators for
// the unit and acceptance suites. The oracles deliberately avoid the library
// code paths they are used to check.

#include "lcmlat/ideal.hpp"
#include "lcmlat/labeling.hpp"
#include "lcmlat/lattice.hpp"
#include "lcmlat/ln.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace testutil {

using namespace lcmlat;

// ---- fixtures -------------------------------------------------------------

inline FiniteAtomicLattice make(int n, std::initializer_list<std::initializer_list<int>> sets) {
    std::vector<AtomSet> fam;
    for (const auto& s : sets) fam.push_back(AtomSet::from_atoms(std::vector<int>(s)));
    return FiniteAtomicLattice::from_family(n, std::move(fam));
}

// augmented face lattice of the path on 4 vertices (edges 12, 23, 34)
inline FiniteAtomicLattice path_lattice() {
    return make(4, {{}, {1}, {2}, {3}, {4}, {1, 2}, {2, 3}, {3, 4}, {1, 2, 3, 4}});
}

// LCM lattice of (cdf, def, bef, abce): adds {1,2,3} to the path lattice
inline FiniteAtomicLattice figure_lattice() {
    return make(4, {{}, {1}, {2}, {3}, {4}, {1, 2}, {2, 3}, {3, 4}, {1, 2, 3}, {1, 2, 3, 4}});
}

// ---- brute-force oracles --------------------------------------------------

// unique maximal common lower bound, by direct subset scan
inline int brute_meet(const FiniteAtomicLattice& L, int x, int y) {
    std::vector<int> lower;
    for (int i = 0; i < L.size(); ++i)
        if (L.set_of(i).subset_of(L.set_of(x)) && L.set_of(i).subset_of(L.set_of(y)))
            lower.push_back(i);
    std::vector<int> maximal;
    for (int i : lower) {
        bool is_max = true;
        for (int j : lower)
            if (j != i && L.set_of(i).subset_of(L.set_of(j))) is_max = false;
        if (is_max) maximal.push_back(i);
    }
    return maximal.size() == 1 ? maximal[0] : -1;
}

// unique minimal common upper bound
inline int brute_join(const FiniteAtomicLattice& L, int x, int y) {
    std::vector<int> upper;
    for (int i = 0; i < L.size(); ++i)
        if (L.set_of(x).subset_of(L.set_of(i)) && L.set_of(y).subset_of(L.set_of(i)))
            upper.push_back(i);
    std::vector<int> minimal;
    for (int i : upper) {
        bool is_min = true;
        for (int j : upper)
            if (j != i && L.set_of(j).subset_of(L.set_of(i))) is_min = false;
        if (is_min) minimal.push_back(i);
    }
    return minimal.size() == 1 ? minimal[0] : -1;
}

// definitional meet-irreducibility: no a, b > x with a.meet(b) == x
inline std::vector<int> brute_meet_irreducibles(const FiniteAtomicLattice& L) {
    std::vector<int> out;
    for (int x = 0; x < L.size(); ++x) {
        if (x == L.bottom() || x == L.top()) continue;
        bool is_meet = false;
        for (int a = 0; a < L.size() && !is_meet; ++a) {
            if (a == x || !L.set_of(x).subset_of(L.set_of(a))) continue;
            for (int b = 0; b < L.size(); ++b) {
                if (b == x || b == a || !L.set_of(x).subset_of(L.set_of(b))) continue;
                if ((L.set_of(a) & L.set_of(b)) == L.set_of(x)) {
                    is_meet = true;
                    break;
                }
            }
        }
        if (!is_meet) out.push_back(x);
    }
    return out;
}

// number of atom subsets whose join is p, by exhaustive enumeration
inline long long brute_equiv_count(const FiniteAtomicLattice& L, int p) {
    int n = L.atom_count();
    long long count = 0;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        // join of the subset: the unique minimal member containing it
        std::vector<int> upper;
        AtomSet T(mask);
        for (int i = 0; i < L.size(); ++i)
            if (T.subset_of(L.set_of(i))) upper.push_back(i);
        int jn = -1;
        for (int i : upper) {
            bool is_min = true;
            for (int j : upper)
                if (j != i && L.set_of(j).subset_of(L.set_of(i))) is_min = false;
            if (is_min) {
                jn = i;
                break;
            }
        }
        if (jn == p) ++count;
    }
    return count;
}

// reduced homology of a complex of dimension <= 1 via components and cycle
// rank: h0 = components - 1, h1 = E - V + components
struct GraphHomology {
    long long h_minus1 = 0, h0 = 0, h1 = 0;
};
inline GraphHomology graph_homology(int vertices, const std::vector<std::pair<int, int>>& edges,
                                    bool void_complex = false) {
    GraphHomology h;
    if (void_complex) return h;
    if (vertices == 0) {
        h.h_minus1 = 1; // only the empty face
        return h;
    }
    std::vector<int> parent(static_cast<size_t>(vertices));
    for (int i = 0; i < vertices; ++i) parent[static_cast<size_t>(i)] = i;
    std::function<int(int)> find = [&](int a) {
        while (parent[static_cast<size_t>(a)] != a) a = parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
        return a;
    };
    for (auto [a, b] : edges) parent[static_cast<size_t>(find(a))] = find(b);
    std::set<int> roots;
    for (int i = 0; i < vertices; ++i) roots.insert(find(i));
    long long comp = static_cast<long long>(roots.size());
    h.h0 = comp - 1;
    h.h1 = static_cast<long long>(edges.size()) - vertices + comp;
    return h;
}

// does the canonical support-join map P -> Q land in Q and preserve joins
// (with joins computed by the independent minimal-upper-bound scan)?
inline bool brute_has_join_preserving_map(const FiniteAtomicLattice& P,
                                          const FiniteAtomicLattice& Q) {
    if (P.atom_count() != Q.atom_count()) return false;
    // the only candidate is f(p) = join_Q(supp p); compute it by scan
    auto f = [&](int p) {
        std::vector<int> upper;
        for (int i = 0; i < Q.size(); ++i)
            if (P.set_of(p).subset_of(Q.set_of(i))) upper.push_back(i);
        int best = -1;
        for (int i : upper) {
            bool is_min = true;
            for (int j : upper)
                if (j != i && Q.set_of(j).subset_of(Q.set_of(i))) is_min = false;
            if (is_min) {
                if (best >= 0) return -1; // not well defined
                best = i;
            }
        }
        return best;
    };
    std::vector<int> img(static_cast<size_t>(P.size()));
    for (int p = 0; p < P.size(); ++p) {
        img[static_cast<size_t>(p)] = f(p);
        if (img[static_cast<size_t>(p)] < 0) return false;
    }
    // atom preservation
    for (int a = 1; a <= P.atom_count(); ++a)
        if (Q.set_of(img[static_cast<size_t>(P.atom_index(a))]) != AtomSet::singleton(a)) return false;
    // join preservation on all pairs
    for (int x = 0; x < P.size(); ++x)
        for (int y = 0; y < P.size(); ++y) {
            int pj = brute_join(P, x, y);
            int qj = brute_join(Q, img[static_cast<size_t>(x)], img[static_cast<size_t>(y)]);
            if (pj < 0 || qj < 0) return false;
            if (img[static_cast<size_t>(pj)] != qj) return false;
        }
    return true;
}

// ---- random generators ----------------------------------------------------

using Rng = std::mt19937_64;

inline FiniteAtomicLattice random_lattice(int n, Rng& rng, int max_steps = -1) {
    FiniteAtomicLattice L = FiniteAtomicLattice::minimal_lattice(n);
    int cap = (1 << n) - n - 2;
    int steps = static_cast<int>(rng() % static_cast<uint64_t>(cap + 1));
    if (max_steps >= 0) steps = std::min(steps, max_steps);
    for (int s = 0; s < steps; ++s) {
        auto ups = ln_upper_covers(L);
        if (ups.empty()) break;
        L = ups[rng() % ups.size()];
    }
    return L;
}

// Q <= P, both random
inline std::pair<FiniteAtomicLattice, FiniteAtomicLattice> random_comparable_pair(int n, Rng& rng) {
    FiniteAtomicLattice P = random_lattice(n, rng);
    FiniteAtomicLattice Q = P;
    int steps = static_cast<int>(rng() % 8);
    for (int s = 0; s < steps; ++s) {
        auto downs = ln_lower_covers(Q);
        if (downs.empty()) break;
        Q = downs[rng() % downs.size()];
    }
    return {Q, P};
}

inline MonomialIdeal random_minimal_ideal(Rng& rng, int max_gens = 5, int max_vars = 5,
                                          int max_exp = 4) {
    while (true) {
        int t = 2 + static_cast<int>(rng() % static_cast<uint64_t>(max_gens - 1));
        int v = 2 + static_cast<int>(rng() % static_cast<uint64_t>(max_vars - 1));
        std::vector<Monomial> gens;
        for (int i = 0; i < t; ++i) {
            Monomial m;
            for (int s = 0; s < v; ++s) {
                long long e = static_cast<long long>(rng() % static_cast<uint64_t>(max_exp + 1));
                if (e) m.set_exponent(s, BigInt(e));
            }
            if (m.is_unit()) m.set_exponent(static_cast<int>(rng() % static_cast<uint64_t>(v)), BigInt(1));
            gens.push_back(std::move(m));
        }
        bool minimal = true;
        for (int i = 0; i < t && minimal; ++i)
            for (int j = 0; j < t; ++j)
                if (i != j && gens[static_cast<size_t>(i)].divides(gens[static_cast<size_t>(j)])) {
                    minimal = false;
                    break;
                }
        if (!minimal) continue;
        return make_ideal_checked(fresh_variable_names(static_cast<size_t>(v), VarNaming::numbered),
                                  std::move(gens));
    }
}

// every variable gets pairwise distinct nonzero exponents across generators
inline MonomialIdeal random_strongly_generic_ideal(Rng& rng, int max_gens = 5) {
    while (true) {
        int t = 2 + static_cast<int>(rng() % static_cast<uint64_t>(max_gens - 1));
        int v = 2 + static_cast<int>(rng() % 4);
        std::vector<Monomial> gens(static_cast<size_t>(t));
        for (int s = 0; s < v; ++s) {
            std::vector<long long> exps;
            for (long long e = 1; e <= t + 2; ++e) exps.push_back(e);
            std::shuffle(exps.begin(), exps.end(), rng);
            for (int i = 0; i < t; ++i)
                if (rng() % 4 != 0) gens[static_cast<size_t>(i)].set_exponent(s, BigInt(exps[static_cast<size_t>(i)]));
        }
        bool ok = true;
        for (int i = 0; i < t && ok; ++i) {
            if (gens[static_cast<size_t>(i)].is_unit()) ok = false;
            for (int j = 0; j < t; ++j)
                if (i != j && gens[static_cast<size_t>(i)].divides(gens[static_cast<size_t>(j)])) ok = false;
        }
        if (!ok) continue;
        return make_ideal_checked(fresh_variable_names(static_cast<size_t>(v), VarNaming::numbered),
                                  std::move(gens));
    }
}

// random labeling satisfying both coordinatization conditions: a few
// variables along random chain segments, then a fresh variable for every
// meet-irreducible still unlabeled
inline Labeling random_valid_labeling(const FiniteAtomicLattice& L, Rng& rng) {
    Labeling lab;
    lab.lattice = L;
    auto chains = L.maximal_chains();
    size_t extra = 1 + rng() % (chains.size() + 2);
    std::map<int, std::map<int, long long>> exps; // element -> var -> exponent
    size_t var = 0;
    for (size_t k = 0; k < extra; ++k, ++var) {
        const auto& chain = chains[rng() % chains.size()];
        std::vector<int> candidates;
        candidates.push_back(L.bottom()); // labels on the bottom are allowed
        candidates.insert(candidates.end(), chain.begin(), chain.end());
        bool any = false;
        for (int el : candidates)
            if (rng() % 2) {
                exps[el][static_cast<int>(var)] = 1 + static_cast<long long>(rng() % 3);
                any = true;
            }
        if (!any) exps[candidates[rng() % candidates.size()]][static_cast<int>(var)] = 1;
    }
    for (int mi : L.meet_irreducibles()) {
        if (exps.count(mi)) continue;
        exps[mi][static_cast<int>(var++)] = 1;
    }
    lab.variables = fresh_variable_names(var, VarNaming::numbered);
    for (const auto& [el, m] : exps) {
        Monomial mon;
        for (const auto& [v, e] : m) mon.set_exponent(v, BigInt(e));
        lab.labels[el] = std::move(mon);
    }
    return lab;
}

} // namespace testutil

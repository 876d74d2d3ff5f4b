#pragma once

#include "lcmlat/lattice.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace lcmlat {

// The lattice L(n) of all finite atomic lattices on n ordered atoms, ordered
// by containment of set families (equivalent to the existence of a
// join-preserving atom-preserving map; tested, not assumed). Navigation
// supports n <= 6, full enumeration 3 <= n <= 5.

constexpr long long kLnSixCount = 66960965307LL; // known size of L(6), not enumerated here

bool ln_leq(const FiniteAtomicLattice& Q, const FiniteAtomicLattice& P);
FiniteAtomicLattice ln_meet(const FiniteAtomicLattice& P, const FiniteAtomicLattice& Q);
FiniteAtomicLattice ln_join(const FiniteAtomicLattice& P, const FiniteAtomicLattice& Q);

// All P + {s}: the subsets s whose addition keeps the family
// intersection-closed. Empty for the boolean lattice.
std::vector<FiniteAtomicLattice> ln_upper_covers(const FiniteAtomicLattice& P);
// All P - {s}: s not required (empty/full/singleton) and not the intersection
// of two other members. Empty for the minimal lattice.
std::vector<FiniteAtomicLattice> ln_lower_covers(const FiniteAtomicLattice& P);

// For Q <= P, the unique join-preserving atom-preserving map P -> Q:
// f(p) = join_Q(supp(p)). Returned as element indices of Q per element of P.
std::vector<int> canonical_map(const FiniteAtomicLattice& P, const FiniteAtomicLattice& Q);

// Height above the minimal element of L(n): |family| - (n + 2).
int ln_rank(const FiniteAtomicLattice& P);

// Depth-first enumeration of every intersection-closed family on n atoms,
// each exactly once, by adding non-required subsets in increasing bit
// encoding (prefixes of that order are automatically closed, so no seen-set
// is needed). `jobs` parallelizes over the first added subset; the visit
// order is independent of it.
long long ln_enumerate_count(int n, int jobs = 1);
void ln_enumerate(int n, const std::function<void(const FiniteAtomicLattice&)>& emit,
                  int jobs = 1);

// Breadth-first hash-dedup enumeration, kept as a cross-checking oracle.
long long ln_enumerate_bfs_count(int n);

// The meet-irreducible elements of L(n): for every atom i and every subset s
// of the other atoms with |s| >= 2, the boolean lattice minus the interval
// [s, complement of {i}]. Each is validated and has exactly one upper cover.
std::vector<FiniteAtomicLattice> ln_meet_irreducibles(int n);

} // namespace lcmlat

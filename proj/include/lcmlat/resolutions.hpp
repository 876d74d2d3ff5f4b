#pragma once

#include "lcmlat/complex.hpp"
#include "lcmlat/ideal.hpp"
#include "lcmlat/lattice.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace lcmlat {

// Multigraded Betti numbers of a finite atomic lattice over a field:
// entries[(i, p)] = dim of reduced homology in degree i-2 of the open
// interval below p. total[i] sums over p, with total[0] = 1 by convention.
struct BettiTable {
    FieldSpec field;
    std::map<std::pair<int, int>, long long> entries; // (homological degree, element) -> dim
    std::vector<long long> total;

    long long total_at(size_t i) const { return i < total.size() ? total[i] : 0; }
};

enum class BettiVia { crosscut, order, both };

// via == both computes the cross-cut and order-complex routes and raises
// HomotopyMismatch on any disagreement (which would indicate a bug, the two
// complexes are homotopy equivalent).
BettiTable betti_table(const FiniteAtomicLattice& L, const FieldSpec& k,
                       BettiVia via = BettiVia::crosscut);

// Faces are the atom subsets that are the unique joining set of their join.
// Always downward closed (checked).
SimplicialComplex scarf_complex(const FiniteAtomicLattice& L);

// Total Betti numbers coincide with the Scarf complex face counts.
bool is_scarf_resolved(const FiniteAtomicLattice& L, const FieldSpec& k);

// The chain coordinatization of a graded lattice whose maximal chains all
// have length n; the result is strongly generic. Throws NotGradedRankN with a
// witness chain otherwise.
MonomialIdeal strongly_generic_coordinatization(const FiniteAtomicLattice& L);

// Face supports plus bottom and top; vertex i of X is atom i. Every vertex
// must be a face for the singleton requirement to hold.
FiniteAtomicLattice augmented_face_lattice(const SimplicialComplex& X);

struct CertificateFailure {
    std::string kind;       // "non_acyclic" or "shared_label"
    int element = -1;       // lattice element (non_acyclic), or the shared label
    uint64_t face_a = 0, face_b = 0; // the cover pair (shared_label)
};

struct CellularCertificate {
    bool supports = false;
    bool minimal = false;
    std::vector<int> face_labels;  // label per face of X, aligned with X.all_faces()
    std::vector<CertificateFailure> failures;
};

// Does the labeled complex X support (and minimally support) the resolution
// of L? vertex_elements[i] is the lattice element of vertex i; faces are
// labeled by joins. Supports iff the subcomplex of nonempty faces with label
// below each p is acyclic (a void subcomplex counts as acyclic); minimal iff
// additionally no face and facet-of-it share a label.
CellularCertificate supports_resolution(const FiniteAtomicLattice& L,
                                        const SimplicialComplex& X,
                                        const std::vector<int>& vertex_elements,
                                        const FieldSpec& k);

enum class ScarfFilterMode { betti, cover };

struct ScarfFilterCounterexample {
    FiniteAtomicLattice lattice;
    std::string reason;
};

struct ScarfFilterReport {
    ScarfFilterMode mode = ScarfFilterMode::betti;
    std::string field;
    std::string interpretation; // how the hypotheses were read
    long long filter_size = 0;     // lattices above P
    long long stratum_size = 0;    // of those, equal total Betti numbers
    long long checked = 0;
    long long skipped_hypotheses = 0; // cover mode only
    std::vector<ScarfFilterCounterexample> counterexamples;
};

// Scans every lattice above P in L(n), n <= 4.
// betti mode (requires P Scarf-resolved): every lattice in P's total-Betti
//   stratum must be Scarf-resolved with the same Scarf complex.
// cover mode: every stratum member that covers P and has its Betti numbers
//   concentrated (with value 1) on the maxima of the canonical-map fibers
//   must have a minimal resolution supported on P's Scarf complex.
ScarfFilterReport verify_scarf_filter(const FiniteAtomicLattice& P, const FieldSpec& k,
                                      ScarfFilterMode mode);

} // namespace lcmlat

#pragma once

#include "lcmlat/ideal.hpp"
#include "lcmlat/labeling.hpp"
#include "lcmlat/lattice.hpp"

#include <string>
#include <vector>

namespace lcmlat {

// An integer perturbation of the exponents of a monomial ideal. Valid when it
// preserves every strict per-variable inequality between generators, keeps
// zero exponents at zero, and keeps all exponents non-negative.
struct Deformation {
    MonomialIdeal base;
    std::vector<std::vector<long long>> epsilon; // rows = generators, cols = variables
};

struct DeformationCheck {
    bool valid = true;
    std::string reason;           // "zero", "order", "negative" when invalid
    int variable = -1, gen_a = -1, gen_b = -1;
};

DeformationCheck is_valid_deformation(const Deformation& d);

// base + epsilon, entrywise; the result is checked minimal.
MonomialIdeal apply(const Deformation& d);

struct DeformationPair {
    MonomialIdeal m_q; // coordinatization of Q (the deformation base)
    MonomialIdeal m_p; // the chain coordinatization of P; equals apply(d)
    Deformation d;
};

// For Q <= P in L(n): coordinatize P with one variable per maximal chain
// (each interior chain element labeled once), coordinatize Q by restricting
// those labels to the elements of Q (every family member of Q is one of P),
// and take epsilon as the per-chain count difference
//   eps[i][j] = #{x in c_j : a_i not<= x} - #{x in c_j, x in Q : a_i not<= x}.
// The restriction labeling keeps each variable on a subchain, covers all of
// Q, and never reverses a strict exponent inequality, so the deformation is
// valid, its base has LCM lattice Q, and the deformed ideal has LCM lattice P.
DeformationPair construct_deformation(const FiniteAtomicLattice& P,
                                      const FiniteAtomicLattice& Q);

// The same construction with the boolean lattice as the ambient chain source:
// one coordinatization of Q that deforms onto every lattice above Q.
class UniversalFamily {
public:
    explicit UniversalFamily(const FiniteAtomicLattice& Q);

    const MonomialIdeal& base() const { return base_; }
    const FiniteAtomicLattice& q() const { return q_; }

    // Deformation of base() whose deformed ideal has LCM lattice `target`.
    // Requires ln_leq(q, target).
    Deformation deform_to(const FiniteAtomicLattice& target) const;

private:
    FiniteAtomicLattice q_;
    MonomialIdeal base_;
    std::vector<std::vector<AtomSet>> chains_; // interior of each maximal chain of B_n
};

UniversalFamily universal_family(const FiniteAtomicLattice& Q);

} // namespace lcmlat

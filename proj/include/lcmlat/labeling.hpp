#pragma once

#include "lcmlat/ideal.hpp"
#include "lcmlat/lattice.hpp"

#include <map>
#include <string>
#include <vector>

namespace lcmlat {

// A partial assignment of monomials to lattice elements. Absent entries mean
// the unit label. Labels on the top element are meaningless (the top belongs
// to every filter) and are dropped on normalization.
struct Labeling {
    FiniteAtomicLattice lattice;
    std::vector<std::string> variables;
    std::map<int, Monomial> labels; // element index -> non-unit monomial

    void normalize(); // drop unit labels and any label on the top element
};

struct LabelingVerdict {
    bool valid = true;
    std::vector<int> unlabeled_mi;                   // condition (a) violations
    std::vector<std::pair<int, std::pair<int, int>>> var_off_chain; // (var, witness element pair)
    std::string describe(const Labeling& lab) const;
};

// Valid iff every meet-irreducible carries a non-unit label and, per variable,
// the elements whose labels use it are pairwise comparable.
LabelingVerdict validate_labeling(const Labeling& lab);

// Generator per atom: the product of labels over the complement of the atom's
// filter. Requires a valid labeling; the result is a minimal ideal whose LCM
// lattice is the labeled lattice.
MonomialIdeal realize(const Labeling& lab);

enum class VarNaming { numbered, letters }; // x1,x2,... or a,b,...

// One fresh variable per meet-irreducible, in canonical element order.
Labeling minimal_squarefree_labeling(const FiniteAtomicLattice& L,
                                     VarNaming naming = VarNaming::numbered);

// One variable per maximal chain (canonical chain order); each element off
// the bottom/top is labeled by the product of the variables of the chains
// through it.
Labeling eccv_labeling(const FiniteAtomicLattice& L, VarNaming naming = VarNaming::numbered);

// Label every element with the gcd of the multidegrees strictly above it,
// divided by its own multidegree (the top gets the unit). Realizing this
// labeling reproduces the original ideal exactly.
Labeling deficit_labeling(const LabeledLattice& LL);

// realize(deficit_labeling(lcm_lattice(M))) == M, exactly.
bool roundtrip_check(const MonomialIdeal& M);

std::vector<std::string> fresh_variable_names(size_t count, VarNaming naming);

} // namespace lcmlat

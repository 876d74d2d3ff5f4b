#pragma once

#include "lcmlat/atom_set.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace lcmlat {

// Verdict-style report for family validation, so callers can surface problems
// without exceptions (the CLI's `lattice validate` needs this).
struct FamilyCheck {
    bool ok = true;
    std::string code;    // errc_name when !ok
    std::string detail;  // witness description
};

struct GradedInfo {
    bool graded = false;
    int rank = 0;                       // meaningful when graded
    std::vector<int> witness_short;     // two full chains of different length when not graded,
    std::vector<int> witness_long;      // as element indices including bottom and top
};

// A finite atomic lattice on n ordered atoms, stored as its intersection-closed
// set family, sorted ascending by bit encoding (canonical form). Elements are
// identified with their atom supports; operations address elements by index
// into the family. Immutable after construction.
class FiniteAtomicLattice {
public:
    // Default state is an unusable empty shell; assign a real lattice into it.
    FiniteAtomicLattice() = default;

    // Validates, canonicalizes (sort + dedup) and constructs. Throws Error
    // with MissingRequiredSet / NotIntersectionClosed / AtomCapacityExceeded.
    static FiniteAtomicLattice from_family(int n, std::vector<AtomSet> sets);

    // Non-throwing version of the validation performed by from_family.
    static FamilyCheck check_family(int n, std::vector<AtomSet> sets);

    static FiniteAtomicLattice boolean_lattice(int n);
    static FiniteAtomicLattice minimal_lattice(int n);

    int atom_count() const { return n_; }
    int size() const { return static_cast<int>(family_.size()); }
    const std::vector<AtomSet>& family() const { return family_; }

    AtomSet set_of(int idx) const { return family_[static_cast<size_t>(idx)]; }
    int index_of(AtomSet s) const;           // -1 when absent
    bool member(AtomSet s) const { return index_of(s) >= 0; }

    int bottom() const { return 0; }
    int top() const { return size() - 1; }
    int atom_index(int atom) const { return index_of(AtomSet::singleton(atom)); }
    bool trivial() const { return n_ == 1; }

    bool leq(int x, int y) const { return set_of(x).subset_of(set_of(y)); }
    int meet(int x, int y) const;
    int join(int x, int y) const;
    // Smallest family member containing the given atom set (the join of those
    // atoms); total because the full set is always a member.
    int join_atoms(AtomSet atoms) const;

    // Minimal members strictly containing set_of(x), ascending. Empty for the top.
    std::vector<int> covers_of(int x) const;

    // Elements with exactly one upper cover, bottom and top excluded.
    std::vector<int> meet_irreducibles() const;

    // Every maximal chain, reported without bottom/top, each chain ascending,
    // chains ordered lexicographically on their bit-encoding sequences.
    std::vector<std::vector<int>> maximal_chains() const;

    GradedInfo graded() const;

    // Elements x with a <= x false, canonical order.
    std::vector<int> filter_complement(int a) const;

    // True iff supp(p) is the only atom subset whose join is p. Uses the
    // monotonicity shortcut: it suffices to drop one atom of supp(p) at a
    // time, since any proper joining subset extends to one of those.
    bool equiv_unique(int p) const;

    // Injective, stable byte encoding of the canonical form.
    std::string encode() const;
    static FiniteAtomicLattice decode(const std::string& bytes);

    friend bool operator==(const FiniteAtomicLattice& a, const FiniteAtomicLattice& b) {
        return a.n_ == b.n_ && a.family_ == b.family_;
    }

private:
    // trusted: canonical, validated input
    FiniteAtomicLattice(int n, std::vector<AtomSet> family)
        : n_(n), family_(std::move(family)) {}

    int n_ = 0;
    std::vector<AtomSet> family_;

    friend FiniteAtomicLattice make_lattice_unchecked(int n, std::vector<AtomSet> family);
};

// For internal construction paths that guarantee canonical validated input.
FiniteAtomicLattice make_lattice_unchecked(int n, std::vector<AtomSet> family);

// Hasse diagram in DOT format, cover edges directed upward.
std::string hasse_dot(const FiniteAtomicLattice& L);

} // namespace lcmlat

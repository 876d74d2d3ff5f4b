#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace lcmlat {

// A subset of the atoms {1,...,n}, n <= 32, as a bit vector. Atom i lives in
// bit i-1. The default ordering (by bit encoding) is the canonical order used
// throughout: it refines inclusion, so subsets always sort before supersets.
struct AtomSet {
    uint32_t bits = 0;

    static constexpr int kMaxAtoms = 32;

    AtomSet() = default;
    explicit constexpr AtomSet(uint32_t b) : bits(b) {}

    static constexpr AtomSet empty_set() { return AtomSet(0); }
    static constexpr AtomSet singleton(int atom) { return AtomSet(1u << (atom - 1)); }
    static constexpr AtomSet full(int n) {
        return AtomSet(n == 32 ? 0xffffffffu : ((1u << n) - 1u));
    }
    static AtomSet from_atoms(const std::vector<int>& atoms) {
        AtomSet s;
        for (int a : atoms) s.bits |= 1u << (a - 1);
        return s;
    }

    bool contains(int atom) const { return (bits >> (atom - 1)) & 1u; }
    bool empty() const { return bits == 0; }
    int count() const { return std::popcount(bits); }
    bool subset_of(AtomSet o) const { return (bits & ~o.bits) == 0; }

    friend AtomSet operator&(AtomSet a, AtomSet b) { return AtomSet(a.bits & b.bits); }
    friend AtomSet operator|(AtomSet a, AtomSet b) { return AtomSet(a.bits | b.bits); }
    friend AtomSet operator-(AtomSet a, AtomSet b) { return AtomSet(a.bits & ~b.bits); }

    friend bool operator==(AtomSet a, AtomSet b) = default;
    friend auto operator<=>(AtomSet a, AtomSet b) { return a.bits <=> b.bits; }

    std::vector<int> atoms() const {
        std::vector<int> out;
        for (uint32_t m = bits; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
        return out;
    }

    // "{1,3}", "{}" for the empty set
    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int a : atoms()) {
            if (!first) s += ',';
            s += std::to_string(a);
            first = false;
        }
        s += '}';
        return s;
    }

    // "1,3", "" for the empty set; used as a JSON map key
    std::string key() const {
        std::string s;
        bool first = true;
        for (int a : atoms()) {
            if (!first) s += ',';
            s += std::to_string(a);
            first = false;
        }
        return s;
    }
};

// (size, lexicographic-on-atom-list) order used by the JSON lattice format.
inline bool size_lex_less(AtomSet a, AtomSet b) {
    if (a.count() != b.count()) return a.count() < b.count();
    // Equal popcount: lexicographic comparison of ascending atom lists is the
    // reverse of the numeric comparison of bit-reversed words, but a direct
    // loop is clearer at these sizes.
    std::vector<int> av = a.atoms(), bv = b.atoms();
    return av < bv;
}

} // namespace lcmlat

#include "lcmlat/lattice.hpp"

#include "lcmlat/errors.hpp"

#include <algorithm>
#include <cstring>

namespace lcmlat {

FiniteAtomicLattice make_lattice_unchecked(int n, std::vector<AtomSet> family) {
    return FiniteAtomicLattice(n, std::move(family));
}

FamilyCheck FiniteAtomicLattice::check_family(int n, std::vector<AtomSet> sets) {
    FamilyCheck out;
    if (n < 1 || n > AtomSet::kMaxAtoms) {
        out.ok = false;
        out.code = errc_name(Errc::atom_capacity);
        out.detail = "atom count " + std::to_string(n) + " outside supported range 1.." +
                     std::to_string(AtomSet::kMaxAtoms);
        return out;
    }
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    const AtomSet full = AtomSet::full(n);
    for (AtomSet s : sets) {
        if (!s.subset_of(full)) {
            out.ok = false;
            out.code = errc_name(Errc::atom_capacity);
            out.detail = "set " + s.to_string() + " uses atoms beyond n=" + std::to_string(n);
            return out;
        }
    }
    auto missing = [&](AtomSet s) {
        return !std::binary_search(sets.begin(), sets.end(), s);
    };
    if (missing(AtomSet::empty_set())) {
        out.ok = false;
        out.code = errc_name(Errc::missing_required_set);
        out.detail = "empty set absent";
        return out;
    }
    if (missing(full)) {
        out.ok = false;
        out.code = errc_name(Errc::missing_required_set);
        out.detail = "full set " + full.to_string() + " absent";
        return out;
    }
    for (int i = 1; i <= n; ++i) {
        if (missing(AtomSet::singleton(i))) {
            out.ok = false;
            out.code = errc_name(Errc::missing_required_set);
            out.detail = "singleton {" + std::to_string(i) + "} absent";
            return out;
        }
    }
    for (size_t i = 0; i < sets.size(); ++i) {
        for (size_t j = i + 1; j < sets.size(); ++j) {
            AtomSet m = sets[i] & sets[j];
            if (!std::binary_search(sets.begin(), sets.end(), m)) {
                out.ok = false;
                out.code = errc_name(Errc::not_intersection_closed);
                out.detail = sets[i].to_string() + " and " + sets[j].to_string() +
                             " intersect to " + m.to_string() + " which is not in the family";
                return out;
            }
        }
    }
    return out;
}

FiniteAtomicLattice FiniteAtomicLattice::from_family(int n, std::vector<AtomSet> sets) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    FamilyCheck c = check_family(n, sets);
    if (!c.ok) {
        Errc code = Errc::internal;
        if (c.code == errc_name(Errc::missing_required_set)) code = Errc::missing_required_set;
        else if (c.code == errc_name(Errc::not_intersection_closed)) code = Errc::not_intersection_closed;
        else if (c.code == errc_name(Errc::atom_capacity)) code = Errc::atom_capacity;
        fail(code, c.detail);
    }
    return FiniteAtomicLattice(n, std::move(sets));
}

FiniteAtomicLattice FiniteAtomicLattice::boolean_lattice(int n) {
    if (n < 1 || n > 20)
        fail(Errc::out_of_supported_range, "boolean_lattice supports 1..20 atoms");
    std::vector<AtomSet> fam;
    fam.reserve(1u << n);
    for (uint32_t b = 0; b < (1u << n); ++b) fam.push_back(AtomSet(b));
    return FiniteAtomicLattice(n, std::move(fam));
}

FiniteAtomicLattice FiniteAtomicLattice::minimal_lattice(int n) {
    if (n < 1 || n > AtomSet::kMaxAtoms)
        fail(Errc::atom_capacity, "minimal_lattice supports 1..32 atoms");
    std::vector<AtomSet> fam;
    fam.push_back(AtomSet::empty_set());
    for (int i = 1; i <= n; ++i) fam.push_back(AtomSet::singleton(i));
    if (n > 1) fam.push_back(AtomSet::full(n));
    std::sort(fam.begin(), fam.end());
    return FiniteAtomicLattice(n, std::move(fam));
}

int FiniteAtomicLattice::index_of(AtomSet s) const {
    auto it = std::lower_bound(family_.begin(), family_.end(), s);
    if (it == family_.end() || *it != s) return -1;
    return static_cast<int>(it - family_.begin());
}

int FiniteAtomicLattice::meet(int x, int y) const {
    int idx = index_of(set_of(x) & set_of(y));
    return idx; // present by intersection closure
}

int FiniteAtomicLattice::join_atoms(AtomSet atoms) const {
    // The intersection of all members containing `atoms` is itself a member
    // and is the least upper bound.
    AtomSet acc = AtomSet::full(n_);
    for (AtomSet s : family_)
        if (atoms.subset_of(s)) acc = acc & s;
    return index_of(acc);
}

int FiniteAtomicLattice::join(int x, int y) const {
    return join_atoms(set_of(x) | set_of(y));
}

std::vector<int> FiniteAtomicLattice::covers_of(int x) const {
    AtomSet s = set_of(x);
    std::vector<int> above;
    for (int i = 0; i < size(); ++i)
        if (i != x && s.subset_of(set_of(i))) above.push_back(i);
    std::vector<int> covers;
    for (int i : above) {
        bool minimal = true;
        for (int j : above)
            if (j != i && set_of(j).subset_of(set_of(i))) {
                minimal = false;
                break;
            }
        if (minimal) covers.push_back(i);
    }
    return covers; // ascending because `above` is
}

std::vector<int> FiniteAtomicLattice::meet_irreducibles() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i) {
        if (i == bottom() || i == top()) continue;
        if (covers_of(i).size() == 1) out.push_back(i);
    }
    return out;
}

std::vector<std::vector<int>> FiniteAtomicLattice::maximal_chains() const {
    std::vector<std::vector<int>> chains;
    std::vector<int> path;
    // DFS over cover relations from bottom; covers_of returns ascending
    // indices, so chains come out in lex order on bit-encoding sequences.
    // Bottom and top are not recorded.
    auto dfs = [&](auto&& self, int v) -> void {
        for (int c : covers_of(v)) {
            if (c == top()) {
                chains.push_back(path);
            } else {
                path.push_back(c);
                self(self, c);
                path.pop_back();
            }
        }
    };
    dfs(dfs, bottom());
    return chains;
}

GradedInfo FiniteAtomicLattice::graded() const {
    GradedInfo info;
    auto chains = maximal_chains();
    if (chains.empty()) { // n == 1, single cover 0 -> 1
        info.graded = true;
        info.rank = 1;
        return info;
    }
    size_t mn = chains[0].size(), mx = chains[0].size();
    size_t mn_i = 0, mx_i = 0;
    for (size_t i = 1; i < chains.size(); ++i) {
        if (chains[i].size() < mn) { mn = chains[i].size(); mn_i = i; }
        if (chains[i].size() > mx) { mx = chains[i].size(); mx_i = i; }
    }
    if (mn == mx) {
        info.graded = true;
        info.rank = static_cast<int>(mn) + 1; // interior length + the step to top
    } else {
        info.graded = false;
        auto with_ends = [&](const std::vector<int>& c) {
            std::vector<int> full;
            full.push_back(bottom());
            full.insert(full.end(), c.begin(), c.end());
            full.push_back(top());
            return full;
        };
        info.witness_short = with_ends(chains[mn_i]);
        info.witness_long = with_ends(chains[mx_i]);
    }
    return info;
}

std::vector<int> FiniteAtomicLattice::filter_complement(int a) const {
    AtomSet s = set_of(a);
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (!s.subset_of(set_of(i))) out.push_back(i);
    return out;
}

bool FiniteAtomicLattice::equiv_unique(int p) const {
    AtomSet supp = set_of(p);
    for (int a : supp.atoms()) {
        AtomSet reduced = supp - AtomSet::singleton(a);
        if (join_atoms(reduced) == p) return false;
    }
    return true;
}

std::string FiniteAtomicLattice::encode() const {
    std::string out = "LAT1";
    out.push_back(static_cast<char>(n_));
    uint32_t m = static_cast<uint32_t>(family_.size());
    for (int k = 0; k < 4; ++k) out.push_back(static_cast<char>((m >> (8 * k)) & 0xff));
    for (AtomSet s : family_)
        for (int k = 0; k < 4; ++k) out.push_back(static_cast<char>((s.bits >> (8 * k)) & 0xff));
    return out;
}

FiniteAtomicLattice FiniteAtomicLattice::decode(const std::string& bytes) {
    if (bytes.size() < 9 || bytes.compare(0, 4, "LAT1") != 0)
        fail(Errc::parse_error, "bad lattice encoding header");
    int n = static_cast<unsigned char>(bytes[4]);
    uint32_t m = 0;
    for (int k = 0; k < 4; ++k)
        m |= static_cast<uint32_t>(static_cast<unsigned char>(bytes[5 + k])) << (8 * k);
    if (bytes.size() != 9 + 4ull * m) fail(Errc::parse_error, "bad lattice encoding length");
    std::vector<AtomSet> fam;
    fam.reserve(m);
    for (uint32_t i = 0; i < m; ++i) {
        uint32_t b = 0;
        for (int k = 0; k < 4; ++k)
            b |= static_cast<uint32_t>(static_cast<unsigned char>(bytes[9 + 4 * i + k])) << (8 * k);
        fam.push_back(AtomSet(b));
    }
    return from_family(n, std::move(fam));
}

std::string hasse_dot(const FiniteAtomicLattice& L) {
    std::string out = "digraph lattice {\n  rankdir=BT;\n";
    for (int i = 0; i < L.size(); ++i)
        out += "  \"" + L.set_of(i).to_string() + "\";\n";
    for (int i = 0; i < L.size(); ++i)
        for (int c : L.covers_of(i))
            out += "  \"" + L.set_of(i).to_string() + "\" -> \"" + L.set_of(c).to_string() + "\";\n";
    out += "}\n";
    return out;
}

} // namespace lcmlat

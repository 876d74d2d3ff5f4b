#include "lcmlat/labeling.hpp"

#include "lcmlat/errors.hpp"

#include <algorithm>

namespace lcmlat {

void Labeling::normalize() {
    labels.erase(lattice.top());
    for (auto it = labels.begin(); it != labels.end();) {
        if (it->second.is_unit())
            it = labels.erase(it);
        else
            ++it;
    }
}

LabelingVerdict validate_labeling(const Labeling& lab) {
    LabelingVerdict v;
    const FiniteAtomicLattice& L = lab.lattice;
    for (int mi : L.meet_irreducibles()) {
        auto it = lab.labels.find(mi);
        if (it == lab.labels.end() || it->second.is_unit()) {
            v.valid = false;
            v.unlabeled_mi.push_back(mi);
        }
    }
    size_t nv = lab.variables.size();
    for (size_t var = 0; var < nv; ++var) {
        std::vector<int> carriers;
        for (const auto& [el, m] : lab.labels) {
            if (el == L.top()) continue;
            if (!m.exponent(static_cast<int>(var)).is_zero()) carriers.push_back(el);
        }
        for (size_t i = 0; i < carriers.size() && v.valid; ++i)
            for (size_t j = i + 1; j < carriers.size(); ++j) {
                int a = carriers[i], b = carriers[j];
                if (!L.leq(a, b) && !L.leq(b, a)) {
                    v.valid = false;
                    v.var_off_chain.push_back({static_cast<int>(var), {a, b}});
                    break;
                }
            }
    }
    return v;
}

std::string LabelingVerdict::describe(const Labeling& lab) const {
    if (valid) return "valid";
    std::string s;
    for (int el : unlabeled_mi)
        s += "meet-irreducible " + lab.lattice.set_of(el).to_string() + " is unlabeled; ";
    for (const auto& [var, pr] : var_off_chain)
        s += "variable " + lab.variables[static_cast<size_t>(var)] + " labels incomparable elements " +
             lab.lattice.set_of(pr.first).to_string() + " and " +
             lab.lattice.set_of(pr.second).to_string() + "; ";
    if (!s.empty()) s.resize(s.size() - 2);
    return s;
}

MonomialIdeal realize(const Labeling& lab) {
    Labeling norm = lab;
    norm.normalize();
    LabelingVerdict v = validate_labeling(norm);
    if (!v.valid) fail(Errc::invalid_labeling, v.describe(norm));

    const FiniteAtomicLattice& L = norm.lattice;
    std::vector<Monomial> gens;
    for (int atom = 1; atom <= L.atom_count(); ++atom) {
        int a = L.atom_index(atom);
        Monomial g;
        for (int el : L.filter_complement(a)) {
            auto it = norm.labels.find(el);
            if (it != norm.labels.end()) g = g.times(it->second);
        }
        if (g.is_unit())
            fail(Errc::invalid_labeling,
                 "generator for atom " + std::to_string(atom) +
                     " is the unit monomial; the labeling is too sparse");
        gens.push_back(std::move(g));
    }
    MonomialIdeal out = make_ideal_checked(norm.variables, std::move(gens));
#ifndef NDEBUG
    if (!(lcm_lattice(out).lattice == L))
        fail(Errc::internal, "realize: LCM lattice of the realized ideal differs from the input");
#endif
    return out;
}

std::vector<std::string> fresh_variable_names(size_t count, VarNaming naming) {
    std::vector<std::string> out;
    if (naming == VarNaming::letters) {
        if (count > 26)
            fail(Errc::out_of_supported_range, "letter naming supports at most 26 variables");
        for (size_t i = 0; i < count; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
    } else {
        for (size_t i = 0; i < count; ++i) out.push_back("x" + std::to_string(i + 1));
    }
    return out;
}

Labeling minimal_squarefree_labeling(const FiniteAtomicLattice& L, VarNaming naming) {
    Labeling lab;
    lab.lattice = L;
    std::vector<int> mi = L.meet_irreducibles();
    lab.variables = fresh_variable_names(mi.size(), naming);
    for (size_t i = 0; i < mi.size(); ++i) {
        Monomial m;
        m.set_exponent(static_cast<int>(i), BigInt(1));
        lab.labels[mi[i]] = std::move(m);
    }
    return lab;
}

Labeling eccv_labeling(const FiniteAtomicLattice& L, VarNaming naming) {
    if (L.trivial())
        fail(Errc::out_of_supported_range,
             "the one-atom lattice has no interior chain elements to label");
    Labeling lab;
    lab.lattice = L;
    auto chains = L.maximal_chains();
    lab.variables = fresh_variable_names(chains.size(), naming);
    for (size_t j = 0; j < chains.size(); ++j)
        for (int el : chains[j]) {
            Monomial& m = lab.labels[el];
            m.set_exponent(static_cast<int>(j), m.exponent(static_cast<int>(j)) + BigInt(1));
        }
    return lab;
}

Labeling deficit_labeling(const LabeledLattice& LL) {
    const FiniteAtomicLattice& L = LL.lattice;
    Labeling lab;
    lab.lattice = L;
    lab.variables = LL.variables;
    for (int p = 0; p < L.size(); ++p) {
        if (p == L.top()) continue;
        bool first = true;
        Monomial g;
        for (int t = 0; t < L.size(); ++t) {
            if (t == p || !L.leq(p, t)) continue;
            g = first ? LL.multidegrees[static_cast<size_t>(t)]
                      : Monomial::gcd(g, LL.multidegrees[static_cast<size_t>(t)]);
            first = false;
        }
        Monomial label = g.div_exact(LL.multidegrees[static_cast<size_t>(p)]);
        if (!label.is_unit()) lab.labels[p] = std::move(label);
    }
    return lab;
}

bool roundtrip_check(const MonomialIdeal& M) {
    LabeledLattice LL = lcm_lattice(M);
    Labeling lab = deficit_labeling(LL);
    MonomialIdeal back = realize(lab);
    return back == M;
}

} // namespace lcmlat

#include "lcmlat/deformation.hpp"

#include "lcmlat/errors.hpp"
#include "lcmlat/ln.hpp"

#include <algorithm>

namespace lcmlat {

DeformationCheck is_valid_deformation(const Deformation& d) {
    DeformationCheck c;
    size_t gens = d.base.generators.size();
    size_t vars = d.base.variables.size();
    if (d.epsilon.size() != gens)
        fail(Errc::shape_mismatch, "epsilon has " + std::to_string(d.epsilon.size()) +
                                       " rows for " + std::to_string(gens) + " generators");
    for (const auto& row : d.epsilon)
        if (row.size() != vars)
            fail(Errc::shape_mismatch, "epsilon row has " + std::to_string(row.size()) +
                                           " entries for " + std::to_string(vars) + " variables");

    for (size_t s = 0; s < vars; ++s) {
        for (size_t i = 0; i < gens; ++i) {
            const BigInt& mi = d.base.generators[i].exponent(static_cast<int>(s));
            BigInt di = mi + BigInt(d.epsilon[i][s]);
            if (mi.is_zero() && d.epsilon[i][s] != 0) {
                c.valid = false;
                c.reason = "zero";
                c.variable = static_cast<int>(s);
                c.gen_a = static_cast<int>(i);
                return c;
            }
            if (di.is_negative()) {
                c.valid = false;
                c.reason = "negative";
                c.variable = static_cast<int>(s);
                c.gen_a = static_cast<int>(i);
                return c;
            }
            for (size_t j = 0; j < gens; ++j) {
                if (i == j) continue;
                const BigInt& mj = d.base.generators[j].exponent(static_cast<int>(s));
                if (mi < mj) {
                    BigInt dj = mj + BigInt(d.epsilon[j][s]);
                    if (!(di < dj)) {
                        c.valid = false;
                        c.reason = "order";
                        c.variable = static_cast<int>(s);
                        c.gen_a = static_cast<int>(i);
                        c.gen_b = static_cast<int>(j);
                        return c;
                    }
                }
            }
        }
    }
    return c;
}

MonomialIdeal apply(const Deformation& d) {
    size_t vars = d.base.variables.size();
    std::vector<Monomial> gens;
    for (size_t i = 0; i < d.base.generators.size(); ++i) {
        Monomial g;
        for (size_t s = 0; s < vars; ++s) {
            BigInt e = d.base.generators[i].exponent(static_cast<int>(s)) + BigInt(d.epsilon[i][s]);
            if (e.is_negative())
                fail(Errc::bad_argument, "deformation drives an exponent negative");
            g.set_exponent(static_cast<int>(s), std::move(e));
        }
        gens.push_back(std::move(g));
    }
    return make_ideal_checked(d.base.variables, std::move(gens));
}

namespace {

// exponent of the chain-j variable in the generator of atom `a` when every
// interior chain element present in `members` is labeled once by that variable
long long chain_exponent(const std::vector<AtomSet>& chain_sets, const FiniteAtomicLattice& members,
                         int atom) {
    long long c = 0;
    for (AtomSet x : chain_sets)
        if (members.member(x) && !x.contains(atom)) ++c;
    return c;
}

} // namespace

DeformationPair construct_deformation(const FiniteAtomicLattice& P, const FiniteAtomicLattice& Q) {
    if (P.atom_count() != Q.atom_count())
        fail(Errc::atom_count_mismatch, "lattices have different atom counts");
    if (!ln_leq(Q, P)) fail(Errc::not_comparable, "Q is not below P in L(n)");

    Labeling labP = eccv_labeling(P);
    MonomialIdeal m_p = realize(labP);

    // Restriction of the chain labeling to the elements of Q. Every family
    // member of Q is a family member of P, so labels transfer verbatim.
    Labeling labQ;
    labQ.lattice = Q;
    labQ.variables = labP.variables;
    for (int q = 0; q < Q.size(); ++q) {
        if (q == Q.bottom() || q == Q.top()) continue;
        int p = P.index_of(Q.set_of(q));
        auto it = labP.labels.find(p);
        if (it != labP.labels.end()) labQ.labels[q] = it->second;
    }
    MonomialIdeal m_q = realize(labQ);

    size_t vars = m_p.variables.size();
    std::vector<std::vector<long long>> eps(m_p.generators.size(),
                                            std::vector<long long>(vars, 0));
    for (size_t i = 0; i < m_p.generators.size(); ++i)
        for (size_t s = 0; s < vars; ++s)
            eps[i][s] = (m_p.generators[i].exponent(static_cast<int>(s)) -
                         m_q.generators[i].exponent(static_cast<int>(s)))
                            .to_int64();

    DeformationPair out{std::move(m_q), std::move(m_p), {}};
    out.d.base = out.m_q;
    out.d.epsilon = std::move(eps);
    DeformationCheck c = is_valid_deformation(out.d);
    if (!c.valid)
        fail(Errc::internal, "constructed deformation is invalid (" + c.reason + ")");
    if (!(apply(out.d) == out.m_p))
        fail(Errc::internal, "constructed deformation does not reach the chain coordinatization");
    return out;
}

UniversalFamily::UniversalFamily(const FiniteAtomicLattice& Q) : q_(Q) {
    int n = Q.atom_count();
    if (n < 2 || n > 6)
        fail(Errc::out_of_supported_range, "universal families support 2 <= n <= 6");
    FiniteAtomicLattice B = FiniteAtomicLattice::boolean_lattice(n);
    for (const auto& chain : B.maximal_chains()) {
        std::vector<AtomSet> sets;
        for (int el : chain) sets.push_back(B.set_of(el));
        chains_.push_back(std::move(sets));
    }
    Labeling labQ;
    labQ.lattice = Q;
    labQ.variables = fresh_variable_names(chains_.size(), VarNaming::numbered);
    for (int q = 0; q < Q.size(); ++q) {
        if (q == Q.bottom() || q == Q.top()) continue;
        AtomSet s = Q.set_of(q);
        Monomial m;
        for (size_t j = 0; j < chains_.size(); ++j)
            if (std::find(chains_[j].begin(), chains_[j].end(), s) != chains_[j].end())
                m.set_exponent(static_cast<int>(j), BigInt(1));
        if (!m.is_unit()) labQ.labels[q] = std::move(m);
    }
    base_ = realize(labQ);
}

Deformation UniversalFamily::deform_to(const FiniteAtomicLattice& target) const {
    if (target.atom_count() != q_.atom_count())
        fail(Errc::atom_count_mismatch, "target has a different atom count");
    if (!ln_leq(q_, target))
        fail(Errc::not_comparable, "target is not above the base lattice in L(n)");
    int n = q_.atom_count();
    Deformation d;
    d.base = base_;
    d.epsilon.assign(static_cast<size_t>(n), std::vector<long long>(chains_.size(), 0));
    for (int atom = 1; atom <= n; ++atom)
        for (size_t j = 0; j < chains_.size(); ++j)
            d.epsilon[static_cast<size_t>(atom - 1)][j] =
                chain_exponent(chains_[j], target, atom) - chain_exponent(chains_[j], q_, atom);
    DeformationCheck c = is_valid_deformation(d);
    if (!c.valid)
        fail(Errc::internal, "universal family produced an invalid deformation (" + c.reason + ")");
    return d;
}

UniversalFamily universal_family(const FiniteAtomicLattice& Q) { return UniversalFamily(Q); }

} // namespace lcmlat

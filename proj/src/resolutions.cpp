#include "lcmlat/resolutions.hpp"

#include "lcmlat/errors.hpp"
#include "lcmlat/labeling.hpp"
#include "lcmlat/ln.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace lcmlat {

BettiTable betti_table(const FiniteAtomicLattice& L, const FieldSpec& k, BettiVia via) {
    BettiTable t;
    t.field = k;
    t.total.assign(1, 1); // b_0 = 1
    for (int p = 0; p < L.size(); ++p) {
        if (p == L.bottom()) continue;
        HomologyProfile dims;
        if (via == BettiVia::crosscut || via == BettiVia::both)
            dims = reduced_homology(crosscut_open_interval(L, p), k);
        if (via == BettiVia::order || via == BettiVia::both) {
            HomologyProfile od = reduced_homology(order_complex_open_interval(L, p), k);
            if (via == BettiVia::both && od != dims)
                fail(Errc::homotopy_mismatch,
                     "cross-cut and order complex homology disagree at element " +
                         L.set_of(p).to_string());
            dims = od;
        }
        for (const auto& [deg, dim] : dims) {
            int i = deg + 2;
            t.entries[{i, p}] = dim;
            if (t.total.size() <= static_cast<size_t>(i)) t.total.resize(static_cast<size_t>(i) + 1, 0);
            t.total[static_cast<size_t>(i)] += dim;
        }
    }
    return t;
}

SimplicialComplex scarf_complex(const FiniteAtomicLattice& L) {
    std::vector<std::string> labels;
    for (int a = 1; a <= L.atom_count(); ++a) labels.push_back(std::to_string(a));
    std::vector<uint64_t> faces;
    faces.push_back(0); // the empty set joins only to the bottom
    for (int p = 0; p < L.size(); ++p) {
        if (p == L.bottom()) continue;
        if (L.equiv_unique(p)) faces.push_back(L.set_of(p).bits);
    }
    SimplicialComplex X = SimplicialComplex::from_faces(std::move(labels), faces);
    // downward closure check: every subset of a face that is itself a support
    // of a unique join must already be present
    std::set<uint64_t> present(faces.begin(), faces.end());
    for (uint64_t f : X.all_faces())
        if (!present.count(f))
            fail(Errc::internal, "Scarf complex is not downward closed");
    return X;
}

bool is_scarf_resolved(const FiniteAtomicLattice& L, const FieldSpec& k) {
    BettiTable t = betti_table(L, k);
    SimplicialComplex X = scarf_complex(L);
    std::vector<long long> face_count; // face_count[i] = faces of dimension i-1
    for (uint64_t f : X.all_faces()) {
        size_t i = static_cast<size_t>(std::popcount(f));
        if (face_count.size() <= i) face_count.resize(i + 1, 0);
        ++face_count[i];
    }
    size_t m = std::max(face_count.size(), t.total.size());
    for (size_t i = 0; i < m; ++i) {
        long long fc = i < face_count.size() ? face_count[i] : 0;
        if (t.total_at(i) != fc) return false;
    }
    return true;
}

MonomialIdeal strongly_generic_coordinatization(const FiniteAtomicLattice& L) {
    GradedInfo g = L.graded();
    auto chain_str = [&](const std::vector<int>& c) {
        std::string s;
        for (int el : c) s += L.set_of(el).to_string() + " ";
        if (!s.empty()) s.pop_back();
        return s;
    };
    if (!g.graded)
        fail(Errc::not_graded_rank_n, "lattice is not graded: chains " +
                                          chain_str(g.witness_short) + " and " +
                                          chain_str(g.witness_long) + " have different lengths");
    if (g.rank != L.atom_count())
        fail(Errc::not_graded_rank_n, "graded of rank " + std::to_string(g.rank) +
                                          ", expected rank " + std::to_string(L.atom_count()));
    MonomialIdeal M = realize(eccv_labeling(L));
    GenericityReport r = is_strongly_generic(M);
    if (!r.holds)
        fail(Errc::internal, "chain coordinatization of a graded rank-n lattice is not strongly generic");
    return M;
}

FiniteAtomicLattice augmented_face_lattice(const SimplicialComplex& X) {
    if (X.is_void()) fail(Errc::bad_argument, "the void complex has no face lattice");
    int n = X.vertex_count();
    if (n < 1 || n > AtomSet::kMaxAtoms)
        fail(Errc::atom_capacity, "face lattice needs 1..32 vertices");
    std::vector<AtomSet> fam;
    for (uint64_t f : X.all_faces()) fam.push_back(AtomSet(static_cast<uint32_t>(f)));
    fam.push_back(AtomSet::empty_set());
    fam.push_back(AtomSet::full(n));
    return FiniteAtomicLattice::from_family(n, std::move(fam));
}

CellularCertificate supports_resolution(const FiniteAtomicLattice& L,
                                        const SimplicialComplex& X,
                                        const std::vector<int>& vertex_elements,
                                        const FieldSpec& k) {
    if (static_cast<int>(vertex_elements.size()) != X.vertex_count())
        fail(Errc::label_inconsistent, "one lattice element per vertex is required");
    for (int el : vertex_elements)
        if (el < 0 || el >= L.size())
            fail(Errc::label_inconsistent, "vertex label is not a lattice element");

    std::vector<uint64_t> faces = X.all_faces();
    CellularCertificate cert;
    cert.face_labels.resize(faces.size());
    std::map<uint64_t, int> label_of;
    for (size_t fi = 0; fi < faces.size(); ++fi) {
        AtomSet atoms;
        uint64_t f = faces[fi];
        for (int v = 0; v < X.vertex_count(); ++v)
            if ((f >> v) & 1) atoms = atoms | L.set_of(vertex_elements[static_cast<size_t>(v)]);
        int lbl = L.join_atoms(atoms);
        cert.face_labels[fi] = lbl;
        label_of[f] = lbl;
    }

    cert.supports = true;
    for (int p = 0; p < L.size(); ++p) {
        // subcomplex of nonempty faces with label below p; void counts acyclic
        std::vector<uint64_t> sub;
        for (size_t fi = 0; fi < faces.size(); ++fi)
            if (faces[fi] != 0 && L.leq(cert.face_labels[fi], p)) sub.push_back(faces[fi]);
        if (sub.empty()) continue;
        sub.push_back(0);
        SimplicialComplex Xp = SimplicialComplex::from_faces(X.vertex_labels(), sub);
        if (!is_acyclic(Xp, k)) {
            cert.supports = false;
            cert.failures.push_back({"non_acyclic", p, 0, 0});
        }
    }

    bool labels_separate = true;
    for (uint64_t f : faces) {
        if (f == 0) continue;
        for (uint64_t rest = f; rest; rest &= rest - 1) {
            uint64_t g = f ^ (rest & (0ULL - rest));
            if (label_of.at(g) == label_of.at(f)) {
                labels_separate = false;
                cert.failures.push_back({"shared_label", label_of.at(f), g, f});
            }
        }
    }
    cert.minimal = cert.supports && labels_separate;
    return cert;
}

namespace {

std::vector<long long> betti_totals(const FiniteAtomicLattice& L, const FieldSpec& k) {
    return betti_table(L, k).total;
}

bool totals_equal(const std::vector<long long>& a, const std::vector<long long>& b) {
    size_t m = std::max(a.size(), b.size());
    for (size_t i = 0; i < m; ++i) {
        long long x = i < a.size() ? a[i] : 0;
        long long y = i < b.size() ? b[i] : 0;
        if (x != y) return false;
    }
    return true;
}

} // namespace

ScarfFilterReport verify_scarf_filter(const FiniteAtomicLattice& P, const FieldSpec& k,
                                      ScarfFilterMode mode) {
    int n = P.atom_count();
    if (n < 3 || n > 4)
        fail(Errc::out_of_supported_range, "the filter scan enumerates L(n) and supports n = 3, 4");

    ScarfFilterReport rep;
    rep.mode = mode;
    rep.field = k.name();
    rep.interpretation =
        mode == ScarfFilterMode::betti
            ? "stratum = lattices above the base with equal total Betti numbers; "
              "each must be Scarf-resolved with the same Scarf complex"
            : "stratum = lattices above the base with equal total Betti numbers; "
              "hypotheses: covers the base, and all Betti entries are 1 and sit on "
              "maxima of the fibers of the canonical join-preserving map; "
              "conclusion: minimal resolution supported on the base's Scarf complex";

    SimplicialComplex X = scarf_complex(P);
    std::vector<long long> bp = betti_totals(P, k);
    if (mode == ScarfFilterMode::betti && !is_scarf_resolved(P, k))
        fail(Errc::bad_argument, "the base lattice is not resolved by its Scarf complex");

    ln_enumerate(n, [&](const FiniteAtomicLattice& Q) {
        if (!ln_leq(P, Q)) return;
        ++rep.filter_size;
        if (!totals_equal(betti_totals(Q, k), bp)) return;
        ++rep.stratum_size;

        if (mode == ScarfFilterMode::betti) {
            ++rep.checked;
            bool same_scarf = scarf_complex(Q).all_faces() == X.all_faces();
            bool resolved = is_scarf_resolved(Q, k);
            if (!same_scarf || !resolved) {
                std::string why = !same_scarf ? "Scarf complex differs from the base's"
                                              : "not resolved by its Scarf complex";
                rep.counterexamples.push_back({Q, why});
            }
            return;
        }

        // cover mode
        if (Q.size() != P.size() + 1) {
            ++rep.skipped_hypotheses;
            return;
        }
        std::vector<int> psi = canonical_map(Q, P);
        // maxima of the fibers: each fiber is join-closed, its maximum carries
        // the largest support
        std::set<int> fiber_max;
        for (int p = 0; p < P.size(); ++p) {
            int best = -1;
            for (int q = 0; q < Q.size(); ++q)
                if (psi[static_cast<size_t>(q)] == p && (best < 0 || Q.leq(best, q))) best = q;
            if (best >= 0) fiber_max.insert(best);
        }
        BettiTable bq = betti_table(Q, k);
        bool concentrated = true;
        for (const auto& [key, dim] : bq.entries) {
            if (dim != 1 || !fiber_max.count(key.second)) {
                concentrated = false;
                break;
            }
        }
        if (!concentrated) {
            ++rep.skipped_hypotheses;
            return;
        }
        ++rep.checked;
        std::vector<int> vertex_elements;
        for (int a = 1; a <= n; ++a) vertex_elements.push_back(Q.atom_index(a));
        CellularCertificate cert = supports_resolution(Q, X, vertex_elements, k);
        if (!cert.supports || !cert.minimal) {
            std::string why = !cert.supports ? "resolution not supported on the base Scarf complex"
                                             : "supported but not minimally";
            rep.counterexamples.push_back({Q, why});
        }
    });
    return rep;
}

} // namespace lcmlat

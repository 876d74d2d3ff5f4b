#pragma once

#include "lcmlat/bigint.hpp"
#include "lcmlat/lattice.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lcmlat {

// Coefficient field for homology: the rationals or a prime field.
struct FieldSpec {
    enum class Kind { rationals, prime } kind = Kind::rationals;
    long long p = 0; // modulus when kind == prime

    static FieldSpec rationals() { return FieldSpec{}; }
    static FieldSpec prime(long long p); // validates primality
    static FieldSpec parse(const std::string& s); // "q" | "f2" | "fp:<p>"
    std::string name() const;
    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

// A finite simplicial complex on at most 64 labeled vertices. Faces are vertex
// subsets encoded as bit masks; only the inclusion-maximal faces are stored.
//
// Three degenerate states are distinguished:
//   void complex   — no faces at all (not even the empty face)
//   empty complex  — exactly the empty face
//   nonempty       — at least one vertex
// The distinction matters: reduced homology of the empty complex is k in
// degree -1, while the void complex is acyclic.
class SimplicialComplex {
public:
    static constexpr int kMaxVertices = 64;

    static SimplicialComplex void_complex(std::vector<std::string> vertex_labels);
    static SimplicialComplex empty_complex(std::vector<std::string> vertex_labels);
    // Downward-closes the given faces and keeps the maximal ones. An empty
    // list yields the void complex; {0} yields the empty complex.
    static SimplicialComplex from_faces(std::vector<std::string> vertex_labels,
                                        const std::vector<uint64_t>& faces);

    bool is_void() const { return !has_any_face_; }
    bool is_empty() const { return has_any_face_ && facets_.size() == 1 && facets_[0] == 0; }

    int vertex_count() const { return static_cast<int>(vertex_labels_.size()); }
    const std::vector<std::string>& vertex_labels() const { return vertex_labels_; }
    const std::vector<uint64_t>& facets() const { return facets_; }

    // -1 for the empty complex; meaningless (-2) for the void complex.
    int dim() const;

    // All faces including the empty face (when present), sorted ascending by
    // (popcount, mask value): the canonical basis order for boundary matrices.
    std::vector<uint64_t> all_faces() const;

    bool operator==(const SimplicialComplex&) const = default;

private:
    std::vector<std::string> vertex_labels_;
    std::vector<uint64_t> facets_; // maximal faces; {0} means only the empty face
    bool has_any_face_ = false;
};

// dims[i] = dim_k H~_i; zero entries omitted. Degrees run from -1 upward.
using HomologyProfile = std::map<int, long long>;

HomologyProfile reduced_homology(const SimplicialComplex& X, const FieldSpec& k);
bool is_acyclic(const SimplicialComplex& X, const FieldSpec& k);

// Cross-cut complex of the open interval (0, p): vertices are atoms below p,
// a subset is a face iff its join lies strictly below p. Empty complex when p
// is an atom.
SimplicialComplex crosscut_open_interval(const FiniteAtomicLattice& L, int p);

// Order complex of the open interval (0, p): vertices are the elements
// strictly between, faces are the chains among them.
SimplicialComplex order_complex_open_interval(const FiniteAtomicLattice& L, int p);

// Exact rank of an integer matrix (as BigInt entries) over the given field;
// rows x cols, row-major. Bareiss fraction-free elimination over Q, ordinary
// elimination over prime fields.
long long matrix_rank(std::vector<std::vector<BigInt>> m, const FieldSpec& k);

} // namespace lcmlat

#include "lcmlat/complex.hpp"

#include "lcmlat/errors.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace lcmlat {

FieldSpec FieldSpec::prime(long long p) {
    if (p < 2) fail(Errc::bad_argument, "field modulus must be >= 2");
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) fail(Errc::bad_argument, std::to_string(p) + " is not prime");
    FieldSpec f;
    f.kind = Kind::prime;
    f.p = p;
    return f;
}

FieldSpec FieldSpec::parse(const std::string& s) {
    if (s == "q" || s == "Q") return rationals();
    if (s == "f2" || s == "F2") return prime(2);
    if (s.rfind("fp:", 0) == 0) return prime(std::stoll(s.substr(3)));
    fail(Errc::parse_error, "unknown field spec '" + s + "' (expected q, f2 or fp:<p>)");
}

std::string FieldSpec::name() const {
    return kind == Kind::rationals ? "Q" : "F" + std::to_string(p);
}

SimplicialComplex SimplicialComplex::void_complex(std::vector<std::string> vertex_labels) {
    SimplicialComplex X;
    X.vertex_labels_ = std::move(vertex_labels);
    return X;
}

SimplicialComplex SimplicialComplex::empty_complex(std::vector<std::string> vertex_labels) {
    SimplicialComplex X;
    X.vertex_labels_ = std::move(vertex_labels);
    X.has_any_face_ = true;
    X.facets_ = {0};
    return X;
}

SimplicialComplex SimplicialComplex::from_faces(std::vector<std::string> vertex_labels,
                                                const std::vector<uint64_t>& faces) {
    if (vertex_labels.size() > kMaxVertices)
        fail(Errc::out_of_supported_range, "simplicial complexes support at most 64 vertices");
    SimplicialComplex X;
    X.vertex_labels_ = std::move(vertex_labels);
    if (faces.empty()) return X;
    X.has_any_face_ = true;
    std::vector<uint64_t> fs = faces;
    std::sort(fs.begin(), fs.end());
    fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
    for (uint64_t f : fs) {
        bool maximal = true;
        for (uint64_t g : fs)
            if (g != f && (f & ~g) == 0) {
                maximal = false;
                break;
            }
        if (maximal) X.facets_.push_back(f);
    }
    return X;
}

int SimplicialComplex::dim() const {
    if (is_void()) return -2;
    int d = -1;
    for (uint64_t f : facets_) d = std::max(d, std::popcount(f) - 1);
    return d;
}

std::vector<uint64_t> SimplicialComplex::all_faces() const {
    if (is_void()) return {};
    std::set<uint64_t> seen;
    // expand each facet's subset lattice
    for (uint64_t f : facets_) {
        uint64_t sub = f;
        while (true) {
            seen.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & f;
        }
    }
    std::vector<uint64_t> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](uint64_t a, uint64_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        return a < b;
    });
    return out;
}

namespace {

long long rank_rationals(std::vector<std::vector<BigInt>>& m) {
    // Bareiss fraction-free elimination; entries stay integral, every
    // division is exact by the previous pivot.
    size_t rows = m.size();
    if (rows == 0) return 0;
    size_t cols = m[0].size();
    BigInt prev(1);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = r;
        while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j)
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]).div_exact(prev);
            m[i][c] = BigInt(0);
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<long long>(r);
}

long long rank_prime(std::vector<std::vector<BigInt>>& bm, long long p) {
    size_t rows = bm.size();
    if (rows == 0) return 0;
    size_t cols = bm[0].size();
    std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols, 0));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) {
            BigInt q, rmd;
            BigInt::divrem(bm[i][j], BigInt(p), q, rmd);
            long long v = rmd.is_zero() ? 0 : rmd.to_int64();
            m[i][j] = (v % p + p) % p;
        }
    auto inv = [&](long long a) {
        // extended Euclid
        long long t = 0, newt = 1, rr = p, newr = a;
        while (newr != 0) {
            long long q = rr / newr;
            long long tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = rr - q * newr;
            rr = newr;
            newr = tmp;
        }
        return (t % p + p) % p;
    };
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[r]);
        long long pi = inv(m[r][c]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            long long factor = (__int128)m[i][c] * pi % p;
            for (size_t j = c; j < cols; ++j) {
                long long v = m[i][j] - (__int128)factor * m[r][j] % p;
                m[i][j] = (v % p + p) % p;
            }
        }
        ++r;
    }
    return static_cast<long long>(r);
}

} // namespace

long long matrix_rank(std::vector<std::vector<BigInt>> m, const FieldSpec& k) {
    if (k.kind == FieldSpec::Kind::rationals) return rank_rationals(m);
    return rank_prime(m, k.p);
}

HomologyProfile reduced_homology(const SimplicialComplex& X, const FieldSpec& k) {
    HomologyProfile dims;
    if (X.is_void()) return dims;

    std::vector<uint64_t> faces = X.all_faces();
    // group per dimension, record index within dimension
    int maxdim = X.dim();
    std::vector<std::vector<uint64_t>> by_dim(static_cast<size_t>(maxdim + 2));
    std::map<uint64_t, size_t> pos;
    for (uint64_t f : faces) {
        int d = std::popcount(f) - 1;
        pos[f] = by_dim[static_cast<size_t>(d + 1)].size();
        by_dim[static_cast<size_t>(d + 1)].push_back(f);
    }

    // rank of each boundary map d_i : C_i -> C_{i-1}, i from 0 to maxdim
    // (d_{-1} is zero). Stored at index i+1.
    std::vector<long long> bd_rank(static_cast<size_t>(maxdim + 3), 0);
    for (int d = 0; d <= maxdim; ++d) {
        const auto& dom = by_dim[static_cast<size_t>(d + 1)];
        const auto& cod = by_dim[static_cast<size_t>(d)];
        if (dom.empty() || cod.empty()) continue;
        std::vector<std::vector<BigInt>> m(cod.size(), std::vector<BigInt>(dom.size(), BigInt(0)));
        for (size_t j = 0; j < dom.size(); ++j) {
            uint64_t f = dom[j];
            int sign = 1;
            for (uint64_t rest = f; rest; rest &= rest - 1) {
                uint64_t v = rest & (0ULL - rest); // lowest set bit
                uint64_t g = f ^ v;
                m[pos.at(g)][j] = BigInt(sign);
                sign = -sign;
            }
        }
        bd_rank[static_cast<size_t>(d + 1)] = matrix_rank(std::move(m), k);
    }

    for (int d = -1; d <= maxdim; ++d) {
        long long fi = static_cast<long long>(by_dim[static_cast<size_t>(d + 1)].size());
        long long h = fi - bd_rank[static_cast<size_t>(d + 1)] - bd_rank[static_cast<size_t>(d + 2)];
        if (h != 0) dims[d] = h;
    }
    return dims;
}

bool is_acyclic(const SimplicialComplex& X, const FieldSpec& k) {
    return reduced_homology(X, k).empty();
}

SimplicialComplex crosscut_open_interval(const FiniteAtomicLattice& L, int p) {
    if (p == L.bottom()) fail(Errc::bad_argument, "open interval below the bottom element is empty");
    // atoms strictly below p: all of supp(p) unless p itself is an atom
    std::vector<int> verts;
    if (L.set_of(p).count() >= 2) verts = L.set_of(p).atoms();
    std::vector<std::string> labels;
    for (int a : verts) labels.push_back(std::to_string(a));
    // Faces: T with join(T) < p, found by DFS; the property is downward
    // closed, so extending only while it holds is exhaustive.
    std::vector<uint64_t> faces;
    auto join_lt_p = [&](uint64_t mask) {
        AtomSet s;
        for (size_t i = 0; i < verts.size(); ++i)
            if ((mask >> i) & 1) s = s | AtomSet::singleton(verts[i]);
        int j = L.join_atoms(s);
        return j != p && L.leq(j, p);
    };
    auto dfs = [&](auto&& self, uint64_t mask, size_t next) -> void {
        faces.push_back(mask);
        for (size_t i = next; i < verts.size(); ++i) {
            uint64_t m2 = mask | (1ULL << i);
            if (join_lt_p(m2)) self(self, m2, i + 1);
        }
    };
    dfs(dfs, 0, 0);
    return SimplicialComplex::from_faces(std::move(labels), faces);
}

SimplicialComplex order_complex_open_interval(const FiniteAtomicLattice& L, int p) {
    if (p == L.bottom()) fail(Errc::bad_argument, "open interval below the bottom element is empty");
    std::vector<int> verts;
    for (int i = 0; i < L.size(); ++i)
        if (i != L.bottom() && i != p && L.leq(i, p)) verts.push_back(i);
    if (verts.size() > SimplicialComplex::kMaxVertices)
        fail(Errc::out_of_supported_range, "order complex interval has more than 64 elements");
    std::vector<std::string> labels;
    for (int v : verts) labels.push_back(L.set_of(v).to_string());
    // faces = chains; DFS extending by comparable larger elements. Elements
    // are sorted by bit encoding, so q < r in the lattice implies q comes
    // before r in verts.
    std::vector<uint64_t> faces;
    auto dfs = [&](auto&& self, uint64_t mask, size_t last, size_t next) -> void {
        faces.push_back(mask);
        for (size_t i = next; i < verts.size(); ++i) {
            if (mask == 0 || L.leq(verts[last], verts[i])) {
                self(self, mask | (1ULL << i), i, i + 1);
            }
        }
    };
    dfs(dfs, 0, 0, 0);
    return SimplicialComplex::from_faces(std::move(labels), faces);
}

} // namespace lcmlat

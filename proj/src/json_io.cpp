#include "lcmlat/json_io.hpp"

#include "lcmlat/errors.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace lcmlat {

namespace {

Json exponent_to_json(const BigInt& e) {
    if (e.fits_int64()) return Json(e.to_int64());
    return Json(e.to_string());
}

BigInt exponent_from_json(const Json& j) {
    if (j.is_number_integer()) return BigInt(j.get<long long>());
    if (j.is_string()) return BigInt::from_string(j.get<std::string>());
    fail(Errc::parse_error, "exponent must be an integer or a decimal string");
}

Json set_to_json(AtomSet s) {
    Json arr = Json::array();
    for (int a : s.atoms()) arr.push_back(a);
    return arr;
}

AtomSet set_from_json(const Json& j) {
    if (!j.is_array()) fail(Errc::parse_error, "atom set must be an array");
    AtomSet s;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            fail(Errc::parse_error, "atom set entries must be integers");
        long long a = v.get<long long>();
        if (a < 1 || a > AtomSet::kMaxAtoms)
            fail(Errc::parse_error, "atom " + std::to_string(a) + " outside 1..32");
        s = s | AtomSet::singleton(static_cast<int>(a));
    }
    return s;
}

AtomSet set_from_key(const std::string& key) {
    AtomSet s;
    if (key.empty()) return s;
    std::stringstream ss(key);
    std::string item;
    while (std::getline(ss, item, ',')) {
        int a = std::stoi(item);
        if (a < 1 || a > AtomSet::kMaxAtoms)
            fail(Errc::parse_error, "atom " + item + " outside 1..32");
        s = s | AtomSet::singleton(a);
    }
    return s;
}

std::vector<Json> exponent_row(const Monomial& m, size_t nvars) {
    std::vector<Json> row;
    for (size_t v = 0; v < nvars; ++v) row.push_back(exponent_to_json(m.exponent(static_cast<int>(v))));
    return row;
}

Monomial monomial_from_row(const Json& row, size_t nvars) {
    if (!row.is_array() || row.size() != nvars)
        fail(Errc::parse_error, "exponent row length must match the variable count");
    Monomial m;
    for (size_t v = 0; v < nvars; ++v) m.set_exponent(static_cast<int>(v), exponent_from_json(row[v]));
    return m;
}

} // namespace

Json lattice_to_json(const FiniteAtomicLattice& L) {
    std::vector<AtomSet> sorted = L.family();
    std::sort(sorted.begin(), sorted.end(), size_lex_less);
    Json j;
    j["n"] = L.atom_count();
    Json arr = Json::array();
    for (AtomSet s : sorted) arr.push_back(set_to_json(s));
    j["sets"] = arr;
    return j;
}

FiniteAtomicLattice lattice_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("sets"))
        fail(Errc::parse_error, "lattice JSON needs keys \"n\" and \"sets\"");
    int n = j["n"].get<int>();
    std::vector<AtomSet> sets;
    for (const auto& s : j["sets"]) sets.push_back(set_from_json(s));
    return FiniteAtomicLattice::from_family(n, std::move(sets));
}

Json complex_to_json(const SimplicialComplex& X) {
    Json j;
    Json verts = Json::array();
    for (const auto& v : X.vertex_labels()) verts.push_back(v);
    j["vertices"] = verts;
    Json facets = Json::array();
    if (!X.is_void()) {
        for (uint64_t f : X.facets()) {
            Json face = Json::array();
            for (int v = 0; v < X.vertex_count(); ++v)
                if ((f >> v) & 1) face.push_back(X.vertex_labels()[static_cast<size_t>(v)]);
            facets.push_back(face);
        }
    }
    j["facets"] = facets;
    return j;
}

SimplicialComplex complex_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("facets"))
        fail(Errc::parse_error, "complex JSON needs keys \"vertices\" and \"facets\"");
    std::vector<std::string> labels;
    for (const auto& v : j["vertices"]) {
        if (v.is_string())
            labels.push_back(v.get<std::string>());
        else if (v.is_number_integer())
            labels.push_back(std::to_string(v.get<long long>()));
        else
            fail(Errc::parse_error, "vertex labels must be strings or integers");
    }
    if (labels.size() > SimplicialComplex::kMaxVertices)
        fail(Errc::out_of_supported_range, "complexes support at most 64 vertices");
    std::vector<uint64_t> faces;
    for (const auto& face : j["facets"]) {
        uint64_t mask = 0;
        for (const auto& v : face) {
            std::string name = v.is_string() ? v.get<std::string>() : std::to_string(v.get<long long>());
            auto it = std::find(labels.begin(), labels.end(), name);
            if (it == labels.end())
                fail(Errc::parse_error, "facet vertex '" + name + "' is not in the vertex list");
            mask |= 1ULL << (it - labels.begin());
        }
        faces.push_back(mask);
    }
    return SimplicialComplex::from_faces(std::move(labels), faces);
}

Json ideal_to_json(const MonomialIdeal& M) {
    Json j;
    j["vars"] = M.variables;
    Json gens = Json::array();
    for (const auto& g : M.generators) gens.push_back(exponent_row(g, M.variables.size()));
    j["gens"] = gens;
    return j;
}

MonomialIdeal ideal_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("gens"))
        fail(Errc::parse_error, "ideal JSON needs keys \"vars\" and \"gens\"");
    std::vector<std::string> vars = j["vars"].get<std::vector<std::string>>();
    std::vector<Monomial> gens;
    for (const auto& row : j["gens"]) gens.push_back(monomial_from_row(row, vars.size()));
    return make_ideal_checked(std::move(vars), std::move(gens));
}

Json labeling_to_json(const Labeling& lab) {
    Json j;
    j["lattice"] = lattice_to_json(lab.lattice);
    j["vars"] = lab.variables;
    Json labels = Json::object();
    for (const auto& [el, m] : lab.labels)
        labels[lab.lattice.set_of(el).key()] = exponent_row(m, lab.variables.size());
    j["labels"] = labels;
    return j;
}

Labeling labeling_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("lattice") || !j.contains("vars") || !j.contains("labels"))
        fail(Errc::parse_error, "labeling JSON needs keys \"lattice\", \"vars\" and \"labels\"");
    Labeling lab;
    lab.lattice = lattice_from_json(j["lattice"]);
    lab.variables = j["vars"].get<std::vector<std::string>>();
    for (const auto& [key, row] : j["labels"].items()) {
        AtomSet s = set_from_key(key);
        int el = lab.lattice.index_of(s);
        if (el < 0)
            fail(Errc::parse_error, "label key " + s.to_string() + " is not a lattice element");
        lab.labels[el] = monomial_from_row(row, lab.variables.size());
    }
    lab.normalize();
    return lab;
}

Json labeled_lattice_to_json(const LabeledLattice& LL) {
    Json j;
    j["lattice"] = lattice_to_json(LL.lattice);
    j["vars"] = LL.variables;
    Json degs = Json::object();
    for (int i = 0; i < LL.lattice.size(); ++i)
        degs[LL.lattice.set_of(i).key()] =
            exponent_row(LL.multidegrees[static_cast<size_t>(i)], LL.variables.size());
    j["multidegrees"] = degs;
    return j;
}

Json betti_to_json(const BettiTable& t, const FiniteAtomicLattice& L) {
    Json j;
    j["field"] = t.field.name();
    j["total"] = t.total;
    Json entries = Json::array();
    for (const auto& [key, dim] : t.entries) {
        Json e;
        e["i"] = key.first;
        e["set"] = set_to_json(L.set_of(key.second));
        e["dim"] = dim;
        entries.push_back(e);
    }
    j["entries"] = entries;
    return j;
}

std::string betti_to_text(const BettiTable& t, const FiniteAtomicLattice& L) {
    std::string out = "field: " + t.field.name() + "\ntotal:";
    for (long long b : t.total) out += " " + std::to_string(b);
    out += "\n";
    size_t w = 0;
    for (const auto& [key, dim] : t.entries)
        w = std::max(w, L.set_of(key.second).to_string().size());
    for (const auto& [key, dim] : t.entries) {
        std::string set = L.set_of(key.second).to_string();
        out += "b_" + std::to_string(key.first) + "," + set +
               std::string(w - set.size() + 1, ' ') + "= " + std::to_string(dim) + "\n";
    }
    return out;
}

Json deformation_to_json(const Deformation& d) {
    Json j;
    j["base"] = ideal_to_json(d.base);
    j["epsilon"] = d.epsilon;
    return j;
}

Deformation deformation_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("base") || !j.contains("epsilon"))
        fail(Errc::parse_error, "deformation JSON needs keys \"base\" and \"epsilon\"");
    Deformation d;
    d.base = ideal_from_json(j["base"]);
    d.epsilon = j["epsilon"].get<std::vector<std::vector<long long>>>();
    return d;
}

Json certificate_to_json(const CellularCertificate& cert, const FiniteAtomicLattice& L,
                         const SimplicialComplex& X) {
    Json j;
    j["supports"] = cert.supports;
    j["minimal"] = cert.minimal;
    Json labels = Json::object();
    std::vector<uint64_t> faces = X.all_faces();
    for (size_t fi = 0; fi < faces.size(); ++fi) {
        std::string key;
        for (int v = 0; v < X.vertex_count(); ++v)
            if ((faces[fi] >> v) & 1) {
                if (!key.empty()) key += ',';
                key += X.vertex_labels()[static_cast<size_t>(v)];
            }
        labels[key] = set_to_json(L.set_of(cert.face_labels[fi]));
    }
    j["face_labels"] = labels;
    Json failures = Json::array();
    for (const auto& f : cert.failures) {
        Json e;
        e["kind"] = f.kind;
        e["element"] = set_to_json(L.set_of(f.element));
        if (f.kind == "shared_label") {
            auto face_names = [&](uint64_t mask) {
                Json arr = Json::array();
                for (int v = 0; v < X.vertex_count(); ++v)
                    if ((mask >> v) & 1) arr.push_back(X.vertex_labels()[static_cast<size_t>(v)]);
                return arr;
            };
            e["faces"] = Json::array({face_names(f.face_a), face_names(f.face_b)});
        }
        failures.push_back(e);
    }
    j["failures"] = failures;
    return j;
}

Json scarf_report_to_json(const ScarfFilterReport& rep) {
    Json j;
    j["mode"] = rep.mode == ScarfFilterMode::betti ? "betti" : "cover";
    j["field"] = rep.field;
    j["interpretation"] = rep.interpretation;
    j["filter_size"] = rep.filter_size;
    j["stratum_size"] = rep.stratum_size;
    j["checked"] = rep.checked;
    j["skipped_hypotheses"] = rep.skipped_hypotheses;
    Json ces = Json::array();
    for (const auto& ce : rep.counterexamples) {
        Json e;
        e["lattice"] = lattice_to_json(ce.lattice);
        e["reason"] = ce.reason;
        ces.push_back(e);
    }
    j["counterexamples"] = ces;
    return j;
}

bool looks_like_lattice_json(const std::string& content) {
    size_t i = content.find_first_not_of(" \t\r\n");
    if (i == std::string::npos || content[i] != '{') return false;
    Json j = Json::parse(content, nullptr, false);
    return j.is_object() && j.contains("sets");
}

FiniteAtomicLattice load_lattice_arg(const std::string& content) {
    size_t i = content.find_first_not_of(" \t\r\n");
    if (i != std::string::npos && content[i] == '{') {
        Json j = Json::parse(content, nullptr, false);
        if (j.is_discarded()) fail(Errc::parse_error, "malformed JSON input");
        if (j.contains("sets")) return lattice_from_json(j);
        if (j.contains("gens")) return lcm_lattice(ideal_from_json(j)).lattice;
        fail(Errc::parse_error, "JSON input is neither a lattice nor an ideal");
    }
    return lcm_lattice(parse_ideal_text(content)).lattice;
}

MonomialIdeal load_ideal_arg(const std::string& content) {
    size_t i = content.find_first_not_of(" \t\r\n");
    if (i != std::string::npos && content[i] == '{') {
        Json j = Json::parse(content, nullptr, false);
        if (j.is_discarded()) fail(Errc::parse_error, "malformed JSON input");
        if (j.contains("gens")) return ideal_from_json(j);
        fail(Errc::parse_error, "JSON input is not an ideal");
    }
    std::string text = content;
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    return parse_ideal_text(text);
}

} // namespace lcmlat

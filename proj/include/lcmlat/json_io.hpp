#pragma once

#include "lcmlat/complex.hpp"
#include "lcmlat/deformation.hpp"
#include "lcmlat/ideal.hpp"
#include "lcmlat/labeling.hpp"
#include "lcmlat/lattice.hpp"
#include "lcmlat/resolutions.hpp"

#include <json.hpp>

#include <string>

namespace lcmlat {

using Json = nlohmann::ordered_json;

// {"n": 4, "sets": [[], [1], [2], ..., [1,2,3,4]]}, sets sorted by
// (size, lexicographic); import accepts any order and validates.
Json lattice_to_json(const FiniteAtomicLattice& L);
FiniteAtomicLattice lattice_from_json(const Json& j);

// {"vertices": ["1", ...], "facets": [["1","2"], ...]}; facets [] is the void
// complex, [[]] the empty one.
Json complex_to_json(const SimplicialComplex& X);
SimplicialComplex complex_from_json(const Json& j);

// {"vars": [...], "gens": [[exponents], ...]}; exponents that do not fit a
// 64-bit integer are strings.
Json ideal_to_json(const MonomialIdeal& M);
MonomialIdeal ideal_from_json(const Json& j);

// {"lattice": ..., "vars": [...], "labels": {"1,2": [exponents], "": [...]}}
// with elements keyed by their comma-joined support ("" for the bottom).
Json labeling_to_json(const Labeling& lab);
Labeling labeling_from_json(const Json& j);

Json labeled_lattice_to_json(const LabeledLattice& LL);

Json betti_to_json(const BettiTable& t, const FiniteAtomicLattice& L);
std::string betti_to_text(const BettiTable& t, const FiniteAtomicLattice& L);

// {"base": <ideal>, "epsilon": [[...], ...]}
Json deformation_to_json(const Deformation& d);
Deformation deformation_from_json(const Json& j);

Json certificate_to_json(const CellularCertificate& cert, const FiniteAtomicLattice& L,
                         const SimplicialComplex& X);
Json scarf_report_to_json(const ScarfFilterReport& rep);

// Content sniffing for commands that take either a lattice or an ideal:
// JSON objects are told apart by their keys, anything else parses as ideal text.
FiniteAtomicLattice load_lattice_arg(const std::string& content);
MonomialIdeal load_ideal_arg(const std::string& content);
bool looks_like_lattice_json(const std::string& content);

} // namespace lcmlat

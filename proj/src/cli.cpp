#include "lcmlat/cli.hpp"

#include "lcmlat/deformation.hpp"
#include "lcmlat/errors.hpp"
#include "lcmlat/json_io.hpp"
#include "lcmlat/labeling.hpp"
#include "lcmlat/ln.hpp"
#include "lcmlat/resolutions.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace lcmlat {

namespace {

AtomSet set_from_json_checked(const Json& arr) {
    AtomSet a;
    for (const auto& v : arr) {
        if (!v.is_number_integer())
            fail(Errc::parse_error, "atom set entries must be integers");
        long long atom = v.get<long long>();
        if (atom < 1 || atom > AtomSet::kMaxAtoms)
            fail(Errc::parse_error, "atom " + std::to_string(atom) + " outside 1..32");
        a = a | AtomSet::singleton(static_cast<int>(atom));
    }
    return a;
}

std::string slurp(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) fail(Errc::bad_argument, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

Json error_json(const Error& e) {
    Json j;
    j["error"] = errc_name(e.code());
    j["message"] = e.what();
    return j;
}

struct Options {
    std::string input, input_b;
    std::string from_path, to_path;
    std::string scheme = "eccv";
    std::string field = "q";
    std::string via = "crosscut";
    std::string format;
    std::string mode = "betti";
    int n = 0;
    int jobs = 0;
    bool count_only = false;
    bool letters = false;
    bool emit_labeling = false;
};

VarNaming naming_of(const Options& o) {
    return o.letters ? VarNaming::letters : VarNaming::numbered;
}

int effective_jobs(int jobs) {
    if (jobs > 0) return jobs;
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

} // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::istream& in) {
    CLI::App app{"exact computations with finite atomic lattices and monomial ideals"};
    app.require_subcommand(1);
    Options o;

    auto* lattice = app.add_subcommand("lattice", "validate, inspect or draw a lattice");
    lattice->require_subcommand(1);
    auto* lat_validate = lattice->add_subcommand("validate", "check the lattice axioms");
    lat_validate->add_option("input", o.input)->required();
    auto* lat_info = lattice->add_subcommand("info", "size, gradedness, meet-irreducibles, chains");
    lat_info->add_option("input", o.input)->required();
    auto* lat_hasse = lattice->add_subcommand("hasse", "Hasse diagram");
    lat_hasse->add_option("input", o.input)->required();
    lat_hasse->add_option("--format", o.format);

    auto* lcm = app.add_subcommand("lcm", "LCM lattice of a monomial ideal");
    lcm->add_option("input", o.input)->required();

    auto* coord = app.add_subcommand("coordinatize", "label a lattice and realize the ideal");
    coord->add_option("input", o.input)->required();
    coord->add_option("--scheme", o.scheme, "eccv and min-squarefree take a lattice, deficit takes an ideal")
        ->check(CLI::IsMember({"eccv", "min-squarefree", "deficit"}))
        ;
    coord->add_flag("--letters", o.letters, "name variables a..z instead of x1..");
    coord->add_flag("--labeling", o.emit_labeling, "print the labeling instead of the ideal");
    coord->add_option("--format", o.format);

    auto* roundtrip = app.add_subcommand("roundtrip", "deficit labels of the LCM lattice reproduce the ideal");
    roundtrip->add_option("input", o.input)->required();

    auto* betti = app.add_subcommand("betti", "multigraded Betti numbers of a lattice");
    betti->add_option("input", o.input)->required();
    betti->add_option("--field", o.field);
    betti->add_option("--via", o.via)
        ->check(CLI::IsMember({"crosscut", "order", "both"}))
        ;
    betti->add_option("--format", o.format);

    auto* scarf = app.add_subcommand("scarf", "Scarf complex of a lattice");
    scarf->add_option("input", o.input)->required();

    auto* scarf_res = app.add_subcommand("scarf-resolved", "do Betti totals equal Scarf face counts");
    scarf_res->add_option("input", o.input)->required();
    scarf_res->add_option("--field", o.field);

    auto* gencoord = app.add_subcommand("generic-coordinatize",
                                        "strongly generic ideal from a graded rank-n lattice");
    gencoord->add_option("input", o.input)->required();
    gencoord->add_flag("--letters", o.letters);

    auto* ln = app.add_subcommand("ln", "navigate or enumerate the lattice of lattices");
    ln->require_subcommand(1);
    auto* ln_enum = ln->add_subcommand("enumerate", "all finite atomic lattices on n atoms");
    ln_enum->add_option("-n", o.n)->required();
    ln_enum->add_flag("--count-only", o.count_only);
    ln_enum->add_option("--jobs", o.jobs);
    auto* ln_covers = ln->add_subcommand("covers", "upper and lower covers in L(n)");
    ln_covers->add_option("input", o.input)->required();
    auto* ln_meet_cmd = ln->add_subcommand("meet", "meet of two lattices in L(n)");
    ln_meet_cmd->add_option("a", o.input)->required();
    ln_meet_cmd->add_option("b", o.input_b)->required();
    auto* ln_join_cmd = ln->add_subcommand("join", "join of two lattices in L(n)");
    ln_join_cmd->add_option("a", o.input)->required();
    ln_join_cmd->add_option("b", o.input_b)->required();
    auto* ln_mi = ln->add_subcommand("mi", "meet-irreducible elements of L(n)");
    ln_mi->add_option("-n", o.n)->required();
    auto* ln_rank_cmd = ln->add_subcommand("rank", "height above the minimal element of L(n)");
    ln_rank_cmd->add_option("input", o.input)->required();

    auto* deform = app.add_subcommand("deform", "realize a relation in L(n) as a deformation");
    deform->add_option("--from", o.from_path, "the lower lattice Q")->required();
    deform->add_option("--to", o.to_path, "the upper lattice P")->required();

    auto* universal = app.add_subcommand("universal-family",
                                         "coordinatization of Q deforming onto everything above it");
    universal->add_option("input", o.input)->required();
    universal->add_option("--to", o.to_path, "also emit the deformation onto this lattice");

    auto* verify = app.add_subcommand("verify", "experiment harnesses");
    verify->require_subcommand(1);
    auto* scarf_filter = verify->add_subcommand("scarf-filter",
                                                "scan the filter above a lattice for Scarf behavior");
    scarf_filter->add_option("input", o.input)->required();
    scarf_filter->add_option("--mode", o.mode)
        ->check(CLI::IsMember({"betti", "cover"}))
        ;
    scarf_filter->add_option("--field", o.field);

    auto* support = app.add_subcommand("support-check",
                                       "does a labeled complex support the minimal resolution");
    support->add_option("input", o.input)->required();
    support->add_option("--field", o.field);

    try {
        std::vector<const char*> argv;
        std::vector<std::string> storage = args;
        storage.insert(storage.begin(), "lcmlat");
        for (const auto& s : storage) argv.push_back(s.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (lat_validate->parsed()) {
            Json j = Json::parse(slurp(o.input, in), nullptr, false);
            if (j.is_discarded()) fail(Errc::parse_error, "malformed JSON input");
            if (!j.is_object() || !j.contains("n") || !j.contains("sets"))
                fail(Errc::parse_error, "lattice JSON needs keys \"n\" and \"sets\"");
            std::vector<AtomSet> sets;
            for (const auto& s : j["sets"]) sets.push_back(set_from_json_checked(s));
            FamilyCheck c = FiniteAtomicLattice::check_family(j["n"].get<int>(), sets);
            Json rj;
            rj["valid"] = c.ok;
            if (!c.ok) {
                rj["code"] = c.code;
                rj["detail"] = c.detail;
            }
            print_json(out, rj);
            return c.ok ? 0 : 1;
        }
        if (lat_info->parsed()) {
            FiniteAtomicLattice L = load_lattice_arg(slurp(o.input, in));
            Json j;
            j["n"] = L.atom_count();
            j["size"] = L.size();
            j["trivial"] = L.trivial();
            GradedInfo g = L.graded();
            j["graded"] = g.graded;
            if (g.graded) j["rank"] = g.rank;
            Json mi = Json::array();
            for (int el : L.meet_irreducibles()) {
                Json s = Json::array();
                for (int a : L.set_of(el).atoms()) s.push_back(a);
                mi.push_back(s);
            }
            j["meet_irreducibles"] = mi;
            j["maximal_chains"] = static_cast<long long>(L.maximal_chains().size());
            print_json(out, j);
            return 0;
        }
        if (lat_hasse->parsed()) {
            FiniteAtomicLattice L = load_lattice_arg(slurp(o.input, in));
            if (o.format != "json")
                out << hasse_dot(L);
            else
                print_json(out, lattice_to_json(L));
            return 0;
        }
        if (lcm->parsed()) {
            MonomialIdeal M = load_ideal_arg(slurp(o.input, in));
            print_json(out, labeled_lattice_to_json(lcm_lattice(M)));
            return 0;
        }
        if (coord->parsed()) {
            std::string content = slurp(o.input, in);
            Labeling lab;
            if (o.scheme == "deficit") {
                lab = deficit_labeling(lcm_lattice(load_ideal_arg(content)));
            } else {
                FiniteAtomicLattice L = load_lattice_arg(content);
                lab = o.scheme == "eccv" ? eccv_labeling(L, naming_of(o))
                                         : minimal_squarefree_labeling(L, naming_of(o));
            }
            if (o.emit_labeling) {
                print_json(out, labeling_to_json(lab));
                return 0;
            }
            MonomialIdeal M = realize(lab);
            if (o.format == "json")
                print_json(out, ideal_to_json(M));
            else
                out << ideal_to_text(M) << "\n";
            return 0;
        }
        if (roundtrip->parsed()) {
            MonomialIdeal M = load_ideal_arg(slurp(o.input, in));
            bool ok = roundtrip_check(M);
            Json j;
            j["roundtrip"] = ok;
            print_json(out, j);
            return ok ? 0 : 1;
        }
        if (betti->parsed()) {
            FiniteAtomicLattice L = load_lattice_arg(slurp(o.input, in));
            BettiVia via = o.via == "crosscut" ? BettiVia::crosscut
                           : o.via == "order"  ? BettiVia::order
                                               : BettiVia::both;
            BettiTable t = betti_table(L, FieldSpec::parse(o.field), via);
            if (o.format == "text")
                out << betti_to_text(t, L);
            else
                print_json(out, betti_to_json(t, L));
            return 0;
        }
        if (scarf->parsed()) {
            FiniteAtomicLattice L = load_lattice_arg(slurp(o.input, in));
            print_json(out, complex_to_json(scarf_complex(L)));
            return 0;
        }
        if (scarf_res->parsed()) {
            FiniteAtomicLattice L = load_lattice_arg(slurp(o.input, in));
            bool ok = is_scarf_resolved(L, FieldSpec::parse(o.field));
            Json j;
            j["scarf_resolved"] = ok;
            print_json(out, j);
            return ok ? 0 : 1;
        }
        if (gencoord->parsed()) {
            FiniteAtomicLattice L = load_lattice_arg(slurp(o.input, in));
            MonomialIdeal M = strongly_generic_coordinatization(L);
            out << ideal_to_text(M) << "\n";
            return 0;
        }
        if (ln_enum->parsed()) {
            int jobs = effective_jobs(o.jobs);
            if (o.count_only) {
                out << ln_enumerate_count(o.n, jobs) << "\n";
            } else {
                ln_enumerate(o.n, [&](const FiniteAtomicLattice& L) {
                    out << lattice_to_json(L).dump() << "\n";
                }, jobs);
            }
            return 0;
        }
        if (ln_covers->parsed()) {
            FiniteAtomicLattice L = load_lattice_arg(slurp(o.input, in));
            Json j;
            Json up = Json::array(), down = Json::array();
            for (const auto& c : ln_upper_covers(L)) up.push_back(lattice_to_json(c));
            for (const auto& c : ln_lower_covers(L)) down.push_back(lattice_to_json(c));
            j["upper"] = up;
            j["lower"] = down;
            print_json(out, j);
            return 0;
        }
        if (ln_meet_cmd->parsed() || ln_join_cmd->parsed()) {
            FiniteAtomicLattice A = load_lattice_arg(slurp(o.input, in));
            FiniteAtomicLattice B = load_lattice_arg(slurp(o.input_b, in));
            FiniteAtomicLattice R = ln_meet_cmd->parsed() ? ln_meet(A, B) : ln_join(A, B);
            print_json(out, lattice_to_json(R));
            return 0;
        }
        if (ln_mi->parsed()) {
            for (const auto& L : ln_meet_irreducibles(o.n))
                out << lattice_to_json(L).dump() << "\n";
            return 0;
        }
        if (ln_rank_cmd->parsed()) {
            FiniteAtomicLattice L = load_lattice_arg(slurp(o.input, in));
            out << ln_rank(L) << "\n";
            return 0;
        }
        if (deform->parsed()) {
            FiniteAtomicLattice Q = load_lattice_arg(slurp(o.from_path, in));
            FiniteAtomicLattice P = load_lattice_arg(slurp(o.to_path, in));
            DeformationPair pair = construct_deformation(P, Q);
            Json j;
            j["m_q"] = ideal_to_json(pair.m_q);
            j["m_p"] = ideal_to_json(pair.m_p);
            j["deformation"] = deformation_to_json(pair.d);
            print_json(out, j);
            return 0;
        }
        if (universal->parsed()) {
            FiniteAtomicLattice Q = load_lattice_arg(slurp(o.input, in));
            UniversalFamily fam(Q);
            Json j;
            j["base"] = ideal_to_json(fam.base());
            if (!o.to_path.empty()) {
                FiniteAtomicLattice T = load_lattice_arg(slurp(o.to_path, in));
                Deformation d = fam.deform_to(T);
                j["deformation"] = deformation_to_json(d);
                j["deformed"] = ideal_to_json(apply(d));
            }
            print_json(out, j);
            return 0;
        }
        if (scarf_filter->parsed()) {
            FiniteAtomicLattice L = load_lattice_arg(slurp(o.input, in));
            ScarfFilterMode mode =
                o.mode == "betti" ? ScarfFilterMode::betti : ScarfFilterMode::cover;
            ScarfFilterReport rep = verify_scarf_filter(L, FieldSpec::parse(o.field), mode);
            print_json(out, scarf_report_to_json(rep));
            return rep.counterexamples.empty() ? 0 : 1;
        }
        if (support->parsed()) {
            Json j = Json::parse(slurp(o.input, in), nullptr, false);
            if (j.is_discarded()) fail(Errc::parse_error, "malformed JSON input");
            if (!j.is_object() || !j.contains("lattice") || !j.contains("complex"))
                fail(Errc::parse_error, "support-check input needs \"lattice\" and \"complex\"");
            FiniteAtomicLattice L = lattice_from_json(j["lattice"]);
            SimplicialComplex X = complex_from_json(j["complex"]);
            std::vector<int> vertex_elements;
            if (j.contains("vertex_elements")) {
                for (const auto& s : j["vertex_elements"]) {
                    AtomSet a = set_from_json_checked(s);
                    int el = L.index_of(a);
                    if (el < 0)
                        fail(Errc::label_inconsistent,
                             "vertex element " + a.to_string() + " is not in the lattice");
                    vertex_elements.push_back(el);
                }
            } else {
                // default: vertex labeled "k" is atom k
                for (const auto& name : X.vertex_labels()) {
                    int atom = std::stoi(name);
                    int el = L.atom_index(atom);
                    if (el < 0) fail(Errc::label_inconsistent, "no atom " + name + " in the lattice");
                    vertex_elements.push_back(el);
                }
            }
            CellularCertificate cert =
                supports_resolution(L, X, vertex_elements, FieldSpec::parse(o.field));
            print_json(out, certificate_to_json(cert, L, X));
            return cert.supports ? 0 : 1;
        }
        fail(Errc::bad_argument, "no subcommand dispatched");
    } catch (const Error& e) {
        print_json(err, error_json(e));
        return 2;
    } catch (const std::exception& e) {
        Json j;
        j["error"] = "InternalError";
        j["message"] = e.what();
        print_json(err, j);
        return 2;
    }
}

} // namespace lcmlat

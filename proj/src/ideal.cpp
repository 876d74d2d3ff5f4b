#include "lcmlat/ideal.hpp"

#include "lcmlat/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace lcmlat {

namespace {
const BigInt kZero(0);
}

const BigInt& Monomial::exponent(int var) const {
    auto it = exps_.find(var);
    return it == exps_.end() ? kZero : it->second;
}

void Monomial::set_exponent(int var, BigInt e) {
    if (e.is_zero())
        exps_.erase(var);
    else if (e.is_negative())
        fail(Errc::bad_argument, "monomial exponents must be non-negative");
    else
        exps_[var] = std::move(e);
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial r = *this;
    for (const auto& [v, e] : o.exps_) {
        auto it = r.exps_.find(v);
        if (it == r.exps_.end())
            r.exps_[v] = e;
        else
            it->second += e;
    }
    return r;
}

Monomial Monomial::div_exact(const Monomial& o) const {
    if (!o.divides(*this)) fail(Errc::internal, "monomial division not exact");
    Monomial r;
    for (const auto& [v, e] : exps_) {
        BigInt d = e - o.exponent(v);
        if (!d.is_zero()) r.exps_[v] = std::move(d);
    }
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (const auto& [v, e] : b.exps_) {
        auto it = r.exps_.find(v);
        if (it == r.exps_.end() || it->second < e) r.exps_[v] = e;
    }
    return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (const auto& [v, e] : a.exps_) {
        const BigInt& f = b.exponent(v);
        const BigInt& m = e < f ? e : f;
        if (!m.is_zero()) r.exps_[v] = m;
    }
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    for (const auto& [v, e] : exps_)
        if (e > o.exponent(v)) return false;
    return true;
}

bool Monomial::strictly_divides(const Monomial& o) const {
    if (!divides(o)) return false;
    for (const auto& [v, e] : o.exps_)
        if (!(exponent(v) < e)) return false;
    return true;
}

MonomialIdeal make_ideal_checked(std::vector<std::string> variables,
                                 std::vector<Monomial> generators) {
    if (generators.empty()) fail(Errc::bad_argument, "ideal needs at least one generator");
    for (size_t i = 0; i < generators.size(); ++i) {
        if (generators[i].is_unit() && generators.size() > 1)
            fail(Errc::not_minimal, "generator " + std::to_string(i + 1) + " is the unit monomial");
        for (size_t j = 0; j < generators.size(); ++j) {
            if (i != j && generators[i].divides(generators[j]))
                fail(Errc::not_minimal,
                     "generator " + std::to_string(i + 1) + " divides generator " +
                         std::to_string(j + 1));
        }
    }
    MonomialIdeal M;
    M.variables = std::move(variables);
    M.generators = std::move(generators);
    return M;
}

LabeledLattice lcm_lattice(const MonomialIdeal& M) {
    size_t t = M.generators.size();
    if (t == 0) fail(Errc::bad_argument, "ideal needs at least one generator");
    if (t > 20) fail(Errc::out_of_supported_range, "lcm_lattice supports at most 20 generators");
    for (size_t i = 0; i < t; ++i)
        for (size_t j = 0; j < t; ++j)
            if (i != j && M.generators[i].divides(M.generators[j]))
                fail(Errc::not_minimal, "generator " + std::to_string(i + 1) +
                                            " divides generator " + std::to_string(j + 1));

    // Enumerate subsets, dedup by support: the support {i : g_i | lcm} of a
    // subset determines its lcm.
    std::set<AtomSet> supports;
    supports.insert(AtomSet::empty_set());
    for (uint32_t sub = 1; sub < (1u << t); ++sub) {
        Monomial l;
        for (size_t i = 0; i < t; ++i)
            if ((sub >> i) & 1) l = Monomial::lcm(l, M.generators[i]);
        AtomSet supp;
        for (size_t i = 0; i < t; ++i)
            if (M.generators[i].divides(l)) supp = supp | AtomSet::singleton(static_cast<int>(i) + 1);
        supports.insert(supp);
    }
    std::vector<AtomSet> fam(supports.begin(), supports.end());
    FiniteAtomicLattice L = FiniteAtomicLattice::from_family(static_cast<int>(t), fam);

    LabeledLattice out;
    out.variables = M.variables;
    out.multidegrees.reserve(fam.size());
    for (AtomSet s : L.family()) {
        Monomial l;
        for (int a : s.atoms()) l = Monomial::lcm(l, M.generators[static_cast<size_t>(a - 1)]);
        out.multidegrees.push_back(std::move(l));
    }
    out.lattice = std::move(L);
    return out;
}

GenericityReport is_strongly_generic(const MonomialIdeal& M) {
    GenericityReport r;
    size_t nv = M.variables.size();
    for (size_t i = 0; i < M.generators.size(); ++i)
        for (size_t j = i + 1; j < M.generators.size(); ++j)
            for (size_t v = 0; v < nv; ++v) {
                const BigInt& ei = M.generators[i].exponent(static_cast<int>(v));
                if (ei.is_zero()) continue;
                if (M.generators[j].exponent(static_cast<int>(v)) == ei) {
                    r.holds = false;
                    r.variable = M.variables[v];
                    r.gen_a = static_cast<int>(i);
                    r.gen_b = static_cast<int>(j);
                    return r;
                }
            }
    return r;
}

GenericityReport is_generic(const MonomialIdeal& M) {
    GenericityReport r;
    size_t nv = M.variables.size();
    for (size_t i = 0; i < M.generators.size(); ++i)
        for (size_t j = i + 1; j < M.generators.size(); ++j)
            for (size_t v = 0; v < nv; ++v) {
                const BigInt& ei = M.generators[i].exponent(static_cast<int>(v));
                if (ei.is_zero()) continue;
                if (M.generators[j].exponent(static_cast<int>(v)) != ei) continue;
                Monomial l = Monomial::lcm(M.generators[i], M.generators[j]);
                bool witness = false;
                for (size_t k = 0; k < M.generators.size(); ++k) {
                    if (k == i || k == j) continue;
                    if (M.generators[k].strictly_divides(l)) {
                        witness = true;
                        break;
                    }
                }
                if (!witness) {
                    r.holds = false;
                    r.variable = M.variables[v];
                    r.gen_a = static_cast<int>(i);
                    r.gen_b = static_cast<int>(j);
                    return r;
                }
            }
    return r;
}

bool variable_name_less(const std::string& a, const std::string& b) {
    auto split = [](const std::string& s) {
        size_t i = 0;
        while (i < s.size() && !std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        return std::pair<std::string, std::string>(s.substr(0, i), s.substr(i));
    };
    auto [ap, as] = split(a);
    auto [bp, bs] = split(b);
    if (ap != bp) return ap < bp;
    if (as.size() != bs.size()) return as.size() < bs.size(); // numeric by value
    return as < bs;
}

namespace {

struct Factor {
    std::string name;
    BigInt exp;
    size_t pos;
};

// One generator: factors with optional '*' separators and optional ^powers.
std::vector<Factor> parse_factors(const std::string& s, size_t base, size_t& consumed) {
    std::vector<Factor> out;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    skip_ws();
    bool expect_factor = true;
    while (i < s.size()) {
        skip_ws();
        if (i >= s.size()) break;
        char c = s[i];
        if (c == '*') {
            if (expect_factor)
                fail(Errc::parse_error,
                     "unexpected '*' at position " + std::to_string(base + i));
            ++i;
            expect_factor = true;
            continue;
        }
        if (!std::isalpha(static_cast<unsigned char>(c)))
            fail(Errc::parse_error, std::string("unexpected character '") + c +
                                        "' at position " + std::to_string(base + i));
        Factor f;
        f.pos = base + i;
        f.name.push_back(s[i++]);
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            f.name.push_back(s[i++]);
        if (i < s.size() && s[i] == '^') {
            ++i;
            size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i == start)
                fail(Errc::parse_error, "missing exponent after '^' at position " +
                                            std::to_string(base + start));
            f.exp = BigInt::from_string(s.substr(start, i - start));
        } else {
            f.exp = BigInt(1);
        }
        out.push_back(std::move(f));
        expect_factor = false;
    }
    if (expect_factor && !out.empty())
        fail(Errc::parse_error, "dangling '*' at position " + std::to_string(base + i));
    consumed = i;
    return out;
}

} // namespace

MonomialIdeal parse_ideal_text(const std::string& text,
                               const std::optional<std::vector<std::string>>& variables) {
    // split on commas
    std::vector<std::pair<std::string, size_t>> parts;
    size_t start = 0;
    for (size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ',') {
            parts.emplace_back(text.substr(start, i - start), start);
            start = i + 1;
        }
    }
    std::vector<std::vector<Factor>> gens_factors;
    for (auto& [chunk, base] : parts) {
        size_t consumed = 0;
        auto fs = parse_factors(chunk, base, consumed);
        if (fs.empty())
            fail(Errc::parse_error, "empty generator at position " + std::to_string(base));
        gens_factors.push_back(std::move(fs));
    }

    std::vector<std::string> vars;
    if (variables) {
        vars = *variables;
    } else {
        std::set<std::string> names;
        for (const auto& fs : gens_factors)
            for (const auto& f : fs) names.insert(f.name);
        vars.assign(names.begin(), names.end());
        std::sort(vars.begin(), vars.end(), variable_name_less);
    }
    std::map<std::string, int> var_index;
    for (size_t i = 0; i < vars.size(); ++i) var_index[vars[i]] = static_cast<int>(i);

    std::vector<Monomial> gens;
    for (const auto& fs : gens_factors) {
        Monomial m;
        for (const auto& f : fs) {
            auto it = var_index.find(f.name);
            if (it == var_index.end())
                fail(Errc::parse_error, "unknown variable '" + f.name + "' at position " +
                                            std::to_string(f.pos));
            m.set_exponent(it->second, m.exponent(it->second) + f.exp);
        }
        gens.push_back(std::move(m));
    }
    return make_ideal_checked(std::move(vars), std::move(gens));
}

std::string monomial_to_text(const Monomial& m, const std::vector<std::string>& variables) {
    if (m.is_unit()) return "1";
    // Compact juxtaposition is unambiguous for LETTER DIGIT* names (the
    // tokenizer is greedy on digits); fall back to '*' separators otherwise.
    bool compact = true;
    for (const auto& v : variables) {
        if (v.empty() || !std::isalpha(static_cast<unsigned char>(v[0]))) compact = false;
        for (size_t i = 1; i < v.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(v[i]))) compact = false;
    }
    std::string out;
    bool first = true;
    for (const auto& [v, e] : m.exponents()) {
        if (!first && !compact) out += '*';
        out += variables[static_cast<size_t>(v)];
        if (!(e == BigInt(1))) {
            out += '^';
            out += e.to_string();
        }
        first = false;
    }
    return out;
}

std::string ideal_to_text(const MonomialIdeal& M) {
    std::string out;
    for (size_t i = 0; i < M.generators.size(); ++i) {
        if (i) out += ", ";
        out += monomial_to_text(M.generators[i], M.variables);
    }
    return out;
}

} // namespace lcmlat

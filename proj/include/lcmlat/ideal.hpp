#pragma once

#include "lcmlat/bigint.hpp"
#include "lcmlat/lattice.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lcmlat {

// Monomial in a fixed variable universe, stored sparsely as variable index ->
// positive exponent. Variable names live on the enclosing ideal/labeling.
class Monomial {
public:
    static Monomial unit() { return Monomial(); }

    const BigInt& exponent(int var) const;
    void set_exponent(int var, BigInt e); // e == 0 erases
    bool is_unit() const { return exps_.empty(); }
    const std::map<int, BigInt>& exponents() const { return exps_; }

    Monomial times(const Monomial& o) const;
    Monomial div_exact(const Monomial& o) const; // requires o | *this
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static Monomial gcd(const Monomial& a, const Monomial& b);

    bool divides(const Monomial& o) const;
    // divides o even after o is divided by each variable present in o:
    // every positive exponent of o strictly exceeds ours, zeros match.
    bool strictly_divides(const Monomial& o) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::map<int, BigInt> exps_;
};

// Minimal generating set of a monomial ideal over named variables.
struct MonomialIdeal {
    std::vector<std::string> variables;
    std::vector<Monomial> generators;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
};

// Validates that no generator divides another (and no duplicates/units).
// Throws NotMinimal with a witness pair.
MonomialIdeal make_ideal_checked(std::vector<std::string> variables,
                                 std::vector<Monomial> generators);

// An LCM lattice together with the multidegree of every element.
// multidegrees[i] is the lcm of the generators in the support of element i;
// the bottom carries the unit monomial.
struct LabeledLattice {
    FiniteAtomicLattice lattice;
    std::vector<std::string> variables;
    std::vector<Monomial> multidegrees;
};

// The LCM lattice of a minimal monomial ideal: elements are the distinct lcms
// of generator subsets plus a bottom; the support of an element is the set of
// generators dividing its lcm. Atom i is generator i.
LabeledLattice lcm_lattice(const MonomialIdeal& M);

struct GenericityReport {
    bool holds = true;
    std::string variable;  // offending variable when !holds
    int gen_a = -1, gen_b = -1;
};

// No variable occurs with the same nonzero exponent in two generators.
GenericityReport is_strongly_generic(const MonomialIdeal& M);
// Whenever two generators share a positive exponent in some variable, a third
// generator strictly divides their lcm.
GenericityReport is_generic(const MonomialIdeal& M);

// Text format: generators separated by commas; a generator is a product of
// factors, '*' optional; a factor is LETTER DIGIT* with an optional ^INT.
// "c*d*f" and "cdf" parse the same; "x1x2^2" is x1 * x2^2.
MonomialIdeal parse_ideal_text(const std::string& text,
                               const std::optional<std::vector<std::string>>& variables = std::nullopt);
std::string ideal_to_text(const MonomialIdeal& M);
std::string monomial_to_text(const Monomial& m, const std::vector<std::string>& variables);

// Name order used when the parser has to invent a variable order: letter
// prefix lexicographic, then numeric suffix by value ("x2" < "x10").
bool variable_name_less(const std::string& a, const std::string& b);

} // namespace lcmlat

#pragma once

#include "polyred/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace polyred {

using Exponents = std::vector<unsigned>;

// graded lexicographic: total degree first, then lexicographic
struct GradedLex {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Polynomial over named variables with rational coefficients. Terms with a
// zero coefficient are never stored.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(std::vector<std::string> vars, const Rational& c);
    static MultiPoly variable(std::vector<std::string> vars, const std::string& name);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Exponents, Rational, GradedLex>& terms() const { return terms_; }
    std::size_t var_index(const std::string& name) const;  // throws on unknown
    bool has_var(const std::string& name) const;

    void add_term(const Exponents& e, const Rational& c);
    bool is_zero() const { return terms_.empty(); }
    unsigned degree() const;
    // true when no term involves the variable
    bool independent_of(const std::string& name) const;

    MultiPoly derivative(const std::string& name) const;
    MultiPoly derivative(std::size_t index) const;
    Rational evaluate(const std::vector<Rational>& point) const;
    // replace each variable by a polynomial; all images share one variable list
    MultiPoly compose(const std::vector<MultiPoly>& images) const;
    // substitute a constant for one variable, keeping the variable list
    MultiPoly substitute(const std::string& name, const Rational& value) const;
    // re-express over another variable list; throws if a used variable is missing
    MultiPoly rebase(const std::vector<std::string>& vars) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    friend MultiPoly operator-(MultiPoly a) { return a *= Rational(-1); }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    // human-readable form, highest term first, e.g. "1/6*t1^3*t2 - q1"
    std::string to_string() const;

private:
    void require_same_vars(const MultiPoly& o) const;
    std::vector<std::string> vars_;
    std::map<Exponents, Rational, GradedLex> terms_;
};

// parse a polynomial written with +, -, *, ^, integer or p/q coefficients and
// the given variable names, e.g. "-q1*t1*t2 + 1/2*p1_1^2"
MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& vars);

}  // namespace polyred

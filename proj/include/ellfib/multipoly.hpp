#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ellfib/rational.hpp"

namespace ellfib {

// Exponent vector, parallel to the owning polynomial's variable list.
using Exponents = std::vector<std::int64_t>;

// Graded lexicographic order, descending: higher total degree first, ties
// broken by the first differing exponent (larger wins). Used as the map
// comparator so iteration always starts at the leading term, which makes
// printing and leading-coefficient access canonical.
struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial over the rationals. Terms are kept in
// canonical form: no zero coefficients are ever stored, so two polynomials
// over the same variable list are equal iff their term maps are equal.
// All values are immutable after construction by the public API.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Rational, GrlexGreater>;

    MultiPoly() = default;  // zero polynomial over the empty variable list
    explicit MultiPoly(std::vector<std::string> variables);  // zero polynomial

    static MultiPoly constant(std::vector<std::string> variables, const Rational& c);
    static MultiPoly variable(std::vector<std::string> variables, const std::string& name);
    static MultiPoly monomial(std::vector<std::string> variables, Exponents exps, const Rational& c);
    static MultiPoly from_terms(std::vector<std::string> variables, TermMap terms);

    const std::vector<std::string>& variables() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t var_index(const std::string& name) const;  // throws PolyError if unknown

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // requires is_constant()

    // -1 for the zero polynomial.
    std::int64_t total_degree() const;
    std::int64_t degree_in(std::size_t var) const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& rhs) const;
    MultiPoly operator-(const MultiPoly& rhs) const;
    MultiPoly operator*(const MultiPoly& rhs) const;
    MultiPoly scaled(const Rational& c) const;
    MultiPoly pow(std::int64_t e) const;  // e >= 0

    bool operator==(const MultiPoly& rhs) const;
    bool operator!=(const MultiPoly& rhs) const { return !(*this == rhs); }

    // Leading term under the graded-lex order. Requires a nonzero polynomial.
    const Exponents& leading_exponents() const;
    const Rational& leading_coefficient() const;

    // Exact division: returns r with divisor*r == *this, or nullopt when no
    // such polynomial exists. Division by zero is a PolyError.
    std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;

    // Largest k with g^k dividing *this. g must be non-constant; if g is
    // reducible this is still the well-defined g-adic order. The zero
    // polynomial has no finite valuation and is rejected.
    std::int64_t valuation_along(const MultiPoly& g) const;

    // Multiplicity at a point: minimum total degree of the terms after
    // translating the point to the origin. Rejects the zero polynomial.
    std::int64_t mult_at_point(const std::vector<Rational>& point) const;

    // Exact composition. Every variable must be assigned; all assignment
    // targets must share one variable list, which becomes the result's list.
    MultiPoly substitute(const std::map<std::string, MultiPoly>& assignment) const;

    Rational evaluate(const std::vector<Rational>& point) const;
    MultiPoly derivative(std::size_t var) const;

    // p == content_unit() * primitive(); primitive() has coprime integer
    // coefficients and a positive leading coefficient. Requires nonzero.
    MultiPoly primitive() const;
    Rational content_unit() const;

    // Canonical textual form, descending graded-lex, round-trips through the
    // parser: e.g. "27*s^8 + 4*s^4*t^3", "-1/3*t^2", "0".
    std::string str() const;

private:
    std::vector<std::string> vars_;
    TermMap terms_;

    void add_term(const Exponents& e, const Rational& c);
    void require_same_variables(const MultiPoly& other) const;
};

}  // namespace ellfib

#include "ellfib/multipoly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "ellfib/errors.hpp"

namespace ellfib {

namespace {

constexpr std::int64_t kExponentLimit = std::int64_t(1) << 62;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    if (a > kExponentLimit - b) throw PolyError("exponent overflow");
    return a + b;
}

std::int64_t sum_of(const Exponents& e) {
    std::int64_t total = 0;
    for (std::int64_t x : e) total = checked_add(total, x);
    return total;
}

}  // namespace

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
    std::int64_t da = 0, db = 0;
    for (std::int64_t x : a) da += x;
    for (std::int64_t x : b) db += x;
    if (da != db) return da > db;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return a.size() > b.size();
}

MultiPoly::MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const Rational& c) {
    MultiPoly p(std::move(variables));
    if (c != 0) p.terms_.emplace(Exponents(p.vars_.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, const std::string& name) {
    MultiPoly p(std::move(variables));
    Exponents e(p.vars_.size(), 0);
    e[p.var_index(name)] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> variables, Exponents exps, const Rational& c) {
    MultiPoly p(std::move(variables));
    if (exps.size() != p.vars_.size()) throw PolyError("monomial: exponent count mismatch");
    for (std::int64_t e : exps) {
        if (e < 0 || e >= kExponentLimit) throw PolyError("monomial: exponent out of range");
    }
    if (c != 0) p.terms_.emplace(std::move(exps), c);
    return p;
}

MultiPoly MultiPoly::from_terms(std::vector<std::string> variables, TermMap terms) {
    MultiPoly p(std::move(variables));
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->first.size() != p.vars_.size()) throw PolyError("from_terms: exponent count mismatch");
        if (it->second == 0) {
            it = terms.erase(it);
        } else {
            ++it;
        }
    }
    p.terms_ = std::move(terms);
    return p;
}

std::size_t MultiPoly::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) return i;
    }
    throw PolyError("unknown variable '" + name + "'");
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Exponents& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](std::int64_t x) { return x == 0; });
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw PolyError("constant_value on a non-constant polynomial");
    return terms_.begin()->second;
}

std::int64_t MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    // Leading term has maximal total degree under grlex.
    return sum_of(terms_.begin()->first);
}

std::int64_t MultiPoly::degree_in(std::size_t var) const {
    std::int64_t d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return terms_.empty() ? -1 : std::max<std::int64_t>(d, 0);
}

void MultiPoly::require_same_variables(const MultiPoly& other) const {
    if (vars_ != other.vars_) throw PolyError("mismatched variable lists");
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, Rational(-c));
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& rhs) const {
    require_same_variables(rhs);
    MultiPoly r = *this;
    for (const auto& [e, c] : rhs.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& rhs) const {
    require_same_variables(rhs);
    MultiPoly r = *this;
    for (const auto& [e, c] : rhs.terms_) r.add_term(e, Rational(-c));
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const {
    require_same_variables(rhs);
    MultiPoly r(vars_);
    Exponents e(vars_.size());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_add(ea[i], eb[i]);
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly r(vars_);
    if (c == 0) return r;
    for (const auto& [e, coef] : terms_) r.terms_.emplace(e, Rational(coef * c));
    return r;
}

MultiPoly MultiPoly::pow(std::int64_t e) const {
    if (e < 0) throw PolyError("pow: negative exponent");
    MultiPoly result = constant(vars_, 1);
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        if (e >>= 1) base = base * base;
    }
    return result;
}

bool MultiPoly::operator==(const MultiPoly& rhs) const {
    return vars_ == rhs.vars_ && terms_ == rhs.terms_;
}

const Exponents& MultiPoly::leading_exponents() const {
    if (terms_.empty()) throw PolyError("leading term of the zero polynomial");
    return terms_.begin()->first;
}

const Rational& MultiPoly::leading_coefficient() const {
    if (terms_.empty()) throw PolyError("leading term of the zero polynomial");
    return terms_.begin()->second;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
    require_same_variables(divisor);
    if (divisor.is_zero()) throw PolyError("division by the zero polynomial");
    MultiPoly quotient(vars_);
    MultiPoly rem = *this;
    const Exponents& de = divisor.leading_exponents();
    const Rational& dc = divisor.leading_coefficient();
    while (!rem.is_zero()) {
        const Exponents& re = rem.leading_exponents();
        Exponents q(vars_.size());
        for (std::size_t i = 0; i < q.size(); ++i) {
            q[i] = re[i] - de[i];
            if (q[i] < 0) return std::nullopt;
        }
        Rational qc = rem.leading_coefficient() / dc;
        MultiPoly t = monomial(vars_, q, qc);
        quotient = quotient + t;
        rem = rem - t * divisor;
    }
    return quotient;
}

std::int64_t MultiPoly::valuation_along(const MultiPoly& g) const {
    if (is_zero()) throw PolyError("valuation of the zero polynomial is undefined");
    if (g.is_constant()) throw PolyError("valuation along a constant polynomial");
    std::int64_t k = 0;
    MultiPoly cur = *this;
    while (true) {
        auto q = cur.divide_exact(g);
        if (!q) return k;
        cur = std::move(*q);
        ++k;
    }
}

std::int64_t MultiPoly::mult_at_point(const std::vector<Rational>& point) const {
    if (is_zero()) throw PolyError("multiplicity of the zero polynomial is undefined");
    if (point.size() != vars_.size()) throw PolyError("mult_at_point: dimension mismatch");
    bool at_origin = std::all_of(point.begin(), point.end(), [](const Rational& c) { return c == 0; });
    const MultiPoly* p = this;
    MultiPoly translated;
    if (!at_origin) {
        std::map<std::string, MultiPoly> shift;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            shift.emplace(vars_[i], variable(vars_, vars_[i]) + constant(vars_, point[i]));
        }
        translated = substitute(shift);
        p = &translated;
    }
    std::int64_t m = std::numeric_limits<std::int64_t>::max();
    for (const auto& [e, c] : p->terms_) m = std::min(m, sum_of(e));
    return m;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& assignment) const {
    for (const std::string& v : vars_) {
        if (!assignment.count(v)) throw PolyError("incomplete assignment: variable '" + v + "' unassigned");
    }
    if (vars_.empty()) {
        // Constant over the empty list: nothing to map through.
        if (assignment.empty()) return *this;
        return constant(assignment.begin()->second.variables(), constant_value());
    }
    const std::vector<std::string>& target = assignment.at(vars_[0]).variables();
    std::vector<const MultiPoly*> images(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        images[i] = &assignment.at(vars_[i]);
        if (images[i]->variables() != target) throw PolyError("assignment targets use different variable lists");
    }
    // Cache successive powers of each image.
    std::vector<std::vector<MultiPoly>> powers(vars_.size());
    auto power_of = [&](std::size_t i, std::int64_t e) -> const MultiPoly& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(constant(target, 1));
        while (static_cast<std::int64_t>(cache.size()) <= e) cache.push_back(cache.back() * *images[i]);
        return cache[static_cast<std::size_t>(e)];
    };
    MultiPoly result(target);
    for (const auto& [e, c] : terms_) {
        MultiPoly term = constant(target, c);
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] > 0) term = term * power_of(i, e[i]);
        }
        result = result + term;
    }
    return result;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != vars_.size()) throw PolyError("evaluate: dimension mismatch");
    Rational value = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < point.size(); ++i) {
            if (e[i] > 0) term *= rational_pow(point[i], e[i]);
        }
        value += term;
    }
    return value;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    if (var >= vars_.size()) throw PolyError("derivative: variable index out of range");
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        d[var] -= 1;
        r.add_term(d, c * Rational(e[var]));
    }
    return r;
}

Rational MultiPoly::content_unit() const {
    if (is_zero()) throw PolyError("content of the zero polynomial");
    BigInt den_lcm = 1;
    for (const auto& [e, c] : terms_) {
        BigInt d = denominator(c);
        den_lcm = den_lcm / gcd(den_lcm, d) * d;
    }
    BigInt num_gcd = 0;
    for (const auto& [e, c] : terms_) {
        num_gcd = gcd(num_gcd, BigInt(numerator(c) * (den_lcm / denominator(c))));
    }
    Rational unit(num_gcd, den_lcm);
    if (leading_coefficient() < 0) unit = -unit;
    return unit;
}

MultiPoly MultiPoly::primitive() const {
    Rational unit = content_unit();
    return scaled(Rational(1) / unit);
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        std::string mono;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            os << rational_str(mag);
        } else {
            if (mag != 1) os << rational_str(mag) << "*";
            os << mono;
        }
        first = false;
    }
    return os.str();
}

}  // namespace ellfib

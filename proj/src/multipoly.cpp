#include "polyred/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace polyred {

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da < db;
    return a < b;
}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Rational& c) {
    MultiPoly p(std::move(vars));
    p.add_term(Exponents(p.vars_.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, const std::string& name) {
    MultiPoly p(std::move(vars));
    Exponents e(p.vars_.size(), 0);
    e[p.var_index(name)] = 1;
    p.add_term(e, 1);
    return p;
}

std::size_t MultiPoly::var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw std::invalid_argument("unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - vars_.begin());
}

bool MultiPoly::has_var(const std::string& name) const {
    return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (e.size() != vars_.size()) throw std::invalid_argument("exponent vector has wrong length");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

unsigned MultiPoly::degree() const {
    if (terms_.empty()) return 0;
    const auto& e = terms_.rbegin()->first;
    return std::accumulate(e.begin(), e.end(), 0u);
}

bool MultiPoly::independent_of(const std::string& name) const {
    if (!has_var(name)) return true;
    std::size_t i = var_index(name);
    for (const auto& [e, c] : terms_)
        if (e[i] != 0) return false;
    return true;
}

MultiPoly MultiPoly::derivative(std::size_t index) const {
    if (index >= vars_.size()) throw std::invalid_argument("derivative: variable index out of range");
    MultiPoly d(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[index] == 0) continue;
        Exponents f = e;
        --f[index];
        d.add_term(f, c * Rational(static_cast<long>(e[index])));
    }
    return d;
}

MultiPoly MultiPoly::derivative(const std::string& name) const { return derivative(var_index(name)); }

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != vars_.size()) throw std::invalid_argument("evaluate: point has wrong length");
    Rational sum;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned j = 0; j < e[i]; ++j) t *= point[i];
        sum += t;
    }
    return sum;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& images) const {
    if (images.size() != vars_.size()) throw std::invalid_argument("compose: need one image per variable");
    std::vector<std::string> target = images.empty() ? std::vector<std::string>{} : images.front().vars();
    for (const auto& im : images)
        if (im.vars() != target) throw std::invalid_argument("compose: images use different variable lists");
    MultiPoly out(target);
    // cache powers of each image
    std::vector<std::vector<MultiPoly>> powers(images.size());
    for (const auto& [e, c] : terms_) {
        MultiPoly t = constant(target, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(constant(target, 1));
            while (pw.size() <= e[i]) pw.push_back(pw.back() * images[i]);
            t = t * pw[e[i]];
        }
        out += t;
    }
    return out;
}

MultiPoly MultiPoly::substitute(const std::string& name, const Rational& value) const {
    std::size_t idx = var_index(name);
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (unsigned j = 0; j < e[idx]; ++j) t *= value;
        Exponents f = e;
        f[idx] = 0;
        out.add_term(f, t);
    }
    return out;
}

MultiPoly MultiPoly::rebase(const std::vector<std::string>& vars) const {
    MultiPoly out(vars);
    std::vector<long> where(vars_.size(), -1);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(vars.begin(), vars.end(), vars_[i]);
        if (it != vars.end()) where[i] = it - vars.begin();
    }
    for (const auto& [e, c] : terms_) {
        Exponents f(vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (where[i] < 0) throw std::invalid_argument("rebase: variable '" + vars_[i] + "' is used but dropped");
            f[static_cast<std::size_t>(where[i])] += e[i];
        }
        out.add_term(f, c);
    }
    return out;
}

void MultiPoly::require_same_vars(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("polynomials use different variable lists");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    require_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    require_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, x] : terms_) x *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.require_same_vars(b);
    MultiPoly out(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = c.sign() < 0 ? -c : c;
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        bool constant_term = std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
        bool wrote = false;
        if (!mag.is_one() || constant_term) {
            os << mag;
            wrote = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << (wrote ? "*" : "") << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
            wrote = true;
        }
    }
    return os.str();
}

namespace {

// recursive-descent parser: expr := term (('+'|'-') term)*, term := factor ('*' factor)*,
// factor := ['-'] atom ['^' int], atom := number ['/' number] | name | '(' expr ')'
class PolyParser {
public:
    PolyParser(const std::string& s, const std::vector<std::string>& vars) : s_(s), vars_(vars) {}

    MultiPoly parse() {
        MultiPoly p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    std::string digits() {
        skip();
        std::size_t b = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (b == pos_) fail("expected digits");
        return s_.substr(b, pos_ - b);
    }
    MultiPoly expr() {
        MultiPoly acc = term();
        for (;;) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }
    MultiPoly term() {
        MultiPoly acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }
    MultiPoly factor() {
        if (eat('-')) return -factor();
        MultiPoly base = atom();
        if (eat('^')) {
            unsigned e = static_cast<unsigned>(std::stoul(digits()));
            MultiPoly r = MultiPoly::constant(vars_, 1);
            for (unsigned i = 0; i < e; ++i) r = r * base;
            return r;
        }
        return base;
    }
    MultiPoly atom() {
        skip();
        if (eat('(')) {
            MultiPoly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            std::string num = digits();
            std::string den = "1";
            if (eat('/')) den = digits();
            return MultiPoly::constant(vars_, Rational::parse(num + "/" + den));
        }
        std::size_t b = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        if (b == pos_) fail("expected a number, variable or '('");
        std::string name = s_.substr(b, pos_ - b);
        if (std::find(vars_.begin(), vars_.end(), name) == vars_.end()) fail("unknown variable '" + name + "'");
        return MultiPoly::variable(vars_, name);
    }

    const std::string& s_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& vars) {
    return PolyParser(text, vars).parse();
}

}  // namespace polyred

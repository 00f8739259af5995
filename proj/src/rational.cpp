#include "polyred/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace polyred {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

namespace {

bool is_integer_literal(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("malformed rational '" + text + "'");
    if (num[0] == '+') num.erase(0, 1);
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(q);
}

std::string Rational::to_string() const { return q_.get_str(10); }

std::size_t Rational::hash() const {
    // low limbs are enough to spread values across buckets
    std::size_t h = mpz_get_ui(q_.get_num_mpz_t()) * 1000003u;
    h ^= mpz_get_ui(q_.get_den_mpz_t()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h + static_cast<std::size_t>(sgn(q_) + 1);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace polyred

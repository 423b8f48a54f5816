#include "lscat/exact/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace lscat {

Rat::Rat(long num, long den) {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    v_ = mpq_class(mpz_class(num), mpz_class(den));
    v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("Rat::parse: empty string");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rat::parse: malformed '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("Rat::parse: zero denominator in '" + s + "'");
    q.canonicalize();
    return Rat(q);
}

Rat Rat::inverse() const {
    if (is_zero()) throw std::domain_error("Rat: inverse of zero");
    return Rat(mpq_class(1 / v_));
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
}

mpz_class Rat::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

mpz_class Rat::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

long Rat::to_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p())
        throw std::domain_error("Rat::to_long: " + str() + " is not a machine integer");
    return v_.get_num().get_si();
}

std::string Rat::str() const { return v_.get_str(10); }

std::size_t Rat::hash() const {
    std::size_t seed = 0;
    auto limbs = [&](mpz_srcptr z) {
        hash_combine(seed, static_cast<std::size_t>(mpz_sgn(z) + 1));
        const std::size_t n = mpz_size(z);
        for (std::size_t i = 0; i < n; ++i) hash_combine(seed, static_cast<std::size_t>(mpz_getlimbn(z, i)));
    };
    limbs(v_.get_num_mpz_t());
    limbs(v_.get_den_mpz_t());
    return seed;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace lscat

#include "quiveralg/scalar.hpp"

#include <cctype>
#include <sstream>

namespace quiveralg {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::int64_t reduce(std::int64_t v, std::uint64_t p) {
    auto m = static_cast<__int128>(v) % static_cast<__int128>(p);
    if (m < 0) m += p;
    return static_cast<std::int64_t>(m);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                           : s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw InputError("not a rational number: '" + std::string(text) + "'");
    }
    Integer n{std::string(num)};
    Integer d{std::string(den)};
    if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    Rational r = Rational(n) / Rational(d);
    return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& value) { return value.str(); }

Zp::Zp(std::int64_t value, std::uint64_t modulus) : raw_(value), modulus_(0) {
    if (modulus != 0) bind(modulus);
}

Zp::Zp(const Rational& value, std::uint64_t modulus) {
    if (modulus == 0) throw std::invalid_argument("Zp from rational needs a modulus");
    Integer n = boost::multiprecision::numerator(value) % Integer(modulus);
    Integer d = boost::multiprecision::denominator(value) % Integer(modulus);
    Zp num(n.convert_to<std::int64_t>(), modulus);
    Zp den(d.convert_to<std::int64_t>(), modulus);
    *this = num / den;
}

void Zp::bind(std::uint64_t modulus) {
    if (modulus_ == modulus) return;
    if (modulus_ != 0) throw std::invalid_argument("mixing residues of different primes");
    modulus_ = modulus;
    raw_ = reduce(raw_, modulus);
}

std::uint64_t Zp::common_modulus(const Zp& a, const Zp& b) {
    if (a.modulus_ != 0 && b.modulus_ != 0 && a.modulus_ != b.modulus_) {
        throw std::invalid_argument("mixing residues of different primes");
    }
    return a.modulus_ != 0 ? a.modulus_ : b.modulus_;
}

bool Zp::is_zero() const { return raw_ == 0; }

Zp Zp::inverse() const {
    if (modulus_ == 0) {
        if (raw_ == 1 || raw_ == -1) return *this;
        throw std::domain_error("inverse of an unbound residue");
    }
    if (raw_ == 0) throw std::domain_error("division by zero in prime field");
    __int128 a = raw_, m = modulus_, x0 = 1, x1 = 0;
    while (m != 0) {
        __int128 q = a / m;
        __int128 t = a - q * m;
        a = m;
        m = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
    }
    x0 %= static_cast<__int128>(modulus_);
    if (x0 < 0) x0 += modulus_;
    return Zp(static_cast<std::int64_t>(x0), modulus_);
}

Zp& Zp::operator+=(const Zp& other) {
    auto p = common_modulus(*this, other);
    if (p == 0) {
        raw_ += other.raw_;
        return *this;
    }
    bind(p);
    __int128 s = static_cast<__int128>(raw_) + reduce(other.raw_, p);
    raw_ = static_cast<std::int64_t>(s % p);
    return *this;
}

Zp& Zp::operator-=(const Zp& other) { return *this += -other; }

Zp& Zp::operator*=(const Zp& other) {
    auto p = common_modulus(*this, other);
    if (p == 0) {
        raw_ *= other.raw_;
        return *this;
    }
    bind(p);
    __int128 s = static_cast<__int128>(raw_) * reduce(other.raw_, p);
    raw_ = static_cast<std::int64_t>(s % p);
    return *this;
}

Zp Zp::operator-() const {
    Zp r = *this;
    if (modulus_ == 0) {
        r.raw_ = -raw_;
    } else if (raw_ != 0) {
        r.raw_ = static_cast<std::int64_t>(modulus_) - raw_;
    }
    return r;
}

bool operator==(const Zp& a, const Zp& b) {
    auto p = Zp::common_modulus(a, b);
    if (p == 0) return a.raw_ == b.raw_;
    return reduce(a.raw_, p) == reduce(b.raw_, p);
}

bool operator<(const Zp& a, const Zp& b) {
    auto p = Zp::common_modulus(a, b);
    if (p == 0) return a.raw_ < b.raw_;
    return reduce(a.raw_, p) < reduce(b.raw_, p);
}

std::ostream& operator<<(std::ostream& os, const Zp& z) { return os << z.raw_; }

std::string to_string(const Zp& value) {
    std::ostringstream os;
    os << value;
    return os.str();
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

}  // namespace quiveralg

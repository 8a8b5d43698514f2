#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace quiveralg {

/// Thrown for malformed input: bad files, labels outside a quiver, invalid
/// expressions. The CLI maps it to exit status 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (GMP canonical form).
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Parses "3", "-7/4", "+2". Throws InputError on anything else.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);

/// Residue modulo a prime. A default-constructed or integer-constructed value
/// is "unbound" until it meets a bound residue; arithmetic between residues
/// with different moduli is an error.
class Zp {
public:
    Zp() = default;
    Zp(int value) : raw_(value) {}                   // NOLINT: literal interop
    Zp(long value) : raw_(value) {}                  // NOLINT
    Zp(long long value) : raw_(value) {}             // NOLINT
    Zp(std::int64_t value, std::uint64_t modulus);
    Zp(const Rational& value, std::uint64_t modulus);

    std::uint64_t modulus() const { return modulus_; }
    /// Residue in [0, p) for bound values; the raw integer otherwise.
    std::int64_t value() const { return raw_; }
    bool is_zero() const;

    Zp inverse() const;

    Zp& operator+=(const Zp& other);
    Zp& operator-=(const Zp& other);
    Zp& operator*=(const Zp& other);
    Zp& operator/=(const Zp& other) { return *this *= other.inverse(); }

    friend Zp operator+(Zp a, const Zp& b) { return a += b; }
    friend Zp operator-(Zp a, const Zp& b) { return a -= b; }
    friend Zp operator*(Zp a, const Zp& b) { return a *= b; }
    friend Zp operator/(Zp a, const Zp& b) { return a /= b; }
    Zp operator-() const;

    friend bool operator==(const Zp& a, const Zp& b);
    friend bool operator!=(const Zp& a, const Zp& b) { return !(a == b); }
    /// Total order on residues; only used for deterministic containers.
    friend bool operator<(const Zp& a, const Zp& b);

    friend std::ostream& operator<<(std::ostream& os, const Zp& z);

private:
    void bind(std::uint64_t modulus);
    static std::uint64_t common_modulus(const Zp& a, const Zp& b);

    std::int64_t raw_ = 0;
    std::uint64_t modulus_ = 0;
};

std::string to_string(const Zp& value);

bool is_prime(std::uint64_t n);

template <class Scalar>
bool is_zero(const Scalar& s) {
    if constexpr (std::is_same_v<Scalar, Zp>) {
        return s.is_zero();
    } else {
        return s == 0;
    }
}

/// Maps an exact rational into the scalar type (identity for Rational).
template <class Scalar>
Scalar from_rational(const Rational& r, std::uint64_t modulus = 0) {
    if constexpr (std::is_same_v<Scalar, Zp>) {
        return Zp(r, modulus);
    } else {
        (void)modulus;
        return Scalar(r);
    }
}

}  // namespace quiveralg

namespace Eigen {

template <>
struct NumTraits<quiveralg::Zp> : GenericNumTraits<quiveralg::Zp> {
    using Real = quiveralg::Zp;
    using NonInteger = quiveralg::Zp;
    using Nested = quiveralg::Zp;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 4
    };
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

// Exact arithmetic in the cyclotomic fields Q(zeta_N).
//
// A value is stored in the power basis 1, z, ..., z^(phi(N)-1) of Q[x]/Phi_N(x)
// as integer numerators over one positive common denominator, reduced so that
// gcd(denominator, numerators) = 1. Values of different orders are lifted to the
// lcm of their orders before they are combined.
#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace tdl {

class Cyclo {
public:
    Cyclo();  // zero
    Cyclo(long value);  // NOLINT(google-explicit-constructor): integers embed naturally
    explicit Cyclo(const mpq_class& value);

    // zeta_N^s with s taken mod N.
    static Cyclo root(long s, unsigned order);
    // sum_e counts[e] * zeta_N^e, where counts.size() == N. The order of the
    // result is lowered to N / gcd(N, exponents in the support).
    static Cyclo from_exponent_counts(std::span<const std::int64_t> counts);
    // Builds a value from explicit power-basis coordinates (length phi(N)).
    static Cyclo from_coefficients(unsigned order, std::span<const mpq_class> coeffs);

    unsigned order() const { return order_; }
    std::size_t degree() const { return num_.size(); }
    mpq_class coeff(std::size_t i) const;
    std::vector<mpq_class> coefficients() const;

    bool is_zero() const;
    bool is_rational() const;
    mpq_class rational_value() const;  // requires is_rational()
    bool is_integer() const;

    // Re-expresses the value at order m, which must be a multiple of order().
    Cyclo lifted(unsigned m) const;
    Cyclo conj() const;
    Cyclo inverse() const;  // throws std::domain_error on zero
    std::complex<double> to_complex() const;
    std::string to_string() const;

    Cyclo& operator+=(const Cyclo& other);
    Cyclo& operator-=(const Cyclo& other);
    Cyclo& operator*=(const Cyclo& other);
    Cyclo& operator/=(const Cyclo& other) { return *this *= other.inverse(); }
    Cyclo operator-() const;

    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }
    friend bool operator==(const Cyclo& a, const Cyclo& b);

    // Multiplies by zeta_order^s; cheaper than a general product.
    Cyclo times_root(long s, unsigned order) const;
    Cyclo pow(long e) const;

private:
    Cyclo(unsigned order, std::vector<mpz_class> num, mpz_class den);
    void normalize(bool lower_order = true);

    unsigned order_ = 1;
    std::vector<mpz_class> num_;
    mpz_class den_ = 1;
};

std::pair<Cyclo, Cyclo> lift_to_common_order(const Cyclo& a, const Cyclo& b);

// Euler phi, and the integer coefficients of Phi_N (length phi(N)+1).
unsigned euler_phi(unsigned n);
std::vector<std::int64_t> cyclotomic_polynomial(unsigned n);

}  // namespace tdl

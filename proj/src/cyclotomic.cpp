#include "tdl/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tdl {
namespace {

// Reduction data for one order N: rows[e] holds x^e mod Phi_N for 0 <= e < N.
struct Field {
    unsigned order = 1;
    unsigned phi = 1;
    std::vector<std::int64_t> poly;
    std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> rows;
};

int moebius(unsigned n) {
    int sign = 1;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            sign = -sign;
        }
    }
    if (n > 1) sign = -sign;
    return sign;
}

Field build_field(unsigned n) {
    Field f;
    f.order = n;
    f.poly = cyclotomic_polynomial(n);
    f.phi = static_cast<unsigned>(f.poly.size() - 1);
    f.rows.resize(n);
    std::vector<std::int64_t> dense(f.phi, 0);
    for (unsigned e = 0; e < n; ++e) {
        if (e < f.phi) {
            f.rows[e] = {{e, 1}};
            if (e + 1 == f.phi) std::fill(dense.begin(), dense.end(), 0), dense[e] = 1;
            continue;
        }
        // multiply the previous row by x and fold x^phi = -sum poly[i] x^i
        std::int64_t top = dense[f.phi - 1];
        for (unsigned i = f.phi - 1; i > 0; --i) dense[i] = dense[i - 1];
        dense[0] = 0;
        if (top != 0)
            for (unsigned i = 0; i < f.phi; ++i) dense[i] -= top * f.poly[i];
        auto& row = f.rows[e];
        for (unsigned i = 0; i < f.phi; ++i)
            if (dense[i] != 0) row.emplace_back(i, dense[i]);
    }
    return f;
}

const Field& field(unsigned n) {
    static std::mutex mu;
    static std::map<unsigned, std::unique_ptr<const Field>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, std::make_unique<const Field>(build_field(n))).first;
    return *it->second;
}

void add_row(std::vector<mpz_class>& acc, const Field& f, unsigned e, const mpz_class& c) {
    for (auto [i, v] : f.rows[e]) {
        if (v > 0) mpz_addmul_ui(acc[i].get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(v));
        else mpz_submul_ui(acc[i].get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(-v));
    }
}

}  // namespace

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            while (n % d == 0) n /= d;
            result -= result / d;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<std::int64_t> cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw std::invalid_argument("cyclotomic order must be positive");
    // Phi_n = prod_{d|n} (x^d - 1)^{mu(n/d)}: multiply the positive factors, then divide.
    std::vector<std::int64_t> p{1};
    std::vector<unsigned> divisors_out;
    for (unsigned d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        int mu = moebius(n / d);
        if (mu == 1) {
            std::vector<std::int64_t> q(p.size() + d, 0);
            for (std::size_t i = 0; i < p.size(); ++i) {
                q[i + d] += p[i];
                q[i] -= p[i];
            }
            p = std::move(q);
        } else if (mu == -1) {
            divisors_out.push_back(d);
        }
    }
    for (unsigned d : divisors_out) {
        // exact division by x^d - 1, from the top coefficient down
        std::vector<std::int64_t> q(p.size() - d, 0);
        std::vector<std::int64_t> r = p;
        for (std::size_t i = r.size() - 1; i + 1 > d; --i) {
            std::int64_t c = r[i];
            q[i - d] = c;
            r[i] -= c;
            r[i - d] += c;
        }
        p = std::move(q);
    }
    if (p.back() < 0)
        for (auto& c : p) c = -c;
    return p;
}

Cyclo::Cyclo() : order_(1), num_{0}, den_(1) {}

Cyclo::Cyclo(long value) : order_(1), num_{mpz_class(value)}, den_(1) {}

Cyclo::Cyclo(const mpq_class& value) : order_(1), num_{value.get_num()}, den_(value.get_den()) {
    normalize();
}

Cyclo::Cyclo(unsigned order, std::vector<mpz_class> num, mpz_class den)
    : order_(order), num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void Cyclo::normalize(bool lower_order) {
    if (den_ < 0) {
        den_ = -den_;
        for (auto& c : num_) c = -c;
    }
    bool rational = true;
    for (std::size_t i = 1; i < num_.size(); ++i)
        if (num_[i] != 0) { rational = false; break; }
    if (rational && lower_order && order_ != 1) {
        num_.resize(1);
        order_ = 1;
    }
    if (rational && num_[0] == 0) {
        den_ = 1;
        return;
    }
    if (!rational && lower_order) {
        // support on multiples of g: the value is a polynomial in z^g, a primitive (N/g)-th root
        unsigned g = order_;
        for (std::size_t i = 1; i < num_.size() && g > 1; ++i)
            if (num_[i] != 0) g = std::gcd(g, static_cast<unsigned>(i));
        if (g > 1) {
            const Field& f = field(order_ / g);
            std::vector<mpz_class> lowered(f.phi);
            for (std::size_t i = 0; i < num_.size(); i += g)
                if (num_[i] != 0)
                    for (auto [j, v] : f.rows[i / g]) lowered[j] += num_[i] * v;
            num_ = std::move(lowered);
            order_ /= g;
            normalize(true);
            return;
        }
    }
    if (den_ == 1) return;
    mpz_class g = den_;
    for (const auto& c : num_) {
        if (g == 1) break;
        if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    if (g != 1) {
        den_ /= g;
        for (auto& c : num_)
            if (c != 0) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
}

Cyclo Cyclo::root(long s, unsigned order) {
    if (order == 0) throw std::invalid_argument("root of unity order must be positive");
    long e = s % static_cast<long>(order);
    if (e < 0) e += order;
    const unsigned g = std::gcd(static_cast<unsigned>(e), order);
    if (g > 1) return root(e / g, order / g);
    const Field& f = field(order);
    std::vector<mpz_class> num(f.phi);
    for (auto [i, v] : f.rows[e]) num[i] = v;
    return Cyclo(order, std::move(num), 1);
}

Cyclo Cyclo::from_exponent_counts(std::span<const std::int64_t> counts) {
    const auto n = static_cast<unsigned>(counts.size());
    if (n == 0) throw std::invalid_argument("empty exponent histogram");
    unsigned g = n;
    for (unsigned e = 0; e < n; ++e)
        if (counts[e] != 0) g = std::gcd(g, e);
    const unsigned m = n / g;
    const Field& f = field(m);
    std::vector<std::int64_t> acc(f.phi, 0);
    for (unsigned e = 0; e < n; ++e) {
        if (counts[e] == 0) continue;
        for (auto [i, v] : f.rows[e / g]) acc[i] += v * counts[e];
    }
    std::vector<mpz_class> num(f.phi);
    for (unsigned i = 0; i < f.phi; ++i) num[i] = static_cast<long>(acc[i]);
    return Cyclo(m, std::move(num), 1);
}

Cyclo Cyclo::from_coefficients(unsigned order, std::span<const mpq_class> coeffs) {
    const Field& f = field(order);
    if (coeffs.size() != f.phi) throw std::invalid_argument("coefficient count must equal phi(order)");
    mpz_class den = 1;
    for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> num(f.phi);
    for (unsigned i = 0; i < f.phi; ++i) num[i] = coeffs[i].get_num() * (den / coeffs[i].get_den());
    return Cyclo(order, std::move(num), std::move(den));
}

mpq_class Cyclo::coeff(std::size_t i) const {
    mpq_class r(num_.at(i), den_);
    r.canonicalize();
    return r;
}

std::vector<mpq_class> Cyclo::coefficients() const {
    std::vector<mpq_class> out;
    out.reserve(num_.size());
    for (std::size_t i = 0; i < num_.size(); ++i) out.push_back(coeff(i));
    return out;
}

bool Cyclo::is_zero() const {
    for (const auto& c : num_)
        if (c != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (std::size_t i = 1; i < num_.size(); ++i)
        if (num_[i] != 0) return false;
    return true;
}

bool Cyclo::is_integer() const { return is_rational() && den_ == 1; }

mpq_class Cyclo::rational_value() const {
    if (!is_rational()) throw std::logic_error("value is not rational");
    return coeff(0);
}

Cyclo Cyclo::lifted(unsigned m) const {
    if (m == order_) return *this;
    if (m % order_ != 0) throw std::invalid_argument("lift target must be a multiple of the order");
    const Field& f = field(m);
    const unsigned k = m / order_;
    std::vector<mpz_class> num(f.phi);
    for (unsigned j = 0; j < num_.size(); ++j)
        if (num_[j] != 0) add_row(num, f, j * k, num_[j]);
    Cyclo out;
    out.order_ = m;
    out.num_ = std::move(num);
    out.den_ = den_;
    out.normalize(false);  // keep order m even for rationals: callers mix at order m
    return out;
}

std::pair<Cyclo, Cyclo> lift_to_common_order(const Cyclo& a, const Cyclo& b) {
    const unsigned m = std::lcm(a.order(), b.order());
    return {a.lifted(m), b.lifted(m)};
}

Cyclo Cyclo::conj() const {
    if (order_ == 1) return *this;
    const Field& f = field(order_);
    std::vector<mpz_class> num(f.phi);
    for (unsigned j = 0; j < num_.size(); ++j)
        if (num_[j] != 0) add_row(num, f, (order_ - j) % order_, num_[j]);
    return Cyclo(order_, std::move(num), den_);
}

Cyclo& Cyclo::operator+=(const Cyclo& other) {
    if (other.is_zero()) return *this;
    if (is_zero()) return *this = other;
    if (order_ != other.order_) {
        const unsigned m = std::lcm(order_, other.order_);
        Cyclo a = lifted(m);
        Cyclo b = other.lifted(m);
        a += b;
        return *this = std::move(a);
    }
    if (den_ == other.den_) {
        for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += other.num_[i];
    } else {
        for (std::size_t i = 0; i < num_.size(); ++i) {
            num_[i] *= other.den_;
            mpz_addmul(num_[i].get_mpz_t(), other.num_[i].get_mpz_t(), den_.get_mpz_t());
        }
        den_ *= other.den_;
    }
    normalize();
    return *this;
}

Cyclo Cyclo::operator-() const {
    Cyclo out = *this;
    for (auto& c : out.num_) c = -c;
    return out;
}

Cyclo& Cyclo::operator-=(const Cyclo& other) { return *this += -other; }

Cyclo& Cyclo::operator*=(const Cyclo& other) { return *this = *this * other; }

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    if (a.is_zero() || b.is_zero()) return Cyclo();
    if (a.order_ == 1 || b.order_ == 1) {
        const Cyclo& r = a.order_ == 1 ? a : b;
        const Cyclo& x = a.order_ == 1 ? b : a;
        std::vector<mpz_class> num = x.num_;
        for (auto& c : num) c *= r.num_[0];
        return Cyclo(x.order_, std::move(num), x.den_ * r.den_);
    }
    const unsigned m = std::lcm(a.order_, b.order_);
    if (a.order_ != m || b.order_ != m) return a.lifted(m) * b.lifted(m);
    const Field& f = field(m);
    const unsigned phi = f.phi;
    thread_local std::vector<mpz_class> acc;
    acc.assign(2 * phi - 1, 0);
    std::vector<unsigned> nz_b;
    for (unsigned j = 0; j < phi; ++j)
        if (b.num_[j] != 0) nz_b.push_back(j);
    for (unsigned i = 0; i < phi; ++i) {
        if (a.num_[i] == 0) continue;
        for (unsigned j : nz_b)
            mpz_addmul(acc[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
    for (unsigned e = 2 * phi - 2; e >= phi; --e) {
        if (acc[e] == 0) continue;
        if (e >= m) acc[e - m] += acc[e];
        else add_row(acc, f, e, acc[e]);
    }
    acc.resize(phi);
    return Cyclo(m, std::vector<mpz_class>(acc.begin(), acc.end()), a.den_ * b.den_);
}

bool operator==(const Cyclo& a, const Cyclo& b) {
    if (a.order_ == b.order_) return a.den_ == b.den_ && a.num_ == b.num_;
    auto [x, y] = lift_to_common_order(a, b);
    return x.den_ == y.den_ && x.num_ == y.num_;
}

Cyclo Cyclo::times_root(long s, unsigned order) const {
    if (is_zero()) return *this;
    {
        long e = s % static_cast<long>(order);
        if (e < 0) e += order;
        const unsigned g = std::gcd(static_cast<unsigned>(e), order);
        if (e == 0) return *this;
        if (g > 1) return times_root(e / g, order / g);
    }
    const unsigned m = std::lcm(order_, order);
    const Cyclo base = lifted(m);
    const Field& f = field(m);
    long shift = (s % static_cast<long>(order)) * static_cast<long>(m / order);
    shift %= static_cast<long>(m);
    if (shift < 0) shift += m;
    std::vector<mpz_class> num(f.phi);
    for (unsigned j = 0; j < base.num_.size(); ++j)
        if (base.num_[j] != 0) add_row(num, f, static_cast<unsigned>((j + shift) % m), base.num_[j]);
    return Cyclo(m, std::move(num), base.den_);
}

Cyclo Cyclo::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclo result(1);
    Cyclo base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

namespace {

using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// remainder and quotient of a / b over Q
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
    QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        const std::size_t shift = a.size() - b.size();
        mpq_class c = a.back() / b.back();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
        trim(a);
    }
    return {q, a};
}

QPoly sub_mul(const QPoly& s0, const QPoly& q, const QPoly& s1) {
    QPoly out(std::max(s0.size(), q.size() + s1.size()), 0);
    for (std::size_t i = 0; i < s0.size(); ++i) out[i] = s0[i];
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < s1.size(); ++j) out[i + j] -= q[i] * s1[j];
    trim(out);
    return out;
}

}  // namespace

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(zeta)");
    if (order_ == 1) return Cyclo(mpq_class(den_, num_[0]));
    // rational multiples of roots of unity: x^-1 = conj(x) / |x|^2
    const Cyclo norm = *this * conj();
    if (norm.is_rational()) return conj() * Cyclo(mpq_class(1) / norm.rational_value());
    const Field& f = field(order_);
    QPoly r0(f.poly.begin(), f.poly.end());
    QPoly r1 = coefficients();
    trim(r1);
    QPoly s0, s1{1};
    while (r1.size() > 1) {
        auto [q, r] = divmod(r0, r1);
        QPoly s2 = sub_mul(s0, q, s1);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    const mpq_class c = r1.at(0);
    for (auto& x : s1) x /= c;
    auto rem = divmod(s1, QPoly(f.poly.begin(), f.poly.end())).second;
    rem.resize(f.phi, 0);
    return from_coefficients(order_, rem);
}

std::complex<double> Cyclo::to_complex() const {
    std::complex<double> z = 0;
    for (unsigned j = 0; j < num_.size(); ++j) {
        if (num_[j] == 0) continue;
        const double angle = 2.0 * std::numbers::pi * j / order_;
        z += mpq_class(num_[j], den_).get_d() * std::polar(1.0, angle);
    }
    return z;
}

std::string Cyclo::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (unsigned j = 0; j < num_.size(); ++j) {
        if (num_[j] == 0 && !(j == 0 && is_zero())) continue;
        mpq_class c = coeff(j);
        if (!first) out << (c < 0 ? " - " : " + ");
        else if (c < 0) out << "-";
        mpq_class a = abs(c);
        if (j == 0) out << a;
        else {
            if (a != 1) out << a << "*";
            out << "z" << order_;
            if (j > 1) out << "^" << j;
        }
        first = false;
    }
    return out.str();
}

}  // namespace tdl

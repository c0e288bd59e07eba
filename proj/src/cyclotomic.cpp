#include "hopf/cyclotomic.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "hopf/errors.hpp"

namespace hopf {

namespace {

// Exact division of integer polynomials (ascending coefficients), remainder
// must be zero.
std::vector<Int> poly_divide(std::vector<Int> num, const std::vector<Int>& den) {
    if (num.size() < den.size())
        throw Error("poly_divide: numerator degree too small");
    std::vector<Int> quot(num.size() - den.size() + 1);
    const Int& lead = den.back();
    const std::size_t deg_den = den.size() - 1;
    for (std::size_t d = num.size() - 1;; --d) {
        if (num[d] != 0) {
            if (num[d] % lead != 0)
                throw Error("poly_divide: inexact division");
            Int q = num[d] / lead;
            quot[d - deg_den] = q;
            for (std::size_t i = 0; i < den.size(); ++i)
                num[d - deg_den + i] -= q * den[i];
        }
        if (d == deg_den)
            break;
    }
    for (const Int& c : num)
        if (c != 0)
            throw Error("poly_divide: nonzero remainder");
    return quot;
}

std::size_t euler_phi(std::size_t m) {
    std::size_t result = m;
    std::size_t n = m;
    for (std::size_t p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0)
                n /= p;
            result -= result / p;
        }
    if (n > 1)
        result -= result / n;
    return result;
}

} // namespace

const std::vector<Int>& Cyclotomic::cyclotomic_polynomial(std::size_t m) {
    static std::map<std::size_t, std::vector<Int>> cache;
    auto it = cache.find(m);
    if (it != cache.end())
        return it->second;

    // x^m - 1 divided by the product of Φ_d over proper divisors d.
    std::vector<Int> poly(m + 1);
    poly[0] = -1;
    poly[m] = 1;
    for (std::size_t d = 1; d < m; ++d)
        if (m % d == 0)
            poly = poly_divide(std::move(poly), cyclotomic_polynomial(d));
    return cache.emplace(m, std::move(poly)).first->second;
}

Cyclotomic::Cyclotomic(std::size_t conductor, std::vector<Rat> power_coeffs)
    : conductor_(conductor), coeffs_(std::move(power_coeffs)) {
    reduce();
}

Cyclotomic::Cyclotomic(const Rat& rational) : conductor_(1), coeffs_{rational} {}

Cyclotomic Cyclotomic::root_of_unity(std::size_t conductor, std::size_t power,
                                     const Rat& scale) {
    if (conductor == 0)
        throw Error("root_of_unity: conductor must be positive");
    std::vector<Rat> coeffs(conductor);
    coeffs[power % conductor] = scale;
    return Cyclotomic(conductor, std::move(coeffs));
}

void Cyclotomic::reduce() {
    const std::size_t m = conductor_;
    // fold exponents mod m
    std::vector<Rat> folded(m);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        folded[i % m] += coeffs_[i];
    // reduce mod Φ_m (monic)
    const auto& phi = cyclotomic_polynomial(m);
    const std::size_t deg_phi = phi.size() - 1;
    for (std::size_t d = folded.size(); d-- > deg_phi;) {
        if (folded[d] == 0)
            continue;
        Rat q = folded[d];
        for (std::size_t i = 0; i < phi.size(); ++i)
            folded[d - deg_phi + i] -= q * Rat(phi[i]);
    }
    folded.resize(deg_phi == 0 ? 1 : deg_phi);
    coeffs_ = std::move(folded);
}

Cyclotomic Cyclotomic::promoted(std::size_t m) const {
    if (m == conductor_)
        return *this;
    if (m % conductor_ != 0)
        throw Error("Cyclotomic::promoted: target is not a multiple of the conductor");
    const std::size_t step = m / conductor_;
    std::vector<Rat> coeffs(m);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs[(i * step) % m] += coeffs_[i];
    return Cyclotomic(m, std::move(coeffs));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& rhs) const {
    const std::size_t m = std::lcm(conductor_, rhs.conductor_);
    Cyclotomic a = promoted(m), b = rhs.promoted(m);
    std::vector<Rat> coeffs(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        coeffs[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
        coeffs[i] += b.coeffs_[i];
    return Cyclotomic(m, std::move(coeffs));
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (Rat& c : out.coeffs_)
        c = -c;
    return out;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& rhs) const { return *this + (-rhs); }

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
    *this = *this + rhs;
    return *this;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& rhs) const {
    const std::size_t m = std::lcm(conductor_, rhs.conductor_);
    Cyclotomic a = promoted(m), b = rhs.promoted(m);
    std::vector<Rat> coeffs(m);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0)
                continue;
            coeffs[(i + j) % m] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Cyclotomic(m, std::move(coeffs));
}

Cyclotomic Cyclotomic::operator*(const Rat& scalar) const {
    Cyclotomic out = *this;
    for (Rat& c : out.coeffs_)
        c *= scalar;
    return out;
}

Cyclotomic Cyclotomic::conjugate() const {
    const std::size_t m = conductor_;
    std::vector<Rat> coeffs(m);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs[(m - i) % m] += coeffs_[i];
    return Cyclotomic(m, std::move(coeffs));
}

bool Cyclotomic::operator==(const Cyclotomic& rhs) const {
    return (*this - rhs).is_zero();
}

bool Cyclotomic::is_zero() const {
    for (const Rat& c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            return false;
    return true;
}

Rat Cyclotomic::rational_value() const {
    if (!is_rational())
        throw Error("Cyclotomic: value is not rational: " + str());
    return coeffs_[0];
}

std::string Cyclotomic::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        if (!first)
            os << " + ";
        os << coeffs_[i];
        if (i > 0)
            os << "*z" << conductor_ << "^" << i;
        first = false;
    }
    if (first)
        os << "0";
    return os.str();
}

} // namespace hopf

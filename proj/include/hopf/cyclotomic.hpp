#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hopf/rational.hpp"

namespace hopf {

/// Element of the m-th cyclotomic field, stored as a rational polynomial in
/// ζ_m reduced modulo the m-th cyclotomic polynomial. Operations between
/// elements of different conductors promote both to the lcm conductor.
class Cyclotomic {
  public:
    Cyclotomic() : conductor_(1), coeffs_(1) {} // zero
    explicit Cyclotomic(const Rat& rational);

    /// ζ_m^power, scaled.
    static Cyclotomic root_of_unity(std::size_t conductor, std::size_t power,
                                    const Rat& scale = 1);

    std::size_t conductor() const { return conductor_; }
    const std::vector<Rat>& coefficients() const { return coeffs_; }

    Cyclotomic operator+(const Cyclotomic& rhs) const;
    Cyclotomic operator-(const Cyclotomic& rhs) const;
    Cyclotomic operator*(const Cyclotomic& rhs) const;
    Cyclotomic operator*(const Rat& scalar) const;
    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& rhs);

    /// Complex conjugation, ζ ↦ ζ⁻¹.
    Cyclotomic conjugate() const;

    bool operator==(const Cyclotomic& rhs) const;
    bool is_zero() const;
    bool is_rational() const;
    /// The value as a rational; throws if not rational.
    Rat rational_value() const;

    std::string str() const;

    /// Integer coefficients of the m-th cyclotomic polynomial (ascending).
    static const std::vector<Int>& cyclotomic_polynomial(std::size_t m);

  private:
    Cyclotomic(std::size_t conductor, std::vector<Rat> power_coeffs);

    void reduce();                         // mod Φ_m, then shrink conductor if rational
    Cyclotomic promoted(std::size_t m) const; // lift to conductor m

    std::size_t conductor_;
    std::vector<Rat> coeffs_; // length φ(conductor_) ≤ size ≤ conductor_, reduced
};

} // namespace hopf

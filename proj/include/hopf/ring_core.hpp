#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hopf/errors.hpp"
#include "hopf/linalg.hpp"
#include "hopf/rational.hpp"

namespace hopf {

/// Based ring with nonnegative-integer structure constants, a unit basis
/// element, a duality involution and a positive-integer dimension function.
/// Models the character ring of the dual of a semisimple Hopf algebra.
class FusionRing {
  public:
    using Index = std::size_t;

    std::string name;
    std::vector<std::string> basis; // labels, indices 0..n-1
    Index unit = 0;
    std::vector<Index> dual;    // involution on indices
    std::vector<Int> dims;      // positive integers per index
    // products[c][d] = sorted list of (e, multiplicity >= 1)
    std::vector<std::vector<std::vector<std::pair<Index, Int>>>> products;

    std::size_t rank() const { return basis.size(); }

    /// Structure constant N^e_{c,d}.
    Int structure_constant(Index c, Index d, Index e) const;

    /// Sum of ε(d)^2 over the whole basis (dim H).
    Int total_dimension() const;

    bool operator==(const FusionRing& other) const = default;
};

/// Exact-rational coefficient vector over the basis of a FusionRing.
class RingElement {
  public:
    RingElement() = default;
    RingElement(const FusionRing& ring, std::vector<Rat> coeffs);

    /// Basis element d as a ring element.
    static RingElement basis_element(const FusionRing& ring, FusionRing::Index d);
    static RingElement zero(const FusionRing& ring);

    const std::vector<Rat>& coefficients() const { return coeffs_; }
    const Rat& operator[](FusionRing::Index i) const { return coeffs_[i]; }
    Rat& operator[](FusionRing::Index i) { return coeffs_[i]; }

    const FusionRing* ring() const { return ring_; }

    RingElement operator+(const RingElement& rhs) const;
    RingElement operator-(const RingElement& rhs) const;
    RingElement operator*(const Rat& scalar) const;
    bool operator==(const RingElement& rhs) const;

  private:
    const FusionRing* ring_ = nullptr;
    std::vector<Rat> coeffs_;
};

struct ValidationCheck {
    std::string name;
    bool passed = false;
    std::string witness; // empty when passed
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;

    bool all_passed() const;
    const ValidationCheck* first_failure() const;
    const ValidationCheck* find(const std::string& name) const;
};

/// Runs every basis-ring axiom and reports pass/fail with a witness per
/// failure. Throws MalformedTable when the products table is syntactically
/// incomplete; axiom violations are reported, not thrown.
ValidationReport validate_ring(const FusionRing& ring);

/// Bilinear extension of the structure constants.
RingElement multiply(const FusionRing& ring, const RingElement& a, const RingElement& b);

/// Matrix of the operator x -> d*x (left) on the basis: column c is the
/// coefficient vector of d*c.
RationalMatrix left_mult_matrix(const FusionRing& ring, FusionRing::Index d);
/// Matrix of x -> x*d.
RationalMatrix right_mult_matrix(const FusionRing& ring, FusionRing::Index d);

/// Matrix of x -> a*x (left) for an arbitrary element, columns indexed by basis.
RationalMatrix left_mult_matrix(const FusionRing& ring, const RingElement& a);
RationalMatrix right_mult_matrix(const FusionRing& ring, const RingElement& a);

/// Dominant eigenvalue of left_mult_matrix(d) by power iteration from the
/// all-ones vector; converged when successive Rayleigh quotients differ by
/// less than tol. Throws NoConvergence past max_iter.
double fp_eigenvalue(const FusionRing& ring, FusionRing::Index d,
                     double tol = 1e-9, std::size_t max_iter = 10000);

/// Dominant eigenvalue of an arbitrary nonnegative rational matrix, same
/// iteration (used for the regular-element right-multiplication check).
double fp_eigenvalue(const RationalMatrix& m, double tol = 1e-9,
                     std::size_t max_iter = 10000);

/// Kernel of (matrix - eigenvalue*I) via exact elimination, canonicalized to
/// an RREF basis. The empty subspace is a valid result.
RationalSubspace eigenspace_exact(const RationalMatrix& matrix, const Rat& eigenvalue);

} // namespace hopf

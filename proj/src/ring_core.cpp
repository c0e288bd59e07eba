#include "hopf/ring_core.hpp"

#include <cmath>
#include <sstream>

namespace hopf {

Int FusionRing::structure_constant(Index c, Index d, Index e) const {
    for (const auto& [idx, mult] : products[c][d])
        if (idx == e)
            return mult;
    return 0;
}

Int FusionRing::total_dimension() const {
    Int total = 0;
    for (const Int& d : dims)
        total += d * d;
    return total;
}

RingElement::RingElement(const FusionRing& ring, std::vector<Rat> coeffs)
    : ring_(&ring), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != ring.rank())
        throw IndexOutOfRange("RingElement: coefficient count does not match basis size");
}

RingElement RingElement::basis_element(const FusionRing& ring, FusionRing::Index d) {
    if (d >= ring.rank())
        throw IndexOutOfRange("basis_element: index out of range");
    std::vector<Rat> c(ring.rank());
    c[d] = 1;
    return RingElement(ring, std::move(c));
}

RingElement RingElement::zero(const FusionRing& ring) {
    return RingElement(ring, std::vector<Rat>(ring.rank()));
}

RingElement RingElement::operator+(const RingElement& rhs) const {
    if (ring_ != rhs.ring_)
        throw RingMismatch("RingElement addition across different rings");
    std::vector<Rat> c(coeffs_);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] += rhs.coeffs_[i];
    return RingElement(*ring_, std::move(c));
}

RingElement RingElement::operator-(const RingElement& rhs) const {
    if (ring_ != rhs.ring_)
        throw RingMismatch("RingElement subtraction across different rings");
    std::vector<Rat> c(coeffs_);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] -= rhs.coeffs_[i];
    return RingElement(*ring_, std::move(c));
}

RingElement RingElement::operator*(const Rat& scalar) const {
    std::vector<Rat> c(coeffs_);
    for (Rat& x : c)
        x *= scalar;
    return RingElement(*ring_, std::move(c));
}

bool RingElement::operator==(const RingElement& rhs) const {
    return ring_ == rhs.ring_ && coeffs_ == rhs.coeffs_;
}

bool ValidationReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed)
            return false;
    return true;
}

const ValidationCheck* ValidationReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.passed)
            return &c;
    return nullptr;
}

const ValidationCheck* ValidationReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name)
            return &c;
    return nullptr;
}

namespace {

std::string idx_pair(const FusionRing& ring, std::size_t c, std::size_t d) {
    std::ostringstream os;
    os << "(" << ring.basis[c] << "," << ring.basis[d] << ")";
    return os.str();
}

} // namespace

ValidationReport validate_ring(const FusionRing& ring) {
    const std::size_t n = ring.rank();
    if (ring.dual.size() != n || ring.dims.size() != n)
        throw MalformedTable("dual/dims arrays do not match basis size");
    if (ring.unit >= n)
        throw MalformedTable("unit index out of range");
    if (ring.products.size() != n)
        throw MalformedTable("products table row count does not match basis");
    for (std::size_t c = 0; c < n; ++c) {
        if (ring.products[c].size() != n)
            throw MalformedTable("missing products entry in row " + ring.basis[c]);
        for (std::size_t d = 0; d < n; ++d)
            for (const auto& [e, m] : ring.products[c][d]) {
                if (e >= n)
                    throw MalformedTable("product term index out of range at " + idx_pair(ring, c, d));
                if (m < 1)
                    throw MalformedTable("nonpositive multiplicity at " + idx_pair(ring, c, d));
            }
    }
    for (std::size_t c = 0; c < n; ++c)
        if (ring.dual[c] >= n)
            throw MalformedTable("dual index out of range");

    ValidationReport report;

    {
        ValidationCheck chk{"involution", true, ""};
        for (std::size_t c = 0; c < n && chk.passed; ++c) {
            if (ring.dual[ring.dual[c]] != c) {
                chk = {"involution", false, "dual(dual(" + ring.basis[c] + ")) != " + ring.basis[c]};
            } else if (ring.dims[ring.dual[c]] != ring.dims[c]) {
                chk = {"involution", false, "dims mismatch at " + ring.basis[c]};
            } else if (ring.dims[c] <= 0) {
                chk = {"involution", false, "nonpositive dimension at " + ring.basis[c]};
            }
        }
        if (chk.passed && ring.dual[ring.unit] != ring.unit)
            chk = {"involution", false, "dual does not fix the unit"};
        report.checks.push_back(chk);
    }

    {
        ValidationCheck chk{"unit_law", true, ""};
        for (std::size_t d = 0; d < n && chk.passed; ++d) {
            const auto& left = ring.products[ring.unit][d];
            const auto& right = ring.products[d][ring.unit];
            const std::vector<std::pair<FusionRing::Index, Int>> expect{{d, 1}};
            if (left != expect)
                chk = {"unit_law", false, "unit*" + ring.basis[d] + " != " + ring.basis[d]};
            else if (right != expect)
                chk = {"unit_law", false, ring.basis[d] + "*unit != " + ring.basis[d]};
        }
        report.checks.push_back(chk);
    }

    {
        ValidationCheck chk{"duality_law", true, ""};
        for (std::size_t c = 0; c < n && chk.passed; ++c)
            for (std::size_t d = 0; d < n && chk.passed; ++d) {
                Int unit_mult = ring.structure_constant(c, d, ring.unit);
                Int expect = (d == ring.dual[c]) ? 1 : 0;
                if (unit_mult != expect)
                    chk = {"duality_law", false,
                           "multiplicity of unit in " + idx_pair(ring, c, d) + " is " +
                               unit_mult.str() + ", expected " + expect.str()};
            }
        report.checks.push_back(chk);
    }

    {
        ValidationCheck chk{"associativity", true, ""};
        for (std::size_t c = 0; c < n && chk.passed; ++c)
            for (std::size_t d = 0; d < n && chk.passed; ++d)
                for (std::size_t g = 0; g < n && chk.passed; ++g)
                    for (std::size_t f = 0; f < n && chk.passed; ++f) {
                        Int lhs = 0, rhs = 0;
                        for (const auto& [e, m] : ring.products[c][d])
                            lhs += m * ring.structure_constant(e, g, f);
                        for (const auto& [e, m] : ring.products[d][g])
                            rhs += m * ring.structure_constant(c, e, f);
                        if (lhs != rhs) {
                            std::ostringstream os;
                            os << "witness (c,d,g,f)=(" << ring.basis[c] << "," << ring.basis[d]
                               << "," << ring.basis[g] << "," << ring.basis[f] << "): " << lhs
                               << " != " << rhs;
                            chk = {"associativity", false, os.str()};
                        }
                    }
        report.checks.push_back(chk);
    }

    {
        ValidationCheck chk{"dimension_homomorphism", true, ""};
        for (std::size_t c = 0; c < n && chk.passed; ++c)
            for (std::size_t d = 0; d < n && chk.passed; ++d) {
                Int sum = 0;
                for (const auto& [e, m] : ring.products[c][d])
                    sum += m * ring.dims[e];
                if (sum != ring.dims[c] * ring.dims[d])
                    chk = {"dimension_homomorphism", false,
                           "witness " + idx_pair(ring, c, d) + ": " + sum.str() + " != " +
                               Int(ring.dims[c] * ring.dims[d]).str()};
            }
        report.checks.push_back(chk);
    }

    return report;
}

RingElement multiply(const FusionRing& ring, const RingElement& a, const RingElement& b) {
    if (a.ring() != &ring || b.ring() != &ring)
        throw RingMismatch("multiply: elements belong to a different ring");
    std::vector<Rat> out(ring.rank());
    for (std::size_t c = 0; c < ring.rank(); ++c) {
        if (a[c] == 0)
            continue;
        for (std::size_t d = 0; d < ring.rank(); ++d) {
            if (b[d] == 0)
                continue;
            const Rat f = a[c] * b[d];
            for (const auto& [e, m] : ring.products[c][d])
                out[e] += f * Rat(m);
        }
    }
    return RingElement(ring, std::move(out));
}

RationalMatrix left_mult_matrix(const FusionRing& ring, FusionRing::Index d) {
    if (d >= ring.rank())
        throw IndexOutOfRange("left_mult_matrix: index out of range");
    RationalMatrix m(ring.rank(), ring.rank());
    for (std::size_t c = 0; c < ring.rank(); ++c)
        for (const auto& [e, mult] : ring.products[d][c])
            m.at(e, c) = Rat(mult);
    return m;
}

RationalMatrix right_mult_matrix(const FusionRing& ring, FusionRing::Index d) {
    if (d >= ring.rank())
        throw IndexOutOfRange("right_mult_matrix: index out of range");
    RationalMatrix m(ring.rank(), ring.rank());
    for (std::size_t c = 0; c < ring.rank(); ++c)
        for (const auto& [e, mult] : ring.products[c][d])
            m.at(e, c) = Rat(mult);
    return m;
}

RationalMatrix left_mult_matrix(const FusionRing& ring, const RingElement& a) {
    RationalMatrix m(ring.rank(), ring.rank());
    for (std::size_t c = 0; c < ring.rank(); ++c) {
        RingElement col = multiply(ring, a, RingElement::basis_element(ring, c));
        for (std::size_t e = 0; e < ring.rank(); ++e)
            m.at(e, c) = col[e];
    }
    return m;
}

RationalMatrix right_mult_matrix(const FusionRing& ring, const RingElement& a) {
    RationalMatrix m(ring.rank(), ring.rank());
    for (std::size_t c = 0; c < ring.rank(); ++c) {
        RingElement col = multiply(ring, RingElement::basis_element(ring, c), a);
        for (std::size_t e = 0; e < ring.rank(); ++e)
            m.at(e, c) = col[e];
    }
    return m;
}

double fp_eigenvalue(const RationalMatrix& m, double tol, std::size_t max_iter) {
    const std::size_t n = m.rows();
    // Iterate on m + I: the shift adds exactly 1 to every eigenvalue and makes
    // the dominant one strictly dominant, so iteration cannot oscillate
    // between +r and -r pairs (bipartite multiplication graphs produce those).
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = static_cast<double>(m.at(i, j)) + (i == j ? 1.0 : 0.0);

    std::vector<double> v(n, 1.0);
    double prev = 0.0;
    for (std::size_t iter = 0; iter < max_iter; ++iter) {
        std::vector<double> w(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                w[i] += a[i][j] * v[j];
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            num += w[i] * v[i];
            den += v[i] * v[i];
        }
        double rayleigh = num / den;
        double norm = 0.0;
        for (double x : w)
            norm += x * x;
        norm = std::sqrt(norm);
        if (norm == 0.0)
            return 0.0; // zero matrix row space; dominant eigenvalue 0
        for (std::size_t i = 0; i < n; ++i)
            v[i] = w[i] / norm;
        if (iter > 0 && std::abs(rayleigh - prev) < tol)
            return rayleigh - 1.0;
        prev = rayleigh;
    }
    throw NoConvergence("power iteration did not converge");
}

double fp_eigenvalue(const FusionRing& ring, FusionRing::Index d, double tol,
                     std::size_t max_iter) {
    if (d >= ring.rank())
        throw IndexOutOfRange("fp_eigenvalue: index out of range");
    if (tol <= 0)
        throw Error("fp_eigenvalue: tol must be positive");
    return fp_eigenvalue(left_mult_matrix(ring, d), tol, max_iter);
}

RationalSubspace eigenspace_exact(const RationalMatrix& matrix, const Rat& eigenvalue) {
    RationalMatrix shifted = matrix;
    for (std::size_t i = 0; i < matrix.rows(); ++i)
        shifted.at(i, i) -= eigenvalue;
    return kernel(shifted);
}

} // namespace hopf

#pragma once

#include "blowdown/field.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace blowdown {

// Point of P^2 over Q(i, sqrt2, sqrt3); equality is up to a nonzero scalar.
struct ProjectivePoint {
    std::array<FieldElement, 3> coords;

    ProjectivePoint() = default;
    ProjectivePoint(FieldElement z1, FieldElement z2, FieldElement z3);

    bool same_point(const ProjectivePoint& other) const;
};

// Exponent triple (z1, z2, z3); total degree is the sum.
using Monomial = std::array<int, 3>;

// Homogeneous polynomial of degree 1 or 2 with field coefficients.
class HomogeneousPoly {
public:
    HomogeneousPoly(int degree, std::map<Monomial, FieldElement> coefficients);

    int degree() const { return degree_; }
    const std::map<Monomial, FieldElement>& coefficients() const { return coefficients_; }

    FieldElement evaluate(const ProjectivePoint& pt) const;

    // partial derivative evaluated at pt, var in {0, 1, 2}
    FieldElement partial(int var, const ProjectivePoint& pt) const;

    std::string to_string() const;

private:
    int degree_;
    std::map<Monomial, FieldElement> coefficients_;
};

enum class Contact { Tangent, Transverse, NotOnBoth };

const char* contact_name(Contact c);

// Both curves vanish and gradients are proportional (all 2x2 minors of the
// 2x3 Jacobian vanish) -> Tangent; both vanish with some minor nonzero ->
// Transverse; otherwise NotOnBoth.
Contact certify_contact(const HomogeneousPoly& p, const HomogeneousPoly& q,
                        const ProjectivePoint& pt);

// Intersection-count audit for one curve pair: certified local multiplicities
// (tangent counts 2) plus the undeclared residue must add up to deg*deg.
struct BezoutAudit {
    int degree_product = 0;
    int certified_total = 0; // sum over certified contacts
    int residual = 0;        // undeclared intersections
    bool balanced = false;
};

BezoutAudit audit_bezout(int deg_p, int deg_q, const std::vector<Contact>& contacts, int residual);

} // namespace blowdown

#include "blowdown/projective.hpp"

#include "blowdown/errors.hpp"

#include <numeric>
#include <sstream>

namespace blowdown {

ProjectivePoint::ProjectivePoint(FieldElement z1, FieldElement z2, FieldElement z3)
    : coords{std::move(z1), std::move(z2), std::move(z3)} {
    if (coords[0].is_zero() && coords[1].is_zero() && coords[2].is_zero())
        throw Error(ErrorKind::Validation, "projective point with all coordinates zero");
}

bool ProjectivePoint::same_point(const ProjectivePoint& other) const {
    // proportionality: all 2x2 minors of the stacked coordinates vanish
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
            FieldElement minor = coords[a] * other.coords[b] - coords[b] * other.coords[a];
            if (!minor.is_zero()) return false;
        }
    return true;
}

HomogeneousPoly::HomogeneousPoly(int degree, std::map<Monomial, FieldElement> coefficients)
    : degree_(degree), coefficients_(std::move(coefficients)) {
    if (degree_ < 1 || degree_ > 2)
        throw Error(ErrorKind::Validation, "polynomial degree must be 1 or 2");
    for (const auto& [mono, coeff] : coefficients_) {
        int total = mono[0] + mono[1] + mono[2];
        if (total != degree_ || mono[0] < 0 || mono[1] < 0 || mono[2] < 0)
            throw Error(ErrorKind::Validation, "monomial degree does not match declared degree " +
                                                   std::to_string(degree_));
        (void)coeff;
    }
}

FieldElement HomogeneousPoly::evaluate(const ProjectivePoint& pt) const {
    FieldElement total;
    for (const auto& [mono, coeff] : coefficients_) {
        FieldElement term = coeff;
        for (int v = 0; v < 3; ++v)
            for (int e = 0; e < mono[v]; ++e) term = term * pt.coords[v];
        total = total + term;
    }
    return total;
}

FieldElement HomogeneousPoly::partial(int var, const ProjectivePoint& pt) const {
    FieldElement total;
    for (const auto& [mono, coeff] : coefficients_) {
        if (mono[var] == 0) continue;
        FieldElement term = coeff * FieldElement(Rational(mono[var]));
        for (int v = 0; v < 3; ++v) {
            int e = mono[v] - (v == var ? 1 : 0);
            for (int j = 0; j < e; ++j) term = term * pt.coords[v];
        }
        total = total + term;
    }
    return total;
}

std::string HomogeneousPoly::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, coeff] : coefficients_) {
        if (coeff.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeff.to_string() << ")";
        for (int v = 0; v < 3; ++v)
            for (int e = 0; e < mono[v]; ++e) os << "*z" << (v + 1);
    }
    if (first) os << "0";
    return os.str();
}

const char* contact_name(Contact c) {
    switch (c) {
    case Contact::Tangent: return "tangent";
    case Contact::Transverse: return "transverse";
    case Contact::NotOnBoth: return "not-on-both";
    }
    return "?";
}

Contact certify_contact(const HomogeneousPoly& p, const HomogeneousPoly& q,
                        const ProjectivePoint& pt) {
    if (!p.evaluate(pt).is_zero() || !q.evaluate(pt).is_zero()) return Contact::NotOnBoth;
    std::array<FieldElement, 3> gp, gq;
    for (int v = 0; v < 3; ++v) {
        gp[v] = p.partial(v, pt);
        gq[v] = q.partial(v, pt);
    }
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
            FieldElement minor = gp[a] * gq[b] - gp[b] * gq[a];
            if (!minor.is_zero()) return Contact::Transverse;
        }
    return Contact::Tangent;
}

BezoutAudit audit_bezout(int deg_p, int deg_q, const std::vector<Contact>& contacts, int residual) {
    BezoutAudit audit;
    audit.degree_product = deg_p * deg_q;
    audit.residual = residual;
    for (Contact c : contacts) {
        switch (c) {
        case Contact::Tangent: audit.certified_total += 2; break;
        case Contact::Transverse: audit.certified_total += 1; break;
        case Contact::NotOnBoth:
            throw Error(ErrorKind::Validation, "audit over a point not on both curves");
        }
    }
    audit.balanced = audit.certified_total + audit.residual == audit.degree_product;
    return audit;
}

} // namespace blowdown

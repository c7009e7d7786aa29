#include "sopq/quasisphere.hpp"

#include <cmath>

namespace sopq {

double quadratic_form(const Signature& sig, const Eigen::VectorXd& x) {
    return inner(sig, x, x);
}

QuasiSpherePoint QuasiSpherePoint::make(const Signature& sig, int sign, Eigen::VectorXd coords,
                                        double tol) {
    if (sign != 1 && sign != -1) throw DimensionError("quasi-sphere sign must be +1 or -1");
    if (coords.size() != sig.n())
        throw DimensionError("quasi-sphere point needs " + std::to_string(sig.n()) +
                             " coordinates");
    if (sign == 1 && sig.p == 0)
        throw EmptySurfaceError("X+" + sig.str() + " is empty: the form is nonpositive");
    if (sign == -1 && sig.q == 0)
        throw EmptySurfaceError("X-" + sig.str() + " is empty: the form is nonnegative");
    const double residual = std::abs(quadratic_form(sig, coords) - sign);
    if (residual > tol)
        throw OffSurfaceError("point is off X" + std::string(sign == 1 ? "+" : "-") + sig.str() +
                                  ": |Q(x) - sign| = " + std::to_string(residual),
                              residual);
    return QuasiSpherePoint(sig, sign, std::move(coords), residual);
}

Eigen::VectorXd project(const QuasiSpherePoint& pt) {
    if (pt.sign() != 1)
        throw PreconditionError("projection to R^q is defined on X+ points");
    return pt.coords().tail(pt.sig().q);
}

double fiber_radius(const Eigen::VectorXd& z) { return std::sqrt(1.0 + z.squaredNorm()); }

QuasiSpherePoint chart(const Signature& sig, const Eigen::VectorXd& x,
                       const Eigen::VectorXd& y, double tol) {
    if (sig.p < 1) throw PreconditionError("chart needs p >= 1: X+ has no sphere factor");
    if (x.size() != sig.q || y.size() != sig.p)
        throw DimensionError("chart: x must lie in R^q and y in R^p");
    if (std::abs(y.norm() - 1.0) > tol)
        throw PreconditionError("chart: y must be a Euclidean unit vector");
    Eigen::VectorXd coords(sig.n());
    coords.head(sig.p) = fiber_radius(x) * y;
    coords.tail(sig.q) = x;
    return QuasiSpherePoint::make(sig, 1, std::move(coords), std::max(tol, 1e-9));
}

ChartCoords unchart(const QuasiSpherePoint& pt) {
    if (pt.sign() != 1) throw PreconditionError("unchart is defined on X+ points");
    if (pt.sig().p < 1) throw PreconditionError("unchart needs p >= 1");
    ChartCoords c;
    c.x = project(pt);
    c.y = pt.coords().head(pt.sig().p) / fiber_radius(c.x);
    return c;
}

QuasiSpherePoint act(const GroupElement& a, const QuasiSpherePoint& pt, double tol) {
    if (a.sig() != pt.sig())
        throw SignatureMismatchError("act: group element " + a.sig().str() +
                                     " cannot move a point of signature " + pt.sig().str());
    return QuasiSpherePoint::make(pt.sig(), pt.sign(), a.entries() * pt.coords(), tol);
}

QuasiSpherePoint minus_to_plus(const QuasiSpherePoint& pt) {
    const Signature s = pt.sig();
    Eigen::VectorXd swapped(s.n());
    swapped.head(s.q) = pt.coords().tail(s.q);
    swapped.tail(s.p) = pt.coords().head(s.p);
    return QuasiSpherePoint::make(s.swapped(), -pt.sign(), std::move(swapped),
                                  std::max(pt.residual() * 2.0, kDefaultTol));
}

std::string HomotopySetOrGroup::render() const {
    if (kind == Kind::set_cardinality) return std::to_string(cardinality) + " elements";
    return group.render();
}

HomotopySetOrGroup pi_k(const Signature& sig, int k) {
    if (sig.p == 0)
        throw EmptySurfaceError("X+" + sig.str() + " is empty; homotopy undefined");
    switch (k) {
        case 0:
            return HomotopySetOrGroup::set(sig.p == 1 ? 2 : 1);
        case 1:
            return HomotopySetOrGroup::of(sig.p == 2 ? FgAbelianGroup::z()
                                                     : FgAbelianGroup::trivial());
        case 2:
            return HomotopySetOrGroup::of(sig.p == 3 ? FgAbelianGroup::z()
                                                     : FgAbelianGroup::trivial());
        default:
            throw OutOfScopeError("pi_" + std::to_string(k) +
                                  " of a quasi-sphere is outside the supported range {0,1,2}");
    }
}

}  // namespace sopq

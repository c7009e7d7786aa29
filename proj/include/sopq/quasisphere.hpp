#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>

#include "sopq/fg_abelian.hpp"
#include "sopq/indefinite_group.hpp"

namespace sopq {

// Quasi-spheres X±(p,q): the level sets Q(x) = ±1 of the signature-(p,q)
// quadratic form, together with the projection fibration over R^q and the
// product chart R^q x S^(p-1) -> X+.

// Q(x) = <x,x> for the signature form.
double quadratic_form(const Signature& sig, const Eigen::VectorXd& x);

class QuasiSpherePoint {
  public:
    // Validates |Q(x) - sign| <= tol; throws OffSurfaceError otherwise and
    // EmptySurfaceError when the requested surface has no points at all.
    static QuasiSpherePoint make(const Signature& sig, int sign, Eigen::VectorXd coords,
                                 double tol = kDefaultTol);

    const Signature& sig() const { return sig_; }
    int sign() const { return sign_; }
    const Eigen::VectorXd& coords() const { return coords_; }
    double residual() const { return residual_; }

  private:
    QuasiSpherePoint(Signature sig, int sign, Eigen::VectorXd coords, double residual)
        : sig_(sig), sign_(sign), coords_(std::move(coords)), residual_(residual) {}

    Signature sig_;
    int sign_ = 1;
    Eigen::VectorXd coords_;
    double residual_ = 0.0;
};

inline QuasiSpherePoint on_sphere(const Signature& sig, int sign, Eigen::VectorXd coords,
                                  double tol = kDefaultTol) {
    return QuasiSpherePoint::make(sig, sign, std::move(coords), tol);
}

// The last q coordinates. Defined on X+ only.
Eigen::VectorXd project(const QuasiSpherePoint& pt);

// Radius of the fiber sphere over z: sqrt(1 + |z|^2) >= 1.
double fiber_radius(const Eigen::VectorXd& z);

// chart(x, y) = (sqrt(1 + x.x) y, x) with y a Euclidean unit vector in R^p.
QuasiSpherePoint chart(const Signature& sig, const Eigen::VectorXd& x,
                       const Eigen::VectorXd& y, double tol = kDefaultTol);

struct ChartCoords {
    Eigen::VectorXd x;  // base point in R^q
    Eigen::VectorXd y;  // unit vector in R^p
};

ChartCoords unchart(const QuasiSpherePoint& pt);

// Left action of the group on its quasi-sphere: coords -> A coords.
QuasiSpherePoint act(const GroupElement& a, const QuasiSpherePoint& pt, double tol = 1e-6);

// Swap the coordinate blocks: carries X-(p,q) onto X+(q,p) and back.
// Involutive.
QuasiSpherePoint minus_to_plus(const QuasiSpherePoint& pt);

// pi_0 is a pointed set with no group structure, so it is reported as a
// cardinality; pi_1 and pi_2 are abelian groups.
struct HomotopySetOrGroup {
    enum class Kind { set_cardinality, fg_abelian_group };

    Kind kind = Kind::set_cardinality;
    std::uint64_t cardinality = 1;
    FgAbelianGroup group;

    static HomotopySetOrGroup set(std::uint64_t n) {
        HomotopySetOrGroup h;
        h.kind = Kind::set_cardinality;
        h.cardinality = n;
        return h;
    }
    static HomotopySetOrGroup of(FgAbelianGroup g) {
        HomotopySetOrGroup h;
        h.kind = Kind::fg_abelian_group;
        h.group = std::move(g);
        return h;
    }

    bool operator==(const HomotopySetOrGroup&) const = default;

    std::string render() const;
};

// Low-degree homotopy of X+(p,q), independent of q:
//   pi_0 has 2 elements iff p = 1 (else 1),
//   pi_1 = Z iff p = 2 (else trivial),
//   pi_2 = Z iff p = 3 (else trivial).
// Requires p >= 1 (X+ is empty for p = 0) and k in {0, 1, 2}.
HomotopySetOrGroup pi_k(const Signature& sig, int k);

}  // namespace sopq

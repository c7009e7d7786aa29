#include "sopq/sampling.hpp"

namespace sopq {

Eigen::VectorXd random_gaussian_vector(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXd v(dim);
    for (int i = 0; i < dim; ++i) v(i) = gauss(rng);
    return v;
}

Eigen::VectorXd random_unit_vector(int dim, std::mt19937_64& rng) {
    Eigen::VectorXd v = random_gaussian_vector(dim, rng);
    double n = v.norm();
    while (n < 1e-6) {
        v = random_gaussian_vector(dim, rng);
        n = v.norm();
    }
    return v / n;
}

Eigen::MatrixXd random_antisymmetric(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            m(i, j) = gauss(rng);
            m(j, i) = -m(i, j);
        }
    return m;
}

AlgebraElement random_k_element(const Signature& sig, std::mt19937_64& rng, double scale) {
    return assemble_k(sig, scale * random_antisymmetric(sig.p, rng),
                      scale * random_antisymmetric(sig.q, rng));
}

AlgebraElement random_p_element(const Signature& sig, std::mt19937_64& rng, double norm_cap) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXd b(sig.p, sig.q);
    for (int i = 0; i < sig.p; ++i)
        for (int j = 0; j < sig.q; ++j) b(i, j) = gauss(rng);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(sig.n(), sig.n());
    m.topRightCorner(sig.p, sig.q) = b;
    m.bottomLeftCorner(sig.q, sig.p) = b.transpose();
    if (norm_cap > 0.0 && m.norm() > 1e-12) {
        std::uniform_real_distribution<double> mag(1e-3, norm_cap);
        m *= mag(rng) / m.norm();
    }
    return AlgebraElement::make(sig, std::move(m));
}

AlgebraElement random_algebra_element(const Signature& sig, std::mt19937_64& rng, double scale) {
    Eigen::MatrixXd m =
        random_k_element(sig, rng, scale).entries() + scale * random_p_element(sig, rng).entries();
    return AlgebraElement::make(sig, std::move(m));
}

GroupElement random_so_plus(const Signature& sig, std::mt19937_64& rng, double scale) {
    const Eigen::MatrixXd k = matrix_exp(random_k_element(sig, rng, scale).entries());
    const Eigen::MatrixXd p = matrix_exp(scale * random_p_element(sig, rng).entries());
    return GroupElement::make(sig, k * p, 1e-6);
}

GroupElement random_max_compact(const Signature& sig, std::mt19937_64& rng) {
    return GroupElement::make(sig, matrix_exp(random_k_element(sig, rng).entries()), 1e-8);
}

QuasiSpherePoint random_plus_point(const Signature& sig, std::mt19937_64& rng,
                                   double base_scale) {
    const Eigen::VectorXd x = base_scale * random_gaussian_vector(sig.q, rng);
    const Eigen::VectorXd y = random_unit_vector(sig.p, rng);
    return chart(sig, x, y);
}

}  // namespace sopq

#pragma once

#include <string>

#include "sopq/errors.hpp"

namespace sopq {

// Signature (p, q) of a diagonal quadratic form: p coefficients +1
// followed by q coefficients -1. Ambient dimension is n = p + q.
struct Signature {
    int p = 0;
    int q = 0;

    Signature() = default;
    Signature(int p_, int q_) : p(p_), q(q_) {
        if (p < 0 || q < 0)
            throw DimensionError("signature counts must be nonnegative, got (" +
                                 std::to_string(p_) + "," + std::to_string(q_) + ")");
    }

    int n() const { return p + q; }
    Signature swapped() const { return Signature(q, p); }
    bool definite() const { return p == 0 || q == 0; }

    bool operator==(const Signature&) const = default;

    std::string str() const {
        return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    }
};

}  // namespace sopq

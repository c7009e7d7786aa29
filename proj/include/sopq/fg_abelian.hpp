#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "sopq/errors.hpp"

namespace sopq {

// Exact integer machinery for finitely generated abelian groups.
// Everything in this header is arbitrary-precision integer arithmetic;
// no floating point is involved anywhere.

using Int = boost::multiprecision::cpp_int;

// Dense integer matrix with exact entries.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols);
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Int& operator()(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }

    bool operator==(const IntMatrix&) const = default;

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void add_row(int dst, int src, const Int& factor);   // row dst += factor * row src
    void add_col(int dst, int src, const Int& factor);   // col dst += factor * col src
    void negate_row(int i);

    std::string str() const;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

// Exact determinant by fraction-free (Bareiss) elimination.
Int int_det(const IntMatrix& m);

// U * M * V = S with U, V unimodular and S diagonal with a divisibility
// chain S(0,0) | S(1,1) | ... ; diagonal entries are nonnegative.
struct SmithResult {
    IntMatrix u;
    IntMatrix s;
    IntMatrix v;
};

SmithResult smith_normal_form(const IntMatrix& m);

// A finitely generated abelian group in invariant-factor normal form.
//
// Stored factors satisfy: every nonzero factor is >= 2, nonzero factors
// form a divisibility chain in increasing order, and zeros (free Z
// factors) come last. Two groups are isomorphic iff their stored factor
// lists are equal.
//
// Generator coordinates, wherever this module accepts them (quotient_by),
// follow the rendered order: free generators first, then the finite
// cyclic generators in increasing order. So Z x Z/2 has coordinates
// (a, b) with a the Z coordinate and b taken mod 2.
class FgAbelianGroup {
  public:
    FgAbelianGroup() = default;  // trivial group

    static FgAbelianGroup trivial() { return FgAbelianGroup(); }
    static FgAbelianGroup z();                 // infinite cyclic
    static FgAbelianGroup cyclic(const Int& n);  // Z/n (n = 0 gives Z, n = 1 trivial)
    static FgAbelianGroup from_cyclic_orders(const std::vector<Int>& orders);

    const std::vector<Int>& invariant_factors() const { return factors_; }
    int rank() const;                     // number of free Z factors
    std::vector<Int> torsion() const;     // the nonzero factors
    bool is_trivial() const { return factors_.empty(); }
    bool is_free() const;                 // trivial or all factors zero
    std::optional<Int> order() const;     // nullopt when infinite

    // Fixed grammar: "0", "Z", "Z/2", "Z x Z/2", "Z/2 x Z/2", ...
    // Free factors are rendered first.
    std::string render() const;

    bool operator==(const FgAbelianGroup&) const = default;

  private:
    explicit FgAbelianGroup(std::vector<Int> canonical) : factors_(std::move(canonical)) {}
    friend FgAbelianGroup from_presentation(int n_generators, const IntMatrix& relations);

    std::vector<Int> factors_;
};

// Cokernel Z^n / (row span of relations), in normal form.
FgAbelianGroup from_presentation(int n_generators, const IntMatrix& relations);

// Quotient of g by the subgroup generated by the given tuples, each
// expressed in g's generator coordinates (free generators first).
FgAbelianGroup quotient_by(const FgAbelianGroup& g,
                           const std::vector<std::vector<long long>>& sub_generators);

FgAbelianGroup direct_product(const FgAbelianGroup& g, const FgAbelianGroup& h);

bool is_isomorphic(const FgAbelianGroup& g, const FgAbelianGroup& h);

// Whether a surjective homomorphism g -> h exists. Both groups must be
// finite with order at most `bound`; brute-force enumeration of
// generator images with order-divisibility pruning.
bool is_epimorphic_image(const FgAbelianGroup& g, const FgAbelianGroup& h,
                         const Int& bound = 64);

}  // namespace sopq

#include "sopq/fg_abelian.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

namespace sopq {

namespace {

Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

}  // namespace

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DimensionError("matrix dimensions must be nonnegative");
    data_.assign(static_cast<std::size_t>(rows) * cols, Int(0));
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    data_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_)
            throw DimensionError("ragged initializer for IntMatrix");
        for (long long v : r) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

void IntMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::add_row(int dst, int src, const Int& factor) {
    for (int c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col(int dst, int src, const Int& factor) {
    for (int r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(int i) {
    for (int c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (int j = 0; j < cols_; ++j) os << (*this)(i, j) << (j + 1 < cols_ ? " " : "");
        os << (i + 1 < rows_ ? ";\n" : "]");
    }
    return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("IntMatrix product dimension mismatch");
    IntMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (int j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

Int int_det(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("determinant of non-square matrix");
    const int n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (a(i, k) != 0) { pivot = i; break; }
            if (pivot < 0) return 0;
            a.swap_rows(k, pivot);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;  // exact division
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

namespace {

// Locate the entry of smallest nonzero absolute value in s[t.., t..].
bool find_min_pivot(const IntMatrix& s, int t, int& pi, int& pj) {
    bool found = false;
    Int best = 0;
    for (int i = t; i < s.rows(); ++i)
        for (int j = t; j < s.cols(); ++j) {
            if (s(i, j) == 0) continue;
            Int a = abs_int(s(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

bool row_col_clean(const IntMatrix& s, int t) {
    for (int i = t + 1; i < s.rows(); ++i)
        if (s(i, t) != 0) return false;
    for (int j = t + 1; j < s.cols(); ++j)
        if (s(t, j) != 0) return false;
    return true;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
    SmithResult r{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
    IntMatrix& s = r.s;
    IntMatrix& u = r.u;
    IntMatrix& v = r.v;
    const int steps = std::min(m.rows(), m.cols());

    for (int t = 0; t < steps; ++t) {
        for (;;) {
            int pi = t, pj = t;
            if (!find_min_pivot(s, t, pi, pj)) break;  // remaining block is zero
            s.swap_rows(t, pi);
            u.swap_rows(t, pi);
            s.swap_cols(t, pj);
            v.swap_cols(t, pj);

            for (int i = t + 1; i < s.rows(); ++i) {
                if (s(i, t) == 0) continue;
                Int k = s(i, t) / s(t, t);
                if (k != 0) {
                    s.add_row(i, t, -k);
                    u.add_row(i, t, -k);
                }
            }
            for (int j = t + 1; j < s.cols(); ++j) {
                if (s(t, j) == 0) continue;
                Int k = s(t, j) / s(t, t);
                if (k != 0) {
                    s.add_col(j, t, -k);
                    v.add_col(j, t, -k);
                }
            }
            if (!row_col_clean(s, t)) continue;

            // Pivot must divide every remaining entry; if not, pull the
            // offending row up and reduce again.
            int bi = -1;
            for (int i = t + 1; i < s.rows() && bi < 0; ++i)
                for (int j = t + 1; j < s.cols(); ++j)
                    if (s(i, j) % s(t, t) != 0) {
                        bi = i;
                        break;
                    }
            if (bi < 0) break;
            s.add_row(t, bi, 1);
            u.add_row(t, bi, 1);
        }
        if (s(t, t) < 0) {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    return r;
}

FgAbelianGroup FgAbelianGroup::z() { return from_cyclic_orders({Int(0)}); }

FgAbelianGroup FgAbelianGroup::cyclic(const Int& n) {
    if (n < 0) throw DimensionError("cyclic order must be nonnegative");
    return from_cyclic_orders({n});
}

FgAbelianGroup FgAbelianGroup::from_cyclic_orders(const std::vector<Int>& orders) {
    const int k = static_cast<int>(orders.size());
    IntMatrix rel(k, k);
    for (int i = 0; i < k; ++i) rel(i, i) = orders[i];
    return from_presentation(k, rel);
}

int FgAbelianGroup::rank() const {
    return static_cast<int>(std::count(factors_.begin(), factors_.end(), Int(0)));
}

std::vector<Int> FgAbelianGroup::torsion() const {
    std::vector<Int> t;
    for (const Int& f : factors_)
        if (f != 0) t.push_back(f);
    return t;
}

bool FgAbelianGroup::is_free() const {
    return std::all_of(factors_.begin(), factors_.end(), [](const Int& f) { return f == 0; });
}

std::optional<Int> FgAbelianGroup::order() const {
    Int n = 1;
    for (const Int& f : factors_) {
        if (f == 0) return std::nullopt;
        n *= f;
    }
    return n;
}

std::string FgAbelianGroup::render() const {
    if (factors_.empty()) return "0";
    std::vector<std::string> parts;
    for (int i = 0; i < rank(); ++i) parts.emplace_back("Z");
    for (const Int& f : torsion()) parts.push_back("Z/" + f.str());
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += " x ";
        out += parts[i];
    }
    return out;
}

FgAbelianGroup from_presentation(int n_generators, const IntMatrix& relations) {
    if (n_generators < 0) throw DimensionError("negative generator count");
    if (relations.rows() > 0 && relations.cols() != n_generators)
        throw DimensionError("relation matrix must have one column per generator");

    std::vector<Int> torsion;
    int nonzero = 0;
    if (relations.rows() > 0) {
        SmithResult snf = smith_normal_form(relations);
        const int k = std::min(relations.rows(), relations.cols());
        for (int i = 0; i < k; ++i) {
            const Int& d = snf.s(i, i);
            if (d == 0) continue;
            ++nonzero;
            if (d >= 2) torsion.push_back(d);
        }
    }
    std::vector<Int> canonical = std::move(torsion);
    canonical.insert(canonical.end(), static_cast<std::size_t>(n_generators - nonzero), Int(0));
    return FgAbelianGroup(std::move(canonical));
}

FgAbelianGroup quotient_by(const FgAbelianGroup& g,
                           const std::vector<std::vector<long long>>& sub_generators) {
    const int r = g.rank();
    const std::vector<Int> tors = g.torsion();
    const int m = r + static_cast<int>(tors.size());

    IntMatrix rel(static_cast<int>(tors.size()) + static_cast<int>(sub_generators.size()), m);
    for (std::size_t j = 0; j < tors.size(); ++j)
        rel(static_cast<int>(j), r + static_cast<int>(j)) = tors[j];
    for (std::size_t i = 0; i < sub_generators.size(); ++i) {
        if (static_cast<int>(sub_generators[i].size()) != m)
            throw DimensionError("subgroup generator has wrong coordinate count");
        for (int j = 0; j < m; ++j)
            rel(static_cast<int>(tors.size() + i), j) = sub_generators[i][j];
    }
    return from_presentation(m, rel);
}

FgAbelianGroup direct_product(const FgAbelianGroup& g, const FgAbelianGroup& h) {
    std::vector<Int> orders = g.invariant_factors();
    const auto& hf = h.invariant_factors();
    orders.insert(orders.end(), hf.begin(), hf.end());
    return FgAbelianGroup::from_cyclic_orders(orders);
}

bool is_isomorphic(const FgAbelianGroup& g, const FgAbelianGroup& h) { return g == h; }

namespace {

// Elements of a finite group as coordinate tuples modulo the torsion factors.
using Tuple = std::vector<long long>;

std::vector<Tuple> enumerate_elements(const std::vector<long long>& mods) {
    std::vector<Tuple> out;
    Tuple cur(mods.size(), 0);
    for (;;) {
        out.push_back(cur);
        std::size_t i = 0;
        while (i < mods.size()) {
            if (++cur[i] < mods[i]) break;
            cur[i] = 0;
            ++i;
        }
        if (i == mods.size()) break;
    }
    return out;
}

long long element_order(const Tuple& t, const std::vector<long long>& mods) {
    long long ord = 1;
    for (std::size_t i = 0; i < t.size(); ++i) {
        long long o = mods[i] / std::gcd(mods[i], t[i]);
        ord = std::lcm(ord, o);
    }
    return ord;
}

// Size of the subgroup generated by the given elements, by closure.
std::size_t generated_size(const std::vector<Tuple>& gens, const std::vector<long long>& mods) {
    std::set<Tuple> seen;
    seen.insert(Tuple(mods.size(), 0));
    std::vector<Tuple> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<Tuple> next;
        for (const Tuple& x : frontier)
            for (const Tuple& gen : gens) {
                Tuple y(x.size());
                for (std::size_t i = 0; i < x.size(); ++i) y[i] = (x[i] + gen[i]) % mods[i];
                if (seen.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return seen.size();
}

bool search_surjection(const std::vector<long long>& gen_orders, std::size_t idx,
                       std::vector<Tuple>& chosen, const std::vector<Tuple>& elements,
                       const std::vector<long long>& mods, long long target_order) {
    std::size_t span = generated_size(chosen, mods);
    if (span == static_cast<std::size_t>(target_order)) return true;
    if (idx == gen_orders.size()) return false;

    // Remaining generators can enlarge the subgroup by at most the product
    // of their orders.
    long long headroom = 1;
    for (std::size_t j = idx; j < gen_orders.size(); ++j) {
        headroom *= gen_orders[j];
        if (headroom >= target_order) break;
    }
    if (static_cast<long long>(span) * headroom < target_order) return false;

    for (const Tuple& cand : elements) {
        if (gen_orders[idx] % element_order(cand, mods) != 0) continue;
        chosen.push_back(cand);
        if (search_surjection(gen_orders, idx + 1, chosen, elements, mods, target_order))
            return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

bool is_epimorphic_image(const FgAbelianGroup& g, const FgAbelianGroup& h, const Int& bound) {
    auto og = g.order();
    auto oh = h.order();
    if (!og || !oh) throw OutOfScopeError("epimorphic-image test requires finite groups");
    if (*og > bound || *oh > bound)
        throw OutOfScopeError("group order exceeds enumeration bound " + bound.str());

    if (*oh == 1) return true;
    if (*og % *oh != 0) return false;  // |H| must divide |G|

    std::vector<long long> gen_orders;
    for (const Int& d : g.torsion()) gen_orders.push_back(d.convert_to<long long>());
    std::vector<long long> mods;
    for (const Int& d : h.torsion()) mods.push_back(d.convert_to<long long>());

    const std::vector<Tuple> elements = enumerate_elements(mods);
    std::vector<Tuple> chosen;
    return search_surjection(gen_orders, 0, chosen, elements, mods,
                             oh->convert_to<long long>());
}

}  // namespace sopq

#pragma once

#include "nabext/lie_algebra.hpp"
#include "nabext/matrix.hpp"

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace nabext {

/// Strictly increasing list of basis positions, the canonical label of a
/// wedge-basis element.
struct MultiIndex {
    std::vector<int> indices;

    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> ix) : indices(std::move(ix)) {}

    int size() const { return int(indices.size()); }
    bool strictly_increasing() const;

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) = default;
    friend bool operator<(const MultiIndex& a, const MultiIndex& b) {
        return a.indices < b.indices;
    }
};

/// Sorts an index list into a MultiIndex with the sign of the sorting
/// permutation; nullopt when an index repeats.
std::optional<std::pair<MultiIndex, int>> sort_indices(std::vector<int> ix);

void for_each_combination(int n, int k, const std::function<void(const std::vector<int>&)>& fn);
std::vector<MultiIndex> all_multi_indices(int n, int k);

/// Antisymmetric multilinear map from a source space to a target space,
/// stored by its values on strictly increasing basis multi-indices. Absent
/// indices mean zero; an arity-0 cochain is a single target vector keyed by
/// the empty multi-index. Zero coefficient vectors are never stored, so equal
/// cochains compare equal structurally.
class Cochain {
public:
    Cochain() = default;
    Cochain(int source_dim, int arity, int target_dim);

    int source_dim() const { return source_dim_; }
    int arity() const { return arity_; }
    int target_dim() const { return target_dim_; }

    const std::map<MultiIndex, Vec>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    void set_coeff(MultiIndex mi, Vec value);
    void add_coeff(const MultiIndex& mi, const Vec& value);
    Vec coeff(const MultiIndex& mi) const;

    /// Value on basis vectors listed in any order, with the permutation sign;
    /// zero when an index repeats.
    Vec value_on(const std::vector<int>& ix) const;

    /// Value with a general vector in the first slot and basis vectors
    /// (strictly increasing) in the remaining slots.
    Vec value_with_first(const Vec& first, const std::vector<int>& rest) const;

    Cochain operator-() const;
    Cochain& operator+=(const Cochain& o);
    Cochain& operator-=(const Cochain& o);
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
    friend Cochain operator*(const Rational& s, const Cochain& c);
    friend bool operator==(const Cochain& a, const Cochain& b) = default;

private:
    void check_key(const MultiIndex& mi) const;

    int source_dim_ = 0;
    int arity_ = 0;
    int target_dim_ = 0;
    std::map<MultiIndex, Vec> coeffs_;
};

/// Multilinear antisymmetric evaluation on arbitrary source vectors.
Vec eval(const Cochain& c, const std::vector<Vec>& args);

/// Chevalley-Eilenberg differential of c with respect to the module action.
/// With 1-based argument positions: (delta c)(l_1,...,l_n) =
///   sum_s (-1)^s l_s . c(..., l_s omitted, ...)
/// + sum_{i<j} (-1)^{i+j+1} c([l_i,l_j], ..., l_i, l_j omitted, ...).
Cochain ce_differential(const Cochain& c, const ModuleStructure& m);

/// Insertion of P into the first slot of Q, summed over unshuffles with
/// permutation signs. arity(result) = arity(P) + arity(Q) - 1.
Cochain nr_insertion(const Cochain& p, const Cochain& q);

/// Nijenhuis-Richardson bracket [P,Q] = i_P Q - (-1)^{pq} i_Q P, where the
/// degrees p, q are arities minus one.
Cochain nr_bracket(const Cochain& p, const Cochain& q);

/// The bracket of l as an arity-2 cochain on l valued in l.
Cochain bracket_cochain(const LieAlgebra& l);

struct Bigrade {
    int m = 0;
    int n = 0;
    friend bool operator==(const Bigrade& a, const Bigrade& b) = default;
    friend bool operator<(const Bigrade& a, const Bigrade& b) {
        return std::pair(a.m, a.n) < std::pair(b.m, b.n);
    }
};

/// Counts source positions below / at-or-above the g/h split.
Bigrade bigrade_of(const MultiIndex& mi, int dim_g);

/// Cochain on a split source g (+) h valued in the h-block, decomposed by the
/// number of g- and h-arguments. Components are stored with target dimension
/// dim_h. Only m >= 1 components belong to the complex the gauge theory
/// lives in; the m = 0 column is reported separately.
struct BigradedCochain {
    int dim_g = 0;
    int dim_h = 0;
    std::map<Bigrade, Cochain> components;

    bool is_zero() const { return components.empty(); }
    friend bool operator==(const BigradedCochain& a, const BigradedCochain& b) = default;
};

struct BigradeDecomposition {
    BigradedCochain positive;            // components with m >= 1
    std::map<int, Cochain> zero_column;  // m = 0 components, keyed by n
};

/// Splits a sum-valued cochain supported in the h-block by bigrade.
/// Throws when the target is not the full split source or some value has a
/// nonzero g-component.
BigradeDecomposition bigrade_decompose(const Cochain& c, int dim_g);

/// Rebuilds the sum-valued cochain from a decomposition.
Cochain bigrade_assemble(const BigradedCochain& bc, const std::map<int, Cochain>& zero_column);

/// Pads an h-valued cochain component into a sum-valued cochain.
Cochain embed_h_valued(const Cochain& component, int dim_g);

}  // namespace nabext

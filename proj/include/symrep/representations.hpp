#pragma once

#include "symrep/content.hpp"
#include "symrep/matrix.hpp"
#include "symrep/permutation.hpp"
#include "symrep/tableau.hpp"

#include <cstddef>
#include <map>
#include <variant>
#include <vector>

namespace symrep {

enum class FormKind { Seminormal, Orthogonal };

/// Axial distance r = a_{i+1} - a_i of the contents of labels i+1 and i;
/// never zero.
int axial_distance(const StandardTableau& t, int i);

/// Content vector of the row-reading tableau; lexicographically maximal
/// over the shape.
ContentVector highest_weight(const Partition& shape);

struct RestrictionBlock {
    Partition parent;
    std::vector<std::size_t> indices; ///< basis positions with this penultimate shape
};

/// One irreducible (straight shape) or skew module, with its Young basis in
/// canonical order and the generator matrices of both forms.
///
/// Seminormal entries are exact rationals: each Coxeter generator has a
/// diagonal +-1 where the labels share a row or column, and acts on an
/// admissible pair T (lower inversion count), T' = swap by
///     s_i v_T  = v_T' + (1/r) v_T,
///     s_i v_T' = (1 - 1/r^2) v_T - (1/r) v_T',    r = a_{i+1} - a_i at T.
/// The orthogonal form replaces the pair block by
///     [[1/r, sqrt(1-1/r^2)], [sqrt(1-1/r^2), -1/r]].
class YoungModule {
public:
    explicit YoungModule(SkewShape shape);

    const SkewShape& shape() const { return shape_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<StandardTableau>& basis() const { return basis_; }
    const std::vector<int>& contents(std::size_t t) const { return contents_[t]; }

    Matrix<Rational> coxeter_seminormal(int i) const;
    Matrix<double> coxeter_orthogonal(int i) const;

    /// Diagonal matrix of the content of the box labeled j.
    Matrix<Rational> yjm_seminormal(int j) const;
    Matrix<double> yjm_orthogonal(int j) const;

    /// Product of Coxeter generator matrices over a reduced word of g;
    /// independent of the word chosen.
    Matrix<Rational> permutation_seminormal(const Permutation& g) const;
    Matrix<double> permutation_orthogonal(const Permutation& g) const;

    /// Basis indices grouped by the shape left after removing the box of
    /// the top label (straight shapes only); parents in canonical order,
    /// each appearing exactly once.
    std::vector<RestrictionBlock> restriction_blocks() const;

private:
    template <class T>
    Matrix<T> coxeter_impl(int i) const;
    void check_generator_index(int i) const;

    SkewShape shape_;
    std::vector<StandardTableau> basis_;
    std::vector<std::vector<int>> contents_;
    std::vector<int> inversion_lengths_;
    std::map<std::vector<int>, std::size_t> index_by_contents_;
};

/// Runtime-form matrix bundle for serialization surfaces.
struct RepMatrix {
    SkewShape shape;
    FormKind form;
    std::vector<StandardTableau> basis;
    std::variant<Matrix<Rational>, Matrix<double>> entries;
};

RepMatrix coxeter_matrix(const SkewShape& shape, int i, FormKind form);
RepMatrix yjm_matrix(const SkewShape& shape, int j, FormKind form);
RepMatrix permutation_matrix(const SkewShape& shape, const Permutation& g, FormKind form);

} // namespace symrep

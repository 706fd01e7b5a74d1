#pragma once

#include "symrep/group_algebra.hpp"

#include <vector>

namespace symrep {

/// Linear subspace of the group algebra of S_n, kept as a reduced
/// row-echelon basis over the canonical permutation coordinates. Two
/// subspaces are equal iff their reduced bases coincide row by row.
class Subspace {
public:
    explicit Subspace(int degree);

    static Subspace span(int degree, const std::vector<AlgebraElement>& elements);

    int degree() const { return degree_; }
    std::size_t rank() const { return rows_.size(); }
    std::size_t ambient_dim() const;

    /// Reduce and insert; true iff the rank grew.
    bool add_row(std::vector<Rational> row);
    bool add(const AlgebraElement& e);

    bool contains(const AlgebraElement& e) const;
    bool contains_row(const std::vector<Rational>& row) const;
    bool contains(const Subspace& other) const;

    const std::vector<std::vector<Rational>>& rows() const { return rows_; }
    std::vector<AlgebraElement> basis_elements() const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.degree_ == b.degree_ && a.rows_ == b.rows_;
    }

private:
    std::vector<Rational> reduce(std::vector<Rational> row) const;

    int degree_;
    std::vector<std::vector<Rational>> rows_; // sorted by pivot column
};

/// Basis of {c : sum_i c_i rows[i] = 0}, reduced row-echelon over the
/// coefficient coordinates.
std::vector<std::vector<Rational>> row_dependencies(const std::vector<std::vector<Rational>>& rows);

} // namespace symrep

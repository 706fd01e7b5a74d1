#pragma once

#include "symrep/characters.hpp"
#include "symrep/permutation.hpp"
#include "symrep/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <vector>

namespace symrep {

/// Formal rational combination of permutations of a fixed degree; the
/// sparse term map never stores explicit zeros.
class AlgebraElement {
public:
    explicit AlgebraElement(int degree) : degree_(degree) {}

    static AlgebraElement zero(int degree) { return AlgebraElement(degree); }
    static AlgebraElement identity(int degree);
    static AlgebraElement unit(const Permutation& g);

    int degree() const { return degree_; }
    const std::map<Permutation, Rational>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Permutation& g) const;
    void add_term(const Permutation& g, const Rational& c);

    AlgebraElement operator+(const AlgebraElement& other) const;
    AlgebraElement operator-(const AlgebraElement& other) const;
    /// Convolution product, apply-right-first on each term pair.
    AlgebraElement operator*(const AlgebraElement& other) const;
    AlgebraElement operator*(const Rational& scalar) const;

    /// Same element inside the larger group, new symbols fixed.
    AlgebraElement embedded(int new_degree) const;

    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

private:
    int degree_;
    std::map<Permutation, Rational> terms_;
};

/// Jucys-Murphy element X_i = (1 i) + (2 i) + ... + (i-1 i); X_1 = 0.
AlgebraElement yjm_element(int i, int n);

/// Sum of all permutations of cycle type rho in S_n (rho padded with fixed
/// points); a central element.
AlgebraElement class_sum(const CycleType& rho, int n);

/// Class sums of the subgroup S_m, embedded in degree n: a basis of the
/// center of the subgroup algebra.
std::vector<AlgebraElement> center_basis(int m, int n);

/// Canonical coordinates on the group algebra of S_n: all permutations in
/// lexicographic one-line order. Cached per degree.
class GroupIndex {
public:
    explicit GroupIndex(int degree);

    int degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const Permutation& at(std::size_t i) const { return elements_[i]; }
    std::size_t index_of(const Permutation& g) const;

    /// Index of at(i) * at(j); table-backed for degrees <= 6.
    std::size_t compose(std::size_t i, std::size_t j) const;

    std::vector<Rational> dense(const AlgebraElement& e) const;
    AlgebraElement element(const std::vector<Rational>& coords) const;

private:
    int degree_;
    std::vector<Permutation> elements_;
    std::map<Permutation, std::size_t> index_;
    std::vector<std::vector<std::uint32_t>> table_;
};

/// Shared per-degree index (degree <= 8).
const GroupIndex& group_index(int degree);

} // namespace symrep

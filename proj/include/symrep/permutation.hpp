#pragma once

#include "symrep/partition.hpp"

#include <string>
#include <vector>

namespace symrep {

/// Permutation of {1..n} in one-line notation. Composition applies the
/// right factor first: (a*b)(x) = a(b(x)).
class Permutation {
public:
    explicit Permutation(int degree); // identity
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(int degree) { return Permutation(degree); }
    static Permutation transposition(int degree, int a, int b);
    /// Adjacent transposition s_i = (i, i+1).
    static Permutation coxeter(int degree, int i);
    static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

    int degree() const { return static_cast<int>(image_.size()); }
    int operator()(int x) const { return image_[static_cast<std::size_t>(x - 1)]; }
    const std::vector<int>& one_line() const { return image_; }

    Permutation operator*(const Permutation& other) const;
    Permutation inverse() const;
    bool is_identity() const;

    /// Disjoint cycles of length >= 2, each rotated to start at its least
    /// element, sorted by that element.
    std::vector<std::vector<int>> cycles() const;
    /// Cycle lengths including fixed points, as a partition of n.
    Partition cycle_type() const;

    int inversions() const;
    /// Indices i with g = s_{w_1} * s_{w_2} * ... * s_{w_l}, l = inversions().
    /// Produced by bubble-sorting positions of the one-line notation.
    std::vector<int> reduced_word() const;
    /// A second reduced word, produced by sorting values instead of
    /// positions; generally differs from reduced_word().
    std::vector<int> reduced_word_by_values() const;

    Permutation embedded(int new_degree) const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.image_ < b.image_;
    }

private:
    std::vector<int> image_;
};

/// All permutations of degree n in lexicographic one-line order.
std::vector<Permutation> all_permutations(int degree);

/// (1 2 .. r1)(r1+1 ..)... for the cycle type rho padded to the degree.
Permutation cycle_type_representative(const Partition& rho, int degree);

} // namespace symrep

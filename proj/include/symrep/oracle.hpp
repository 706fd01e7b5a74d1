#pragma once

#include "symrep/subspace.hpp"

#include <vector>

namespace symrep {

/// Span of all words in the generators (including the empty word): iterate
/// span <- span + span * generators until the rank stabilizes.
Subspace generated_subalgebra(const std::vector<AlgebraElement>& generators);

/// Centralizer of the subgroup algebra of S_m inside the group algebra of
/// S_n (m < n allowed up to the degree cap; m = n gives the center).
/// Elements commuting with S_m are exactly the functions constant on
/// S_m-conjugation orbits, so the reduced basis is the orbit indicator sums.
Subspace centralizer(int n, int m);

/// Commutant of a list of algebra elements inside the group algebra of S_n,
/// solved as the kernel of x -> [x, generator].
Subspace commutant(const std::vector<AlgebraElement>& generators, int n);

/// Some h fixing n with h g h^-1 = g^-1 (exists for every g); found by
/// scanning S_{n-1} in lexicographic order.
Permutation conjugate_to_inverse(const Permutation& g);

/// Delete the top symbol n from its cycle, leaving a permutation of n-1
/// symbols; the identity-preserving S_{n-1}-bimodule projection.
Permutation virtual_projection(const Permutation& g);

/// Linear extension of virtual_projection to the group algebra.
AlgebraElement delete_last_symbol(const AlgebraElement& e);

/// Intersection of the centralizer of S_{n-1} with the span of the
/// identity fiber of symbol deletion ({I} and the transpositions (i n)):
/// the plane spanned by the identity and X_n. This pins X_n, up to scalar,
/// as the fiber element that commutes with S_{n-1} and carries no identity
/// component.
Subspace yjm_from_projection(int n);

struct SpectrumPoint {
    std::vector<int> weight;   ///< simultaneous eigenvalues of X_1..X_n
    std::size_t multiplicity;  ///< eigenspace dimension in the regular module
};

/// Joint eigenvalue tuples of X_1..X_n acting by left multiplication on the
/// regular module, by iterated exact eigenspace splitting over the
/// rationals. Points come out sorted by weight.
std::vector<SpectrumPoint> spectrum_bruteforce(int n);

} // namespace symrep

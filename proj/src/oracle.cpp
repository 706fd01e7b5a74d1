#include "symrep/oracle.hpp"

#include "symrep/config.hpp"

#include <algorithm>
#include <stdexcept>

namespace symrep {

Subspace generated_subalgebra(const std::vector<AlgebraElement>& generators) {
    if (generators.empty()) throw std::invalid_argument("generated_subalgebra: no generators");
    int n = generators.front().degree();
    for (const auto& g : generators) {
        if (g.degree() != n) throw std::invalid_argument("generated_subalgebra: degree mismatch");
    }
    require_size(n, group_algebra_degree_cap(), "generated_subalgebra");
    Subspace span(n);
    std::vector<AlgebraElement> frontier;
    span.add(AlgebraElement::identity(n));
    frontier.push_back(AlgebraElement::identity(n));
    for (const auto& g : generators) {
        if (span.add(g)) frontier.push_back(g);
    }
    while (!frontier.empty()) {
        std::vector<AlgebraElement> next;
        for (const auto& b : frontier) {
            for (const auto& g : generators) {
                AlgebraElement product = b * g;
                if (span.add(product)) next.push_back(std::move(product));
            }
        }
        frontier = std::move(next);
    }
    return span;
}

Subspace centralizer(int n, int m) {
    if (m < 1 || m > n) throw std::invalid_argument("centralizer: need 1 <= m <= n");
    require_size(n, group_algebra_degree_cap(), "centralizer");
    const GroupIndex& idx = group_index(n);
    std::vector<int> orbit(idx.order(), -1);
    std::vector<Permutation> conjugators;
    for (int i = 1; i < m; ++i) conjugators.push_back(Permutation::coxeter(n, i));
    int orbit_count = 0;
    for (std::size_t seed = 0; seed < idx.order(); ++seed) {
        if (orbit[seed] >= 0) continue;
        std::vector<std::size_t> stack{seed};
        orbit[seed] = orbit_count;
        while (!stack.empty()) {
            Permutation g = idx.at(stack.back());
            stack.pop_back();
            for (const Permutation& t : conjugators) {
                std::size_t j = idx.index_of(t * g * t); // t is an involution
                if (orbit[j] < 0) {
                    orbit[j] = orbit_count;
                    stack.push_back(j);
                }
            }
        }
        ++orbit_count;
    }
    Subspace result(n);
    for (int id = 0; id < orbit_count; ++id) {
        std::vector<Rational> row(idx.order(), Rational(0));
        for (std::size_t i = 0; i < idx.order(); ++i) {
            if (orbit[i] == id) row[i] = Rational(1);
        }
        result.add_row(std::move(row));
    }
    return result;
}

Subspace commutant(const std::vector<AlgebraElement>& generators, int n) {
    require_size(n, group_algebra_degree_cap(), "commutant");
    const GroupIndex& idx = group_index(n);
    // one row per basis permutation g: the concatenated coordinates of
    // [g, generator] over all generators
    std::vector<std::vector<Rational>> rows(idx.order());
    for (std::size_t i = 0; i < idx.order(); ++i) {
        AlgebraElement g = AlgebraElement::unit(idx.at(i));
        std::vector<Rational>& row = rows[i];
        row.reserve(idx.order() * generators.size());
        for (const AlgebraElement& c : generators) {
            if (c.degree() != n) throw std::invalid_argument("commutant: degree mismatch");
            std::vector<Rational> block = idx.dense(g * c - c * g);
            row.insert(row.end(), block.begin(), block.end());
        }
    }
    Subspace result(n);
    for (const auto& dep : row_dependencies(rows)) {
        result.add_row(dep);
    }
    return result;
}

Permutation conjugate_to_inverse(const Permutation& g) {
    int n = g.degree();
    if (n < 1) throw std::invalid_argument("conjugate_to_inverse: empty permutation");
    Permutation target = g.inverse();
    for (const Permutation& h : all_permutations(n - 1)) {
        Permutation candidate = h.embedded(n);
        if (candidate * g * candidate.inverse() == target) return candidate;
    }
    throw std::logic_error("conjugate_to_inverse: no conjugator found in S_{n-1}");
}

Permutation virtual_projection(const Permutation& g) {
    int n = g.degree();
    if (n < 2) throw std::invalid_argument("virtual_projection: degree must be >= 2");
    std::vector<int> image(static_cast<std::size_t>(n - 1));
    for (int x = 1; x < n; ++x) {
        int y = g(x);
        image[static_cast<std::size_t>(x - 1)] = (y == n) ? g(n) : y;
    }
    return Permutation(std::move(image));
}

AlgebraElement delete_last_symbol(const AlgebraElement& e) {
    AlgebraElement out(e.degree() - 1);
    for (const auto& [g, c] : e.terms()) out.add_term(virtual_projection(g), c);
    return out;
}

Subspace yjm_from_projection(int n) {
    if (n < 4) throw std::invalid_argument("yjm_from_projection: need n >= 4");
    require_size(n, group_algebra_degree_cap(), "yjm_from_projection");
    const GroupIndex& idx = group_index(n);
    // The identity fiber of the symbol-deletion map is {I, (1 n), ..,
    // (n-1 n)}; intersect its span with the centralizer of S_{n-1}.
    std::vector<AlgebraElement> fiber{AlgebraElement::identity(n)};
    for (int i = 1; i < n; ++i) {
        fiber.push_back(AlgebraElement::unit(Permutation::transposition(n, i, n)));
    }
    std::vector<std::vector<Rational>> stacked;
    for (const AlgebraElement& e : fiber) stacked.push_back(idx.dense(e));
    Subspace z = centralizer(n, n - 1);
    for (const auto& row : z.rows()) stacked.push_back(row);
    Subspace result(n);
    for (const auto& dep : row_dependencies(stacked)) {
        AlgebraElement combo(n);
        for (std::size_t i = 0; i < fiber.size(); ++i) {
            if (dep[i] != 0) combo = combo + fiber[i] * dep[i];
        }
        result.add(combo);
    }
    return result;
}

namespace {

/// Index maps h -> (j k) * h for j < k, acting on the regular module.
std::vector<std::vector<std::uint32_t>> left_mult_tables(const GroupIndex& idx, int k) {
    std::vector<std::vector<std::uint32_t>> maps;
    for (int j = 1; j < k; ++j) {
        Permutation t = Permutation::transposition(idx.degree(), j, k);
        std::vector<std::uint32_t> map(idx.order());
        for (std::size_t h = 0; h < idx.order(); ++h) {
            map[h] = static_cast<std::uint32_t>(idx.index_of(t * idx.at(h)));
        }
        maps.push_back(std::move(map));
    }
    return maps;
}

} // namespace

std::vector<SpectrumPoint> spectrum_bruteforce(int n) {
    if (n < 1) throw std::invalid_argument("spectrum_bruteforce: n must be >= 1");
    require_size(n, spectrum_degree_cap(), "spectrum_bruteforce");
    const GroupIndex& idx = group_index(n);
    const std::size_t order = idx.order();

    struct Piece {
        std::vector<int> weight;
        std::vector<std::vector<Rational>> basis;
    };
    std::vector<Piece> pieces(1);
    pieces[0].weight = {0}; // X_1 = 0
    for (std::size_t i = 0; i < order; ++i) {
        std::vector<Rational> row(order, Rational(0));
        row[i] = Rational(1);
        pieces[0].basis.push_back(std::move(row));
    }

    for (int k = 2; k <= n; ++k) {
        auto maps = left_mult_tables(idx, k);
        auto apply_xk = [&](const std::vector<Rational>& v) {
            std::vector<Rational> out(order, Rational(0));
            for (std::size_t h = 0; h < order; ++h) {
                if (v[h] == 0) continue;
                // coefficient of (j k) * h in X_k v picks up v_h
                for (const auto& map : maps) out[map[h]] += v[h];
            }
            return out;
        };
        std::vector<Piece> split;
        for (Piece& piece : pieces) {
            std::vector<std::vector<Rational>> images;
            images.reserve(piece.basis.size());
            for (const auto& b : piece.basis) images.push_back(apply_xk(b));
            std::size_t found = 0;
            // integer eigenvalues within the content range
            for (int a = -(n - 1); a <= n - 1 && found < piece.basis.size(); ++a) {
                std::vector<std::vector<Rational>> shifted(piece.basis.size());
                for (std::size_t i = 0; i < piece.basis.size(); ++i) {
                    shifted[i] = images[i];
                    for (std::size_t j = 0; j < order; ++j) {
                        if (piece.basis[i][j] != 0) shifted[i][j] -= Rational(a) * piece.basis[i][j];
                    }
                }
                std::vector<std::vector<Rational>> kernel = row_dependencies(shifted);
                if (kernel.empty()) continue;
                Piece sub;
                sub.weight = piece.weight;
                sub.weight.push_back(a);
                for (const auto& combo : kernel) {
                    std::vector<Rational> vec(order, Rational(0));
                    for (std::size_t i = 0; i < combo.size(); ++i) {
                        if (combo[i] == 0) continue;
                        for (std::size_t j = 0; j < order; ++j) {
                            if (piece.basis[i][j] != 0) vec[j] += combo[i] * piece.basis[i][j];
                        }
                    }
                    sub.basis.push_back(std::move(vec));
                }
                found += sub.basis.size();
                split.push_back(std::move(sub));
            }
            if (found != piece.basis.size()) {
                throw std::logic_error("spectrum_bruteforce: eigenspaces do not fill the module");
            }
        }
        pieces = std::move(split);
    }

    std::vector<SpectrumPoint> points;
    points.reserve(pieces.size());
    for (const Piece& piece : pieces) {
        points.push_back(SpectrumPoint{piece.weight, piece.basis.size()});
    }
    std::sort(points.begin(), points.end(),
              [](const SpectrumPoint& a, const SpectrumPoint& b) { return a.weight < b.weight; });
    return points;
}

} // namespace symrep

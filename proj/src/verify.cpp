#include "symrep/verify.hpp"

#include "symrep/characters.hpp"
#include "symrep/content.hpp"
#include "symrep/oracle.hpp"
#include "symrep/representations.hpp"
#include "symrep/text.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace symrep {

namespace {

struct Tally {
    bool ok = true;
    long long cases = 0;
    std::string first_failure;

    void require(bool condition, const std::string& what) {
        ++cases;
        if (!condition && ok) {
            ok = false;
            first_failure = what;
        }
    }
};

CheckResult finish(const std::string& id, const std::string& ref, int n, const Tally& tally) {
    CheckResult result{id, ref, n, tally.ok, {}};
    result.detail =
        tally.ok ? std::to_string(tally.cases) + " cases" : tally.first_failure;
    return result;
}

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long b = 1;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

Partition hook_shape(int k, int b) {
    std::vector<int> parts{k - b};
    parts.insert(parts.end(), static_cast<std::size_t>(b), 1);
    return Partition(std::move(parts));
}

/// All sub-partitions of outer (any size), canonical order within a size.
std::vector<Partition> contained_partitions(const Partition& outer) {
    std::vector<Partition> out;
    for (int l = 0; l <= outer.n(); ++l) {
        for (const Partition& mu : enumerate_partitions(l)) {
            if (outer.contains(mu)) out.push_back(mu);
        }
    }
    return out;
}

CycleType padded_type(const CycleType& rho, int n) {
    std::vector<int> parts = rho.parts();
    parts.insert(parts.end(), static_cast<std::size_t>(n - rho.n()), 1);
    std::sort(parts.rbegin(), parts.rend());
    return CycleType(std::move(parts));
}

constexpr double kTol = 1e-10;

} // namespace

namespace checks {

CheckResult spectrum_identity(int max_n) {
    Tally tally;
    for (int n = 1; n <= max_n; ++n) {
        std::map<std::vector<int>, std::size_t> expected;
        for (const Partition& shape : enumerate_partitions(n)) {
            auto tableaux = enumerate_tableaux(SkewShape(shape));
            for (const StandardTableau& t : tableaux) {
                expected[t.content_sequence()] = tableaux.size();
            }
        }
        std::vector<SpectrumPoint> points = spectrum_bruteforce(n);
        tally.require(points.size() == expected.size(),
                      "n=" + std::to_string(n) + ": tuple count " +
                          std::to_string(points.size()) + " != " +
                          std::to_string(expected.size()));
        for (const SpectrumPoint& point : points) {
            auto it = expected.find(point.weight);
            tally.require(it != expected.end() && it->second == point.multiplicity,
                          "n=" + std::to_string(n) + ": tuple " + format_content(point.weight) +
                              " multiplicity mismatch");
        }
    }
    return finish("spectrum_identity", "joint YJM spectrum = content vectors", max_n, tally);
}

CheckResult content_validation_exact(int max_n) {
    Tally tally;
    for (int n = 1; n <= max_n; ++n) {
        std::set<std::vector<int>> from_conditions;
        // depth-first over sequences whose prefixes satisfy the conditions;
        // candidate entries stay within one step of the seen range
        std::vector<int> prefix;
        auto extend = [&](auto&& self) -> void {
            if (static_cast<int>(prefix.size()) == n) {
                from_conditions.insert(prefix);
                return;
            }
            int lo = 0, hi = 0;
            for (int v : prefix) {
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
            int first = prefix.empty() ? 0 : lo - 1;
            int last = prefix.empty() ? 0 : hi + 1;
            for (int c = first; c <= last; ++c) {
                prefix.push_back(c);
                if (std::holds_alternative<ContentVector>(validate_content(prefix))) self(self);
                prefix.pop_back();
            }
        };
        extend(extend);
        std::set<std::vector<int>> from_tableaux;
        for (const Partition& shape : enumerate_partitions(n)) {
            for (const StandardTableau& t : enumerate_tableaux(SkewShape(shape))) {
                from_tableaux.insert(t.content_sequence());
            }
        }
        tally.require(from_conditions == from_tableaux,
                      "n=" + std::to_string(n) + ": validated sequences != tableau contents");
    }
    return finish("content_validation_exact", "content conditions characterize tableaux", max_n,
                  tally);
}

CheckResult content_round_trip(int max_n) {
    Tally tally;
    for (int n = 1; n <= max_n; ++n) {
        for (const Partition& shape : enumerate_partitions(n)) {
            for (const StandardTableau& t : enumerate_tableaux(SkewShape(shape))) {
                tally.require(tableau_from_content(content_vector(t)) == t,
                              "round trip failed for " + format_tableau(t) + " of " +
                                  format_partition(shape));
            }
        }
    }
    return finish("content_round_trip", "content vector determines the tableau", max_n, tally);
}

CheckResult admissible_swap_validity(int max_n) {
    Tally tally;
    for (int n = 2; n <= max_n; ++n) {
        for (const Partition& shape : enumerate_partitions(n)) {
            for (const StandardTableau& t : enumerate_tableaux(SkewShape(shape))) {
                std::vector<int> contents = t.content_sequence();
                for (int i = 1; i < n; ++i) {
                    auto swapped = admissible_transposition(t, i);
                    int gap = contents[static_cast<std::size_t>(i)] -
                              contents[static_cast<std::size_t>(i - 1)];
                    if (!swapped) {
                        tally.require(gap == 1 || gap == -1,
                                      "absent swap with axial distance != +-1");
                        continue;
                    }
                    std::vector<int> expected = contents;
                    std::swap(expected[static_cast<std::size_t>(i - 1)],
                              expected[static_cast<std::size_t>(i)]);
                    tally.require(swapped->content_sequence() == expected,
                                  "swap did not transpose the contents");
                    tally.require(
                        std::holds_alternative<ContentVector>(validate_content(expected)),
                        "swapped content vector failed validation");
                }
            }
        }
    }
    return finish("admissible_swap_validity", "admissible transpositions preserve content vectors",
                  max_n, tally);
}

CheckResult admissible_equivalence_classes(int max_n) {
    Tally tally;
    for (int n = 1; n <= max_n; ++n) {
        std::map<std::vector<int>, Partition> shape_of;
        for (const Partition& shape : enumerate_partitions(n)) {
            for (const StandardTableau& t : enumerate_tableaux(SkewShape(shape))) {
                shape_of[t.content_sequence()] = shape;
            }
        }
        // breadth-first classes under admissible swaps
        std::map<std::vector<int>, int> class_of;
        int classes = 0;
        for (const auto& [seed, shape] : shape_of) {
            if (class_of.count(seed)) continue;
            std::vector<std::vector<int>> stack{seed};
            class_of[seed] = classes;
            while (!stack.empty()) {
                std::vector<int> v = stack.back();
                stack.pop_back();
                for (int i = 1; i < n; ++i) {
                    int gap = v[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(i - 1)];
                    if (gap == 1 || gap == -1) continue;
                    std::vector<int> w = v;
                    std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
                    tally.require(shape_of.count(w) == 1, "admissible swap left the content set");
                    if (!class_of.count(w)) {
                        class_of[w] = classes;
                        stack.push_back(w);
                    }
                }
            }
            ++classes;
        }
        tally.require(classes == static_cast<int>(enumerate_partitions(n).size()),
                      "n=" + std::to_string(n) + ": class count != p(n)");
        for (const auto& [v, c] : class_of) {
            for (const auto& [w, d] : class_of) {
                if (shape_of[v] == shape_of[w]) {
                    tally.require(c == d, "same shape split across classes");
                } else {
                    tally.require(c != d, "distinct shapes merged into one class");
                }
            }
        }
    }
    return finish("admissible_equivalence_classes", "admissible classes = shapes", max_n, tally);
}

CheckResult highest_weight_lex_max(int max_n) {
    Tally tally;
    for (int n = 1; n <= max_n; ++n) {
        for (const Partition& shape : enumerate_partitions(n)) {
            std::vector<int> top = highest_weight(shape).entries();
            for (const StandardTableau& t : enumerate_tableaux(SkewShape(shape))) {
                tally.require(t.content_sequence() <= top,
                              "weight above the row-reading tableau in " +
                                  format_partition(shape));
            }
        }
    }
    return finish("highest_weight_lex_max", "row-reading tableau has the lex-maximal weight",
                  max_n, tally);
}

CheckResult minimal_paths(int max_n) {
    Tally tally;
    for (int n = 1; n <= max_n; ++n) {
        for (const Partition& shape : enumerate_partitions(n)) {
            StandardTableau target = canonical_tableau(SkewShape(shape));
            for (const StandardTableau& t : enumerate_tableaux(SkewShape(shape))) {
                std::vector<int> word = path_to_canonical(t);
                tally.require(static_cast<int>(word.size()) == inversion_length(t),
                              "path length != inversion count for " + format_tableau(t));
                StandardTableau current = t;
                bool valid = true;
                for (int i : word) {
                    auto next = admissible_transposition(current, i);
                    if (!next) {
                        valid = false;
                        break;
                    }
                    current = *next;
                }
                tally.require(valid && current == target,
                              "replay did not reach the canonical tableau");
            }
        }
    }
    return finish("minimal_paths", "sorting chains are geodesic", max_n, tally);
}

CheckResult dimension_squares(int max_n) {
    Tally tally;
    for (int n = 1; n <= max_n; ++n) {
        long long sum = 0;
        for (const Partition& shape : enumerate_partitions(n)) {
            long long d = tableau_count(SkewShape(shape));
            sum += d * d;
        }
        tally.require(sum == factorial(n),
                      "n=" + std::to_string(n) + ": sum of squares " + std::to_string(sum));
    }
    return finish("dimension_squares", "sum of squared dimensions = n!", max_n, tally);
}

CheckResult coxeter_relations_seminormal(int max_n) {
    Tally tally;
    for (int n = 2; n <= max_n; ++n) {
        for (const Partition& shape : enumerate_partitions(n)) {
            YoungModule module((SkewShape(shape)));
            std::vector<Matrix<Rational>> gen;
            for (int i = 1; i < n; ++i) gen.push_back(module.coxeter_seminormal(i));
            Matrix<Rational> one = Matrix<Rational>::identity(module.dim());
            std::string where = " at " + format_partition(shape);
            for (int i = 0; i + 1 < n; ++i) {
                tally.require(gen[i] * gen[i] == one, "involution failed" + where);
                for (std::size_t row = 0; row < module.dim(); ++row) {
                    tally.require(gen[i].nonzeros_in_row(row) <= 2,
                                  "generator row with more than two entries" + where);
                }
                for (int j = i + 2; j + 1 < n; ++j) {
                    tally.require(gen[i] * gen[j] == gen[j] * gen[i],
                                  "distant generators do not commute" + where);
                }
                if (i + 2 < n) {
                    tally.require(gen[i] * gen[i + 1] * gen[i] == gen[i + 1] * gen[i] * gen[i + 1],
                                  "braid relation failed" + where);
                }
            }
        }
    }
    return finish("coxeter_relations_seminormal", "Coxeter relations, seminormal form", max_n,
                  tally);
}

CheckResult coxeter_relations_orthogonal(int max_n) {
    Tally tally;
    for (int n = 2; n <= max_n; ++n) {
        for (const Partition& shape : enumerate_partitions(n)) {
            YoungModule module((SkewShape(shape)));
            std::vector<Matrix<double>> gen;
            for (int i = 1; i < n; ++i) gen.push_back(module.coxeter_orthogonal(i));
            Matrix<double> one = Matrix<double>::identity(module.dim());
            std::string where = " at " + format_partition(shape);
            for (int i = 0; i + 1 < n; ++i) {
                tally.require(max_abs_diff(gen[i] * gen[i], one) <= kTol,
                              "involution failed" + where);
                for (int j = i + 2; j + 1 < n; ++j) {
                    tally.require(max_abs_diff(gen[i] * gen[j], gen[j] * gen[i]) <= kTol,
                                  "distant generators do not commute" + where);
                }
                if (i + 2 < n) {
                    tally.require(max_abs_diff(gen[i] * gen[i + 1] * gen[i],
                                               gen[i + 1] * gen[i] * gen[i + 1]) <= kTol,
                                  "braid relation failed" + where);
                }
            }
        }
    }
    return finish("coxeter_relations_orthogonal", "Coxeter relations, orthogonal form", max_n,
                  tally);
}

CheckResult orthogonal_form_orthogonality(int max_n) {
    Tally tally;
    for (int n = 2; n <= max_n; ++n) {
        for (const Partition& shape : enumerate_partitions(n)) {
            YoungModule module((SkewShape(shape)));
            Matrix<double> one = Matrix<double>::identity(module.dim());
            for (int i = 1; i < n; ++i) {
                Matrix<double> m = module.coxeter_orthogonal(i);
                tally.require(max_abs_diff(m.transpose() * m, one) <= kTol,
                              "generator not orthogonal at " + format_partition(shape));
            }
        }
    }
    return finish("orthogonal_form_orthogonality", "orthogonal form is orthogonal", max_n, tally);
}

CheckResult hecke_relation_algebra(int max_n) {
    Tally tally;
    for (int n = 2; n <= max_n; ++n) {
        for (int i = 1; i < n; ++i) {
            AlgebraElement s = AlgebraElement::unit(Permutation::coxeter(n, i));
            AlgebraElement lhs = s * yjm_element(i, n) + AlgebraElement::identity(n);
            AlgebraElement rhs = yjm_element(i + 1, n) * s;
            tally.require(lhs == rhs, "algebra relation failed at n=" + std::to_string(n) +
                                          ", i=" + std::to_string(i));
        }
    }
    return finish("hecke_relation_algebra", "s_i X_i + 1 = X_{i+1} s_i in the group algebra",
                  max_n, tally);
}

CheckResult hecke_relation_seminormal(int max_n) {
    Tally tally;
    for (int n = 2; n <= max_n; ++n) {
        for (const Partition& shape : enumerate_partitions(n)) {
            YoungModule module((SkewShape(shape)));
            Matrix<Rational> one = Matrix<Rational>::identity(module.dim());
            for (int i = 1; i < n; ++i) {
                Matrix<Rational> s = module.coxeter_seminormal(i);
                Matrix<Rational> lhs = s * module.yjm_seminormal(i) + one;
                Matrix<Rational> rhs = module.yjm_seminormal(i + 1) * s;
                tally.require(lhs == rhs, "matrix relation failed at " + format_partition(shape) +
                                              ", i=" + std::to_string(i));
            }
        }
    }
    return finish("hecke_relation_seminormal", "s_i X_i + 1 = X_{i+1} s_i on the Young basis",
                  max_n, tally);
}

CheckResult eigenvector_law(int max_n) {
    Tally tally;
    for (int n = 2; n <= max_n; ++n) {
        for (const Partition& shape : enumerate_partitions(n)) {
            YoungModule module((SkewShape(shape)));
            for (std::size_t t = 0; t < module.dim(); ++t) {
                const StandardTableau& tab = module.basis()[t];
                for (int i = 1; i < n; ++i) {
                    auto swapped = admissible_transposition(tab, i);
                    if (!swapped || inversion_length(*swapped) < inversion_length(tab)) continue;
                    std::size_t u = 0;
                    while (!(module.basis()[u] == *swapped)) ++u;
                    Matrix<Rational> m = module.coxeter_seminormal(i);
                    Rational inv = frac(1, axial_distance(tab, i));
                    bool column_ok = m(t, t) == inv && m(u, t) == 1;
                    for (std::size_t row = 0; column_ok && row < module.dim(); ++row) {
                        if (row != t && row != u) column_ok = m(row, t) == 0;
                    }
                    tally.require(column_ok, "column action mismatch at " +
                                                 format_partition(shape) + ", i=" +
                                                 std::to_string(i));
                }
            }
        }
    }
    return finish("eigenvector_law", "admissible swap produces the paired eigenvector", max_n,
                  tally);
}

CheckResult reduced_word_independence() {
    Tally tally;
    YoungModule module(SkewShape(Partition{2, 1, 1}));
    for (const Permutation& g : all_permutations(4)) {
        std::vector<int> word_a = g.reduced_word();
        std::vector<int> word_b = g.reduced_word_by_values();
        tally.require(static_cast<int>(word_a.size()) == g.inversions() &&
                          static_cast<int>(word_b.size()) == g.inversions(),
                      "word length != inversion count");
        auto compose = [&](const std::vector<int>& word) {
            Permutation p = Permutation::identity(4);
            for (int i : word) p = p * Permutation::coxeter(4, i);
            return p;
        };
        tally.require(compose(word_a) == g && compose(word_b) == g,
                      "word does not multiply back to the permutation");
        auto product = [&](const std::vector<int>& word) {
            Matrix<Rational> m = Matrix<Rational>::identity(module.dim());
            for (int i : word) m = m * module.coxeter_seminormal(i);
            return m;
        };
        tally.require(product(word_a) == product(word_b),
                      "two reduced words gave different matrices");
    }
    return finish("reduced_word_independence", "matrix independent of the reduced word", 4, tally);
}

CheckResult branching_simple(int max_n) {
    Tally tally;
    for (int n = 1; n <= max_n; ++n) {
        for (const Partition& shape : enumerate_partitions(n)) {
            YoungModule module((SkewShape(shape)));
            std::vector<RestrictionBlock> blocks = module.restriction_blocks();
            std::vector<Partition> parents = young_graph_neighbors(shape).parents;
            tally.require(blocks.size() == parents.size(),
                          "block count != parent count at " + format_partition(shape));
            std::size_t total = 0;
            std::vector<std::size_t> block_of(module.dim());
            for (std::size_t b = 0; b < blocks.size(); ++b) {
                tally.require(std::count(parents.begin(), parents.end(), blocks[b].parent) == 1,
                              "block parent is not a Young-graph parent");
                tally.require(blocks[b].indices.size() ==
                                  static_cast<std::size_t>(tableau_count(SkewShape(blocks[b].parent))),
                              "block size != parent dimension");
                total += blocks[b].indices.size();
                for (std::size_t t : blocks[b].indices) block_of[t] = b;
            }
            tally.require(total == module.dim(), "blocks do not partition the basis");
            for (int i = 1; i + 1 < n; ++i) {
                Matrix<Rational> m = module.coxeter_seminormal(i);
                bool diag = true;
                for (std::size_t r = 0; diag && r < module.dim(); ++r) {
                    for (std::size_t c = 0; diag && c < module.dim(); ++c) {
                        if (m(r, c) != 0 && block_of[r] != block_of[c]) diag = false;
                    }
                }
                tally.require(diag, "generator crosses restriction blocks at " +
                                        format_partition(shape));
            }
        }
    }
    return finish("branching_simple", "restriction splits once over each Young-graph parent",
                  max_n, tally);
}

CheckResult restriction_path_counts(int max_n) {
    Tally tally;
    MnEvaluator mn;
    for (int m = 1; m <= max_n; ++m) {
        for (const Partition& lambda : enumerate_partitions(m)) {
            for (int l = 1; l < m; ++l) {
                for (const Partition& mu : enumerate_partitions(l)) {
                    long long sum = 0;
                    for (const CycleType& rho : enumerate_partitions(l)) {
                        sum += class_size(rho, l) * mn.eval(SkewShape(mu), rho) *
                               mn.eval(SkewShape(lambda), padded_type(rho, m));
                    }
                    tally.require(sum % factorial(l) == 0, "non-integer multiplicity");
                    tally.require(sum / factorial(l) == young_path_count(mu, lambda),
                                  "multiplicity != path count for " + format_partition(mu) +
                                      " in " + format_partition(lambda));
                }
            }
        }
    }
    return finish("restriction_path_counts", "restriction multiplicities = Young-graph path counts",
                  max_n, tally);
}

CheckResult skew_disconnected_dimension(int max_boxes) {
    Tally tally;
    for (int m = 2; m <= max_boxes; ++m) {
        for (const Partition& lambda : enumerate_partitions(m)) {
            for (const Partition& mu : contained_partitions(lambda)) {
                SkewShape shape(lambda, mu);
                if (shape.box_count() < 2) continue;
                std::vector<SkewShape> components = connected_components(shape);
                if (components.size() < 2) continue;
                long long expected = 1;
                int placed = 0;
                for (const SkewShape& piece : components) {
                    expected *= binomial(placed + piece.box_count(), piece.box_count());
                    expected *= tableau_count(piece);
                    placed += piece.box_count();
                }
                tally.require(tableau_count(shape) == expected,
                              "dimension does not factor for " + format_shape(shape));
            }
        }
    }
    return finish("skew_disconnected_dimension", "disconnected skew dimension factorizes",
                  max_boxes, tally);
}

CheckResult skew_module_relations(int max_outer_boxes) {
    Tally tally;
    for (int m = 2; m <= max_outer_boxes; ++m) {
        for (const Partition& lambda : enumerate_partitions(m)) {
            for (const Partition& mu : contained_partitions(lambda)) {
                if (mu.empty()) continue; // straight shapes have their own checks
                SkewShape shape(lambda, mu);
                int k = shape.box_count();
                if (k < 2) continue;
                YoungModule module(shape);
                Matrix<Rational> one = Matrix<Rational>::identity(module.dim());
                std::string where = " at " + format_shape(shape);
                std::vector<Matrix<Rational>> gen;
                for (int i = 1; i < k; ++i) gen.push_back(module.coxeter_seminormal(i));
                for (int i = 0; i + 1 < k; ++i) {
                    tally.require(gen[i] * gen[i] == one, "involution failed" + where);
                    tally.require(gen[i] * module.yjm_seminormal(i + 1) + one ==
                                      module.yjm_seminormal(i + 2) * gen[i],
                                  "commutation relation failed" + where);
                    for (int j = i + 2; j + 1 < k; ++j) {
                        tally.require(gen[i] * gen[j] == gen[j] * gen[i],
                                      "distant generators do not commute" + where);
                    }
                    if (i + 2 < k) {
                        tally.require(gen[i] * gen[i + 1] * gen[i] ==
                                          gen[i + 1] * gen[i] * gen[i + 1],
                                      "braid relation failed" + where);
                    }
                    Matrix<double> o = module.coxeter_orthogonal(i + 1);
                    tally.require(max_abs_diff(o.transpose() * o,
                                               Matrix<double>::identity(module.dim())) <= kTol,
                                  "orthogonality failed" + where);
                }
            }
        }
    }
    return finish("skew_module_relations", "skew modules satisfy the Coxeter and commutation relations",
                  max_outer_boxes, tally);
}

CheckResult character_trace_consistency(int max_n) {
    Tally tally;
    MnEvaluator mn;
    for (int n = 1; n <= max_n; ++n) {
        for (const Partition& shape : enumerate_partitions(n)) {
            YoungModule module((SkewShape(shape)));
            for (const CycleType& rho : enumerate_partitions(n)) {
                Permutation g = cycle_type_representative(rho, n);
                Rational trace = module.permutation_seminormal(g).trace();
                tally.require(trace == Rational(static_cast<long>(mn.eval(SkewShape(shape), rho))),
                              "trace mismatch at " + format_partition(shape) + ", class " +
                                  format_partition(rho));
            }
        }
    }
    return finish("character_trace_consistency", "Murnaghan-Nakayama values = seminormal traces",
                  max_n, tally);
}

CheckResult full_cycle_closed_form(int max_boxes) {
    Tally tally;
    MnEvaluator mn;
    for (int m = 1; m <= max_boxes; ++m) {
        for (const Partition& lambda : enumerate_partitions(m)) {
            for (const Partition& mu : contained_partitions(lambda)) {
                SkewShape shape(lambda, mu);
                int k = shape.box_count();
                if (k < 1) continue;
                tally.require(full_cycle_character(shape) == mn.eval(shape, CycleType{k}),
                              "closed form != strip sum for " + format_shape(shape));
            }
        }
    }
    return finish("full_cycle_closed_form", "full-cycle character closed form", max_boxes, tally);
}

CheckResult peeling_order_independence(int max_n) {
    Tally tally;
    MnEvaluator mn;
    for (int n = 1; n <= max_n; ++n) {
        for (const Partition& shape : enumerate_partitions(n)) {
            for (const CycleType& rho : enumerate_partitions(n)) {
                std::vector<int> increasing = rho.parts();
                std::reverse(increasing.begin(), increasing.end());
                tally.require(mn.eval(SkewShape(shape), rho) ==
                                  mn.eval_ordered(SkewShape(shape), increasing),
                              "peeling order changed the value at " + format_partition(shape));
            }
        }
    }
    return finish("peeling_order_independence", "strip peeling order independence", max_n, tally);
}

CheckResult character_table_orthogonality(int max_n) {
    Tally tally;
    for (int n = 1; n <= max_n; ++n) {
        CharacterTable table = character_table(n);
        std::size_t p = table.partitions.size();
        std::vector<long long> sizes;
        for (const CycleType& rho : table.cycle_types) sizes.push_back(class_size(rho, n));
        for (std::size_t a = 0; a < p; ++a) {
            tally.require(table.values[a][0] ==
                              tableau_count(SkewShape(table.partitions[a])),
                          "identity column is not the dimension");
            for (std::size_t b = a; b < p; ++b) {
                long long sum = 0;
                for (std::size_t c = 0; c < p; ++c) {
                    sum += sizes[c] * table.values[a][c] * table.values[b][c];
                }
                tally.require(sum == (a == b ? factorial(n) : 0),
                              "row orthogonality failed at n=" + std::to_string(n));
            }
        }
    }
    return finish("character_table_orthogonality", "character table row orthogonality", max_n,
                  tally);
}

CheckResult hook_dimensions(int max_k) {
    Tally tally;
    for (int k = 1; k <= max_k; ++k) {
        for (int b = 0; b < k; ++b) {
            tally.require(tableau_count(SkewShape(hook_shape(k, b))) == binomial(k - 1, b),
                          "hook dimension mismatch at k=" + std::to_string(k) +
                              ", b=" + std::to_string(b));
        }
    }
    return finish("hook_dimensions", "hook dimension = C(k-1, b)", max_k, tally);
}

CheckResult hook_yjm_eigenvalue(int max_k) {
    Tally tally;
    for (int k = 2; k <= max_k; ++k) {
        for (int b = 0; b < k; ++b) {
            YoungModule module(SkewShape(hook_shape(k, b)));
            Matrix<Rational> product = Matrix<Rational>::identity(module.dim());
            for (int j = 2; j <= k; ++j) product = product * module.yjm_seminormal(j);
            Rational expected(static_cast<long>(hook_eigenvalue(k, b)));
            bool ok = true;
            for (std::size_t i = 0; ok && i < module.dim(); ++i) {
                for (std::size_t j = 0; ok && j < module.dim(); ++j) {
                    ok = product(i, j) == (i == j ? expected : Rational(0));
                }
            }
            tally.require(ok, "X_2..X_k is not the expected scalar at k=" + std::to_string(k) +
                                  ", b=" + std::to_string(b));
        }
    }
    return finish("hook_yjm_eigenvalue", "X_2...X_k acts on hooks by (-1)^b b! (k-b-1)!", max_k,
                  tally);
}

CheckResult hook_multiplicity_law(int max_boxes) {
    Tally tally;
    for (int m = 1; m <= max_boxes; ++m) {
        for (const Partition& lambda : enumerate_partitions(m)) {
            for (const Partition& mu : contained_partitions(lambda)) {
                SkewShape shape(lambda, mu);
                int k = shape.box_count();
                if (k < 1) continue;
                auto height = skew_hook_height(shape);
                std::vector<int> contents;
                for (const Box& b : shape.boxes()) contents.push_back(b.content());
                std::sort(contents.begin(), contents.end());
                bool repeated_diagonal =
                    std::adjacent_find(contents.begin(), contents.end()) != contents.end();
                if (height) {
                    for (int b = 0; b < k; ++b) {
                        long long expected = (b == *height) ? 1 : 0;
                        tally.require(hook_multiplicity(hook_shape(k, b), shape) == expected,
                                      "hook multiplicity mismatch for " + format_shape(shape));
                    }
                } else if (repeated_diagonal) {
                    // two boxes on one diagonal exclude every hook constituent
                    for (int b = 0; b < k; ++b) {
                        tally.require(hook_multiplicity(hook_shape(k, b), shape) == 0,
                                      "hook constituent despite a repeated diagonal in " +
                                          format_shape(shape));
                    }
                }
            }
        }
    }
    return finish("hook_multiplicity_law", "hook constituents of skew hooks", max_boxes, tally);
}

CheckResult full_cycle_class_identity(int max_k) {
    Tally tally;
    for (int k = 2; k <= max_k; ++k) {
        AlgebraElement product = AlgebraElement::identity(k);
        for (int j = 2; j <= k; ++j) product = product * yjm_element(j, k);
        tally.require(product == class_sum(CycleType{k}, k),
                      "X_2...X_k != sum of k-cycles at k=" + std::to_string(k));
    }
    return finish("full_cycle_class_identity", "X_2...X_k = sum of all k-cycles", max_k, tally);
}

CheckResult center_in_generated(int max_n) {
    Tally tally;
    for (int n = 2; n <= max_n; ++n) {
        std::vector<AlgebraElement> generators = center_basis(n - 1, n);
        generators.push_back(yjm_element(n, n));
        Subspace algebra = generated_subalgebra(generators);
        for (const AlgebraElement& center_element : center_basis(n, n)) {
            tally.require(algebra.contains(center_element),
                          "class sum outside <Z(n-1), X_n> at n=" + std::to_string(n));
        }
    }
    return finish("center_in_generated", "Z(n) inside <Z(n-1), X_n>", max_n, tally);
}

CheckResult gz_generated_by_yjm(int max_n) {
    Tally tally;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<AlgebraElement> yjm;
        for (int i = 1; i <= n; ++i) yjm.push_back(yjm_element(i, n));
        std::vector<AlgebraElement> centers;
        for (int j = 1; j <= n; ++j) {
            for (const AlgebraElement& z : center_basis(j, n)) centers.push_back(z);
        }
        tally.require(generated_subalgebra(yjm) == generated_subalgebra(centers),
                      "<X_1..X_n> != <Z(1)..Z(n)> at n=" + std::to_string(n));
    }
    return finish("gz_generated_by_yjm", "GZ algebra generated by the YJM elements", max_n, tally);
}

CheckResult centralizer_generated(int max_n) {
    Tally tally;
    for (int n = 2; n <= max_n; ++n) {
        std::vector<AlgebraElement> generators = center_basis(n - 1, n);
        generators.push_back(yjm_element(n, n));
        tally.require(centralizer(n, n - 1) == generated_subalgebra(generators),
                      "centralizer != <Z(n-1), X_n> at n=" + std::to_string(n));
    }
    return finish("centralizer_generated", "centralizer of S_{n-1} = <Z(n-1), X_n>", max_n, tally);
}

CheckResult centralizer_commutative(int max_n) {
    Tally tally;
    for (int n = 2; n <= max_n; ++n) {
        const GroupIndex& idx = group_index(n);
        Subspace z = centralizer(n, n - 1);
        // orbit-sum rows have 0/1 coordinates; commutators via the
        // composition table with integer counters
        std::vector<std::vector<std::size_t>> supports;
        for (const auto& row : z.rows()) {
            std::vector<std::size_t> support;
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (row[i] != 0) support.push_back(i);
            }
            supports.push_back(std::move(support));
        }
        for (std::size_t a = 0; a < supports.size(); ++a) {
            for (std::size_t b = a + 1; b < supports.size(); ++b) {
                std::vector<long long> diff(idx.order(), 0);
                for (std::size_t i : supports[a]) {
                    for (std::size_t j : supports[b]) {
                        diff[idx.compose(i, j)] += 1;
                        diff[idx.compose(j, i)] -= 1;
                    }
                }
                bool zero = std::all_of(diff.begin(), diff.end(),
                                        [](long long v) { return v == 0; });
                tally.require(zero, "centralizer basis elements do not commute at n=" +
                                        std::to_string(n));
            }
        }
    }
    return finish("centralizer_commutative", "centralizer of S_{n-1} is commutative", max_n,
                  tally);
}

CheckResult gz_maximal_commutative(int max_n) {
    Tally tally;
    for (int n = 2; n <= max_n; ++n) {
        std::vector<AlgebraElement> centers;
        for (int j = 1; j <= n; ++j) {
            for (const AlgebraElement& z : center_basis(j, n)) centers.push_back(z);
        }
        tally.require(commutant(centers, n) == generated_subalgebra(centers),
                      "commutant of GZ exceeds GZ at n=" + std::to_string(n));
    }
    return finish("gz_maximal_commutative", "GZ algebra is maximal commutative", max_n, tally);
}

CheckResult gz_dimension(int max_n) {
    Tally tally;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<AlgebraElement> centers;
        for (int j = 1; j <= n; ++j) {
            for (const AlgebraElement& z : center_basis(j, n)) centers.push_back(z);
        }
        long long expected = 0;
        for (const Partition& shape : enumerate_partitions(n)) {
            expected += tableau_count(SkewShape(shape));
        }
        tally.require(static_cast<long long>(generated_subalgebra(centers).rank()) == expected,
                      "dim GZ != sum of dimensions at n=" + std::to_string(n));
    }
    return finish("gz_dimension", "dim GZ = sum of irreducible dimensions", max_n, tally);
}

CheckResult yjm_projection_plane(int max_n) {
    Tally tally;
    for (int n = 4; n <= max_n; ++n) {
        Subspace plane = yjm_from_projection(n);
        const GroupIndex& idx = group_index(n);
        AlgebraElement x = yjm_element(n, n);
        tally.require(plane.rank() == 2, "preimage plane rank != 2 at n=" + std::to_string(n));
        tally.require(plane.contains(AlgebraElement::identity(n)) && plane.contains(x),
                      "plane misses I or X_n at n=" + std::to_string(n));
        bool found_xn_row = false;
        for (const auto& row : plane.rows()) {
            if (row[idx.index_of(Permutation::identity(n))] == 0 && idx.element(row) == x) {
                found_xn_row = true;
            }
        }
        tally.require(found_xn_row,
                      "reduced basis has no identity-free X_n row at n=" + std::to_string(n));
    }
    return finish("yjm_projection_plane",
                  "identity fiber of symbol deletion meets the centralizer in {a X_n + b I}",
                  max_n, tally);
}

CheckResult conjugate_inverse_sweep(int max_n) {
    Tally tally;
    for (int n = 1; n <= max_n; ++n) {
        for (const Permutation& g : all_permutations(n)) {
            Permutation h = conjugate_to_inverse(g);
            tally.require(h(n) == n, "conjugator moves the top symbol");
            tally.require(h * g * h.inverse() == g.inverse(),
                          "conjugation identity failed at n=" + std::to_string(n));
        }
    }
    return finish("conjugate_inverse_sweep", "conjugation to the inverse inside S_{n-1}", max_n,
                  tally);
}

CheckResult projection_bimodule(int max_n) {
    Tally tally;
    for (int n = 2; n <= max_n; ++n) {
        std::vector<Permutation> small = all_permutations(n - 1);
        std::vector<Permutation> embedded;
        embedded.reserve(small.size());
        for (const Permutation& g : small) embedded.push_back(g.embedded(n));
        for (const Permutation& h : all_permutations(n)) {
            Permutation ph = virtual_projection(h);
            for (std::size_t a = 0; a < small.size(); ++a) {
                for (std::size_t b = 0; b < small.size(); ++b) {
                    Permutation lhs = virtual_projection(embedded[a] * h * embedded[b]);
                    tally.require(lhs == small[a] * ph * small[b],
                                  "bimodule identity failed at n=" + std::to_string(n));
                }
            }
        }
    }
    return finish("projection_bimodule", "symbol deletion is an S_{n-1}-bimodule map", max_n,
                  tally);
}

} // namespace checks

std::vector<CheckResult> run_verification(int n, bool deep) {
    const int lift = deep ? 1 : 0;
    auto bound = [&](int cap) { return std::min(n, cap + lift); };
    std::vector<CheckResult> results;
    results.push_back(checks::content_validation_exact(bound(8)));
    results.push_back(checks::content_round_trip(bound(8)));
    results.push_back(checks::admissible_swap_validity(bound(6)));
    results.push_back(checks::admissible_equivalence_classes(bound(6)));
    results.push_back(checks::highest_weight_lex_max(bound(7)));
    results.push_back(checks::minimal_paths(bound(7)));
    results.push_back(checks::dimension_squares(bound(8)));
    results.push_back(checks::skew_disconnected_dimension(bound(6)));
    results.push_back(checks::coxeter_relations_seminormal(bound(7)));
    results.push_back(checks::coxeter_relations_orthogonal(bound(8)));
    results.push_back(checks::orthogonal_form_orthogonality(bound(8)));
    results.push_back(checks::hecke_relation_algebra(bound(7)));
    results.push_back(checks::hecke_relation_seminormal(bound(7)));
    results.push_back(checks::eigenvector_law(bound(6)));
    results.push_back(checks::reduced_word_independence());
    results.push_back(checks::skew_module_relations(bound(7)));
    results.push_back(checks::branching_simple(bound(6)));
    results.push_back(checks::restriction_path_counts(bound(6)));
    results.push_back(checks::character_trace_consistency(bound(6)));
    results.push_back(checks::full_cycle_closed_form(bound(7)));
    results.push_back(checks::peeling_order_independence(bound(7)));
    results.push_back(checks::character_table_orthogonality(std::min(bound(8), 8)));
    results.push_back(checks::hook_dimensions(bound(8)));
    results.push_back(checks::hook_yjm_eigenvalue(bound(6)));
    results.push_back(checks::hook_multiplicity_law(bound(6)));
    results.push_back(checks::full_cycle_class_identity(bound(6)));
    results.push_back(checks::center_in_generated(bound(6)));
    results.push_back(checks::gz_generated_by_yjm(bound(5)));
    results.push_back(checks::centralizer_generated(bound(5)));
    results.push_back(checks::centralizer_commutative(bound(6)));
    results.push_back(checks::gz_maximal_commutative(bound(4)));
    results.push_back(checks::gz_dimension(bound(5)));
    results.push_back(checks::yjm_projection_plane(bound(6)));
    results.push_back(checks::conjugate_inverse_sweep(bound(5)));
    results.push_back(checks::projection_bimodule(bound(5)));
    results.push_back(checks::spectrum_identity(bound(5)));
    return results;
}

} // namespace symrep

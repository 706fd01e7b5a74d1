// Acceptance suite: every release criterion at its stated bound, one
// pass/fail line per criterion. Exits nonzero if anything fails.

#include "symrep/verify.hpp"

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

namespace {

using symrep::CheckResult;

struct Criterion {
    int number;
    std::string title;
    std::vector<CheckResult> parts;
};

void report(const Criterion& criterion, bool& all_pass, double seconds) {
    bool pass = true;
    std::string failure;
    for (const CheckResult& part : criterion.parts) {
        if (!part.pass) {
            pass = false;
            if (failure.empty()) failure = part.check_id + ": " + part.detail;
        }
    }
    all_pass = all_pass && pass;
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion.number << ": "
              << criterion.title;
    if (!pass) std::cout << " -- " << failure;
    std::cout << " (" << seconds << "s)\n";
    std::cout.flush();
}

} // namespace

int main() {
    namespace checks = symrep::checks;
    bool all_pass = true;
    auto timed = [&](int number, const std::string& title,
                     std::vector<CheckResult> (*run)()) {
        auto start = std::chrono::steady_clock::now();
        Criterion criterion{number, title, run()};
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                             .count();
        report(criterion, all_pass, seconds);
    };

    timed(1, "brute-force YJM spectrum equals the content vectors with multiplicities, n <= 5",
          [] { return std::vector<CheckResult>{checks::spectrum_identity(5)}; });

    timed(2, "Coxeter relations: seminormal exact for n <= 7, orthogonal to 1e-10 for n <= 8",
          [] {
              return std::vector<CheckResult>{checks::coxeter_relations_seminormal(7),
                                              checks::coxeter_relations_orthogonal(8),
                                              checks::orthogonal_form_orthogonality(8)};
          });

    timed(3, "s_i X_i + 1 = X_{i+1} s_i exactly in the group algebra and on Young bases, n <= 7",
          [] {
              return std::vector<CheckResult>{checks::hecke_relation_algebra(7),
                                              checks::hecke_relation_seminormal(7)};
          });

    timed(4, "character table equals seminormal traces (n <= 6); full-cycle closed form (<= 7 boxes)",
          [] {
              return std::vector<CheckResult>{checks::character_trace_consistency(6),
                                              checks::full_cycle_closed_form(7)};
          });

    timed(5, "hook dimensions C(k-1,b) for k <= 8; X_2..X_k hook eigenvalue and k-cycle sum, k <= 6",
          [] {
              return std::vector<CheckResult>{checks::hook_dimensions(8),
                                              checks::hook_yjm_eigenvalue(6),
                                              checks::full_cycle_class_identity(6)};
          });

    timed(6, "structural theorems: center generation, GZ generation, centralizer identities",
          [] {
              return std::vector<CheckResult>{checks::center_in_generated(6),
                                              checks::gz_generated_by_yjm(5),
                                              checks::centralizer_generated(5),
                                              checks::centralizer_commutative(6),
                                              checks::yjm_projection_plane(6)};
          });

    timed(7, "branching: restriction blocks match Young-graph parents; path-count multiplicities",
          [] {
              return std::vector<CheckResult>{checks::branching_simple(6),
                                              checks::restriction_path_counts(6)};
          });

    timed(8, "dimension identities: sum of squares = n! (n <= 8); dim GZ = sum of dims (n <= 5)",
          [] {
              return std::vector<CheckResult>{checks::dimension_squares(8),
                                              checks::gz_dimension(5)};
          });

    timed(9, "minimal sorting paths: |path_to_canonical| = inversion length for <= 7 boxes",
          [] { return std::vector<CheckResult>{checks::minimal_paths(7)}; });

    timed(10, "hook multiplicity in a skew hook is 1 iff the heights agree, <= 6 boxes",
          [] { return std::vector<CheckResult>{checks::hook_multiplicity_law(6)}; });

    std::cout << (all_pass ? "acceptance: all criteria passed"
                           : "acceptance: CRITERIA FAILED")
              << "\n";
    return all_pass ? 0 : 1;
}

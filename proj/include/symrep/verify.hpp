#pragma once

#include <string>
#include <vector>

namespace symrep {

struct CheckResult {
    std::string check_id;
    std::string theorem_ref;
    int n = 0; ///< bound the check actually ran at
    bool pass = false;
    std::string detail;
};

/// Individual verification checks. Each takes the inclusive bound it should
/// sweep up to and reports one result.
namespace checks {

CheckResult spectrum_identity(int max_n);
CheckResult content_validation_exact(int max_n);
CheckResult content_round_trip(int max_n);
CheckResult admissible_swap_validity(int max_n);
CheckResult admissible_equivalence_classes(int max_n);
CheckResult highest_weight_lex_max(int max_n);
CheckResult minimal_paths(int max_n);
CheckResult dimension_squares(int max_n);

CheckResult coxeter_relations_seminormal(int max_n);
CheckResult coxeter_relations_orthogonal(int max_n);
CheckResult orthogonal_form_orthogonality(int max_n);
CheckResult hecke_relation_algebra(int max_n);
CheckResult hecke_relation_seminormal(int max_n);
CheckResult eigenvector_law(int max_n);
CheckResult reduced_word_independence();
CheckResult skew_module_relations(int max_outer_boxes);
CheckResult branching_simple(int max_n);
CheckResult restriction_path_counts(int max_n);
CheckResult skew_disconnected_dimension(int max_boxes);

CheckResult character_trace_consistency(int max_n);
CheckResult full_cycle_closed_form(int max_boxes);
CheckResult peeling_order_independence(int max_n);
CheckResult character_table_orthogonality(int max_n);
CheckResult hook_dimensions(int max_k);
CheckResult hook_yjm_eigenvalue(int max_k);
CheckResult hook_multiplicity_law(int max_boxes);

CheckResult full_cycle_class_identity(int max_k);
CheckResult center_in_generated(int max_n);
CheckResult gz_generated_by_yjm(int max_n);
CheckResult centralizer_generated(int max_n);
CheckResult centralizer_commutative(int max_n);
CheckResult gz_maximal_commutative(int max_n);
CheckResult gz_dimension(int max_n);
CheckResult yjm_projection_plane(int max_n);
CheckResult conjugate_inverse_sweep(int max_n);
CheckResult projection_bimodule(int max_n);

} // namespace checks

/// The full suite, every check bounded by min(n, its stated cap); deep
/// lifts each cap by one. Order is stable.
std::vector<CheckResult> run_verification(int n, bool deep = false);

} // namespace symrep

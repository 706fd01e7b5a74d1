#pragma once

#include <stdexcept>
#include <string>

namespace symrep {

/// Thrown when an operation would exceed its combinatorial size cap.
class SizeCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Box-count cap for enumeration operations (partitions, tableaux).
/// Defaults to 20; override with the SYMREP_SIZE_CAP environment variable.
int enumeration_size_cap();

/// Largest n for character_table (default 8).
int character_table_cap();

/// Largest degree for group-algebra subspace computations (default 7).
int group_algebra_degree_cap();

/// Largest degree for the brute-force spectrum computation (default 6).
int spectrum_degree_cap();

void require_size(int n, int cap, const std::string& what);

} // namespace symrep

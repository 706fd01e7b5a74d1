#include "symrep/config.hpp"

#include <cstdlib>

namespace symrep {

namespace {

int env_cap_or(const char* name, int fallback) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return fallback;
    char* end = nullptr;
    long value = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || value < 0 || value > 1000) return fallback;
    return static_cast<int>(value);
}

} // namespace

int enumeration_size_cap() {
    static const int cap = env_cap_or("SYMREP_SIZE_CAP", 20);
    return cap;
}

int character_table_cap() { return 8; }

int group_algebra_degree_cap() { return 7; }

int spectrum_degree_cap() { return 6; }

void require_size(int n, int cap, const std::string& what) {
    if (n > cap) {
        throw SizeCapError(what + ": size " + std::to_string(n) + " exceeds cap " +
                           std::to_string(cap));
    }
}

} // namespace symrep

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace casimir {

inline constexpr const char* kEngineVersion = "casimir-1.0.0";

// Raised when an intermediate expansion exceeds the configured term budget.
// Callers translate this into a resource-bound failure instead of grinding on.
struct TermBoundExceeded : std::runtime_error {
    explicit TermBoundExceeded(std::size_t bound)
        : std::runtime_error("term count exceeded configured bound of " +
                             std::to_string(bound)) {}
};

struct TensorBoundExceeded : std::runtime_error {
    explicit TensorBoundExceeded(std::size_t dim, std::size_t bound)
        : std::runtime_error("tensor space dimension " + std::to_string(dim) +
                             " exceeds configured bound of " + std::to_string(bound)) {}
};

struct NonCentralError : std::invalid_argument {
    explicit NonCentralError(const std::string& what) : std::invalid_argument(what) {}
};

struct EngineLimits {
    std::size_t term_bound = 4'000'000;    // max PBW terms in any single element
    std::size_t tensor_bound = 1'048'576;  // max tensor-space dimension n^legs
    int parallelism = 1;                   // worker threads for block-parallel reductions
};

// Process-wide limits. Mutable so the CLI can install user configuration;
// results are deterministic regardless of the parallelism value.
EngineLimits& limits();

}  // namespace casimir

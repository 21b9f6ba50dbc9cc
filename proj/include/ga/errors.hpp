#pragma once

#include <stdexcept>
#include <string>

namespace ga {

/// Group closure exceeded its element cap; almost always an arithmetic bug
/// in the generators rather than a genuinely larger group.
struct ClosureDivergedError : std::runtime_error {
    explicit ClosureDivergedError(const std::string& what) : std::runtime_error(what) {}
};

struct NotInGroupError : std::invalid_argument {
    explicit NotInGroupError(const std::string& what) : std::invalid_argument(what) {}
};

/// A point set handed to an orbit decomposition is not closed under the group.
struct NotInvariantError : std::invalid_argument {
    explicit NotInvariantError(const std::string& what) : std::invalid_argument(what) {}
};

/// The linear functional used to split roots into positive/negative vanishes
/// on some root; the caller should retry with a different functional.
struct NonGenericFunctionalError : std::runtime_error {
    explicit NonGenericFunctionalError(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateInputError : std::invalid_argument {
    explicit DegenerateInputError(const std::string& what) : std::invalid_argument(what) {}
};

struct CensusMismatchError : std::runtime_error {
    explicit CensusMismatchError(const std::string& what) : std::runtime_error(what) {}
};

struct UnclassifiableFaceError : std::runtime_error {
    explicit UnclassifiableFaceError(const std::string& what) : std::runtime_error(what) {}
};

struct AxisNotFixedError : std::invalid_argument {
    explicit AxisNotFixedError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace ga

#pragma once

#include <stdexcept>

namespace chevalley {

// Invalid construction requests (bad type/rank, wrong node, empty selection).
struct RankOutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotMinuscule : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct EmptySelection : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Arithmetic plumbing misuse.
struct RingMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DimMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NonUnit : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct Unsupported : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Internal consistency failures and run-time limits.
struct InconsistentConstant : std::logic_error {
    using std::logic_error::logic_error;
};
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotUnipotent : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct FactorizationFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace chevalley

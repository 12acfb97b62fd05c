#pragma once

#include <stdexcept>
#include <string>

namespace fcaerr {

/// Malformed input data (.cxt, CSV, JSON specs).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Concept enumeration exceeded the configured cap. Mirrors the "-" cells of
/// large result tables: the tool refuses to hang, the caller decides whether
/// to raise the cap or fall back to attribute-error-only mode.
class CapExceededError : public std::runtime_error {
public:
    explicit CapExceededError(std::size_t cap)
        : std::runtime_error("concept enumeration exceeded cap of " + std::to_string(cap) +
                             " (intractable; raise the cap or use attribute errors only)"),
          cap_(cap) {}

    std::size_t cap() const { return cap_; }

private:
    std::size_t cap_;
};

/// Default enumeration cap; override per call or via FCAERR_CAP in the CLI.
inline constexpr std::size_t kDefaultConceptCap = 1'000'000;

}  // namespace fcaerr

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pea {

/// Dense element index into a PseudoEffectAlgebra.
using Element = std::uint32_t;

enum class Errc {
    // algebra-core
    DuplicateLabel,
    UnknownLabel,
    AxiomViolation,
    IntervalInfinite,
    NotStrongUnit,
    UnknownZooName,
    SizeLimitExceeded,
    // text formats / io
    Parse,
    Io,
    // measures
    AdditivityViolation,
    NotAMeasure,
    NotAState,
    EmptyStateSpace,
    AlgebraMismatch,
    // jordan-lattice
    NotAdditive,
    NotJordan,
    NotAChain,
    // faces / decompositions
    NotASimplex,
    LPInfeasible,
    RDPRequired,
    NotCommutative,
    // implementation bug surfaced at runtime
    InternalInconsistency,
};

const char* errc_name(Errc code) noexcept;

/// Exit-code class of an error: 1 mathematical, 2 usage or I/O, 3 internal.
int exit_code_for(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what, std::vector<Element> witness = {})
        : std::runtime_error(std::string(errc_name(code)) + ": " + what),
          code_(code), witness_(std::move(witness)) {}

    Errc code() const noexcept { return code_; }
    const std::vector<Element>& witness() const noexcept { return witness_; }

private:
    Errc code_;
    std::vector<Element> witness_;
};

[[noreturn]] inline void internal_error(const std::string& what) {
    throw Error(Errc::InternalInconsistency, what);
}

}  // namespace pea

#pragma once

#include <pea/algebra.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace pea {

enum class Property { Com, Rip, Rdp0, Rdp, Rdp1, Rdp2 };

const char* property_name(Property property) noexcept;

/// Outcome of a property check.
///
/// Witness layouts on failure:
///   Com   (a1, b1) with a1 <= a, b1 <= b and a1 + b1 != b1 + a1
///   Rip   (a1, a2, b1, b2) with a1, a2 <= b1, b2 and no c in between
///   Rdp0  (a, b1, b2) with a <= b1 + b2 not of the form d1 + d2, d1 <= b1, d2 <= b2
///   Rdp*  (a1, a2, b1, b2) with a1 + a2 = b1 + b2 and no admissible refinement
/// Certificates on success of a single instance: c for Rip, (d1, d2) for
/// Rdp0 and (d1, d2, d3, d4) for the refinement properties.
struct PropertyVerdict {
    Property property;
    bool holds = true;
    std::vector<Element> witness;
    std::vector<Element> certificate;
    /// Number of hypothesis instances examined.
    std::size_t instances = 0;
};

/// a com b: all a1 <= a, b1 <= b add in both orders with equal results.
bool commute(const PseudoEffectAlgebra& algebra, Element a, Element b);
PropertyVerdict check_com(const PseudoEffectAlgebra& algebra, Element a, Element b);
/// check_com(1, 1), i.e. the whole table is symmetric.
PropertyVerdict check_com_all(const PseudoEffectAlgebra& algebra);

PropertyVerdict check_rip(const PseudoEffectAlgebra& algebra);
PropertyVerdict check_rdp0(const PseudoEffectAlgebra& algebra);
PropertyVerdict check_rdp(const PseudoEffectAlgebra& algebra);
PropertyVerdict check_rdp1(const PseudoEffectAlgebra& algebra);
/// d2 ^ d3 = 0 is read as: d2 and d3 have no nonzero common lower bound.
PropertyVerdict check_rdp2(const PseudoEffectAlgebra& algebra);

/// Single instances. Return the realizing elements, if any.
std::optional<Element> find_interpolant(const PseudoEffectAlgebra& algebra, Element a1, Element a2, Element b1,
                                        Element b2);
std::optional<std::array<Element, 2>> find_split(const PseudoEffectAlgebra& algebra, Element a, Element b1,
                                                 Element b2);
/// d1 + d2 = a1, d3 + d4 = a2, d1 + d3 = b1, d2 + d4 = b2, plus the extra
/// condition on (d2, d3) for Rdp1 / Rdp2. `property` must be Rdp, Rdp1 or Rdp2.
std::optional<std::array<Element, 4>> find_refinement(const PseudoEffectAlgebra& algebra, Property property,
                                                      Element a1, Element a2, Element b1, Element b2);

/// COM, RIP, RDP0, RDP, RDP1, RDP2 in that order. Throws
/// Error(InternalInconsistency) if RDP2 => RDP1 => RDP => RDP0 => RIP fails.
std::vector<PropertyVerdict> rdp_profile(const PseudoEffectAlgebra& algebra);

/// check_rdp(E).holds, throwing Error(RDPRequired) when false.
void require_rdp(const PseudoEffectAlgebra& algebra, const std::string& operation);

}  // namespace pea

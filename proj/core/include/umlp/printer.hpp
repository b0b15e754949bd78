#ifndef UMLP_PRINTER_HPP
#define UMLP_PRINTER_HPP

#include <string>

#include "umlp/cst.hpp"

namespace umlp {

/// Canonical layout; the output reparses to a structurally identical tree.
std::string pretty_print(const ConcreteCD& cd);

/// Structural equality up to source positions, realized as equality of the
/// canonical printed form (the printer emits every structural field).
bool structurally_equal(const ConcreteCD& a, const ConcreteCD& b);

}  // namespace umlp

#endif

#ifndef UMLP_SYSTEM_MODEL_IO_HPP
#define UMLP_SYSTEM_MODEL_IO_HPP

#include <string>
#include <string_view>

#include "umlp/diag.hpp"
#include "umlp/system_model.hpp"

namespace umlp {

/// Parses and validates the JSON interchange format. Strict mode turns
/// unknown keys into FormatError; lenient mode downgrades them to warnings.
Result<SystemModel> load_system_model(std::string_view document, bool strict = true);

/// Serializes with stable key order; load(save(m)) == m.
std::string save_system_model(const SystemModel& sys);

}  // namespace umlp

#endif

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frobcoh/frobenius.hpp"

namespace frobcoh::cli {

/// complex, poly:<n>, group:Z2, group:Zn:<n>, group:S3, s3alt, qpoly:<scalar>.
/// `field` overrides the ground field for poly and group builtins; passing
/// one to any other builtin is an InvalidArgument.
AlgebraPresentation resolve_builtin(const std::string& name, const std::optional<FieldSpec>& field = std::nullopt);

/// The names used by the acceptance suite, in report order.
const std::vector<std::string>& standard_builtins();

}  // namespace frobcoh::cli

#pragma once

#include "rholie/cohomology.hpp"
#include "rholie/derivations.hpp"
#include "rholie/extensions.hpp"

#include "json.hpp"

#include <string>

namespace rholie {

using Json = nlohmann::json;

/// Raw algebra file contents after structural parsing: shapes, scalars and
/// index ranges are checked, but the bicharacter laws are not and the bracket
/// orbits are not yet expanded.  Keeping the stages apart lets a caller report
/// a law-breaking bicharacter as a failed check instead of a malformed file.
struct AlgebraFileData {
  GradingGroup group;
  Mat q;
  GradedBasis basis;
  Mat phi;
  std::vector<std::pair<std::array<int, 3>, Vec>> bracket;
};

AlgebraFileData algebra_file_from_json(const Json& j);

/// Orbit expansion of the parsed entries; InputError on conflicting entries.
Algebra3 assemble_algebra(const AlgebraFileData& d);

/// One-shot load for contexts without staged error reporting: bicharacter law
/// violations surface as InputError here.
Algebra3 algebra_from_json(const Json& j);
Json algebra_to_json(const Algebra3& a);

Representation representation_from_json(const Algebra3& a, const Json& j);
Json representation_to_json(const Representation& r);

Cochain cochain_from_json(const Algebra3& a, int value_dim, const Json& j);
Json cochain_to_json(const Cochain& w);

GradedOperator operator_from_json(const Algebra3& a, const Json& j);
Json operator_to_json(const GradedOperator& x);

ExtensionData extension_from_json(const Json& j);
Json extension_to_json(const ExtensionData& e);

Json report_to_json(const CheckReport& r);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace rholie

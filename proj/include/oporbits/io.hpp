#pragma once

#include <string>

#include "oporbits/descriptor.hpp"
#include "oporbits/matrix_lab.hpp"

namespace oporbits {

// Descriptor JSON:
//   {"nullity":"<cardinal>","codefect":"<cardinal>",
//    "profile":{"blocks":[{"value":"<cardinal>","count":<nat>|"inf"}],
//               "tail":{"kind":"zero"|"repeat"|"cofinal","value":"<cardinal>"}},
//    "dim_H":"<cardinal>"?, "dim_K":"<cardinal>"?}
// A block with count "inf" is accepted as the last block with a zero tail and
// canonicalizes into a Repeat tail. Explicit dims are checked against the
// derived ones and rejected on mismatch, naming both sides.

OperatorDescriptor parse_descriptor(const std::string& text);
std::string serialize_descriptor(const OperatorDescriptor& a);

// Matrix JSON: {"rows":m,"cols":n,"data":[[re,im],...]} row-major.
// Plain text alternative: one row per line, entries "a+bi" separated by
// whitespace. parse_matrix sniffs the format (JSON starts with '{').

ComplexMatrix parse_matrix(const std::string& text);
std::string serialize_matrix(const ComplexMatrix& m);

OperatorDescriptor load_descriptor_file(const std::string& path);
ComplexMatrix load_matrix_file(const std::string& path);

std::string read_file(const std::string& path);

}  // namespace oporbits

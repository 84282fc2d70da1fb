#ifndef GRW_IO_HPP
#define GRW_IO_HPP

#include <string>

#include "json.hpp"

#include "grw/codes.hpp"
#include "grw/distribution.hpp"

// Code description files and result tables as JSON. Conventions:
//   - polynomials are ascending coefficient lists (x^4+x+1 -> [1,1,0,0,1]);
//   - generator entries are length-m lists of F_q coefficients, each a plain
//     integer when e = 1 and a length-e integer list otherwise;
//   - counts are decimal strings so tables round-trip losslessly.

namespace grw {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

LinearCode code_from_json(const Json& j);
OrderedJson code_to_json(const LinearCode& c);

// Code document with the given generator rows verbatim (they are validated by
// constructing the code but not echoed in RREF).
OrderedJson code_document_json(const FieldSpec& fs, const Mat<ExtField>& generator_rows);

LinearCode load_code_file(const std::string& path);
void save_code_file(const LinearCode& c, const std::string& path);

OrderedJson distribution_to_json(const DistributionTable& t);
DistributionTable distribution_from_json(const Json& j);

OrderedJson btable_to_json(const BTable& t);
BTable btable_from_json(const Json& j);

OrderedJson enumerator_to_json(const EnumeratorPoly& e);

// Render-only views; JSON is the canonical interchange.
std::string distribution_to_csv(const DistributionTable& t);
std::string distribution_to_latex(const DistributionTable& t);

}  // namespace grw

#endif

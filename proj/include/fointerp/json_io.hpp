#pragma once

#include <string>

#include "fointerp/interpret.hpp"
#include "fointerp/signature.hpp"
#include "fointerp/structure.hpp"

namespace fointerp {

/// {"E": 2, ...}
std::string signature_to_json(const Signature& s);
Signature signature_from_json(const std::string& text);

/// {"signature": {...}, "size": n, "relations": {"E": [[0,1], ...]}, "names": {"l1": 0}}
/// "names" is optional on input. Tuples are written in lexicographic order;
/// on input their order does not matter. Throws Format on malformed input.
std::string structure_to_json(const FiniteStructure& s);
FiniteStructure structure_from_json(const std::string& text);

/// Structure JSON plus "params": {"yL": 12, ...} when the witness has parameters.
std::string witness_to_json(const Witness& w);
/// Accepts plain structure JSON (no parameters) as well.
Witness witness_from_json(const std::string& text);

/// {"source": sig, "target": sig, "params": [...], "phiU": text, "phiNotU": text?,
///  "relations": {"E": {"pos": text, "neg": text}}}
std::string schema_to_json(const InterpretationSchema& schema);
InterpretationSchema schema_from_json(const std::string& text);

/// {"status": "verified", "domainNonempty": true, "complementConsistent": true,
///  "domain": [...], "violations": [{"relation": "E", "tuple": [..]}],
///  "bijection": [...]?}
std::string verify_report_to_json(const VerifyReport& report);

} // namespace fointerp

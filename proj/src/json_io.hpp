#ifndef CU2_JSON_IO_HPP
#define CU2_JSON_IO_HPP

#include <json.hpp>

#include "ideal.hpp"
#include "rep.hpp"

namespace cu2 {

using nlohmann::json;

json word_to_json(const Word& w);
Word word_from_json(const json& j);

/// {"i":[...],"j":[...]} or {"diamond":true}
json element_key_to_json(const CuElement& t);
CuElement element_key_from_json(const json& j);

/// {"terms":[{"i":[...],"j":[...],"re":"p/q","im":"p/q"},...]} with the
/// terms in canonical order.
json alg_element_to_json(const AlgElement& f);
AlgElement alg_element_from_json(const json& j);

json certificate_to_json(const IdealCertificate& cert);
IdealCertificate certificate_from_json(const json& j);

json witness_to_json(const FactorizationWitness& w);

json report_to_json(const Report& report);

json sparse_vector_to_json(const SparseVector& x);
SparseVector sparse_vector_from_json(const json& j);

json collapse_rows_to_json(const std::vector<CollapseRow>& rows);
std::string collapse_rows_to_csv(const std::vector<CollapseRow>& rows);

}  // namespace cu2

#endif

#pragma once

#include <json.hpp>

#include "kohn/linear.hpp"
#include "kohn/localalg.hpp"
#include "kohn/poly.hpp"

namespace kohn {

// Stable key order everywhere: serialized artifacts are byte-reproducible.
using Json = nlohmann::ordered_json;

Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

Json basis_to_json(const StandardBasis& sb);

Json certificate_to_json(const MembershipCertificate& cert);
MembershipCertificate certificate_from_json(const Json& j);

Json matrix_to_json(const LinearChange& L);
LinearChange matrix_from_json(const Json& j);

}  // namespace kohn

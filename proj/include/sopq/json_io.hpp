#pragma once

#include <json.hpp>

#include "sopq/cartan_polar.hpp"
#include "sopq/homotopy_engine.hpp"
#include "sopq/quasisphere.hpp"
#include "sopq/transitivity.hpp"
#include "sopq/wedge_cover.hpp"

namespace sopq {

// Machine-readable schemas, version "1". Keys appear in nlohmann's sorted
// order, so identical inputs produce byte-identical documents.

using Json = nlohmann::json;

Json matrix_to_json(const Eigen::MatrixXd& m);
Eigen::MatrixXd matrix_from_json(const Json& j);

Json vector_to_json(const Eigen::VectorXd& v);
Eigen::VectorXd vector_from_json(const Json& j);

Json to_json(const Signature& sig);
Signature signature_from_json(const Json& j);

// {"schema":"1","sig":[p,q],"rows":[[...],...]}
Json to_json(const GroupElement& a);
GroupElement group_element_from_json(const Json& j, double tol = kDefaultTol);

// {"schema":"1","sig":[p,q],"sign":s,"coords":[...]}
Json to_json(const QuasiSpherePoint& pt);
QuasiSpherePoint point_from_json(const Json& j, double tol = kDefaultTol);

Json to_json(const MembershipReport& r);
Json to_json(const ColumnReport& r);
Json to_json(const CompletionResult& r);

// {"compact":{...},"log_p":[[...]],"residual":r,"schema":"1","symmetric":[[...]]}
Json to_json(const PolarResult& r);

Json to_json(const FgAbelianGroup& g);
Json to_json(const HomotopySetOrGroup& h);
Json to_json(const TraceStep& st);
Json to_json(const Derivation& d);
Json to_json(const CoverReport& r);

}  // namespace sopq

#pragma once

#include <string>

#include <json.hpp>

#include "ngsum/bounds.hpp"
#include "ngsum/staircase.hpp"
#include "ngsum/transforms.hpp"
#include "ngsum/verifier.hpp"

namespace ngsum {

using json = nlohmann::json;

json to_json(const ParamSix& p);
json to_json(const EqualityWitness& w);
json to_json(const BoundReport& r);
json to_json(const Rho0Breakdown& b);
json to_json(const GraphDescription& d);
json to_json(const VerifyReport& r);
json to_json(const TransformTrace& t);
json to_json(const LemmaCheck& c);
json to_json(const LemmaSuiteReport& r);
json to_json(const CertificateRow& r);
json to_json(const CertificateReport& r);
json to_json(const RootedBoundReport& r);

// {"n": int, "mu": [int,...]}
json profile_json(const StaircaseMatrix& a);
StaircaseMatrix parse_profile_json(const std::string& text);

// CSV rows for tabulation
std::string verify_csv(const VerifyReport& r, bool header = true);
std::string rho0_csv(const std::vector<Rho0Breakdown>& rows);
std::string certificate_csv(const CertificateReport& r);

}  // namespace ngsum

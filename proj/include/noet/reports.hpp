#ifndef NOET_REPORTS_HPP
#define NOET_REPORTS_HPP

#include <json.hpp>

#include "noet/galois.hpp"
#include "noet/noether.hpp"
#include "noet/subcover.hpp"

namespace noet {

// JSON report shapes; keys are sorted (nlohmann::json object order) so a
// fixed seed gives byte-identical dumps. Schemas live in docs/schema.

nlohmann::json point_json(const std::map<std::string, Rational>& pt);
nlohmann::json subcover_json(const SubcoverReport& rep, nlohmann::json verification);
nlohmann::json sample_json(const SampleReport& rep, const std::vector<std::string>& vars);
nlohmann::json exact_1d_json(bool verified, const std::string& why);
nlohmann::json witness_json(const WitnessReport& rep);
nlohmann::json net_basis_json(const NetBasisResult& res, const AffineSpace& space);

}  // namespace noet

#endif

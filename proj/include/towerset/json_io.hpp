#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "towerset/gentower.hpp"
#include "towerset/hilbert_burch.hpp"
#include "towerset/monomial.hpp"
#include "towerset/pointset.hpp"
#include "towerset/resolution.hpp"

namespace tws {

using Json = nlohmann::json;

Json load_json_file(const std::string& path, std::string* raw = nullptr);

Monomial monomial_from_json(const Json& j, int n);
MonomialIdeal ideal_from_json(const Json& j);
PrimeSupport prime_support_from_json(const Json& j);
PointSet point_set_from_json(const Json& j);
DegreeTable degree_table_from_json(const Json& j);
GTSDecomposition gts_from_json(const Json& j);
Family family_from_json(const Json& j, int n);
StandardFormMatrix matrix_from_json(const Json& j);

Json to_json(const Monomial& m);
Json to_json(const MonomialIdeal& i);
Json to_json(const PrimeSupport& s);
Json to_json(const PointSet& s);
Json to_json(const GTSDecomposition& d);
Json to_json(const BettiTable& t);
Json to_json(const StandardFormMatrix& m);
Json to_json(const TowerizeWitness& w);
Json to_json(const USets& u);
Json to_json(const MuTable& t);
Json to_json(const OrientResult& o);
Json to_json(const Family& f);
Json to_json(const CharacterizationReport& r);

// common report header: version tag plus a hash of the exact input bytes
Json report_envelope(const std::string& input_blob);

std::string dump_json(const Json& j, bool compact);

std::string betti_tsv(const BettiTable& t);
std::string vector_tsv(const std::vector<long long>& v);

}  // namespace tws

#include "towerset/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "towerset/common.hpp"

namespace tws {

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = fnv1a(bytes);
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json load_json_file(const std::string& path, std::string* raw) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), "BadFile", "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  if (raw) *raw = text;
  Json j = Json::parse(text, nullptr, false);
  require(!j.is_discarded(), "BadJson", "malformed JSON in " + path);
  return j;
}

namespace {

std::vector<int> int_list(const Json& j, const char* what) {
  require(j.is_array(), "BadSchema", std::string(what) + " must be a list");
  std::vector<int> out;
  for (const auto& v : j) {
    require(v.is_number_integer(), "BadSchema", std::string(what) + " holds a non-integer");
    out.push_back(v.get<int>());
  }
  return out;
}

const Json& field(const Json& j, const char* key) {
  require(j.is_object() && j.contains(key), "BadSchema",
          std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

Monomial monomial_from_json(const Json& j, int n) {
  std::vector<int> e = int_list(j, "monomial");
  require((int)e.size() == n, "BadSchema", "exponent list length differs from n");
  for (int v : e) require(v >= 0, "BadSchema", "negative exponent");
  return Monomial(std::move(e));
}

MonomialIdeal ideal_from_json(const Json& j) {
  int n = field(j, "n").get<int>();
  require(n >= 1, "BadSchema", "n must be positive");
  std::vector<Monomial> gens;
  if (j.contains("generators")) {
    for (const auto& g : field(j, "generators")) gens.push_back(monomial_from_json(g, n));
  } else {
    for (const auto& s : field(j, "supports")) {
      std::vector<int> vars = int_list(s, "support");
      for (int v : vars) require(1 <= v && v <= n, "BadSchema", "variable index out of range");
      gens.push_back(Monomial::from_support(n, vars));
    }
  }
  require(!gens.empty(), "BadSchema", "ideal needs at least one generator");
  return minimize(n, std::move(gens));
}

PrimeSupport prime_support_from_json(const Json& j) {
  int n = field(j, "n").get<int>();
  int c = field(j, "c").get<int>();
  std::vector<std::vector<int>> primes;
  for (const auto& p : field(j, "primes")) primes.push_back(int_list(p, "prime"));
  return make_prime_support(n, c, std::move(primes));
}

PointSet point_set_from_json(const Json& j) {
  int c = field(j, "c").get<int>();
  std::vector<Point> pts;
  for (const auto& p : field(j, "points")) pts.push_back(int_list(p, "point"));
  return make_point_set(c, std::move(pts));
}

DegreeTable degree_table_from_json(const Json& j) {
  DegreeTable t;
  for (const auto& row : field(j, "degrees")) t.d.push_back(int_list(row, "degree row"));
  for (const auto& row : t.d)
    for (int v : row) require(v >= 1, "BadSchema", "degrees must be positive");
  return t;
}

GTSDecomposition gts_from_json(const Json& j) {
  GTSDecomposition d;
  d.s = point_set_from_json(field(j, "S"));
  d.t = point_set_from_json(field(j, "T"));
  d.s0 = point_set_from_json(field(j, "S0"));
  return d;
}

Family family_from_json(const Json& j, int n) {
  Family f;
  for (const auto& m : j) f.push_back(monomial_from_json(m, n));
  return f;
}

StandardFormMatrix matrix_from_json(const Json& j) {
  StandardFormMatrix m;
  m.r = field(j, "r").get<int>();
  require(m.r >= 1, "BadSchema", "r must be positive");
  const Json& dd = field(j, "D");
  require(dd.is_array() && !dd.empty(), "BadSchema", "D must be a nonempty list");
  m.n = j.contains("n") ? j.at("n").get<int>() : (int)dd.front().size();
  for (const auto& g : dd) m.d.push_back(monomial_from_json(g, m.n));
  m.m.resize(m.r);
  m.sigma.assign(m.r, -1);
  for (const auto& entry : field(j, "M")) {
    int col = field(entry, "col").get<int>();
    require(1 <= col && col <= m.r, "BadSchema", "M column out of range");
    require(m.sigma[col - 1] < 0, "BadSchema", "duplicate M column");
    m.sigma[col - 1] = field(entry, "row").get<int>();
    m.m[col - 1] = monomial_from_json(field(entry, "mono"), m.n);
  }
  for (int j2 = 1; j2 <= m.r; ++j2)
    require(m.sigma[j2 - 1] >= 0, "BadSchema", "column " + std::to_string(j2) + " misses M");
  validate_standard_form(m);
  return m;
}

Json to_json(const Monomial& m) { return Json(m.e); }

Json to_json(const MonomialIdeal& i) {
  Json g = Json::array();
  for (const auto& m : i.gens) g.push_back(to_json(m));
  return Json{{"n", i.n}, {"generators", g}};
}

Json to_json(const PrimeSupport& s) {
  return Json{{"n", s.n}, {"c", s.c}, {"primes", s.primes}};
}

Json to_json(const PointSet& s) {
  return Json{{"c", s.c}, {"points", s.pts}};
}

Json to_json(const GTSDecomposition& d) {
  return Json{{"S", to_json(d.s)}, {"T", to_json(d.t)}, {"S0", to_json(d.s0)}};
}

Json to_json(const BettiTable& t) {
  Json rows = Json::array();
  for (const auto& e : t.entries)
    rows.push_back(Json{{"i", e.i}, {"sigma", e.sigma}, {"value", e.value}});
  return Json{{"betti", rows}, {"pd", t.pd}};
}

Json to_json(const StandardFormMatrix& m) {
  Json dd = Json::array();
  for (const auto& g : m.d) dd.push_back(to_json(g));
  Json mm = Json::array();
  for (int j = 1; j <= m.r; ++j)
    mm.push_back(Json{{"col", j}, {"row", m.sigma[j - 1]}, {"mono", to_json(m.m[j - 1])}});
  return Json{{"n", m.n}, {"r", m.r}, {"D", dd}, {"M", mm}};
}

Json to_json(const TowerizeWitness& w) {
  Json tau = Json::array();
  for (auto& [a, b] : w.tau) tau.push_back(Json::array({a, b}));
  Json omega = Json::array();
  for (auto& [pair, pt] : w.omega) omega.push_back(Json::array({Json(pair), Json(pt)}));
  return Json{{"tau", tau}, {"omega", omega}, {"image", to_json(w.image)}};
}

Json to_json(const USets& u) {
  Json a = Json::array(), b = Json::array();
  for (auto& [x, y] : u.u1) a.push_back(Json::array({x, y}));
  for (auto& [x, y] : u.u2) b.push_back(Json::array({x, y}));
  return Json{{"UPrime", a}, {"UDoublePrime", b}, {"U", to_json(u.all)}};
}

Json to_json(const MuTable& t) {
  return Json{{"levels", t.levels}, {"mu", t.mu}, {"rbounds", t.rseq}};
}

Json to_json(const OrientResult& o) {
  Json ot = Json::array(), os = Json::array();
  for (auto& [a, b] : o.omega_t) ot.push_back(Json::array({a, b}));
  for (auto& [a, b] : o.omega_s0) os.push_back(Json::array({a, b}));
  return Json{{"tau", o.tau},
              {"T_oriented", ot},
              {"S0_oriented", os},
              {"decomposition", to_json(o.d)}};
}

Json to_json(const Family& f) {
  Json out = Json::array();
  for (const auto& m : f) out.push_back(to_json(m));
  return out;
}

Json to_json(const CharacterizationReport& r) {
  Json j{{"acm", r.acm},
         {"height", r.height},
         {"equidimensional", r.equidimensional},
         {"verified", r.verified},
         {"conclusion", r.conclusion}};
  if (r.matrix) j["matrix"] = to_json(*r.matrix);
  if (r.usets) j["usets"] = to_json(*r.usets);
  if (r.mu) j["mu"] = to_json(*r.mu);
  if (r.orient) j["orientation"] = to_json(*r.orient);
  if (r.f1) j["families"] = Json{{"F1", to_json(*r.f1)}, {"F2", to_json(*r.f2)}};
  if (r.rebuilt) j["rebuilt"] = to_json(*r.rebuilt);
  if (r.support) j["support"] = to_json(*r.support);
  return j;
}

Json report_envelope(const std::string& input_blob) {
  return Json{{"schema_version", kSchemaVersion}, {"input_hash", fnv1a_hex(input_blob)}};
}

std::string dump_json(const Json& j, bool compact) {
  return (compact ? j.dump() : j.dump(2)) + "\n";
}

std::string betti_tsv(const BettiTable& t) {
  std::ostringstream out;
  out << "i\tsigma\tvalue\n";
  for (const auto& e : t.entries) {
    out << e.i << '\t';
    for (size_t k = 0; k < e.sigma.size(); ++k) out << (k ? "," : "") << e.sigma[k];
    out << '\t' << e.value << '\n';
  }
  out << "pd\t\t" << t.pd << '\n';
  return out.str();
}

std::string vector_tsv(const std::vector<long long>& v) {
  std::ostringstream out;
  for (size_t k = 0; k < v.size(); ++k) out << (k ? "\t" : "") << v[k];
  out << '\n';
  return out.str();
}

}  // namespace tws

#include "soclelab/io.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace soclelab {

namespace {

using nlohmann::json;

mpq_class parse_rational(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace

void write_groth(std::ostream& os, const GrothVec& v) {
  const char* basis = v.basis() == BasisKind::verma ? "verma" : "kac";
  if (v.zero()) {
    json line = {{"m", v.m()}, {"n", v.n()}, {"basis", basis}, {"zero", true}};
    os << line.dump() << '\n';
    return;
  }
  for (const auto& [l, c] : v.terms()) {
    json line = {{"m", v.m()},       {"n", v.n()}, {"basis", basis},
                 {"a", l.a},         {"b", l.b},   {"coeff", c.get_str()}};
    os << line.dump() << '\n';
  }
}

GrothVec read_groth(std::istream& is) {
  GrothVec v;
  bool started = false;
  std::string line;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j = json::parse(line);
    const BasisKind basis =
        j.at("basis").get<std::string>() == "kac" ? BasisKind::kac : BasisKind::verma;
    if (!started) {
      v = GrothVec(j.at("m").get<int>(), j.at("n").get<int>(), basis);
      started = true;
    } else if (j.at("m").get<int>() != v.m() || j.at("n").get<int>() != v.n() ||
               basis != v.basis()) {
      throw std::invalid_argument("inconsistent header fields across lines");
    }
    if (j.value("zero", false)) continue;
    BarLabel l{j.at("a").get<std::vector<int>>(), j.at("b").get<std::vector<int>>()};
    v.add_wedge(std::move(l), parse_rational(j.at("coeff").get<std::string>()));
  }
  if (!started) throw std::invalid_argument("empty vector stream");
  return v;
}

void write_superpoly(std::ostream& os, const SuperPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    std::vector<int> x(e.begin(), e.begin() + p.m());
    std::vector<int> y(e.begin() + p.m(), e.end());
    terms.push_back({{"x", x}, {"y", y}, {"c", c.get_str()}});
  }
  json j = {{"m", p.m()}, {"n", p.n()}, {"terms", terms}};
  os << j.dump() << '\n';
}

SuperPoly read_superpoly(std::istream& is) {
  json j = json::parse(is);
  SuperPoly p(j.at("m").get<int>(), j.at("n").get<int>());
  for (const auto& t : j.at("terms")) {
    std::vector<int> e = t.at("x").get<std::vector<int>>();
    const auto y = t.at("y").get<std::vector<int>>();
    e.insert(e.end(), y.begin(), y.end());
    const std::string c = t.at("c").get<std::string>();
    mpz_class z;
    if (z.set_str(c, 10) != 0) throw std::invalid_argument("bad integer '" + c + "'");
    p.add_term(e, z);
  }
  return p;
}

std::string decomp_layers_json(const std::vector<SemisimpleDecomp>& layers) {
  json out = json::array();
  for (size_t k = 0; k < layers.size(); ++k) {
    json summands = json::array();
    for (const auto& [pair, mult] : layers[k])
      summands.push_back({{"lambda", pair.first.str()},
                          {"mu", pair.second.str()},
                          {"mult", mult.get_str()}});
    out.push_back({{"k", k}, {"summands", summands}});
  }
  return json{{"layers", out}}.dump();
}

}  // namespace soclelab

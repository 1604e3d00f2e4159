#include "cantor/io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cantor/error.hpp"

namespace cantor {

namespace {

double parse_real(const std::string& text, const std::string& whole) {
  if (text.empty() || text == "+" || text == "-") return text == "-" ? -1.0 : 1.0;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size()) throw Error(ErrorKind::Usage, "malformed complex literal '" + whole + "'");
  return v;
}

}  // namespace

Complex parse_complex(const std::string& text) {
  if (text.empty()) throw Error(ErrorKind::Usage, "empty complex literal");
  if (text.back() != 'i') return {parse_real(text, text), 0.0};
  const std::string body = text.substr(0, text.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, parse_real(body, text)};
  const double re = parse_real(body.substr(0, split), text);
  const double im = parse_real(body.substr(split), text);
  return {re, im};
}

std::string format_complex(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << z.real() << (z.imag() < 0 || std::signbit(z.imag()) ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

Json point_to_json(const SpherePoint& z) {
  if (z.is_infinity()) return "inf";
  return complex_to_json(z.finite());
}

SpherePoint point_from_json(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "inf") throw Error(ErrorKind::Usage, "unknown point literal");
    return SpherePoint::infinity();
  }
  return SpherePoint(complex_from_json(j));
}

Json polyline_to_json(const Polyline& p) {
  Json out = Json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& z = p.z[i];
    out.push_back(Json::array({p.t[i], z.value().real(), z.value().imag(), z.chart() == Chart::Finite ? 0 : 1}));
  }
  return out;
}

Polyline polyline_from_json(const Json& j) {
  Polyline p;
  for (const auto& s : j) {
    p.t.push_back(s.at(0).get<double>());
    const Complex v(s.at(1).get<double>(), s.at(2).get<double>());
    p.z.push_back(SpherePoint::in_chart(s.at(3).get<int>() == 0 ? Chart::Finite : Chart::Infinity, v));
  }
  return p;
}

Json table_to_json(const RecursionTable& t) {
  Json out;
  out["generators"] = t.generators;
  Json perms = Json::array();
  for (const auto& p : t.perms) perms.push_back(p.one_based());
  out["permutations"] = perms;
  Json slots = Json::array();
  for (const auto& row : t.slots) {
    Json r = Json::array();
    for (const auto& w : row) r.push_back(w.letters());
    slots.push_back(r);
  }
  out["slots"] = slots;
  Json words = Json::array();
  for (const auto& row : t.slots) {
    Json r = Json::array();
    for (const auto& w : row) r.push_back(w.to_string(t.generators));
    words.push_back(r);
  }
  out["slot_words"] = words;
  return out;
}

RecursionTable table_from_json(const Json& j) {
  RecursionTable t;
  t.generators = j.at("generators").get<std::vector<std::string>>();
  for (const auto& p : j.at("permutations")) {
    auto img = p.get<std::vector<int>>();
    for (auto& v : img) --v;
    t.perms.emplace_back(img);
  }
  for (const auto& row : j.at("slots")) {
    std::vector<FreeWord> r;
    for (const auto& w : row) r.emplace_back(w.get<std::vector<int>>());
    t.slots.push_back(std::move(r));
  }
  if (t.perms.size() != t.generators.size() || t.slots.size() != t.generators.size()) {
    throw Error(ErrorKind::Usage, "table arrays differ in length");
  }
  return t;
}

Json quotient_to_json(const QuotientRecursion& q) {
  Json out = Json::array();
  for (std::uint8_t x = 0; x < 4; ++x) {
    Json e;
    e["element"] = Klein{x}.to_string();
    e["permutation"] = q.perms[x].one_based();
    Json slots = Json::array();
    for (Klein s : q.slots[x]) slots.push_back(s.to_string());
    e["slots"] = slots;
    e["zeta"] = Json::array({q.zeta_of(Klein{x}, 0), q.zeta_of(Klein{x}, 1)});
    out.push_back(e);
  }
  return out;
}

RationalMap MapSpec::resolve() const {
  if (preset == "kameyama-quartic") return RationalMap::quartic(parameter);
  if (preset == "quadratic") return RationalMap::quadratic(parameter);
  if (!preset.empty()) throw Error(ErrorKind::Usage, "unknown preset '" + preset + "'");
  return RationalMap(num, den);
}

std::string MapSpec::describe() const {
  if (!preset.empty()) return preset + "(" + format_complex(parameter) + ")";
  return "raw degree " + std::to_string(resolve().degree());
}

MapSpec make_preset(const std::string& name, Complex parameter) {
  if (name == "kameyama-quartic" || name == "quartic") return MapSpec::quartic(parameter);
  if (name == "quadratic") return MapSpec::quadratic(parameter);
  throw Error(ErrorKind::Usage, "unknown preset '" + name + "'");
}

Json map_to_json(const MapSpec& m) {
  Json out;
  if (!m.preset.empty()) {
    out["preset"] = m.preset;
    out["parameter"] = complex_to_json(m.parameter);
    return out;
  }
  Json num = Json::array(), den = Json::array();
  for (auto c : m.num) num.push_back(complex_to_json(c));
  for (auto c : m.den) den.push_back(complex_to_json(c));
  out["num"] = num;
  out["den"] = den;
  return out;
}

MapSpec map_from_json(const Json& j) {
  if (j.contains("preset")) return make_preset(j.at("preset").get<std::string>(), complex_from_json(j.at("parameter")));
  MapSpec m;
  for (const auto& c : j.at("num")) m.num.push_back(complex_from_json(c));
  for (const auto& c : j.at("den")) m.den.push_back(complex_from_json(c));
  return m;
}

void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw Error(ErrorKind::Usage, "cannot write " + tmp.string());
    out << content;
    if (!out) throw Error(ErrorKind::Usage, "write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Usage, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace cantor

#include "chroma/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace chroma::io {

namespace {

double number(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key) || !obj.at(key).is_number()) {
    throw ParseError(std::string("expected numeric field \"") + key + "\"");
  }
  const double v = obj.at(key).get<double>();
  if (!std::isfinite(v)) throw ParseError(std::string("field \"") + key + "\" is not finite");
  return v;
}

int color_of(const json& obj) {
  if (!obj.contains("color") || !obj.at("color").is_number_integer()) {
    throw ParseError("expected integer field \"color\"");
  }
  const auto c = obj.at("color").get<long long>();
  if (c < 0 || c > 1'000'000) throw InvalidInstance("color id out of range: " + std::to_string(c));
  return static_cast<int>(c);
}

const json& array_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_array()) {
    throw ParseError(std::string("expected array field \"") + key + "\"");
  }
  return j.at(key);
}

json point_json(Point p) { return json::array({round_sig(p.x), round_sig(p.y)}); }

Point point_from(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError("expected [x, y] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

int color_count(const std::vector<int>& colors) {
  int k = 0;
  for (int c : colors) k = std::max(k, c + 1);
  std::vector<bool> seen(k, false);
  for (int c : colors) seen[c] = true;
  for (int c = 0; c < k; ++c) {
    if (!seen[c]) throw MissingColor(c);
  }
  return k;
}

}  // namespace

double round_sig(double v) {
  if (v == 0.0 || !std::isfinite(v)) return v == 0.0 ? 0.0 : v;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", kSignificantDigits, v);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

InstanceFile parse_instance(const json& j) {
  if (!j.is_object()) throw ParseError("instance file must be a JSON object");
  if (j.contains("points") && !j.contains("disks")) {
    throw ParseError("expected an instance file with \"disks\", got a points file");
  }
  const double diameter = number(j, "diameter");
  if (diameter != 1.0) {
    throw InvalidInstance("only unit disks (diameter 1) are supported, got " +
                          std::to_string(diameter));
  }
  InstanceFile f;
  std::vector<int> colors;
  for (const auto& d : array_field(j, "disks")) {
    f.instance.disks.push_back({{number(d, "x"), number(d, "y")}, color_of(d)});
    colors.push_back(f.instance.disks.back().color);
  }
  if (f.instance.disks.empty()) throw EmptyInput();
  f.instance.k = color_count(colors);
  if (j.contains("annotations")) f.annotations = j.at("annotations");
  return f;
}

json to_json(const InstanceFile& f) {
  json j;
  j["diameter"] = 1.0;
  json disks = json::array();
  for (const auto& d : f.instance.disks) {
    disks.push_back({{"x", round_sig(d.center.x)}, {"y", round_sig(d.center.y)}, {"color", d.color}});
  }
  j["disks"] = std::move(disks);
  if (!f.annotations.is_null()) j["annotations"] = f.annotations;
  return j;
}

PrecisePointSet parse_points(const json& j) {
  if (!j.is_object()) throw ParseError("points file must be a JSON object");
  if (j.contains("disks") && !j.contains("points")) {
    throw ParseError("expected a points file with \"points\", got a disk instance");
  }
  PrecisePointSet ps;
  std::vector<int> colors;
  for (const auto& p : array_field(j, "points")) {
    ps.points.push_back({{number(p, "x"), number(p, "y")}, color_of(p), std::nullopt});
    colors.push_back(ps.points.back().color);
  }
  if (ps.points.empty()) throw EmptyInput();
  ps.k = color_count(colors);
  return ps;
}

json points_to_json(const PrecisePointSet& ps) {
  json pts = json::array();
  for (const auto& p : ps.points) {
    pts.push_back({{"x", round_sig(p.point.x)}, {"y", round_sig(p.point.y)}, {"color", p.color}});
  }
  return json{{"points", std::move(pts)}};
}

json to_json(const SolutionFile& s) {
  json j;
  j["command"] = s.command;
  j["radius"] = round_sig(s.radius);
  j["center"] = point_json(s.center);
  json pts = json::array();
  for (const auto& p : s.realization) {
    json e{{"x", round_sig(p.point.x)}, {"y", round_sig(p.point.y)}, {"color", p.color}};
    if (p.disk_index) e["disk"] = *p.disk_index;
    pts.push_back(std::move(e));
  }
  j["realization"] = std::move(pts);
  if (s.centers_circle) {
    j["centers_circle"] = {{"center", point_json(s.centers_circle->center)},
                           {"radius", round_sig(s.centers_circle->radius)}};
  }
  if (s.certificate) {
    const Certificate& c = *s.certificate;
    j["certificate"] = {{"r_c", round_sig(c.r_c)},
                        {"upper", round_sig(c.upper)},
                        {"achieved", round_sig(c.achieved)},
                        {"factor", round_sig(c.factor)},
                        {"branch", std::string(to_string(c.branch))}};
  }
  if (s.oracle) {
    j["oracle"] = {{"samples", s.oracle->samples},
                   {"seed", s.oracle->seed},
                   {"radius", round_sig(s.oracle->radius)}};
  }
  return j;
}

SolutionFile parse_solution(const json& j) {
  if (!j.is_object() || !j.contains("command") || !j.at("command").is_string()) {
    throw ParseError("solution file needs a \"command\" string");
  }
  SolutionFile s;
  s.command = j.at("command").get<std::string>();
  s.radius = number(j, "radius");
  if (!j.contains("center")) throw ParseError("solution file needs a \"center\"");
  s.center = point_from(j.at("center"));
  for (const auto& p : array_field(j, "realization")) {
    ColoredPoint cp{{number(p, "x"), number(p, "y")}, color_of(p), std::nullopt};
    if (p.contains("disk")) {
      if (!p.at("disk").is_number_unsigned()) throw ParseError("\"disk\" must be an index");
      cp.disk_index = p.at("disk").get<std::size_t>();
    }
    s.realization.push_back(cp);
  }
  if (j.contains("centers_circle")) {
    const json& c = j.at("centers_circle");
    if (!c.contains("center")) throw ParseError("centers_circle needs a \"center\"");
    s.centers_circle = Circle{point_from(c.at("center")), number(c, "radius")};
  }
  if (j.contains("certificate")) {
    const json& c = j.at("certificate");
    Certificate cert;
    cert.r_c = number(c, "r_c");
    cert.upper = number(c, "upper");
    cert.achieved = number(c, "achieved");
    cert.factor = number(c, "factor");
    const std::string branch = c.value("branch", "");
    if (branch == "centers") {
      cert.branch = Branch::centers;
    } else if (branch == "grid") {
      cert.branch = Branch::grid;
    } else {
      throw ParseError("certificate branch must be \"centers\" or \"grid\"");
    }
    s.certificate = cert;
  }
  if (j.contains("oracle")) {
    const json& o = j.at("oracle");
    if (!o.contains("samples") || !o.contains("seed")) throw ParseError("oracle block incomplete");
    s.oracle = OracleSummary{o.at("samples").get<std::size_t>(), o.at("seed").get<std::uint64_t>(),
                             number(o, "radius")};
  }
  return s;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("failed writing " + path);
}

}  // namespace chroma::io

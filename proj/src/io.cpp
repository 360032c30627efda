#include "mmtp/io.hpp"

#include <fstream>
#include <json.hpp>

#include "mmtp/deltamatroid.hpp"
#include "mmtp/ribbon.hpp"

namespace mmtp {

namespace {

using Json = nlohmann::ordered_json;

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::malformed, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const std::exception& e) {
    throw Error(Errc::malformed, "bad JSON in '" + path + "': " + e.what());
  }
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    throw Error(Errc::malformed, std::string("bad JSON: ") + e.what());
  }
}

void dump_to(const Json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::malformed, "cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

Multimatroid multimatroid_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("classes") || !j.contains("bases"))
    throw Error(Errc::malformed, "multimatroid file needs 'classes' and 'bases'");
  std::vector<SkewClass> classes;
  for (const Json& jc : j.at("classes")) {
    SkewClass sc;
    sc.name = jc.at("name").get<std::string>();
    sc.ordered = jc.value("ordered", false);
    for (const Json& je : jc.at("elems")) sc.elems.push_back(je.get<std::string>());
    classes.push_back(std::move(sc));
  }
  std::vector<std::set<std::string>> bases;
  for (const Json& jb : j.at("bases")) {
    std::set<std::string> basis;
    for (const Json& je : jb) basis.insert(je.get<std::string>());
    bases.push_back(std::move(basis));
  }
  return Multimatroid(Carrier(std::move(classes)), bases);
}

DeltaMatroid delta_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ground") || !j.contains("feasible"))
    throw Error(Errc::malformed, "delta-matroid file needs 'ground' and 'feasible'");
  std::vector<std::string> ground;
  for (const Json& je : j.at("ground")) ground.push_back(je.get<std::string>());
  std::vector<std::set<std::string>> feasible;
  for (const Json& jf : j.at("feasible")) {
    std::set<std::string> f;
    for (const Json& je : jf) f.insert(je.get<std::string>());
    feasible.push_back(std::move(f));
  }
  return DeltaMatroid(std::move(ground), feasible);
}

ArrowPresentation arrows_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("circles"))
    throw Error(Errc::malformed, "arrow presentation file needs 'circles'");
  std::vector<std::vector<Arrow>> circles;
  for (const Json& jc : j.at("circles")) {
    std::vector<Arrow> circle;
    for (const Json& ja : jc) {
      Arrow a;
      a.edge = ja.at("edge").get<std::string>();
      a.slot = ja.at("slot").get<int>();
      std::string dir = ja.at("dir").get<std::string>();
      if (dir != "+" && dir != "-") throw Error(Errc::malformed, "arrow dir must be '+' or '-'");
      a.reversed = dir == "-";
      circle.push_back(std::move(a));
    }
    circles.push_back(std::move(circle));
  }
  std::map<std::string, int> distinguished;
  if (j.contains("distinguished"))
    for (const auto& [edge, slot] : j.at("distinguished").items())
      distinguished[edge] = slot.get<int>();
  return ArrowPresentation(std::move(circles), std::move(distinguished));
}

}  // namespace

Multimatroid read_multimatroid(const std::string& path) { return multimatroid_from_json(load_json(path)); }
Multimatroid parse_multimatroid(const std::string& text) { return multimatroid_from_json(parse_json(text)); }

std::string multimatroid_to_json(const Multimatroid& z) {
  Json j;
  j["classes"] = Json::array();
  for (const SkewClass& sc : z.carrier().classes()) {
    Json jc;
    jc["name"] = sc.name;
    jc["ordered"] = sc.ordered;
    jc["elems"] = sc.elems;
    j["classes"].push_back(std::move(jc));
  }
  std::vector<std::vector<std::string>> bases;
  for (const auto& basis : z.basis_sets()) bases.emplace_back(basis.begin(), basis.end());
  std::sort(bases.begin(), bases.end());
  j["bases"] = bases;
  return j.dump(2);
}

void write_multimatroid(const Multimatroid& z, const std::string& path) {
  dump_to(Json::parse(multimatroid_to_json(z)), path);
}

DeltaMatroid read_delta_matroid(const std::string& path) { return delta_from_json(load_json(path)); }
DeltaMatroid parse_delta_matroid(const std::string& text) { return delta_from_json(parse_json(text)); }

std::string delta_matroid_to_json(const DeltaMatroid& d) {
  Json j;
  j["ground"] = d.ground();
  j["feasible"] = Json::array();
  for (const auto& f : d.feasible_sets()) j["feasible"].push_back(std::vector<std::string>(f.begin(), f.end()));
  return j.dump(2);
}

void write_delta_matroid(const DeltaMatroid& d, const std::string& path) {
  dump_to(Json::parse(delta_matroid_to_json(d)), path);
}

ArrowPresentation read_arrow_presentation(const std::string& path) {
  return arrows_from_json(load_json(path));
}
ArrowPresentation parse_arrow_presentation(const std::string& text) {
  return arrows_from_json(parse_json(text));
}

std::string arrow_presentation_to_json(const ArrowPresentation& g) {
  Json j;
  j["circles"] = Json::array();
  for (const auto& circle : g.circles()) {
    Json jc = Json::array();
    for (const Arrow& a : circle) {
      Json ja;
      ja["edge"] = a.edge;
      ja["slot"] = a.slot;
      ja["dir"] = a.reversed ? "-" : "+";
      jc.push_back(std::move(ja));
    }
    j["circles"].push_back(std::move(jc));
  }
  j["distinguished"] = Json::object();
  for (const auto& [edge, slot] : g.distinguished()) j["distinguished"][edge] = slot;
  return j.dump(2);
}

void write_arrow_presentation(const ArrowPresentation& g, const std::string& path) {
  dump_to(Json::parse(arrow_presentation_to_json(g)), path);
}

WeightMap read_weight_map(const std::string& path) {
  Json j = load_json(path);
  WeightMap out;
  for (const auto& [elem, value] : j.items()) {
    std::string text = value.get<std::string>();
    bool numeric = !text.empty() && (std::isdigit(static_cast<unsigned char>(text[0])) || text[0] == '-');
    if (numeric)
      out[elem] = parse_rational(text);
    else
      out[elem] = text;
  }
  return out;
}

WeightMap parse_weight_map(const std::string& text) {
  Json j = parse_json(text);
  WeightMap out;
  for (const auto& [elem, value] : j.items()) {
    std::string v = value.get<std::string>();
    bool numeric = !v.empty() && (std::isdigit(static_cast<unsigned char>(v[0])) || v[0] == '-');
    if (numeric)
      out[elem] = parse_rational(v);
    else
      out[elem] = v;
  }
  return out;
}

}  // namespace mmtp

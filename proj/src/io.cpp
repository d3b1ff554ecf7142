#include "digitop/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace digitop::io {

namespace {

using nlohmann::json;

json image_to_value(const DigitalImage& image) {
  json points = json::array();
  for (const auto& p : image.points()) points.push_back(p);
  return json{{"dim", image.dim()}, {"points", points}};
}

json map_to_value(const DigitalMap& map) {
  json pairs = json::array();
  for (std::size_t i = 0; i < map.domain().size(); ++i)
    pairs.push_back(json::array({map.domain().points()[i], map.values()[i]}));
  return json{{"domain", image_to_value(map.domain())},
              {"codomain", image_to_value(map.codomain())},
              {"pairs", pairs}};
}

LatticePoint point_from_value(const json& v, int dim) {
  if (!v.is_array())
    throw std::invalid_argument("point must be an array of integers");
  LatticePoint p;
  for (const auto& c : v) {
    if (!c.is_number_integer())
      throw std::invalid_argument("point coordinate is not an integer");
    p.push_back(c.get<int>());
  }
  if (dim > 0 && static_cast<int>(p.size()) != dim)
    throw std::invalid_argument("ragged point: " + to_string(p) +
                                " does not have dimension " +
                                std::to_string(dim));
  return p;
}

DigitalImage image_from_value(const json& v) {
  if (!v.is_object() || !v.contains("dim") || !v.contains("points"))
    throw std::invalid_argument("image must have \"dim\" and \"points\"");
  if (!v["dim"].is_number_integer())
    throw std::invalid_argument("image \"dim\" must be an integer");
  const int dim = v["dim"].get<int>();
  if (dim < 1) throw std::invalid_argument("image dimension must be >= 1");
  if (!v["points"].is_array())
    throw std::invalid_argument("image \"points\" must be an array");
  std::vector<LatticePoint> points;
  for (const auto& pv : v["points"]) points.push_back(point_from_value(pv, dim));
  // The image constructor rejects duplicates and empty point sets.
  return DigitalImage(dim, std::move(points));
}

DigitalMap map_from_value(const json& v) {
  if (!v.is_object() || !v.contains("domain") || !v.contains("codomain") ||
      !v.contains("pairs"))
    throw std::invalid_argument(
        "map must have \"domain\", \"codomain\" and \"pairs\"");
  DigitalImage domain = image_from_value(v["domain"]);
  DigitalImage codomain = image_from_value(v["codomain"]);
  if (!v["pairs"].is_array())
    throw std::invalid_argument("map \"pairs\" must be an array");
  std::vector<std::pair<LatticePoint, LatticePoint>> pairs;
  for (const auto& pv : v["pairs"]) {
    if (!pv.is_array() || pv.size() != 2)
      throw std::invalid_argument("map pair must be [point, point]");
    LatticePoint x = point_from_value(pv[0], domain.dim());
    LatticePoint y = point_from_value(pv[1], codomain.dim());
    if (!domain.contains(x))
      throw std::invalid_argument("pair source " + to_string(x) +
                                  " is not a domain point");
    if (!codomain.contains(y))
      throw std::invalid_argument("map target " + to_string(y) +
                                  " is outside the codomain");
    pairs.emplace_back(std::move(x), std::move(y));
  }
  return DigitalMap::from_pairs(std::move(domain), std::move(codomain), pairs);
}

json parse(const std::string& text) {
  json v = json::parse(text, nullptr, false);
  if (v.is_discarded()) throw std::invalid_argument("malformed JSON");
  return v;
}

std::string dump(const json& v) { return v.dump(2) + "\n"; }

}  // namespace

std::string to_json(const DigitalImage& image) {
  return dump(image_to_value(image));
}

std::string to_json(const DigitalMap& map) { return dump(map_to_value(map)); }

std::string cover_to_json(const DigitalMap& cover, const CoverCertificate& cert,
                          int factor_domain, int factor_codomain) {
  json v = map_to_value(cover);
  json c{{"continuous", cert.continuous},
         {"commutes", cert.commutes},
         {"factor_domain", factor_domain},
         {"factor_codomain", factor_codomain}};
  if (cert.continuity_violation)
    c["continuity_violation"] = json::array(
        {cert.continuity_violation->first, cert.continuity_violation->second});
  if (cert.commuting_violation)
    c["commuting_violation"] = *cert.commuting_violation;
  v["certificate"] = c;
  return dump(v);
}

DigitalImage image_from_json(const std::string& text) {
  return image_from_value(parse(text));
}

DigitalMap map_from_json(const std::string& text) {
  return map_from_value(parse(text));
}

namespace {
std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}
}  // namespace

DigitalImage read_image(const std::string& path) {
  return image_from_json(read_file(path));
}

DigitalMap read_map(const std::string& path) {
  return map_from_json(read_file(path));
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << content;
}

}  // namespace digitop::io

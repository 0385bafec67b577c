#include "polyalg/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace polyalg {

using Json = nlohmann::ordered_json;

namespace {

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
}

Rational rational_of(const Json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw InvalidArgument("coordinates must be integers or \"p/q\" strings");
}

}  // namespace

std::string polytope_to_json(const VPolytope& p, int indent) {
  Json j;
  j["arrangement"] = std::string(1, type_letter(p.arrangement()->type()));
  j["d"] = p.arrangement()->d();
  auto points = Json::array();
  for (const auto& v : p.vertices()) {
    auto row = Json::array();
    for (const auto& c : v) row.push_back(to_string(c));
    points.push_back(std::move(row));
  }
  j["points"] = std::move(points);
  return j.dump(indent);
}

static VPolytope polytope_from_json_impl(std::string_view text) {
  const Json j = parse_json(text);
  if (!j.is_object() || !j.contains("arrangement") || !j.contains("d") || !j.contains("points"))
    throw InvalidArgument("polytope JSON needs \"arrangement\", \"d\" and \"points\"");
  if (!j["arrangement"].is_string() || !j["d"].is_number_integer() || !j["points"].is_array())
    throw InvalidArgument("polytope JSON has fields of the wrong type");
  const int d = j["d"].get<int>();
  if (d < 1) throw InvalidArgument("d must be positive");
  auto arr = Arrangement::get({parse_arrangement_type(j["arrangement"].get<std::string>()), d});
  std::vector<Point> points;
  for (const auto& row : j["points"]) {
    if (!row.is_array() || static_cast<int>(row.size()) != d)
      throw InvalidArgument("every point needs exactly d coordinates");
    Point p;
    for (const auto& c : row) p.push_back(rational_of(c));
    points.push_back(std::move(p));
  }
  if (points.empty()) throw InvalidArgument("polytope JSON has no points");
  return VPolytope::from_points(std::move(arr), std::move(points));
}

VPolytope polytope_from_json(std::string_view text) {
  try {
    return polytope_from_json_impl(text);
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("malformed polytope JSON: ") + e.what());
  }
}

std::string tits_to_json(const TitsElement& w, int indent) {
  auto j = Json::array();
  for (const auto& [f, c] : w.terms())
    j.push_back(Json{{"face", w.arrangement()->format_face(f)}, {"coeff", to_string(c)}});
  return j.dump(indent);
}

TitsElement tits_from_json(const ArrangementPtr& arr, std::string_view text) {
  const Json j = parse_json(text);
  if (!j.is_array()) throw InvalidArgument("Tits element JSON must be a list");
  TitsElement w(arr);
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("face") || !e.contains("coeff") || !e["face"].is_string())
      throw InvalidArgument("Tits element entries need \"face\" and \"coeff\"");
    w.add_term(arr->face_index(arr->parse_face(e["face"].get<std::string>())), rational_of(e["coeff"]));
  }
  return w;
}

std::string cone_weights_to_json(const ConeWeights& w, int indent) {
  auto j = Json::array();
  for (const auto& [f, c] : w.weights())
    j.push_back(Json{{"face", w.arrangement()->format_face(f)}, {"coeff", to_string(c)}});
  return j.dump(indent);
}

std::string eta_to_json(const std::vector<EtaTable>& tables, std::optional<int> flat, int indent) {
  auto rows = Json::array();
  for (const auto& t : tables) {
    const auto& arr = *t.arrangement();
    for (int x = 0; x < static_cast<int>(arr.num_flats()); ++x) {
      if (flat && *flat != x) continue;
      for (int r = 0; r <= t.max_grade(); ++r)
        rows.push_back(Json{{"flat", arr.format_flat(x)},
                            {"r", r},
                            {"value", t.value(x, r)},
                            {"method", std::string(method_name(t.method()))}});
    }
  }
  return rows.dump(indent);
}

std::string eta_to_csv(const std::vector<EtaTable>& tables, std::optional<int> flat) {
  std::ostringstream out;
  out << "flat,r,value,method\n";
  for (const auto& t : tables) {
    const auto& arr = *t.arrangement();
    for (int x = 0; x < static_cast<int>(arr.num_flats()); ++x) {
      if (flat && *flat != x) continue;
      for (int r = 0; r <= t.max_grade(); ++r)
        out << '"' << arr.format_flat(x) << "\"," << r << ',' << t.value(x, r) << ',' << method_name(t.method()) << '\n';
    }
  }
  return out.str();
}

std::string decomposition_to_json(const Decomposition& d, int indent) {
  Json coeffs;
  for (std::size_t i = 0; i < d.names.size(); ++i) coeffs[d.names[i]] = to_string(d.coeffs[i]);
  Json j;
  j["coefficients"] = std::move(coeffs);
  j["reconstructed"] = d.reconstructed;
  return j.dump(indent);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace polyalg

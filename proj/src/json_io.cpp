#include "braids/json_io.hpp"

#include "braids/errors.hpp"

namespace braids {
namespace {

using nlohmann::json;

Rational rational_field(const json& j, const char* where) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError(std::string("expected a rational (integer or \"p/q\") in ") + where);
}

QPoint point_field(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw ParseError("expected a point as a [re, im] pair");
  return QPoint{rational_field(j[0], "point"), rational_field(j[1], "point")};
}

int int_field(const json& j, const char* name) {
  if (!j.is_number_integer())
    throw ParseError(std::string("expected integer field '") + name + "'");
  return j.get<int>();
}

const json& required(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw ParseError(std::string("missing field '") + name + "'");
  return j.at(name);
}

}  // namespace

std::unique_ptr<PathApproximation> parse_path(const json& j) {
  const std::string kind = required(j, "kind").get<std::string>();
  if (kind != "pl_path" && kind != "pl_tube")
    throw ParseError("unknown path kind '" + kind + "'");
  const int n = int_field(required(j, "n"), "n");

  std::vector<Rational> times;
  for (const auto& t : required(j, "times")) times.push_back(rational_field(t, "times"));

  const json& strands = required(j, "strands");
  if (!strands.is_array() || static_cast<int>(strands.size()) != n)
    throw ParseError("'strands' must list exactly n strands");
  std::vector<std::vector<QPoint>> vertices;
  for (const auto& strand : strands) {
    std::vector<QPoint> row;
    for (const auto& p : strand) row.push_back(point_field(p));
    vertices.push_back(std::move(row));
  }

  try {
    if (kind == "pl_path") {
      if (j.contains("radii")) throw ParseError("'radii' is only valid for pl_tube");
      return std::make_unique<PLPath>(std::move(times), std::move(vertices));
    }
    std::vector<std::vector<Rational>> radii;
    for (const auto& row : required(j, "radii")) {
      std::vector<Rational> r;
      for (const auto& x : row) r.push_back(rational_field(x, "radii"));
      radii.push_back(std::move(r));
    }
    return std::make_unique<PLTube>(std::move(times), std::move(vertices),
                                    std::move(radii));
  } catch (const ContractViolation& e) {
    // Structurally malformed data surfaces as a parse failure.
    throw ParseError(std::string("invalid path data: ") + e.what());
  }
}

Arrangement parse_arrangement(const json& j) {
  const int n = int_field(required(j, "n"), "n");
  std::vector<Edge> edges;
  for (const auto& e : required(j, "edges")) {
    if (!e.is_array() || e.size() != 3)
      throw ParseError("arrangement edge must be [i, j, axis]");
    const std::string axis = e[2].get<std::string>();
    if (axis != "re" && axis != "im")
      throw ParseError("edge axis must be \"re\" or \"im\"");
    edges.push_back(Edge{int_field(e[0], "edge"), int_field(e[1], "edge"),
                         axis == "re" ? Axis::Re : Axis::Im});
  }
  try {
    return Arrangement(n, std::move(edges));
  } catch (const ContractViolation& e) {
    throw ParseError(std::string("invalid arrangement: ") + e.what());
  }
}

json arrangement_to_json(const Arrangement& g) {
  json edges = json::array();
  for (const Edge& e : g.edges())
    edges.push_back(json::array({e.i, e.j, axis_name(e.axis)}));
  return json{{"n", g.n()}, {"edges", edges}};
}

Permutation parse_permutation(const json& j) {
  if (!j.is_array()) throw ParseError("permutation must be an array of images");
  std::vector<int> img;
  for (const auto& v : j) img.push_back(int_field(v, "permutation"));
  try {
    return Permutation(std::move(img));
  } catch (const ContractViolation& e) {
    throw ParseError(e.what());
  }
}

json word_to_json(const BraidWord& w) { return json(w.letters); }

BraidWord parse_word(int n, const json& j) {
  if (!j.is_array()) throw ParseError("braid word must be an array of letters");
  std::vector<int> letters;
  for (const auto& v : j) letters.push_back(int_field(v, "word"));
  try {
    return make_word(n, std::move(letters));
  } catch (const ContractViolation& e) {
    throw ParseError(e.what());
  }
}

namespace {

json point_json(const PermutationPoint& p) {
  return json{{"pi", p.pi.images()}, {"phi", p.phi.images()}};
}

}  // namespace

json result_to_json(const BraidResult& r, const std::optional<BraidWord>& closed_word) {
  json start = point_json(r.start_point);
  start["arrangement"] = arrangement_to_json(r.start_arrangement);
  json end = point_json(r.end_point);
  end["arrangement"] = arrangement_to_json(r.end_arrangement);
  json out{{"word", word_to_json(r.word)}, {"start", start}, {"end", end}};
  if (closed_word) out["closed_word"] = word_to_json(*closed_word);
  return out;
}

namespace {

json rational_json(const Rational& x) { return rational_to_string(x); }

json grid_json(const std::vector<Rational>& times,
               const std::vector<std::vector<QPoint>>& vertices) {
  json jt = json::array();
  for (const auto& t : times) jt.push_back(rational_json(t));
  json js = json::array();
  for (const auto& strand : vertices) {
    json row = json::array();
    for (const auto& p : strand)
      row.push_back(json::array({rational_json(p.re), rational_json(p.im)}));
    js.push_back(row);
  }
  return json{{"times", jt}, {"strands", js}};
}

}  // namespace

json path_to_json(const PLPath& path) {
  json out = grid_json(path.times(), path.vertices());
  out["kind"] = "pl_path";
  out["n"] = path.strand_count();
  return out;
}

json tube_to_json(const PLTube& tube) {
  json out = grid_json(tube.times(), tube.centers());
  out["kind"] = "pl_tube";
  out["n"] = tube.strand_count();
  json radii = json::array();
  for (const auto& row : tube.radii()) {
    json r = json::array();
    for (const auto& x : row) r.push_back(rational_json(x));
    radii.push_back(r);
  }
  out["radii"] = radii;
  return out;
}

}  // namespace braids

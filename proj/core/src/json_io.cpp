#include "macloops/json_io.hpp"

#include <json.hpp>

#include <sstream>

namespace macloops {

namespace {

using nlohmann::json;

json parse_strict(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(Errc::ParseError, "malformed JSON");
  return j;
}

void require_keys(const json& j, std::initializer_list<const char*> keys) {
  if (!j.is_object()) throw Error(Errc::ParseError, "expected a JSON object");
  for (const char* k : keys)
    if (!j.contains(k)) throw Error(Errc::ParseError, std::string("missing key \"") + k + "\"");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : keys) known = known || it.key() == k;
    if (!known) throw Error(Errc::ParseError, "unexpected key \"" + it.key() + "\"");
  }
}

long long integer_at(const json& j, const char* what) {
  if (!j.is_number_integer()) throw Error(Errc::ParseError, std::string(what) + " must be an integer");
  return j.get<long long>();
}

}  // namespace

SimplicialComplex parse_complex_json(const std::string& text, GhostPolicy policy) {
  json j = parse_strict(text);
  require_keys(j, {"m", "facets"});
  long long m = integer_at(j["m"], "\"m\"");
  if (m < 0 || m > FaceSet::max_vertices)
    throw Error(Errc::ParameterOutOfRange, "m must lie in 0..64");
  if (!j["facets"].is_array()) throw Error(Errc::ParseError, "\"facets\" must be an array");

  std::vector<FaceSet> facets;
  for (const json& facet : j["facets"]) {
    if (!facet.is_array()) throw Error(Errc::ParseError, "each facet must be an array");
    FaceSet f;
    for (const json& entry : facet) {
      long long v = integer_at(entry, "facet vertex");
      if (v < 1 || v > FaceSet::max_vertices)
        throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v) + " outside 1..64");
      f.insert(static_cast<int>(v));
    }
    facets.push_back(f);
  }
  return SimplicialComplex::normalize(static_cast<int>(m), std::move(facets), policy);
}

RationalFunction parse_rational_function_json(const std::string& text) {
  json j = parse_strict(text);
  require_keys(j, {"num", "den"});
  auto read_poly = [](const json& arr, const char* what) {
    if (!arr.is_array()) throw Error(Errc::ParseError, std::string(what) + " must be an array");
    std::vector<mpz_class> coeffs;
    coeffs.reserve(arr.size());
    for (const json& entry : arr)
      coeffs.emplace_back(static_cast<long>(integer_at(entry, "coefficient")));
    return Polynomial(std::move(coeffs));
  };
  return RationalFunction(read_poly(j["num"], "\"num\""), read_poly(j["den"], "\"den\""));
}

JoinDecomposition parse_decomposition_json(const std::string& text) {
  json j = parse_strict(text);
  require_keys(j, {"simplex", "boundaries"});
  auto read_set = [](const json& arr) {
    if (!arr.is_array()) throw Error(Errc::ParseError, "vertex set must be an array");
    FaceSet s;
    for (const json& entry : arr) {
      long long v = integer_at(entry, "vertex");
      if (v < 1 || v > FaceSet::max_vertices)
        throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v) + " outside 1..64");
      s.insert(static_cast<int>(v));
    }
    return s;
  };
  JoinDecomposition d;
  d.simplex_vertices = read_set(j["simplex"]);
  if (!j["boundaries"].is_array())
    throw Error(Errc::ParseError, "\"boundaries\" must be an array");
  for (const json& factor : j["boundaries"]) d.boundary_factors.push_back(read_set(factor));
  return d;
}

namespace {

void write_face_set(std::ostream& out, const FaceSet& s) {
  out << "[";
  bool first = true;
  for (int v : s.vertices()) {
    if (!first) out << ",";
    out << v;
    first = false;
  }
  out << "]";
}

void write_face_sets(std::ostream& out, const std::vector<FaceSet>& sets) {
  out << "[";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i) out << ",";
    write_face_set(out, sets[i]);
  }
  out << "]";
}

void write_coefficients(std::ostream& out, const std::vector<mpz_class>& coeffs) {
  out << "[";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out << ",";
    out << coeffs[i].get_str();
  }
  out << "]";
}

}  // namespace

std::string face_set_to_json(const FaceSet& s) {
  std::ostringstream out;
  write_face_set(out, s);
  return out.str();
}

std::string complex_to_json(const SimplicialComplex& K) {
  std::ostringstream out;
  out << "{\"m\":" << K.vertex_count() << ",\"facets\":";
  if (K.vertex_count() == 0 && K.facets().size() == 1 && K.facets()[0].empty())
    out << "[]";  // the empty complex round-trips as having no listed facets
  else
    write_face_sets(out, K.facets());
  out << "}";
  return out.str();
}

std::string rational_function_to_json(const RationalFunction& f) {
  std::ostringstream out;
  out << "{\"num\":";
  write_coefficients(out, f.numerator().coefficients());
  out << ",\"den\":";
  write_coefficients(out, f.denominator().coefficients());
  out << "}";
  return out.str();
}

std::string decomposition_to_json(const JoinDecomposition& d) {
  std::ostringstream out;
  out << "{\"simplex\":";
  write_face_set(out, d.simplex_vertices);
  out << ",\"boundaries\":";
  write_face_sets(out, d.boundary_factors);
  out << "}";
  return out.str();
}

std::string witness_to_json(const WedgeWitness& w) {
  std::ostringstream out;
  out << "{\"I\":";
  write_face_set(out, w.first);
  out << ",\"J\":";
  write_face_set(out, w.second);
  out << ",\"k\":" << w.first_only << ",\"t\":" << w.shared << ",\"r\":" << w.second_only;
  out << ",\"spheres\":[" << w.sphere_dims.first << "," << w.sphere_dims.second << "]";
  HiltonMilnorBound b = hilton_milnor_bound(w.first_only, w.shared, w.second_only);
  out << ",\"bound\":{\"lhs\":" << b.lhs << ",\"rhs\":" << b.rhs << "}}";
  return out.str();
}

std::string coefficients_to_json(const std::vector<mpz_class>& coefficients) {
  std::ostringstream out;
  write_coefficients(out, coefficients);
  return out.str();
}

}  // namespace macloops

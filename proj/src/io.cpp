#include "hopflink/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace hopf {

namespace {

using nlohmann::json;

json scalar_json(const Scalar& s, int order) {
  if (s.is_rational()) return s.to_rational().get_str();
  if (order % s.order() != 0)
    throw IncompatibleOrder("scalar " + s.to_string() + " does not lie in Q(zeta_" +
                            std::to_string(order) + ")");
  json arr = json::array();
  for (const auto& c : s.coeffs_at(order)) arr.push_back(c.get_str());
  return arr;
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

Scalar parse_scalar(const json& j, int order, const std::string& where) {
  if (j.is_string()) {
    try {
      return Scalar::parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      fail(where, e.what());
    }
  }
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_array()) {
    std::vector<Rational> coeffs;
    for (std::size_t i = 0; i < j.size(); ++i) {
      Scalar c = parse_scalar(j[i], 1, where + "[" + std::to_string(i) + "]");
      if (!c.is_rational()) fail(where, "nested coefficient arrays");
      coeffs.push_back(c.to_rational());
    }
    if (static_cast<int>(coeffs.size()) > euler_phi(order))
      fail(where, "coefficient array longer than phi(" + std::to_string(order) + ")");
    return Scalar::from_coeffs(order, coeffs);
  }
  fail(where, "expected a scalar (\"p/q\", integer or coefficient array)");
}

std::size_t parse_index(const json& j, std::size_t dim, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer index");
  long v = j.get<long>();
  if (v < 0 || static_cast<std::size_t>(v) >= dim) fail(where, "index out of range");
  return static_cast<std::size_t>(v);
}

const json& require(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail("top level", std::string("missing key \"") + key + "\"");
  return *it;
}

Vec parse_vector(const json& j, std::size_t dim, int order, const std::string& where) {
  if (!j.is_array() || j.size() != dim)
    fail(where, "expected an array of " + std::to_string(dim) + " scalars");
  Vec v(dim);
  for (std::size_t i = 0; i < dim; ++i)
    v[i] = parse_scalar(j[i], order, where + "[" + std::to_string(i) + "]");
  return v;
}

std::string line(const json& j) { return j.dump(); }

}  // namespace

std::string scalar_to_text(const Scalar& s) {
  if (s.is_rational()) return s.to_rational().get_str();
  return scalar_json(s, s.order()).dump();
}

std::string save_string(const FinHopf& h) {
  const int order = h.field_order();
  const std::size_t n = h.dim();
  std::ostringstream os;
  os << "{\n";
  os << "  \"field\": {\"cyclotomic_order\": " << order << "},\n";
  os << "  \"dim\": " << n << ",\n";
  os << "  \"basis\": " << line(json(h.names())) << ",\n";
  os << "  \"comul\": [";
  bool first = true;
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& t : h.coalg.comul[i]) {
      os << (first ? "\n    " : ",\n    ");
      first = false;
      os << line(json::array({i, t.j, t.k, scalar_json(t.c, order)}));
    }
  os << (first ? "],\n" : "\n  ],\n");
  json counit = json::array();
  for (const auto& c : h.coalg.counit) counit.push_back(scalar_json(c, order));
  os << "  \"counit\": " << line(counit);
  if (h.has_algebra()) {
    os << ",\n  \"mul\": [";
    first = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (const auto& t : h.mul[i * n + j]) {
          os << (first ? "\n    " : ",\n    ");
          first = false;
          os << line(json::array({i, j, t.k, scalar_json(t.c, order)}));
        }
    os << (first ? "],\n" : "\n  ],\n");
    json unit = json::array();
    for (const auto& c : h.unit) unit.push_back(scalar_json(c, order));
    os << "  \"unit\": " << line(unit) << ",\n";
    os << "  \"antipode\": ";
    if (!h.antipode) {
      os << "null";
    } else {
      os << "[";
      for (std::size_t k = 0; k < n; ++k) {
        json row = json::array();
        for (std::size_t i = 0; i < n; ++i) row.push_back(scalar_json((*h.antipode)(k, i), order));
        os << (k ? ",\n    " : "\n    ") << line(row);
      }
      os << (n ? "\n  ]" : "]");
    }
  }
  os << "\n}\n";
  return os.str();
}

FinHopf load_string(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
    std::size_t ln = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++ln;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("line " + std::to_string(ln) + ", column " + std::to_string(col) +
                     " (byte " + std::to_string(byte) + "): " + e.what());
  }
  if (!doc.is_object()) fail("top level", "expected an object");

  const json& field = require(doc, "field");
  if (!field.is_object() || !field.contains("cyclotomic_order") ||
      !field["cyclotomic_order"].is_number_integer() || field["cyclotomic_order"].get<long>() < 1)
    fail("field", "expected {\"cyclotomic_order\": n} with n >= 1");
  const int order = field["cyclotomic_order"].get<int>();

  const json& dimj = require(doc, "dim");
  if (!dimj.is_number_integer() || dimj.get<long>() < 1) fail("dim", "expected a positive integer");
  const std::size_t n = dimj.get<std::size_t>();

  FinHopf h;
  h.coalg.field_order = order;
  h.coalg.dim = n;
  if (doc.contains("basis")) {
    const json& b = doc["basis"];
    if (!b.is_array() || b.size() != n) fail("basis", "expected " + std::to_string(n) + " names");
    for (const auto& nm : b) {
      if (!nm.is_string()) fail("basis", "names must be strings");
      h.coalg.names.push_back(nm.get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) h.coalg.names.push_back("b" + std::to_string(i));
  }

  std::vector<std::map<std::pair<std::size_t, std::size_t>, Scalar>> comul(n);
  const json& cj = require(doc, "comul");
  if (!cj.is_array()) fail("comul", "expected an array of [i, j, k, scalar]");
  for (std::size_t e = 0; e < cj.size(); ++e) {
    const std::string where = "comul[" + std::to_string(e) + "]";
    const json& t = cj[e];
    if (!t.is_array() || t.size() != 4) fail(where, "expected [i, j, k, scalar]");
    auto i = parse_index(t[0], n, where), j = parse_index(t[1], n, where),
         k = parse_index(t[2], n, where);
    comul[i][{j, k}] += parse_scalar(t[3], order, where);
  }
  h.coalg.comul.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [jk, c] : comul[i])
      if (!c.is_zero()) h.coalg.comul[i].push_back({jk.first, jk.second, c});
  h.coalg.counit = parse_vector(require(doc, "counit"), n, order, "counit");

  if (doc.contains("mul") && !doc["mul"].is_null()) {
    std::vector<std::map<std::size_t, Scalar>> mul(n * n);
    const json& mj = doc["mul"];
    if (!mj.is_array()) fail("mul", "expected an array of [i, j, k, scalar]");
    for (std::size_t e = 0; e < mj.size(); ++e) {
      const std::string where = "mul[" + std::to_string(e) + "]";
      const json& t = mj[e];
      if (!t.is_array() || t.size() != 4) fail(where, "expected [i, j, k, scalar]");
      auto i = parse_index(t[0], n, where), j = parse_index(t[1], n, where),
           k = parse_index(t[2], n, where);
      mul[i * n + j][k] += parse_scalar(t[3], order, where);
    }
    h.mul.resize(n * n);
    for (std::size_t x = 0; x < n * n; ++x)
      for (const auto& [k, c] : mul[x])
        if (!c.is_zero()) h.mul[x].push_back({k, c});
    h.unit = parse_vector(require(doc, "unit"), n, order, "unit");
    if (doc.contains("antipode") && !doc["antipode"].is_null()) {
      const json& sj = doc["antipode"];
      if (!sj.is_array() || sj.size() != n) fail("antipode", "expected a square matrix");
      Matrix s(n, n);
      for (std::size_t k = 0; k < n; ++k) {
        Vec row = parse_vector(sj[k], n, order, "antipode[" + std::to_string(k) + "]");
        for (std::size_t i = 0; i < n; ++i) s(k, i) = row[i];
      }
      h.antipode = s;
    }
  }
  return h;
}

void save_file(const FinHopf& h, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << save_string(h);
}

FinHopf load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_string(ss.str());
}

}  // namespace hopf

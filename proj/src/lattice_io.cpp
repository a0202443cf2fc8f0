#include "exlogic/lattice_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace exlogic {

namespace {

using nlohmann::json;

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

LatticeData lattice_data_from_json(const std::string& json_text, const std::string& origin) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw LatticeError("json", origin + ": " + e.what());
  }
  auto fail = [&](const std::string& msg) { throw LatticeError("json", origin + ": " + msg); };
  if (!j.is_object()) fail("top-level value must be an object");

  LatticeData data;
  if (!j.contains("elements") || !j["elements"].is_array())
    fail("missing \"elements\" array");
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) fail("\"elements\" entries must be strings");
    data.elements.push_back(e.get<std::string>());
  }

  if (j.contains("covers") && j.contains("leq"))
    fail("give either \"covers\" or \"leq\", not both");
  const char* key = j.contains("leq") ? "leq" : "covers";
  data.order_is_covers = std::string(key) == "covers";
  if (j.contains(key)) {
    if (!j[key].is_array()) fail(std::string("\"") + key + "\" must be an array of pairs");
    for (const auto& pair : j[key]) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
        fail(std::string("\"") + key + "\" entries must be [lower, upper] string pairs");
      data.order.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
  }

  if (j.contains("neg")) {
    if (!j["neg"].is_object()) fail("\"neg\" must be an object");
    for (const auto& [from, to] : j["neg"].items()) {
      if (!to.is_string()) fail("\"neg\" values must be strings");
      data.negation[from] = to.get<std::string>();
    }
  }

  if (j.contains("metadata")) {
    if (!j["metadata"].is_object()) fail("\"metadata\" must be an object");
    for (const auto& [k, v] : j["metadata"].items()) {
      if (!v.is_string()) fail("\"metadata\" values must be strings");
      data.metadata[k] = v.get<std::string>();
    }
  }
  return data;
}

FiniteLattice load_lattice(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LatticeError("io", "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return validate(lattice_data_from_json(buf.str(), path));
}

std::string lattice_to_json(const FiniteLattice& L) {
  // Hand-rolled emission keeps key order and layout canonical.
  std::ostringstream out;
  out << "{\n  \"elements\": [";
  for (int i = 0; i < L.size(); ++i) out << (i ? ", " : "") << quoted(L.name(i));
  out << "],\n  \"covers\": [";
  auto covers = L.covers();
  for (size_t i = 0; i < covers.size(); ++i) {
    out << (i ? ", " : "") << "[" << quoted(L.name(covers[i].first)) << ", "
        << quoted(L.name(covers[i].second)) << "]";
  }
  out << "]";
  if (L.has_negation()) {
    out << ",\n  \"neg\": {";
    bool first = true;
    for (int i = 0; i < L.size(); ++i) {
      if (i == L.bottom() || i == L.top()) continue;
      out << (first ? "" : ", ") << quoted(L.name(i)) << ": " << quoted(L.name(L.neg(i)));
      first = false;
    }
    out << "}";
  }
  if (!L.metadata().empty()) {
    out << ",\n  \"metadata\": {";
    bool first = true;
    for (const auto& [k, v] : L.metadata()) {
      out << (first ? "" : ", ") << quoted(k) << ": " << quoted(v);
      first = false;
    }
    out << "}";
  }
  out << "\n}\n";
  return out.str();
}

void save_lattice(const FiniteLattice& L, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw LatticeError("io", "cannot write '" + path + "'");
  out << lattice_to_json(L);
}

std::string lattice_to_dot(const FiniteLattice& L) {
  std::ostringstream out;
  out << "digraph lattice {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (int i = 0; i < L.size(); ++i) out << "  " << quoted(L.name(i)) << ";\n";
  for (const auto& [lo, hi] : L.covers())
    out << "  " << quoted(L.name(lo)) << " -> " << quoted(L.name(hi)) << ";\n";
  if (L.has_negation()) {
    for (int i = 0; i < L.size(); ++i) {
      if (i == L.bottom() || i == L.top()) continue;
      int j = L.neg(i);
      if (j == L.bottom() || j == L.top()) {
        out << "  " << quoted(L.name(i)) << " -> " << quoted(L.name(j))
            << " [style=dashed, color=red, constraint=false];\n";
        continue;
      }
      bool mutual = L.neg(j) == i;
      if (mutual && j < i) continue;  // drawn once from the lower index
      out << "  " << quoted(L.name(i)) << " -> " << quoted(L.name(j))
          << " [style=dashed, color=red, constraint=false" << (mutual ? ", dir=both" : "")
          << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace exlogic

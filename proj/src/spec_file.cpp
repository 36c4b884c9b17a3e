#include "pakstanley/spec_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace pakstanley {

using json = nlohmann::json;

namespace {

std::string location(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t k = 0; k + 1 < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

PairKey parse_key(const std::string& key) {
  const auto comma = key.find(',');
  PairKey out{0, 0};
  if (comma != std::string::npos) {
    const char* begin = key.data();
    const char* end = begin + key.size();
    auto r1 = std::from_chars(begin, begin + comma, out.first);
    auto r2 = std::from_chars(begin + comma + 1, end, out.second);
    if (r1.ec == std::errc{} && r1.ptr == begin + comma && r2.ec == std::errc{} && r2.ptr == end) {
      return out;
    }
  }
  throw SpecFileError("key \"" + key + "\" is not of the form \"i,j\"");
}

int as_int(const json& value, const std::string& what) {
  if (!value.is_number_integer()) throw SpecFileError(what + " must be an integer");
  return value.get<int>();
}

Arrangement sets_form(const json& doc) {
  if (!doc.contains("n")) throw SpecFileError("the sets form needs \"n\"");
  const int n = as_int(doc["n"], "\"n\"");
  const json& s = doc["S"];
  if (!s.is_object()) throw SpecFileError("\"S\" must be an object");
  OffsetSets sets;
  for (const auto& [key, offsets] : s.items()) {
    if (!offsets.is_array()) throw SpecFileError("S[\"" + key + "\"] must be an array");
    auto& target = sets[parse_key(key)];
    for (const auto& value : offsets) target.insert(as_int(value, "offsets"));
  }
  return build_from_sets(n, sets);
}

Arrangement m_eps_form(const json& doc) {
  const json& m = doc["m"];
  if (!m.is_array() || m.empty()) throw SpecFileError("\"m\" must be a non-empty array");
  const int n = static_cast<int>(m.size());
  if (doc.contains("n") && as_int(doc["n"], "\"n\"") != n) {
    throw SpecFileError("\"n\" disagrees with the length of \"m\"");
  }
  MEpsData data = MEpsData::zeros(n);
  for (int k = 0; k < n; ++k) data.m[k] = as_int(m[k], "entries of \"m\"");
  if (doc.contains("eps")) {
    const json& eps = doc["eps"];
    if (!eps.is_object()) throw SpecFileError("\"eps\" must be an object");
    for (const auto& [key, value] : eps.items()) {
      const auto [i, j] = parse_key(key);
      if (i < 1 || j < 1 || i > n || j > n || i == j) {
        throw SpecFileError("eps key \"" + key + "\" is not an ordered pair of distinct indices");
      }
      data.set_epsilon(i, j, as_int(value, "eps values"));
    }
  }
  return build_from_m_eps(data);
}

}  // namespace

ArrangementSpec parse_arrangement_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw SpecFileError("parse error at " + location(text, e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw SpecFileError("top level must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "n" && key != "S" && key != "m" && key != "eps" && key != "name") {
      throw SpecFileError("unknown key \"" + key + "\"");
    }
  }
  const bool has_sets = doc.contains("S");
  const bool has_m_eps = doc.contains("m") || doc.contains("eps");
  if (has_sets && has_m_eps) {
    throw SpecFileError("file specifies both the \"S\" form and the \"m\"/\"eps\" form");
  }
  if (!has_sets && !has_m_eps) {
    throw SpecFileError("file needs either \"S\" (with \"n\") or \"m\" (with optional \"eps\")");
  }
  if (doc.contains("eps") && !doc.contains("m")) throw SpecFileError("\"eps\" needs \"m\"");

  ArrangementSpec spec;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw SpecFileError("\"name\" must be a string");
    spec.name = doc["name"].get<std::string>();
  }
  spec.arrangement = has_sets ? sets_form(doc) : m_eps_form(doc);
  return spec;
}

ArrangementSpec read_arrangement_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecFileError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_arrangement_file(buffer.str());
}

std::string serialize_arrangement(const Arrangement& a, const std::optional<std::string>& name) {
  json doc;
  doc["n"] = a.n();
  doc["S"] = json::object();
  for (int i = 1; i <= a.n(); ++i) {
    for (int j = i + 1; j <= a.n(); ++j) {
      const auto& offsets = a.offsets(i, j);
      if (!offsets.empty()) doc["S"][std::to_string(i) + "," + std::to_string(j)] = offsets;
    }
  }
  if (name) doc["name"] = *name;
  return doc.dump() + "\n";
}

}  // namespace pakstanley

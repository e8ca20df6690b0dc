#include "explab/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "explab/errors.hpp"

namespace explab {

namespace {

// 1-based line of a byte offset, for parse diagnostics.
std::size_t line_of_offset(const std::string& text, std::size_t offset) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

}  // namespace

RSet parse_set_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed set file at line " + std::to_string(line_of_offset(text, e.byte)) +
                     ": " + e.what());
  }
  if (!doc.is_array()) throw ParseError("set file must be a JSON array of rational strings");
  std::vector<Rational> elems;
  elems.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    if (!doc[i].is_string())
      throw ParseError("set element " + std::to_string(i) + " is not a string");
    try {
      elems.push_back(Rational::parse(doc[i].get<std::string>()));
    } catch (const ParseError& e) {
      throw ParseError("set element " + std::to_string(i) + ": " + e.what());
    }
  }
  return RSet(std::move(elems));
}

RSet load_set_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open set file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_set_json(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string set_to_json(const RSet& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Rational& v : s) arr.push_back(v.str());
  return arr.dump();
}

std::string keyset_to_json(const KeySet& k) {
  nlohmann::json arr = nlohmann::json::array();
  for (const LogKey& key : k) arr.push_back(key.str());
  return arr.dump();
}

std::string table_to_json(const MultiplicityTable& t) {
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (const auto& e : t) obj[e.value.str()] = e.count.get_str();
  return obj.dump();
}

std::string witness_to_json(const DyadicWitness& w) {
  nlohmann::ordered_json obj;
  obj["tau"] = w.tau.str();
  obj["s_tau"] = nlohmann::ordered_json::parse(set_to_json(w.s_tau));
  obj["t"] = w.t.str();
  obj["a_prime"] = nlohmann::ordered_json::parse(set_to_json(w.a_prime));
  obj["dstar_bound"] = w.dstar_bound.str();
  obj["class_count_tau"] = w.class_count_tau;
  obj["class_count_t"] = w.class_count_t;
  return obj.dump();
}

std::string csv_escape(const std::string& field) {
  bool needs = field.find_first_of(",\"\n") != std::string::npos;
  if (!needs) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

}  // namespace explab

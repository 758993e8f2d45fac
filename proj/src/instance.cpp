#include "latred/instance.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace latred {

using nlohmann::json;

namespace {

json vector_to_json(const RationalVector& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(to_string(x));
  return arr;
}

RationalVector vector_from_json(const json& arr, std::string_view what) {
  if (!arr.is_array() || arr.empty()) throw ParseError(std::string(what) + " must be a non-empty array");
  std::vector<Rational> entries;
  entries.reserve(arr.size());
  for (const auto& x : arr) {
    if (x.is_string()) {
      entries.push_back(parse_rational(x.get<std::string>()));
    } else if (x.is_number_integer()) {
      entries.emplace_back(Integer(x.dump()));
    } else {
      throw ParseError(std::string(what) + " entries must be rational strings");
    }
  }
  return RationalVector(std::move(entries));
}

std::size_t size_field(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_unsigned())
    throw ParseError(std::string("missing or invalid '") + key + "'");
  return doc[key].get<std::size_t>();
}

}  // namespace

std::string serialize_instance(const InstanceFile& instance) {
  json doc;
  doc["m"] = instance.m();
  doc["n"] = instance.n();
  json cols = json::array();
  for (const auto& c : instance.basis.matrix().columns()) cols.push_back(vector_to_json(c));
  doc["basis"] = cols;
  if (instance.target) doc["target"] = vector_to_json(*instance.target);
  doc["gamma"] = to_string(instance.gamma);
  json meta;
  meta["seed"] = instance.seed;
  meta["generator"] = instance.generator;
  if (instance.planted) meta["planted"] = vector_to_json(*instance.planted);
  if (instance.slack) meta["slack"] = to_string(*instance.slack);
  doc["metadata"] = meta;
  return doc.dump(2) + "\n";
}

InstanceFile parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("instance is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("instance must be a JSON object");

  try {
    const std::size_t m = size_field(doc, "m");
    const std::size_t n = size_field(doc, "n");
    if (!doc.contains("basis") || !doc["basis"].is_array() || doc["basis"].size() != n)
      throw ParseError("basis must list exactly n columns");
    std::vector<RationalVector> cols;
    for (const auto& c : doc["basis"]) {
      cols.push_back(vector_from_json(c, "basis column"));
      if (cols.back().dim() != m) throw ParseError("basis column does not have m entries");
    }
    InstanceFile inst{LatticeBasis(std::move(cols))};
    if (doc.contains("target")) {
      inst.target = vector_from_json(doc["target"], "target");
      if (inst.target->dim() != m) throw ParseError("target does not have m entries");
    }
    if (doc.contains("gamma")) {
      if (!doc["gamma"].is_string()) throw ParseError("gamma must be a rational string");
      inst.gamma = parse_rational(doc["gamma"].get<std::string>());
      if (inst.gamma < 1) throw ParseError("gamma must be >= 1");
    }
    if (doc.contains("metadata")) {
      const json& meta = doc["metadata"];
      if (!meta.is_object()) throw ParseError("metadata must be an object");
      if (meta.contains("seed")) {
        if (!meta["seed"].is_number_unsigned()) throw ParseError("seed must be a non-negative integer");
        inst.seed = meta["seed"].get<std::uint64_t>();
      }
      if (meta.contains("generator")) inst.generator = meta["generator"].get<std::string>();
      if (meta.contains("planted")) {
        inst.planted = vector_from_json(meta["planted"], "planted answer");
        if (inst.planted->dim() != m) throw ParseError("planted answer does not have m entries");
        if (!is_member(inst.basis, *inst.planted))
          throw ParseError("planted answer is not a lattice member");
      }
      if (meta.contains("slack")) inst.slack = parse_rational(meta["slack"].get<std::string>());
    }
    return inst;
  } catch (const ParseError&) {
    throw;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed instance: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid instance: ") + e.what());
  }
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

InstanceFile read_instance(const std::filesystem::path& path) {
  return parse_instance(read_text(path));
}

void write_instance(const std::filesystem::path& path, const InstanceFile& instance) {
  write_text(path, serialize_instance(instance));
}

std::string serialize_answer(const RationalVector& answer) {
  json doc;
  doc["answer"] = vector_to_json(answer);
  return doc.dump(2) + "\n";
}

RationalVector parse_answer(std::string_view text) {
  try {
    const json doc = json::parse(text);
    if (!doc.is_object() || !doc.contains("answer")) throw ParseError("answer file needs an 'answer' array");
    return vector_from_json(doc["answer"], "answer");
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed answer: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid answer: ") + e.what());
  }
}

}  // namespace latred

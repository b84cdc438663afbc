#include "socs/document.hpp"

#include <json.hpp>

#include <utility>
#include <vector>

#include "socs/errors.hpp"

namespace socs {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

std::string join_path(const std::string& base, const std::string& key) {
  return base + "/" + key;
}

const json& field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) {
    throw SchemaError("expected an object", path);
  }
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw SchemaError("missing field '" + key + "'", path);
  }
  return *it;
}

Rat rational_field(const json& value, const std::string& path) {
  if (value.is_number_integer()) {
    return Rat(static_cast<long>(value.get<std::int64_t>()));
  }
  if (value.is_number_float()) {
    throw SchemaError("floating-point numbers are not exact; quote the value as a decimal string",
                      path);
  }
  if (!value.is_string()) {
    throw SchemaError("expected a rational as \"p\", \"p/q\", or a decimal string", path);
  }
  try {
    return Rat::parse(value.get<std::string>());
  } catch (const ValidationError& e) {
    throw SchemaError(e.what(), path);
  }
}

Axis parse_axis(const json& value, const std::string& path) {
  const json& kind = field(value, "kind", path);
  if (!kind.is_string()) {
    throw SchemaError("axis kind must be \"linear\" or \"circular\"", join_path(path, "kind"));
  }
  const std::string kind_text = kind.get<std::string>();
  if (kind_text == "linear") {
    return Axis::linear();
  }
  if (kind_text == "circular") {
    return Axis::circular(
        rational_field(field(value, "circumference", path), join_path(path, "circumference")));
  }
  throw SchemaError("axis kind must be \"linear\" or \"circular\"", join_path(path, "kind"));
}

AxisSet parse_set(const json& value, const Axis& axis, const std::string& path) {
  if (!value.is_object()) {
    throw SchemaError("expected an approval-set object", path);
  }
  Rat start = rational_field(field(value, "start", path), join_path(path, "start"));
  if (axis.is_circular()) {
    Rat length = rational_field(field(value, "length", path), join_path(path, "length"));
    return AxisSet::arc(std::move(start), std::move(length), axis);
  }
  Rat end = rational_field(field(value, "end", path), join_path(path, "end"));
  return AxisSet::interval(std::move(start), std::move(end));
}

}  // namespace

Society parse_society(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }

  const json& version = field(doc, "schema_version", "");
  if (!version.is_number_integer() || version.get<int>() != kSchemaVersion) {
    throw SchemaError("unsupported schema_version (expected 1)", "/schema_version");
  }

  const json& spectrum_json = field(doc, "spectrum", "");
  if (!spectrum_json.is_array() || spectrum_json.empty() || spectrum_json.size() > 2) {
    throw SchemaError("spectrum must be an array of one or two axes", "/spectrum");
  }
  std::vector<Axis> spectrum;
  for (std::size_t i = 0; i < spectrum_json.size(); ++i) {
    spectrum.push_back(parse_axis(spectrum_json[i], "/spectrum/" + std::to_string(i)));
  }

  const json& voters_json = field(doc, "voters", "");
  if (!voters_json.is_array() || voters_json.empty()) {
    throw SchemaError("voters must be a nonempty array", "/voters");
  }
  std::vector<Voter> voters;
  voters.reserve(voters_json.size());
  for (std::size_t i = 0; i < voters_json.size(); ++i) {
    const std::string path = "/voters/" + std::to_string(i);
    const json& voter = voters_json[i];
    const json& name = field(voter, "name", path);
    if (!name.is_string()) {
      throw SchemaError("voter name must be a string", join_path(path, "name"));
    }
    const json& sets = field(voter, "sets", path);
    if (!sets.is_array() || sets.size() != spectrum.size()) {
      throw SchemaError("voter needs one approval set per axis", join_path(path, "sets"));
    }
    std::vector<AxisSet> factors;
    factors.reserve(sets.size());
    for (std::size_t a = 0; a < sets.size(); ++a) {
      factors.push_back(parse_set(sets[a], spectrum[a], path + "/sets/" + std::to_string(a)));
    }
    voters.push_back(Voter{name.get<std::string>(), BoxSet(std::move(factors))});
  }

  return Society(std::move(spectrum), std::move(voters));
}

std::string serialize_society(const Society& s) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["spectrum"] = json::array();
  for (const Axis& axis : s.spectrum()) {
    json a;
    if (axis.is_circular()) {
      a["kind"] = "circular";
      a["circumference"] = axis.circumference().str();
    } else {
      a["kind"] = "linear";
    }
    doc["spectrum"].push_back(std::move(a));
  }
  doc["voters"] = json::array();
  for (const Voter& v : s.voters()) {
    json sets = json::array();
    for (std::size_t a = 0; a < s.dimension(); ++a) {
      const AxisSet& f = v.box.factor(a);
      json set;
      set["start"] = f.start().str();
      if (f.is_arc()) {
        set["length"] = f.length().str();
      } else {
        set["end"] = f.end().str();
      }
      sets.push_back(std::move(set));
    }
    doc["voters"].push_back(json{{"name", v.name}, {"sets", std::move(sets)}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace socs

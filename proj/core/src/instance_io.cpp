#include "advmatch/instance_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "advmatch/error.hpp"
#include "json.hpp"

namespace advmatch {
namespace {

using nlohmann::json;

std::vector<double> read_numbers(const json& object, const char* key) {
  auto it = object.find(key);
  if (it == object.end()) throw ParseError(std::string("missing \"") + key + "\" array");
  if (!it->is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
  std::vector<double> values;
  values.reserve(it->size());
  for (const auto& v : *it) {
    if (!v.is_number()) throw ParseError(std::string("non-numeric entry in \"") + key + "\"");
    values.push_back(v.get<double>());
  }
  return values;
}

Instance instance_from_json(const json& object) {
  if (!object.is_object()) throw ParseError("instance must be a JSON object");
  RawInstance raw{read_numbers(object, "servers"), read_numbers(object, "requests")};
  try {
    return validate_instance(std::move(raw));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

// Integral coordinates are written as JSON integers so integer instances
// round trip bit-exactly and stay readable.
json coordinate(double v) {
  if (std::nearbyint(v) == v && std::abs(v) < 9.0e15) return json(static_cast<std::int64_t>(v));
  return json(v);
}

json instance_to_json(const Instance& instance) {
  json servers = json::array();
  json requests = json::array();
  for (double s : instance.servers()) servers.push_back(coordinate(s));
  for (double r : instance.requests()) requests.push_back(coordinate(r));
  return json{{"servers", std::move(servers)}, {"requests", std::move(requests)}};
}

json parse_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace

Instance parse_instance(std::string_view json_text) {
  return instance_from_json(parse_text(json_text));
}

std::string format_instance(const Instance& instance) {
  return instance_to_json(instance).dump() + "\n";
}

Instance load_instance(const std::filesystem::path& path) {
  return parse_instance(read_file(path));
}

void save_instance(const Instance& instance, const std::filesystem::path& path) {
  write_file(path, format_instance(instance));
}

std::vector<Instance> load_instances(const std::filesystem::path& path) {
  const json doc = parse_text(read_file(path));
  std::vector<Instance> out;
  if (doc.is_array()) {
    out.reserve(doc.size());
    for (const auto& item : doc) out.push_back(instance_from_json(item));
  } else {
    out.push_back(instance_from_json(doc));
  }
  return out;
}

void save_instances(std::span<const Instance> instances, const std::filesystem::path& path) {
  json doc = json::array();
  for (const auto& instance : instances) doc.push_back(instance_to_json(instance));
  write_file(path, doc.dump() + "\n");
}

}  // namespace advmatch

#pragma once

#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gradedspec/module.hpp"
#include "gradedspec/ring_desc.hpp"

namespace gradedspec {

using Json = nlohmann::ordered_json;

/// One instance file: a grading group, a ring constructor and optionally a
/// module constructor over that ring.
struct Instance {
  std::string name;
  std::vector<std::size_t> group;
  RingDesc ring;
  std::optional<ModuleDesc> module;
  std::string notes;

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// An instance with its validated ring (and module).
struct LoadedInstance {
  Instance desc;
  std::shared_ptr<const GradedRing> ring;
  std::shared_ptr<const GradedModule> module;
};

namespace detail {

class JsonReader {
 public:
  explicit JsonReader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const std::string& where, const std::string& what) const {
    throw Error(ErrorKind::ParseError, source_ + ": " + (where.empty() ? "/" : where) + ": " + what);
  }

  const Json& object(const Json& j, const std::string& where) const {
    if (!j.is_object()) fail(where, "expected an object");
    return j;
  }

  void only_keys(const Json& j, const std::string& where, std::initializer_list<const char*> keys) const {
    for (auto it = j.begin(); it != j.end(); ++it) {
      bool known = false;
      for (const char* k : keys) known = known || it.key() == k;
      if (!known) fail(where, "unknown key \"" + it.key() + "\"");
    }
  }

  const Json& field(const Json& j, const std::string& where, const char* key) const {
    auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing key \"") + key + "\"");
    return *it;
  }

  std::size_t uint(const Json& j, const std::string& where) const {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
      fail(where, "expected a non-negative integer");
    return j.get<std::size_t>();
  }

  std::size_t uint_field(const Json& j, const std::string& where, const char* key) const {
    return uint(field(j, where, key), where + "/" + key);
  }

  std::vector<std::size_t> uint_list(const Json& j, const std::string& where) const {
    if (!j.is_array()) fail(where, "expected an array of integers");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(uint(j[i], where + "/" + std::to_string(i)));
    return out;
  }

  std::vector<std::vector<std::size_t>> uint_matrix(const Json& j, const std::string& where) const {
    if (!j.is_array()) fail(where, "expected an array of integer arrays");
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(uint_list(j[i], where + "/" + std::to_string(i)));
    return out;
  }

  std::string string(const Json& j, const std::string& where) const {
    if (!j.is_string()) fail(where, "expected a string");
    return j.get<std::string>();
  }

  std::vector<std::string> string_list(const Json& j, const std::string& where) const {
    if (!j.is_array()) fail(where, "expected an array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(string(j[i], where + "/" + std::to_string(i)));
    return out;
  }

  std::string type(const Json& j, const std::string& where) const { return string(field(j, where, "type"), where + "/type"); }

 private:
  std::string source_;
};

inline RingDesc parse_ring(const JsonReader& in, const Json& j, const std::string& at) {
  in.object(j, at);
  const std::string type = in.type(j, at);
  if (type == "zmod") {
    in.only_keys(j, at, {"type", "n"});
    return {ring_desc::ZMod{in.uint_field(j, at, "n")}};
  }
  if (type == "group_algebra") {
    in.only_keys(j, at, {"type", "p"});
    return {ring_desc::GroupAlgebra{in.uint_field(j, at, "p")}};
  }
  if (type == "truncated_poly") {
    in.only_keys(j, at, {"type", "p", "d", "degree"});
    return {ring_desc::TruncatedPoly{in.uint_field(j, at, "p"), in.uint_field(j, at, "d"),
                                     in.uint_list(in.field(j, at, "degree"), at + "/degree")}};
  }
  if (type == "product") {
    in.only_keys(j, at, {"type", "factors"});
    const Json& f = in.field(j, at, "factors");
    if (!f.is_array()) in.fail(at + "/factors", "expected an array of ring constructors");
    ring_desc::Product p;
    for (std::size_t i = 0; i < f.size(); ++i) p.factors.push_back(parse_ring(in, f[i], at + "/factors/" + std::to_string(i)));
    return {std::move(p)};
  }
  if (type == "tables") {
    in.only_keys(j, at, {"type", "size", "add", "mul", "zero", "one", "components", "labels"});
    ring_desc::Tables t;
    t.size = in.uint_field(j, at, "size");
    t.add = in.uint_matrix(in.field(j, at, "add"), at + "/add");
    t.mul = in.uint_matrix(in.field(j, at, "mul"), at + "/mul");
    t.zero = in.uint_field(j, at, "zero");
    t.one = in.uint_field(j, at, "one");
    t.components = in.uint_matrix(in.field(j, at, "components"), at + "/components");
    if (j.contains("labels")) t.labels = in.string_list(j["labels"], at + "/labels");
    return {std::move(t)};
  }
  if (type == "quotient") {
    in.only_keys(j, at, {"type", "ring", "generators"});
    return {ring_desc::Quotient{parse_ring(in, in.field(j, at, "ring"), at + "/ring"),
                                in.uint_list(in.field(j, at, "generators"), at + "/generators")}};
  }
  in.fail(at + "/type", "unknown ring constructor \"" + type + "\"");
}

inline ModuleDesc parse_module(const JsonReader& in, const Json& j, const std::string& at) {
  in.object(j, at);
  const std::string type = in.type(j, at);
  if (type == "self") {
    in.only_keys(j, at, {"type", "shift"});
    module_desc::Self s;
    if (j.contains("shift")) s.shift = in.uint_list(j["shift"], at + "/shift");
    return {std::move(s)};
  }
  if (type == "scalar_mod") {
    in.only_keys(j, at, {"type", "factors", "degrees"});
    return {module_desc::ScalarMod{in.uint_list(in.field(j, at, "factors"), at + "/factors"),
                                   in.uint_matrix(in.field(j, at, "degrees"), at + "/degrees")}};
  }
  if (type == "tables") {
    in.only_keys(j, at, {"type", "size", "add", "factors", "action", "zero", "components", "degrees", "labels"});
    module_desc::Tables t;
    if (j.contains("factors")) {
      t.factors = in.uint_list(j["factors"], at + "/factors");
    } else {
      t.size = in.uint_field(j, at, "size");
      t.add = in.uint_matrix(in.field(j, at, "add"), at + "/add");
    }
    t.action = in.uint_matrix(in.field(j, at, "action"), at + "/action");
    if (j.contains("zero")) t.zero = in.uint(j["zero"], at + "/zero");
    if (j.contains("degrees")) {
      t.degrees = in.uint_matrix(j["degrees"], at + "/degrees");
    } else {
      t.components = in.uint_matrix(in.field(j, at, "components"), at + "/components");
    }
    if (j.contains("labels")) t.labels = in.string_list(j["labels"], at + "/labels");
    return {std::move(t)};
  }
  if (type == "quotient") {
    in.only_keys(j, at, {"type", "module", "generators"});
    return {module_desc::Quotient{parse_module(in, in.field(j, at, "module"), at + "/module"),
                                  in.uint_list(in.field(j, at, "generators"), at + "/generators")}};
  }
  if (type == "direct_sum") {
    in.only_keys(j, at, {"type", "summands"});
    const Json& s = in.field(j, at, "summands");
    if (!s.is_array()) in.fail(at + "/summands", "expected an array of module constructors");
    module_desc::DirectSum d;
    for (std::size_t i = 0; i < s.size(); ++i)
      d.summands.push_back(parse_module(in, s[i], at + "/summands/" + std::to_string(i)));
    return {std::move(d)};
  }
  in.fail(at + "/type", "unknown module constructor \"" + type + "\"");
}

template <class T>
Json matrix_json(const std::vector<std::vector<T>>& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(row);
  return out;
}

}  // namespace detail

inline Instance parse_instance(const Json& j, const std::string& source = "<input>") {
  detail::JsonReader in(source);
  in.object(j, "");
  in.only_keys(j, "", {"name", "group", "ring", "module", "notes"});
  Instance out;
  out.name = in.string(in.field(j, "", "name"), "/name");
  const Json& g = in.object(in.field(j, "", "group"), "/group");
  in.only_keys(g, "/group", {"cyclic_factors"});
  out.group = in.uint_list(in.field(g, "/group", "cyclic_factors"), "/group/cyclic_factors");
  out.ring = detail::parse_ring(in, in.field(j, "", "ring"), "/ring");
  if (j.contains("module")) out.module = detail::parse_module(in, j["module"], "/module");
  if (j.contains("notes")) out.notes = in.string(j["notes"], "/notes");
  return out;
}

inline Instance parse_instance_text(const std::string& text, const std::string& source = "<input>") {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, source + ": " + e.what());
  }
  return parse_instance(j, source);
}

inline Json to_json(const RingDesc& desc) {
  using namespace ring_desc;
  return std::visit(
      [](const auto& node) -> Json {
        using T = std::decay_t<decltype(node)>;
        Json j;
        if constexpr (std::is_same_v<T, ZMod>) {
          j["type"] = "zmod";
          j["n"] = node.n;
        } else if constexpr (std::is_same_v<T, GroupAlgebra>) {
          j["type"] = "group_algebra";
          j["p"] = node.p;
        } else if constexpr (std::is_same_v<T, TruncatedPoly>) {
          j["type"] = "truncated_poly";
          j["p"] = node.p;
          j["d"] = node.d;
          j["degree"] = node.degree;
        } else if constexpr (std::is_same_v<T, Product>) {
          j["type"] = "product";
          j["factors"] = Json::array();
          for (const auto& f : node.factors) j["factors"].push_back(to_json(f));
        } else if constexpr (std::is_same_v<T, Tables>) {
          j["type"] = "tables";
          j["size"] = node.size;
          j["add"] = detail::matrix_json(node.add);
          j["mul"] = detail::matrix_json(node.mul);
          j["zero"] = node.zero;
          j["one"] = node.one;
          j["components"] = detail::matrix_json(node.components);
          if (!node.labels.empty()) j["labels"] = node.labels;
        } else {
          j["type"] = "quotient";
          j["ring"] = to_json(*node.ring);
          j["generators"] = node.generators;
        }
        return j;
      },
      desc.node);
}

inline Json to_json(const ModuleDesc& desc) {
  using namespace module_desc;
  return std::visit(
      [](const auto& node) -> Json {
        using T = std::decay_t<decltype(node)>;
        Json j;
        if constexpr (std::is_same_v<T, Self>) {
          j["type"] = "self";
          if (!node.shift.empty()) j["shift"] = node.shift;
        } else if constexpr (std::is_same_v<T, ScalarMod>) {
          j["type"] = "scalar_mod";
          j["factors"] = node.factors;
          j["degrees"] = detail::matrix_json(node.degrees);
        } else if constexpr (std::is_same_v<T, module_desc::Tables>) {
          j["type"] = "tables";
          if (!node.factors.empty()) {
            j["factors"] = node.factors;
          } else {
            j["size"] = node.size;
            j["add"] = detail::matrix_json(node.add);
          }
          j["action"] = detail::matrix_json(node.action);
          j["zero"] = node.zero;
          if (!node.degrees.empty()) {
            j["degrees"] = detail::matrix_json(node.degrees);
          } else {
            j["components"] = detail::matrix_json(node.components);
          }
          if (!node.labels.empty()) j["labels"] = node.labels;
        } else if constexpr (std::is_same_v<T, module_desc::Quotient>) {
          j["type"] = "quotient";
          j["module"] = to_json(*node.module);
          j["generators"] = node.generators;
        } else {
          j["type"] = "direct_sum";
          j["summands"] = Json::array();
          for (const auto& s : node.summands) j["summands"].push_back(to_json(s));
        }
        return j;
      },
      desc.node);
}

inline Json to_json(const Instance& inst) {
  Json j;
  j["name"] = inst.name;
  j["group"]["cyclic_factors"] = inst.group;
  j["ring"] = to_json(inst.ring);
  if (inst.module) j["module"] = to_json(*inst.module);
  if (!inst.notes.empty()) j["notes"] = inst.notes;
  return j;
}

inline std::string serialize_instance(const Instance& inst) { return to_json(inst).dump(2) + "\n"; }

/// Builds and validates the ring and module. Algebra errors are rethrown as
/// ValidationError naming the failing part.
inline LoadedInstance load_instance(const Instance& inst, const Limits& limits = {}) {
  LoadedInstance out{inst, nullptr, nullptr};
  std::string part = "/group";
  try {
    FiniteAbelianGroup group(inst.group);
    part = "/ring";
    out.ring = std::make_shared<const GradedRing>(build_ring(inst.ring, group, limits));
    if (inst.module) {
      part = "/module";
      out.module = std::make_shared<const GradedModule>(build_module(*inst.module, out.ring, limits));
    }
  } catch (const Error& e) {
    throw Error(ErrorKind::ValidationError, inst.name + ": " + part + ": " + e.what());
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::IOError, "cannot open " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

inline Instance read_instance_file(const std::string& path) { return parse_instance_text(read_file(path), path); }

inline LoadedInstance load_instance_file(const std::string& path, const Limits& limits = {}) {
  return load_instance(read_instance_file(path), limits);
}

}  // namespace gradedspec

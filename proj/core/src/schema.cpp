#include "sympres/io/schema.hpp"

#include <map>

#include "sympres/error.hpp"

namespace sympres {

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>> &embedded_schemas();
}

namespace {

using nlohmann::json;

const std::map<std::string, json, std::less<>> &registry()
{
  static const auto reg = [] {
    std::map<std::string, json, std::less<>> m;
    for (const auto &[name, text] : detail::embedded_schemas())
      m.emplace(std::string(name), json::parse(text));
    return m;
  }();
  return reg;
}

bool has_type(const json &doc, const std::string &t)
{
  if (t == "object") return doc.is_object();
  if (t == "array") return doc.is_array();
  if (t == "string") return doc.is_string();
  if (t == "integer") return doc.is_number_integer();
  if (t == "number") return doc.is_number();
  if (t == "boolean") return doc.is_boolean();
  if (t == "null") return doc.is_null();
  throw Error(ErrorCode::ParseError, "unknown schema type " + t);
}

std::string check(const json &doc, const json &s, const json &root, const std::string &path);

const json &resolve(const std::string &ref, const json &root, const json *&new_root)
{
  if (ref.rfind("#/", 0) == 0) {
    new_root = &root;
    return root.at(json::json_pointer(ref.substr(1)));
  }
  const json &target = schema(ref);
  new_root = &target;
  return target;
}

std::string check(const json &doc, const json &s, const json &root, const std::string &path)
{
  if (auto it = s.find("$ref"); it != s.end()) {
    const json *r = nullptr;
    const json &target = resolve(it->get<std::string>(), root, r);
    return check(doc, target, *r, path);
  }
  if (auto it = s.find("type"); it != s.end()) {
    bool ok = false;
    if (it->is_string())
      ok = has_type(doc, it->get<std::string>());
    else
      for (const auto &t : *it)
        ok = ok || has_type(doc, t.get<std::string>());
    if (!ok)
      return path + ": expected type " + it->dump();
  }
  if (auto it = s.find("const"); it != s.end() && doc != *it)
    return path + ": expected " + it->dump();
  if (auto it = s.find("enum"); it != s.end()) {
    bool ok = false;
    for (const auto &v : *it)
      ok = ok || doc == v;
    if (!ok)
      return path + ": value not in " + it->dump();
  }
  if (auto it = s.find("minimum"); it != s.end() && doc.is_number() && doc.get<double>() < it->get<double>())
    return path + ": below minimum " + it->dump();
  if (doc.is_object()) {
    if (auto it = s.find("required"); it != s.end())
      for (const auto &k : *it)
        if (!doc.contains(k.get<std::string>()))
          return path + ": missing " + k.get<std::string>();
    const json *props = s.contains("properties") ? &s.at("properties") : nullptr;
    bool closed = s.contains("additionalProperties") && s.at("additionalProperties") == false;
    for (const auto &[k, v] : doc.items()) {
      if (props && props->contains(k)) {
        if (auto e = check(v, props->at(k), root, path + "." + k); !e.empty())
          return e;
      } else if (closed) {
        return path + ": unexpected property " + k;
      }
    }
  }
  if (doc.is_array()) {
    if (auto it = s.find("minItems"); it != s.end() && doc.size() < it->get<std::size_t>())
      return path + ": fewer than " + it->dump() + " items";
    if (auto it = s.find("items"); it != s.end())
      for (std::size_t i = 0; i < doc.size(); ++i)
        if (auto e = check(doc[i], *it, root, path + "[" + std::to_string(i) + "]"); !e.empty())
          return e;
  }
  if (auto it = s.find("oneOf"); it != s.end()) {
    int hits = 0;
    std::string last;
    for (const auto &alt : *it) {
      auto e = check(doc, alt, root, path);
      if (e.empty())
        ++hits;
      else
        last = e;
    }
    if (hits != 1)
      return hits == 0 ? last : path + ": matches more than one alternative";
  }
  return {};
}

} // namespace

std::vector<std::string> schema_names()
{
  std::vector<std::string> out;
  for (const auto &[k, v] : registry())
    out.push_back(k);
  return out;
}

const json &schema(std::string_view name)
{
  auto it = registry().find(name);
  if (it == registry().end())
    throw Error(ErrorCode::ParseError, "unknown schema " + std::string(name));
  return it->second;
}

std::string validate(const json &doc, std::string_view schema_name)
{
  const json &s = schema(schema_name);
  return check(doc, s, s, "$");
}

void require_valid(const json &doc, std::string_view schema_name)
{
  if (auto e = validate(doc, schema_name); !e.empty())
    throw Error(ErrorCode::AssertionFailure, std::string(schema_name) + ": " + e);
}

} // namespace sympres

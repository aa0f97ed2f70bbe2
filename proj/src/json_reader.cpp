#include "json_reader.hpp"

#include <algorithm>

#include "railsched/io.hpp"

namespace railsched::detail {

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    const std::size_t end = std::min<std::size_t>(
        e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t b = 0; b < end; ++b) {
      if (text[b] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (auto colon = what.rfind(": "); colon != std::string::npos)
      what = what.substr(colon + 2);
    throw ParseError("line " + std::to_string(line) + ", column " +
                         std::to_string(column),
                     "malformed JSON: " + what);
  }
}

ObjectReader::ObjectReader(const Json& value, std::string path)
    : value_(value), path_(std::move(path)) {
  if (!value_.is_object())
    throw ParseError(path_.empty() ? "document" : path_, "expected an object");
}

std::string ObjectReader::field_path(const std::string& key) const {
  return path_.empty() ? key : path_ + "." + key;
}

bool ObjectReader::has(const std::string& key) const {
  return value_.contains(key);
}

const Json& ObjectReader::require(const std::string& key) {
  auto it = value_.find(key);
  if (it == value_.end())
    throw ParseError(field_path(key), "missing required field");
  seen_.insert(key);
  return *it;
}

const Json& ObjectReader::child(const std::string& key) { return require(key); }

std::int64_t as_integer(const Json& value, const std::string& path,
                        std::int64_t lo, std::int64_t hi) {
  if (value.is_number_unsigned()) {
    const auto v = value.get<std::uint64_t>();
    if (v > static_cast<std::uint64_t>(hi))
      throw ParseError(path, "integer out of range");
    return static_cast<std::int64_t>(v);
  }
  if (!value.is_number_integer())
    throw ParseError(path, "expected an integer");
  const auto v = value.get<std::int64_t>();
  if (v < lo || v > hi) throw ParseError(path, "integer out of range");
  return v;
}

std::int64_t ObjectReader::integer(const std::string& key, std::int64_t lo,
                                   std::int64_t hi) {
  return as_integer(require(key), field_path(key), lo, hi);
}

std::optional<std::int64_t> ObjectReader::optional_integer(
    const std::string& key, std::int64_t lo, std::int64_t hi) {
  if (!has(key)) return std::nullopt;
  const Json& v = require(key);
  if (v.is_null()) return std::nullopt;
  return as_integer(v, field_path(key), lo, hi);
}

double ObjectReader::number(const std::string& key) {
  const Json& v = require(key);
  if (!v.is_number()) throw ParseError(field_path(key), "expected a number");
  return v.get<double>();
}

bool ObjectReader::boolean(const std::string& key) {
  const Json& v = require(key);
  if (!v.is_boolean()) throw ParseError(field_path(key), "expected a boolean");
  return v.get<bool>();
}

std::string ObjectReader::string(const std::string& key) {
  const Json& v = require(key);
  if (!v.is_string()) throw ParseError(field_path(key), "expected a string");
  return v.get<std::string>();
}

void ObjectReader::finish() const {
  for (const auto& [key, unused] : value_.items())
    if (!seen_.count(key)) throw ParseError(field_path(key), "unknown field");
}

void expect_header(ObjectReader& reader, const std::string& kind) {
  const std::int64_t version = reader.integer("version", kKmMin, kKmMax);
  if (version != kFormatVersion)
    throw ParseError("version", "unsupported version " +
                                    std::to_string(version) + " (expected " +
                                    std::to_string(kFormatVersion) + ")");
  const std::string actual = reader.string("kind");
  if (actual != kind)
    throw ParseError("kind", "expected \"" + kind + "\", got \"" + actual +
                                 "\"");
}

}  // namespace railsched::detail

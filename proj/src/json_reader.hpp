#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <string>

#include "json.hpp"
#include "railsched/errors.hpp"

namespace railsched::detail {

using Json = nlohmann::json;

// Parses a complete JSON document, reporting syntax errors by line and
// column.
Json parse_json(const std::string& text);

// Field access on one JSON object that rejects unknown fields and values of
// the wrong type. Every error names the field path.
class ObjectReader {
 public:
  ObjectReader(const Json& value, std::string path);

  bool has(const std::string& key) const;
  const Json& child(const std::string& key);
  std::string field_path(const std::string& key) const;

  std::int64_t integer(const std::string& key, std::int64_t lo,
                       std::int64_t hi);
  std::optional<std::int64_t> optional_integer(const std::string& key,
                                               std::int64_t lo,
                                               std::int64_t hi);
  double number(const std::string& key);
  bool boolean(const std::string& key);
  std::string string(const std::string& key);

  // Rejects any field that was not read.
  void finish() const;

  const std::string& path() const { return path_; }

 private:
  const Json& require(const std::string& key);

  const Json& value_;
  std::string path_;
  std::set<std::string> seen_;
};

std::int64_t as_integer(const Json& value, const std::string& path,
                        std::int64_t lo, std::int64_t hi);

inline constexpr std::int64_t kIntMin = std::numeric_limits<int>::min();
inline constexpr std::int64_t kIntMax = std::numeric_limits<int>::max();
inline constexpr std::int64_t kKmMin = std::numeric_limits<std::int64_t>::min();
inline constexpr std::int64_t kKmMax = std::numeric_limits<std::int64_t>::max();

// Checks "version" and "kind" of a top-level document.
void expect_header(ObjectReader& reader, const std::string& kind);

}  // namespace railsched::detail

#pragma once

#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>
#include <variform/types.hpp>

namespace variform::cli {

using nlohmann::json;

/// Input error located by a JSON pointer ("/metric/kind").
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string where, const std::string& what)
      : std::runtime_error((where.empty() ? std::string("/") : where) + ": " + what),
        where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

class Value;

/// Read-only view of a JSON object that remembers which keys were consumed,
/// so that finish() can reject typos.
class Object {
 public:
  Object(const json& j, std::string path);

  const std::string& path() const noexcept { return path_; }
  bool has(const std::string& key) const;
  Value at(const std::string& key);
  std::optional<Value> find(const std::string& key);
  void finish() const;

 private:
  const json* j_;
  std::string path_;
  std::shared_ptr<std::set<std::string>> used_;
};

class Value {
 public:
  Value(const json& j, std::string path) : j_(&j), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }
  const json& raw() const noexcept { return *j_; }
  [[noreturn]] void error(const std::string& what) const { throw SchemaError(path_, what); }

  Object object() const;
  std::vector<Value> array() const;
  double number() const;
  double positive() const;
  int integer() const;
  int integer_at_least(int lo) const;
  bool boolean() const;
  std::string string() const;
  Vec vector() const;
  std::vector<double> numbers() const;
  Mat matrix() const;

 private:
  const json* j_;
  std::string path_;
};

/// "line L, column C" for a byte offset into `text`.
std::string describe_offset(const std::string& text, std::size_t offset);

}  // namespace variform::cli

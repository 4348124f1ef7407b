#include "json_reader.hpp"

#include <cmath>

namespace variform::cli {

namespace {

std::string escape_pointer(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

}  // namespace

Object::Object(const json& j, std::string path)
    : j_(&j), path_(std::move(path)), used_(std::make_shared<std::set<std::string>>()) {
  if (!j.is_object()) throw SchemaError(path_, "expected an object");
}

bool Object::has(const std::string& key) const { return j_->contains(key); }

Value Object::at(const std::string& key) {
  auto v = find(key);
  if (!v) throw SchemaError(path_, "missing required field '" + key + "'");
  return *v;
}

std::optional<Value> Object::find(const std::string& key) {
  const auto it = j_->find(key);
  if (it == j_->end()) return std::nullopt;
  used_->insert(key);
  return Value(*it, path_ + "/" + escape_pointer(key));
}

void Object::finish() const {
  for (const auto& [key, _] : j_->items()) {
    if (!used_->count(key)) throw SchemaError(path_ + "/" + escape_pointer(key), "unknown field");
  }
}

Object Value::object() const { return Object(*j_, path_); }

std::vector<Value> Value::array() const {
  if (!j_->is_array()) error("expected an array");
  std::vector<Value> out;
  for (std::size_t i = 0; i < j_->size(); ++i) out.emplace_back((*j_)[i], path_ + "/" + std::to_string(i));
  return out;
}

double Value::number() const {
  if (!j_->is_number()) error("expected a number");
  const double v = j_->get<double>();
  if (!std::isfinite(v)) error("expected a finite number");
  return v;
}

double Value::positive() const {
  const double v = number();
  if (!(v > 0.0)) error("expected a positive number");
  return v;
}

int Value::integer() const {
  if (!j_->is_number_integer()) error("expected an integer");
  const auto v = j_->get<long long>();
  if (v < -1000000 || v > 1000000) error("integer out of range");
  return static_cast<int>(v);
}

int Value::integer_at_least(int lo) const {
  const int v = integer();
  if (v < lo) error("expected an integer >= " + std::to_string(lo));
  return v;
}

bool Value::boolean() const {
  if (!j_->is_boolean()) error("expected true or false");
  return j_->get<bool>();
}

std::string Value::string() const {
  if (!j_->is_string()) error("expected a string");
  return j_->get<std::string>();
}

std::vector<double> Value::numbers() const {
  std::vector<double> out;
  for (const auto& v : array()) out.push_back(v.number());
  return out;
}

Vec Value::vector() const {
  const auto xs = numbers();
  if (xs.empty()) error("expected a non-empty array of numbers");
  return Eigen::Map<const Vec>(xs.data(), static_cast<Eigen::Index>(xs.size()));
}

Mat Value::matrix() const {
  const auto rows = array();
  if (rows.empty()) error("expected a non-empty array of rows");
  std::vector<Vec> vs;
  for (const auto& r : rows) vs.push_back(r.vector());
  Mat M(static_cast<Eigen::Index>(vs.size()), vs.front().size());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i].size() != M.cols()) rows[i].error("rows have different lengths");
    M.row(static_cast<Eigen::Index>(i)) = vs[i].transpose();
  }
  return M;
}

std::string describe_offset(const std::string& text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace variform::cli

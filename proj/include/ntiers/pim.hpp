#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ntiers::pim {

enum class Direction { In, Out };

inline std::string_view to_string(Direction direction) {
  return direction == Direction::In ? "in" : "out";
}

struct Parameter {
  std::string name;
  std::string type;  // classifier name, resolved within the owning package
  Direction direction = Direction::In;

  bool operator==(const Parameter&) const = default;
};

struct Operation {
  std::string name;
  std::vector<Parameter> parameters;

  bool operator==(const Operation&) const = default;
};

struct Attribute {
  std::string name;
  std::string type;  // classifier name, resolved within the owning package

  bool operator==(const Attribute&) const = default;
};

struct Class {
  std::string name;
  std::vector<Attribute> attributes;
  std::vector<Operation> operations;

  bool operator==(const Class&) const = default;
};

struct DataType {
  std::string name;

  bool operator==(const DataType&) const = default;
};

/// Root of the source model. Declaration order of every list is significant
/// and preserved through parsing, validation, and transformation.
struct Package {
  std::string name;
  std::vector<Class> classes;
  std::vector<DataType> datatypes;

  bool operator==(const Package&) const = default;
};

using Model = Package;

}  // namespace ntiers::pim

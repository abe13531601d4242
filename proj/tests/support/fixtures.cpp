#include "support/fixtures.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include "ntiers/error.hpp"

namespace ntiers::testing {

namespace fs = std::filesystem;

fs::path fixture_dir() { return fs::path(NTIERS_FIXTURE_DIR); }

fs::path fixture_path(std::string_view name) { return fixture_dir() / name; }

std::string read_text_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(errc::io_failure, "cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return std::move(buffer).str();
}

std::string read_fixture(std::string_view name) {
  return read_text_file(fixture_path(name));
}

fs::path fresh_dir(std::string_view name) {
  const fs::path dir = fs::current_path() / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

namespace {

pim::Operation crud_op(const std::string& verb, const std::string& class_name) {
  if (verb == "create" || verb == "update") {
    return {verb, {{"item", class_name, pim::Direction::In}}};
  }
  if (verb == "remove") {
    return {verb, {{"id", "Integer", pim::Direction::In}}};
  }
  if (verb == "display") {
    return {verb, {{"found", class_name, pim::Direction::Out}}};
  }
  return {verb, {}};
}

pim::Class crud_class(std::string name, std::vector<pim::Attribute> attributes) {
  pim::Class result;
  result.attributes = std::move(attributes);
  for (const char* verb : {"create", "remove", "update", "display"}) {
    result.operations.push_back(crud_op(verb, name));
  }
  result.name = std::move(name);
  return result;
}

}  // namespace

pim::Model laboratory_pim() {
  pim::Model model;
  model.name = "laboratoire";
  model.classes = {
      crud_class("Patient", {{"id", "Integer"}, {"fullName", "String"}, {"birthDate", "Date"}}),
      crud_class("Request", {{"id", "Integer"}, {"patient", "Patient"}, {"requestDate", "Date"}}),
      crud_class("Result", {{"id", "Integer"}, {"request", "Request"}, {"value", "String"}}),
      crud_class("Sample", {{"id", "Integer"}, {"label", "String"}, {"takenOn", "Date"}}),
  };
  model.datatypes = {{"Integer"}, {"String"}, {"Date"}};
  return model;
}

pim::Class make_class(std::string name, std::vector<std::string> operation_names,
                      std::vector<pim::Attribute> attributes) {
  pim::Class result;
  result.name = std::move(name);
  result.attributes = std::move(attributes);
  for (std::string& op_name : operation_names) {
    pim::Operation op;
    op.name = std::move(op_name);
    op.parameters = {{"id", "Integer", pim::Direction::In}};
    result.operations.push_back(std::move(op));
  }
  return result;
}

pim::Model make_model(std::string name, std::vector<pim::Class> classes) {
  pim::Model model;
  model.name = std::move(name);
  model.classes = std::move(classes);
  model.datatypes = {{"Integer"}, {"String"}, {"Date"}};
  return model;
}

}  // namespace ntiers::testing

#include "ntiers/validate.hpp"

#include <algorithm>

#include "doctest.h"
#include "ntiers/transform.hpp"
#include "support/fixtures.hpp"

using namespace ntiers;
using ntiers::engine::transform;

namespace {

bool has_diag(const ValidationReport& report, const char* code, const char* path) {
  return std::any_of(report.diagnostics.begin(), report.diagnostics.end(),
                     [&](const Diagnostic& d) { return d.code == code && d.path.str() == path; });
}

}  // namespace

TEST_CASE("a well-formed source model validates cleanly") {
  CHECK(validate_pim(testing::laboratory_pim()).ok());
  CHECK(validate_pim(testing::make_model("empty", {})).ok());
}

TEST_CASE("source classifier names must be unique across classes and datatypes") {
  pim::Model model = testing::make_model("p", {testing::make_class("Patient", {"create"}),
                                               testing::make_class("Patient", {"remove"})});
  auto report = validate_pim(model);
  CHECK_FALSE(report.ok());
  CHECK(has_diag(report, diag::duplicate_classifier_name, "//@class.1"));

  pim::Model shadowing = testing::make_model("p", {testing::make_class("Integer", {})});
  CHECK(has_diag(validate_pim(shadowing), diag::duplicate_classifier_name, "//@datatype.0"));
}

TEST_CASE("source identifiers are checked per element") {
  pim::Model model = testing::make_model("p", {testing::make_class("patient", {})});
  CHECK(has_diag(validate_pim(model), diag::invalid_identifier, "//@class.0"));

  model = testing::make_model("p", {testing::make_class("Patient", {"9bad"})});
  CHECK(has_diag(validate_pim(model), diag::invalid_identifier, "//@class.0/@operation.0"));

  model = testing::make_model("bad name", {});
  CHECK(has_diag(validate_pim(model), diag::invalid_identifier, ""));

  model = testing::make_model("p", {testing::make_class("Patient", {}, {{"full name", "String"}})});
  CHECK(has_diag(validate_pim(model), diag::invalid_identifier, "//@class.0/@attribute.0"));
}

TEST_CASE("attribute and parameter types must name a classifier of the package") {
  pim::Model model =
      testing::make_model("p", {testing::make_class("Patient", {}, {{"id", "Uuid"}})});
  CHECK(has_diag(validate_pim(model), diag::unresolved_type_ref, "//@class.0/@attribute.0"));

  // Class-typed attributes resolve even when the class comes later.
  model = testing::make_model("p", {testing::make_class("Request", {}, {{"res", "Result"}}),
                                    testing::make_class("Result", {})});
  CHECK(validate_pim(model).ok());

  model = testing::make_model("p", {testing::make_class("Patient", {"create"})});
  model.classes[0].operations[0].parameters[0].type = "Missing";
  CHECK(has_diag(validate_pim(model), diag::unresolved_type_ref,
                 "//@class.0/@operation.0/@parameter.0"));
}

TEST_CASE("duplicate member names are reported at the duplicate") {
  pim::Model model = testing::make_model("p", {testing::make_class("Patient", {})});
  model.classes[0].attributes = {{"id", "Integer"}, {"id", "String"}};
  CHECK(has_diag(validate_pim(model), diag::duplicate_attribute_name, "//@class.0/@attribute.1"));

  model = testing::make_model("p", {testing::make_class("Patient", {"create", "create"})});
  CHECK(has_diag(validate_pim(model), diag::duplicate_operation_name, "//@class.0/@operation.1"));

  model = testing::make_model("p", {testing::make_class("Patient", {"create"})});
  model.classes[0].operations[0].parameters = {{"id", "Integer", pim::Direction::In},
                                               {"id", "Integer", pim::Direction::Out}};
  CHECK(has_diag(validate_pim(model), diag::duplicate_parameter_name,
                 "//@class.0/@operation.0/@parameter.1"));
}

TEST_CASE("a transformed model validates cleanly") {
  CHECK(validate_psm(transform(testing::laboratory_pim()).psm).ok());
  CHECK(validate_psm(transform(testing::make_model("empty", {})).psm).ok());
}

TEST_CASE("broken interface links are caught from either side") {
  psm::Model model = transform(testing::laboratory_pim()).psm;

  SUBCASE("dao points at a missing implementation") {
    model.dao.daos[0].implemented_by = 99;
    CHECK(has_diag(validate_psm(model), diag::unresolved_ref, "//@dPack/@dao.0"));
  }
  SUBCASE("dao points at an implementation that does not point back") {
    model.dao.daos[0].implemented_by = model.dao.daos[1].implemented_by;
    auto report = validate_psm(model);
    CHECK(has_diag(report, diag::asymmetric_link, "//@dPack/@dao.0"));
  }
  SUBCASE("implementation lists an interface that does not point back") {
    model.business.serviceimpls[0].interfaces.push_back(1);
    CHECK(has_diag(validate_psm(model), diag::asymmetric_link, "//@bPack/@serviceimpl.0"));
  }
  SUBCASE("pojo and dto must agree") {
    model.dao.pojos[0].dto = std::nullopt;
    CHECK(has_diag(validate_psm(model), diag::asymmetric_link, "//@bPack/@dto.0"));
  }
}

TEST_CASE("dto attribute lists must equal their pojo's") {
  psm::Model model = transform(testing::laboratory_pim()).psm;
  model.business.dtos[2].attributes[0].type = "String";
  CHECK(has_diag(validate_psm(model), diag::dto_pojo_mismatch, "//@bPack/@dto.2"));
}

TEST_CASE("generated names follow the published suffix conventions") {
  psm::Model model = transform(testing::laboratory_pim()).psm;

  SUBCASE("pages end in Page.jsp") {
    model.ui.view.pages[0].name = "DisplayPatient.html";
    CHECK(has_diag(validate_psm(model), diag::naming_convention, "//@uPack/@vPack/@jsp.0"));
  }
  SUBCASE("actions end in Action") {
    model.ui.controller.mapping.actions[1].name = "CreatePatient";
    CHECK(has_diag(validate_psm(model), diag::naming_convention,
                   "//@uPack/@cPack/@actionmapping/@action.1"));
  }
}

TEST_CASE("names must be unique within each feature list") {
  psm::Model model = transform(testing::laboratory_pim()).psm;
  model.dao.pojos[3].name = model.dao.pojos[0].name;
  CHECK(has_diag(validate_psm(model), diag::duplicate_name, "//@dPack/@pojo.3"));

  psm::Model pages = transform(testing::laboratory_pim()).psm;
  pages.ui.view.pages[1].name = pages.ui.view.pages[0].name;
  CHECK(has_diag(validate_psm(pages), diag::duplicate_name, "//@uPack/@vPack/@jsp.1"));
}

TEST_CASE("form link targets must be in range") {
  psm::Model model = transform(testing::laboratory_pim()).psm;
  model.ui.controller.mapping.forms[0].input = 999;
  CHECK(has_diag(validate_psm(model), diag::unresolved_ref,
                 "//@uPack/@cPack/@actionmapping/@form.0"));

  psm::Model actions = transform(testing::laboratory_pim()).psm;
  actions.ui.controller.mapping.actions[0].forward = psm::ActionForward{999};
  CHECK(has_diag(validate_psm(actions), diag::unresolved_ref,
                 "//@uPack/@cPack/@actionmapping/@action.0"));
}

TEST_CASE("severity labels render as their diagnostic prefix") {
  CHECK(to_string(Severity::Error) == "error");
  CHECK(to_string(Severity::Warning) == "warning");
}

#include "ntiers/validate.hpp"

#include <set>
#include <string>

#include "ntiers/names.hpp"

namespace ntiers {

std::string_view to_string(Severity severity) {
  return severity == Severity::Error ? "error" : "warning";
}

namespace {

FragmentPath::Segment at(std::string_view feature, std::size_t index) {
  return {std::string(feature), index};
}

FragmentPath::Segment at(std::string_view feature) { return {std::string(feature), std::nullopt}; }

class Reporter {
 public:
  explicit Reporter(ValidationReport& report) : report_(report) {}

  void error(FragmentPath path, const char* code, std::string message) {
    report_.diagnostics.push_back({Severity::Error, std::move(path), code, std::move(message)});
  }

 private:
  ValidationReport& report_;
};

void check_identifier(Reporter& reporter, const FragmentPath& path, const std::string& name,
                      std::string_view what) {
  if (!is_identifier(name)) {
    reporter.error(path, diag::invalid_identifier,
                   std::string(what) + " name \"" + name + "\" is not an identifier");
  }
}

FragmentPath extend(const FragmentPath& base, FragmentPath::Segment segment) {
  FragmentPath path = base;
  path /= std::move(segment);
  return path;
}

}  // namespace

ValidationReport validate_pim(const pim::Model& model) {
  ValidationReport report;
  Reporter reporter(report);
  FragmentPath root;

  check_identifier(reporter, root, model.name, "package");

  std::set<std::string> classifiers;
  auto check_classifier_unique = [&](const FragmentPath& path, const std::string& name) {
    if (!classifiers.insert(name).second) {
      reporter.error(path, diag::duplicate_classifier_name,
                     "classifier name \"" + name + "\" is already used in the package");
    }
  };
  auto type_resolves = [&](const std::string& type) { return classifiers.count(type) != 0; };

  // Classifier names first, so forward type references resolve.
  for (std::size_t c = 0; c < model.classes.size(); ++c) {
    check_classifier_unique(extend(root, at("class", c)), model.classes[c].name);
  }
  for (std::size_t d = 0; d < model.datatypes.size(); ++d) {
    const FragmentPath path = extend(root, at("datatype", d));
    check_identifier(reporter, path, model.datatypes[d].name, "datatype");
    check_classifier_unique(path, model.datatypes[d].name);
  }

  for (std::size_t c = 0; c < model.classes.size(); ++c) {
    const pim::Class& cls = model.classes[c];
    const FragmentPath class_path = extend(root, at("class", c));
    if (!is_class_identifier(cls.name)) {
      reporter.error(class_path, diag::invalid_identifier,
                     "class name \"" + cls.name + "\" must be an identifier with an uppercase first letter");
    }

    std::set<std::string> attribute_names;
    for (std::size_t a = 0; a < cls.attributes.size(); ++a) {
      const pim::Attribute& attribute = cls.attributes[a];
      const FragmentPath path = extend(class_path, at("attribute", a));
      check_identifier(reporter, path, attribute.name, "attribute");
      if (!attribute_names.insert(attribute.name).second) {
        reporter.error(path, diag::duplicate_attribute_name,
                       "attribute name \"" + attribute.name + "\" is already used in class " + cls.name);
      }
      if (!type_resolves(attribute.type)) {
        reporter.error(path, diag::unresolved_type_ref,
                       "attribute type \"" + attribute.type + "\" does not name a classifier in the package");
      }
    }

    std::set<std::string> operation_names;
    for (std::size_t o = 0; o < cls.operations.size(); ++o) {
      const pim::Operation& operation = cls.operations[o];
      const FragmentPath op_path = extend(class_path, at("operation", o));
      check_identifier(reporter, op_path, operation.name, "operation");
      if (!operation_names.insert(operation.name).second) {
        reporter.error(op_path, diag::duplicate_operation_name,
                       "operation name \"" + operation.name + "\" is already used in class " + cls.name);
      }

      std::set<std::string> parameter_names;
      for (std::size_t p = 0; p < operation.parameters.size(); ++p) {
        const pim::Parameter& parameter = operation.parameters[p];
        const FragmentPath path = extend(op_path, at("parameter", p));
        check_identifier(reporter, path, parameter.name, "parameter");
        if (!parameter_names.insert(parameter.name).second) {
          reporter.error(path, diag::duplicate_parameter_name,
                         "parameter name \"" + parameter.name + "\" is already used in operation " +
                             operation.name);
        }
        if (!type_resolves(parameter.type)) {
          reporter.error(path, diag::unresolved_type_ref,
                         "parameter type \"" + parameter.type + "\" does not name a classifier in the package");
        }
      }
    }
  }
  return report;
}

namespace {

template <typename T>
void check_unique_names(Reporter& reporter, const FragmentPath& base, std::string_view feature,
                        const std::vector<T>& elements) {
  std::set<std::string> names;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!names.insert(elements[i].name).second) {
      reporter.error(extend(base, at(feature, i)), diag::duplicate_name,
                     std::string(feature) + " name \"" + elements[i].name + "\" is already used");
    }
  }
}

bool in_range(std::size_t index, std::size_t size) { return index < size; }

bool ends_with(const std::string& text, std::string_view suffix) {
  return text.size() >= suffix.size() && text.compare(text.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

ValidationReport validate_psm(const psm::Model& model) {
  ValidationReport report;
  Reporter reporter(report);
  FragmentPath root;

  const FragmentPath dao_path = extend(root, at("dPack"));
  const FragmentPath business_path = extend(root, at("bPack"));
  const FragmentPath view_path = extend(extend(root, at("uPack")), at("vPack"));
  const FragmentPath mapping_path = extend(extend(extend(root, at("uPack")), at("cPack")), at("actionmapping"));

  const psm::DaoPackage& dao = model.dao;
  const psm::BusinessPackage& business = model.business;
  const psm::ViewPackage& view = model.ui.view;
  const psm::ActionMapping& mapping = model.ui.controller.mapping;

  check_unique_names(reporter, dao_path, "dao", dao.daos);
  check_unique_names(reporter, dao_path, "pojo", dao.pojos);
  check_unique_names(reporter, dao_path, "daoimpl", dao.daoimpls);
  check_unique_names(reporter, business_path, "services", business.services);
  check_unique_names(reporter, business_path, "serviceimpl", business.serviceimpls);
  check_unique_names(reporter, business_path, "dto", business.dtos);
  check_unique_names(reporter, view_path, "jsp", view.pages);
  check_unique_names(reporter, mapping_path, "action", mapping.actions);
  check_unique_names(reporter, mapping_path, "form", mapping.forms);

  // dao <-> daoimpl symmetry.
  for (std::size_t i = 0; i < dao.daos.size(); ++i) {
    const psm::Dao& iface = dao.daos[i];
    const FragmentPath path = extend(dao_path, at("dao", i));
    if (!iface.implemented_by) continue;
    if (!in_range(*iface.implemented_by, dao.daoimpls.size())) {
      reporter.error(path, diag::unresolved_ref, "implementedBy index " + std::to_string(*iface.implemented_by) +
                                                     " is out of range");
      continue;
    }
    const psm::DaoImpl& impl = dao.daoimpls[*iface.implemented_by];
    bool back = false;
    for (psm::Index j : impl.interfaces) back = back || j == i;
    if (!back) {
      reporter.error(path, diag::asymmetric_link,
                     "dao \"" + iface.name + "\" names \"" + impl.name + "\" as implementation, but \"" +
                         impl.name + "\" does not list it in interfaces");
    }
  }
  for (std::size_t i = 0; i < dao.daoimpls.size(); ++i) {
    const psm::DaoImpl& impl = dao.daoimpls[i];
    const FragmentPath path = extend(dao_path, at("daoimpl", i));
    for (psm::Index j : impl.interfaces) {
      if (!in_range(j, dao.daos.size())) {
        reporter.error(path, diag::unresolved_ref, "interfaces index " + std::to_string(j) + " is out of range");
        continue;
      }
      if (dao.daos[j].implemented_by != i) {
        reporter.error(path, diag::asymmetric_link,
                       "daoimpl \"" + impl.name + "\" lists \"" + dao.daos[j].name +
                           "\" in interfaces, but that dao does not point back");
      }
    }
  }

  // services <-> serviceimpl symmetry.
  for (std::size_t i = 0; i < business.services.size(); ++i) {
    const psm::Service& service = business.services[i];
    const FragmentPath path = extend(business_path, at("services", i));
    if (!service.implemented_by) continue;
    if (!in_range(*service.implemented_by, business.serviceimpls.size())) {
      reporter.error(path, diag::unresolved_ref,
                     "implementedBy index " + std::to_string(*service.implemented_by) + " is out of range");
      continue;
    }
    const psm::ServiceImpl& impl = business.serviceimpls[*service.implemented_by];
    bool back = false;
    for (psm::Index j : impl.interfaces) back = back || j == i;
    if (!back) {
      reporter.error(path, diag::asymmetric_link,
                     "services \"" + service.name + "\" names \"" + impl.name +
                         "\" as implementation, but \"" + impl.name + "\" does not list it in interfaces");
    }
  }
  for (std::size_t i = 0; i < business.serviceimpls.size(); ++i) {
    const psm::ServiceImpl& impl = business.serviceimpls[i];
    const FragmentPath path = extend(business_path, at("serviceimpl", i));
    for (psm::Index j : impl.interfaces) {
      if (!in_range(j, business.services.size())) {
        reporter.error(path, diag::unresolved_ref, "interfaces index " + std::to_string(j) + " is out of range");
        continue;
      }
      if (business.services[j].implemented_by != i) {
        reporter.error(path, diag::asymmetric_link,
                       "serviceimpl \"" + impl.name + "\" lists \"" + business.services[j].name +
                           "\" in interfaces, but that services element does not point back");
      }
    }
  }

  // pojo <-> dto symmetry and attribute equality.
  for (std::size_t i = 0; i < dao.pojos.size(); ++i) {
    const psm::Pojo& pojo = dao.pojos[i];
    const FragmentPath path = extend(dao_path, at("pojo", i));
    if (!pojo.dto) continue;
    if (!in_range(*pojo.dto, business.dtos.size())) {
      reporter.error(path, diag::unresolved_ref, "dto index " + std::to_string(*pojo.dto) + " is out of range");
      continue;
    }
    const psm::Dto& dto = business.dtos[*pojo.dto];
    if (dto.pojo != i) {
      reporter.error(path, diag::asymmetric_link,
                     "pojo \"" + pojo.name + "\" names \"" + dto.name + "\" as dto, but \"" + dto.name +
                         "\" does not point back");
    }
  }
  for (std::size_t i = 0; i < business.dtos.size(); ++i) {
    const psm::Dto& dto = business.dtos[i];
    const FragmentPath path = extend(business_path, at("dto", i));
    if (!dto.pojo) continue;
    if (!in_range(*dto.pojo, dao.pojos.size())) {
      reporter.error(path, diag::unresolved_ref, "pojos index " + std::to_string(*dto.pojo) + " is out of range");
      continue;
    }
    const psm::Pojo& pojo = dao.pojos[*dto.pojo];
    if (pojo.dto != i) {
      reporter.error(path, diag::asymmetric_link,
                     "dto \"" + dto.name + "\" names \"" + pojo.name + "\" as pojo, but \"" + pojo.name +
                         "\" does not point back");
    }
    if (dto.attributes != pojo.attributes) {
      reporter.error(path, diag::dto_pojo_mismatch,
                     "dto \"" + dto.name + "\" attributes differ from pojo \"" + pojo.name + "\" attributes");
    }
  }

  // Naming conventions for generated view/controller elements.
  for (std::size_t i = 0; i < view.pages.size(); ++i) {
    if (!ends_with(view.pages[i].name, "Page.jsp")) {
      reporter.error(extend(view_path, at("jsp", i)), diag::naming_convention,
                     "jsp name \"" + view.pages[i].name + "\" does not end in \"Page.jsp\"");
    }
  }
  for (std::size_t i = 0; i < mapping.actions.size(); ++i) {
    const psm::Action& action = mapping.actions[i];
    const FragmentPath path = extend(mapping_path, at("action", i));
    if (!ends_with(action.name, "Action")) {
      reporter.error(path, diag::naming_convention,
                     "action name \"" + action.name + "\" does not end in \"Action\"");
    }
    if (action.forward && !in_range(action.forward->target, view.pages.size())) {
      reporter.error(path, diag::unresolved_ref,
                     "forward index " + std::to_string(action.forward->target) + " is out of range");
    }
    if (action.form && !in_range(*action.form, mapping.forms.size())) {
      reporter.error(path, diag::unresolved_ref, "form index " + std::to_string(*action.form) + " is out of range");
    }
  }
  for (std::size_t i = 0; i < mapping.forms.size(); ++i) {
    const psm::ActionForm& form = mapping.forms[i];
    const FragmentPath path = extend(mapping_path, at("form", i));
    if (!in_range(form.input, view.pages.size())) {
      reporter.error(path, diag::unresolved_ref, "input index " + std::to_string(form.input) + " is out of range");
    }
    if (!in_range(form.attribute, mapping.actions.size())) {
      reporter.error(path, diag::unresolved_ref,
                     "attribute index " + std::to_string(form.attribute) + " is out of range");
    }
  }

  return report;
}

}  // namespace ntiers

#include "support/psm_oracle.hpp"

#include <cctype>
#include <optional>
#include <string>

namespace ntiers::testing {

namespace {

std::string verb_of(const std::string& name) {
  std::string lowered = name;
  for (char& c : lowered) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return lowered;
}

std::string stem_of(const std::string& op_name) {
  std::string stem = op_name;
  stem[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(stem[0])));
  return stem;
}

std::optional<psm::Index> page_named(const psm::ViewPackage& view, const std::string& name) {
  for (psm::Index i = 0; i < view.pages.size(); ++i) {
    if (view.pages[i].name == name) {
      return i;
    }
  }
  return std::nullopt;
}

std::vector<psm::Method> methods_of(const pim::Class& cls) {
  std::vector<psm::Method> methods;
  for (const pim::Operation& op : cls.operations) {
    methods.push_back({op.name, op.parameters});
  }
  return methods;
}

std::vector<psm::Attribute> attributes_of(const pim::Class& cls) {
  std::vector<psm::Attribute> attributes;
  for (const pim::Attribute& attr : cls.attributes) {
    attributes.push_back({attr.name, attr.type});
  }
  return attributes;
}

}  // namespace

psm::Model oracle_psm(const pim::Model& source) {
  psm::Model target;
  target.name = "crud" + source.name;
  target.ui.name = "presentationPackage";
  target.ui.view.name = "viewPackage";
  target.ui.controller.name = "controllerPackage";
  target.business.name = "businessPackage";
  target.dao.name = "daoPackage";

  for (psm::Index i = 0; i < source.classes.size(); ++i) {
    const pim::Class& cls = source.classes[i];
    target.dao.daos.push_back({"I" + cls.name + "Dao", methods_of(cls), i});
    target.dao.pojos.push_back({cls.name, attributes_of(cls), i});
    target.dao.daoimpls.push_back({cls.name + "DaoImpl", {i}});
    target.business.services.push_back({"I" + cls.name + "Service", methods_of(cls), i});
    target.business.serviceimpls.push_back({cls.name + "ServiceImpl", {i}});
    target.business.dtos.push_back({cls.name + "DTO", attributes_of(cls), i});
  }

  for (const pim::Class& cls : source.classes) {
    for (const pim::Operation& op : cls.operations) {
      if (verb_of(op.name) != "remove") {
        target.ui.view.pages.push_back({stem_of(op.name) + cls.name + "Page.jsp"});
      }
    }
  }

  psm::ActionMapping& mapping = target.ui.controller.mapping;
  for (const pim::Class& cls : source.classes) {
    const auto display = page_named(target.ui.view, "Display" + cls.name + "Page.jsp");
    for (const pim::Operation& op : cls.operations) {
      const std::string stem = stem_of(op.name) + cls.name;
      const auto own = page_named(target.ui.view, stem + "Page.jsp");
      std::optional<psm::ActionForward> forward;
      if (display) {
        forward = psm::ActionForward{*display};
      } else if (own) {
        forward = psm::ActionForward{*own};
      }

      mapping.actions.push_back({stem + "Action", forward, std::nullopt});
      const std::string verb = verb_of(op.name);
      if (verb == "create" || verb == "update") {
        const psm::Index end = mapping.actions.size();
        const psm::Index form = mapping.forms.size();
        mapping.actions.push_back({stem + "EndAction", forward, form});
        mapping.forms.push_back({stem + "Form", *own, end});
      }
    }
  }

  return target;
}

}  // namespace ntiers::testing

#include "ntiers/model_io.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "ntiers/error.hpp"
#include "ntiers/fragment_path.hpp"
#include "ntiers/validate.hpp"
#include "ntiers/xml.hpp"

namespace ntiers::io {

namespace {

[[noreturn]] void schema_fail(const xml::Element& element, const std::string& message) {
  throw Error(errc::schema_violation, "line " + std::to_string(element.line) + ": " + message);
}

void check_no_text(const xml::Element& element) {
  if (!element.text.empty()) {
    schema_fail(element, "<" + element.name + "> must not contain text");
  }
}

void check_no_children(const xml::Element& element) {
  if (!element.children.empty()) {
    schema_fail(element.children.front(),
                "unknown element <" + element.children.front().name + "> in <" + element.name + ">");
  }
}

void check_attributes(const xml::Element& element, std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : element.attributes) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      schema_fail(element, "unknown attribute \"" + key + "\" on <" + element.name + ">");
    }
  }
}

const std::string& require_attr(const xml::Element& element, std::string_view name) {
  const std::string* value = element.attr(name);
  if (value == nullptr) {
    schema_fail(element, "<" + element.name + "> requires attribute \"" + std::string(name) + "\"");
  }
  return *value;
}

void check_namespace_binding(const xml::Element& element, std::string_view attribute,
                             std::string_view expected) {
  const std::string* value = element.attr(attribute);
  if (value != nullptr && *value != expected) {
    schema_fail(element, std::string(attribute) + " must be \"" + std::string(expected) + "\", got \"" +
                             *value + "\"");
  }
}

pim::Direction direction_from_text(const xml::Element& element, const std::string& text) {
  if (text == "in") return pim::Direction::In;
  if (text == "out") return pim::Direction::Out;
  schema_fail(element, "direction must be \"in\" or \"out\", got \"" + text + "\"");
}

// Source model reading.

pim::Parameter pim_parameter_from_xml(const xml::Element& element) {
  check_attributes(element, {"name", "type", "direction"});
  check_no_text(element);
  check_no_children(element);
  pim::Parameter parameter;
  parameter.name = require_attr(element, "name");
  parameter.type = require_attr(element, "type");
  parameter.direction = direction_from_text(element, require_attr(element, "direction"));
  return parameter;
}

pim::Operation pim_operation_from_xml(const xml::Element& element) {
  check_attributes(element, {"name"});
  check_no_text(element);
  pim::Operation operation;
  operation.name = require_attr(element, "name");
  for (const xml::Element& child : element.children) {
    if (child.name != "parameter") {
      schema_fail(child, "unknown element <" + child.name + "> in <operation>");
    }
    operation.parameters.push_back(pim_parameter_from_xml(child));
  }
  return operation;
}

pim::Class pim_class_from_xml(const xml::Element& element) {
  check_attributes(element, {"name"});
  check_no_text(element);
  pim::Class cls;
  cls.name = require_attr(element, "name");
  for (const xml::Element& child : element.children) {
    if (child.name == "attribute") {
      check_attributes(child, {"name", "type"});
      check_no_text(child);
      check_no_children(child);
      cls.attributes.push_back({require_attr(child, "name"), require_attr(child, "type")});
    } else if (child.name == "operation") {
      cls.operations.push_back(pim_operation_from_xml(child));
    } else {
      schema_fail(child, "unknown element <" + child.name + "> in <class>");
    }
  }
  return cls;
}

pim::Model pim_from_xml(const xml::Element& root) {
  if (root.name != pim_root_element) {
    schema_fail(root, "root element must be <" + std::string(pim_root_element) + ">, got <" + root.name + ">");
  }
  check_attributes(root, {"name", "xmlns:UmlMM"});
  check_namespace_binding(root, "xmlns:UmlMM", pim_namespace);
  check_no_text(root);

  pim::Model model;
  model.name = require_attr(root, "name");
  for (const xml::Element& child : root.children) {
    if (child.name == "class") {
      model.classes.push_back(pim_class_from_xml(child));
    } else if (child.name == "datatype") {
      check_attributes(child, {"name"});
      check_no_text(child);
      check_no_children(child);
      model.datatypes.push_back({require_attr(child, "name")});
    } else {
      schema_fail(child, "unknown element <" + child.name + "> in <" + std::string(pim_root_element) + ">");
    }
  }
  return model;
}

// Target model reading.

/// A reference attribute noted during tree construction and resolved once
/// the whole containment structure exists.
struct PendingRef {
  std::size_t line;
  std::string owner;
  std::string attribute;
  std::string path_text;
  const char* target_feature;
  std::function<bool(const PsmElementRef&)> accepts;
  std::function<void(psm::Index)> assign;
};

class PsmReader {
 public:
  psm::Model read(const xml::Element& root) {
    if (root.name != psm_root_element) {
      schema_fail(root,
                  "root element must be <" + std::string(psm_root_element) + ">, got <" + root.name + ">");
    }
    check_attributes(root, {"name", "xmlns:NtiersMM", "xmlns:xmi", "xmlns:xsi"});
    check_namespace_binding(root, "xmlns:NtiersMM", psm_namespace);
    check_namespace_binding(root, "xmlns:xmi", xmi_namespace);
    check_namespace_binding(root, "xmlns:xsi", xmi_namespace);
    check_no_text(root);

    model_.name = require_attr(root, "name");
    for (const xml::Element& child : root.children) {
      if (child.name != "uPack" && child.name != "bPack" && child.name != "dPack") {
        schema_fail(child,
                    "unknown element <" + child.name + "> in <" + std::string(psm_root_element) + ">");
      }
    }
    const xml::Element* upack = single_child(root, "uPack");
    const xml::Element* bpack = single_child(root, "bPack");
    const xml::Element* dpack = single_child(root, "dPack");
    read_ui(*upack);
    read_business(*bpack);
    read_dao(*dpack);
    resolve_pending();
    return std::move(model_);
  }

 private:
  psm::Model model_;
  std::vector<PendingRef> pending_;

  /// Requires exactly one child of the given name and no others besides the
  /// remaining expected package elements.
  static const xml::Element* single_child(const xml::Element& parent, std::string_view name) {
    const xml::Element* found = nullptr;
    for (const xml::Element& child : parent.children) {
      if (child.name != name) continue;
      if (found != nullptr) schema_fail(child, "duplicate <" + child.name + "> in <" + parent.name + ">");
      found = &child;
    }
    if (found == nullptr) {
      schema_fail(parent, "<" + parent.name + "> requires exactly one <" + std::string(name) + ">");
    }
    return found;
  }

  static std::string describe(const xml::Element& element) {
    const std::string* name = element.attr("name");
    return "<" + element.name + (name != nullptr ? " name=\"" + *name + "\"" : "") + ">";
  }

  template <typename Pointer>
  void note_ref(const xml::Element& element, std::string_view attribute, const char* target_feature,
                std::function<void(psm::Index)> assign) {
    const std::string* value = element.attr(attribute);
    if (value == nullptr) return;
    pending_.push_back({element.line, describe(element), std::string(attribute), *value, target_feature,
                        [](const PsmElementRef& ref) { return std::holds_alternative<Pointer>(ref); },
                        std::move(assign)});
  }

  /// Whitespace-separated path list; each entry appended via `append`.
  template <typename Pointer>
  void note_ref_list(const xml::Element& element, std::string_view attribute, const char* target_feature,
                     std::function<void(psm::Index)> append) {
    const std::string* value = element.attr(attribute);
    if (value == nullptr) return;
    std::size_t pos = 0;
    while (pos < value->size()) {
      while (pos < value->size() && std::isspace(static_cast<unsigned char>((*value)[pos]))) ++pos;
      std::size_t end = pos;
      while (end < value->size() && !std::isspace(static_cast<unsigned char>((*value)[end]))) ++end;
      if (end > pos) {
        pending_.push_back({element.line, describe(element), std::string(attribute),
                            value->substr(pos, end - pos), target_feature,
                            [](const PsmElementRef& ref) { return std::holds_alternative<Pointer>(ref); },
                            append});
      }
      pos = end;
    }
  }

  void resolve_pending() {
    for (const PendingRef& ref : pending_) {
      const std::string context = "line " + std::to_string(ref.line) + ": " + ref.attribute + "=\"" +
                                  ref.path_text + "\" on " + ref.owner;
      PsmElementRef resolved;
      FragmentPath path;
      try {
        path = FragmentPath::parse(ref.path_text);
        resolved = resolve_fragment(model_, path);
      } catch (const Error&) {
        throw Error(errc::unresolved_path, context + " does not resolve");
      }
      if (!ref.accepts(resolved)) {
        throw Error(errc::unresolved_path, context + " must reference a \"" +
                                               std::string(ref.target_feature) + "\" element, not \"" +
                                               std::string(element_kind(resolved)) + "\"");
      }
      ref.assign(path.segments.back().index.value_or(0));
    }
  }

  std::vector<psm::Attribute> read_attributes(const xml::Element& parent) {
    std::vector<psm::Attribute> attributes;
    for (const xml::Element& child : parent.children) {
      if (child.name != "attribute") {
        schema_fail(child, "unknown element <" + child.name + "> in <" + parent.name + ">");
      }
      check_attributes(child, {"name", "type"});
      check_no_text(child);
      check_no_children(child);
      attributes.push_back({require_attr(child, "name"), require_attr(child, "type")});
    }
    return attributes;
  }

  std::vector<psm::Method> read_methods(const xml::Element& parent) {
    std::vector<psm::Method> methods;
    for (const xml::Element& child : parent.children) {
      if (child.name != "method") {
        schema_fail(child, "unknown element <" + child.name + "> in <" + parent.name + ">");
      }
      check_attributes(child, {"name"});
      check_no_text(child);
      psm::Method method;
      method.name = require_attr(child, "name");
      for (const xml::Element& param : child.children) {
        if (param.name != "parameter") {
          schema_fail(param, "unknown element <" + param.name + "> in <method>");
        }
        method.parameters.push_back(pim_parameter_from_xml(param));
      }
      methods.push_back(std::move(method));
    }
    return methods;
  }

  void read_ui(const xml::Element& element) {
    check_attributes(element, {"name"});
    check_no_text(element);
    model_.ui.name = require_attr(element, "name");
    for (const xml::Element& child : element.children) {
      if (child.name != "vPack" && child.name != "cPack") {
        schema_fail(child, "unknown element <" + child.name + "> in <uPack>");
      }
    }
    read_view(*single_child(element, "vPack"));
    read_controller(*single_child(element, "cPack"));
  }

  void read_view(const xml::Element& element) {
    check_attributes(element, {"name"});
    check_no_text(element);
    model_.ui.view.name = require_attr(element, "name");
    for (const xml::Element& child : element.children) {
      if (child.name != "jsp") schema_fail(child, "unknown element <" + child.name + "> in <vPack>");
      check_attributes(child, {"name"});
      check_no_text(child);
      check_no_children(child);
      model_.ui.view.pages.push_back({require_attr(child, "name")});
    }
  }

  void read_controller(const xml::Element& element) {
    check_attributes(element, {"name"});
    check_no_text(element);
    model_.ui.controller.name = require_attr(element, "name");
    const xml::Element* mapping = nullptr;
    for (const xml::Element& child : element.children) {
      if (child.name != "actionmapping") {
        schema_fail(child, "unknown element <" + child.name + "> in <cPack>");
      }
      if (mapping != nullptr) schema_fail(child, "duplicate <actionmapping> in <cPack>");
      mapping = &child;
    }
    if (mapping == nullptr) return;
    check_attributes(*mapping, {});
    check_no_text(*mapping);

    psm::ActionMapping& target = model_.ui.controller.mapping;
    for (const xml::Element& child : mapping->children) {
      if (child.name == "action") {
        check_attributes(child, {"name", "form", "forward"});
        check_no_text(child);
        check_no_children(child);
        psm::Action action;
        action.name = require_attr(child, "name");
        const std::size_t index = target.actions.size();
        note_ref<const psm::JspPage*>(child, "forward", "jsp", [this, index](psm::Index value) {
          model_.ui.controller.mapping.actions[index].forward = psm::ActionForward{value};
        });
        note_ref<const psm::ActionForm*>(child, "form", "form", [this, index](psm::Index value) {
          model_.ui.controller.mapping.actions[index].form = value;
        });
        target.actions.push_back(std::move(action));
      } else if (child.name == "form") {
        check_attributes(child, {"name", "attribute", "input"});
        check_no_text(child);
        check_no_children(child);
        psm::ActionForm form;
        form.name = require_attr(child, "name");
        const std::size_t index = target.forms.size();
        require_attr(child, "input");
        require_attr(child, "attribute");
        note_ref<const psm::JspPage*>(child, "input", "jsp", [this, index](psm::Index value) {
          model_.ui.controller.mapping.forms[index].input = value;
        });
        note_ref<const psm::Action*>(child, "attribute", "action", [this, index](psm::Index value) {
          model_.ui.controller.mapping.forms[index].attribute = value;
        });
        target.forms.push_back(std::move(form));
      } else {
        schema_fail(child, "unknown element <" + child.name + "> in <actionmapping>");
      }
    }
  }

  void read_business(const xml::Element& element) {
    check_attributes(element, {"name"});
    check_no_text(element);
    model_.business.name = require_attr(element, "name");
    for (const xml::Element& child : element.children) {
      if (child.name == "services") {
        check_attributes(child, {"name", "implementedBy"});
        check_no_text(child);
        psm::Service service;
        service.name = require_attr(child, "name");
        service.methods = read_methods(child);
        const std::size_t index = model_.business.services.size();
        note_ref<const psm::ServiceImpl*>(child, "implementedBy", "serviceimpl",
                                          [this, index](psm::Index value) {
                                            model_.business.services[index].implemented_by = value;
                                          });
        model_.business.services.push_back(std::move(service));
      } else if (child.name == "serviceimpl") {
        check_attributes(child, {"name", "interfaces"});
        check_no_text(child);
        check_no_children(child);
        psm::ServiceImpl impl;
        impl.name = require_attr(child, "name");
        const std::size_t index = model_.business.serviceimpls.size();
        note_ref_list<const psm::Service*>(child, "interfaces", "services",
                                           [this, index](psm::Index value) {
                                             model_.business.serviceimpls[index].interfaces.push_back(value);
                                           });
        model_.business.serviceimpls.push_back(std::move(impl));
      } else if (child.name == "dto") {
        check_attributes(child, {"name", "pojos"});
        check_no_text(child);
        psm::Dto dto;
        dto.name = require_attr(child, "name");
        dto.attributes = read_attributes(child);
        const std::size_t index = model_.business.dtos.size();
        note_ref<const psm::Pojo*>(child, "pojos", "pojo", [this, index](psm::Index value) {
          model_.business.dtos[index].pojo = value;
        });
        model_.business.dtos.push_back(std::move(dto));
      } else {
        schema_fail(child, "unknown element <" + child.name + "> in <bPack>");
      }
    }
  }

  void read_dao(const xml::Element& element) {
    check_attributes(element, {"name"});
    check_no_text(element);
    model_.dao.name = require_attr(element, "name");
    for (const xml::Element& child : element.children) {
      if (child.name == "dao") {
        check_attributes(child, {"name", "implementedBy"});
        check_no_text(child);
        psm::Dao dao;
        dao.name = require_attr(child, "name");
        dao.methods = read_methods(child);
        const std::size_t index = model_.dao.daos.size();
        note_ref<const psm::DaoImpl*>(child, "implementedBy", "daoimpl", [this, index](psm::Index value) {
          model_.dao.daos[index].implemented_by = value;
        });
        model_.dao.daos.push_back(std::move(dao));
      } else if (child.name == "pojo") {
        check_attributes(child, {"name", "dto"});
        check_no_text(child);
        psm::Pojo pojo;
        pojo.name = require_attr(child, "name");
        pojo.attributes = read_attributes(child);
        const std::size_t index = model_.dao.pojos.size();
        note_ref<const psm::Dto*>(child, "dto", "dto", [this, index](psm::Index value) {
          model_.dao.pojos[index].dto = value;
        });
        model_.dao.pojos.push_back(std::move(pojo));
      } else if (child.name == "daoimpl") {
        check_attributes(child, {"name", "interfaces"});
        check_no_text(child);
        check_no_children(child);
        psm::DaoImpl impl;
        impl.name = require_attr(child, "name");
        const std::size_t index = model_.dao.daoimpls.size();
        note_ref_list<const psm::Dao*>(child, "interfaces", "dao", [this, index](psm::Index value) {
          model_.dao.daoimpls[index].interfaces.push_back(value);
        });
        model_.dao.daoimpls.push_back(std::move(impl));
      } else {
        schema_fail(child, "unknown element <" + child.name + "> in <dPack>");
      }
    }
  }
};

// Target model writing.

std::string index_path(std::string_view prefix, std::size_t index) {
  return std::string(prefix) + "." + std::to_string(index);
}

xml::Element make_element(std::string name) {
  xml::Element element;
  element.name = std::move(name);
  return element;
}

void set_attr(xml::Element& element, std::string_view name, std::string_view value) {
  element.attributes.emplace_back(std::string(name), std::string(value));
}

void append_attributes(xml::Element& parent, const std::vector<psm::Attribute>& attributes) {
  for (const psm::Attribute& attribute : attributes) {
    xml::Element child = make_element("attribute");
    set_attr(child, "name", attribute.name);
    set_attr(child, "type", attribute.type);
    parent.children.push_back(std::move(child));
  }
}

void append_methods(xml::Element& parent, const std::vector<psm::Method>& methods) {
  for (const psm::Method& method : methods) {
    xml::Element child = make_element("method");
    set_attr(child, "name", method.name);
    for (const pim::Parameter& parameter : method.parameters) {
      xml::Element param = make_element("parameter");
      set_attr(param, "name", parameter.name);
      set_attr(param, "type", parameter.type);
      set_attr(param, "direction", to_string(parameter.direction));
      child.children.push_back(std::move(param));
    }
    parent.children.push_back(std::move(child));
  }
}

xml::Element psm_to_xml(const psm::Model& model, const SerializeOptions& options) {
  xml::Element root = make_element(std::string(psm_root_element));
  set_attr(root, "xmlns:xmi", xmi_namespace);
  set_attr(root, "xmlns:NtiersMM", psm_namespace);
  set_attr(root, "name", model.name);

  xml::Element upack = make_element("uPack");
  set_attr(upack, "name", model.ui.name);

  xml::Element vpack = make_element("vPack");
  set_attr(vpack, "name", model.ui.view.name);
  for (const psm::JspPage& page : model.ui.view.pages) {
    xml::Element jsp = make_element("jsp");
    set_attr(jsp, "name", page.name);
    vpack.children.push_back(std::move(jsp));
  }

  xml::Element cpack = make_element("cPack");
  set_attr(cpack, "name", model.ui.controller.name);
  xml::Element mapping = make_element("actionmapping");
  for (const psm::Action& action : model.ui.controller.mapping.actions) {
    xml::Element node = make_element("action");
    set_attr(node, "name", action.name);
    if (action.form) {
      set_attr(node, "form", index_path("//@uPack/@cPack/@actionmapping/@form", *action.form));
    }
    if (action.forward) {
      set_attr(node, "forward", index_path("//@uPack/@vPack/@jsp", action.forward->target));
    }
    mapping.children.push_back(std::move(node));
  }
  for (const psm::ActionForm& form : model.ui.controller.mapping.forms) {
    xml::Element node = make_element("form");
    set_attr(node, "name", form.name);
    set_attr(node, "attribute", index_path("//@uPack/@cPack/@actionmapping/@action", form.attribute));
    set_attr(node, "input", index_path("//@uPack/@vPack/@jsp", form.input));
    mapping.children.push_back(std::move(node));
  }
  cpack.children.push_back(std::move(mapping));
  upack.children.push_back(std::move(vpack));
  upack.children.push_back(std::move(cpack));
  root.children.push_back(std::move(upack));

  xml::Element bpack = make_element("bPack");
  set_attr(bpack, "name", model.business.name);
  for (const psm::Service& service : model.business.services) {
    xml::Element node = make_element("services");
    set_attr(node, "name", service.name);
    if (service.implemented_by) {
      set_attr(node, "implementedBy", index_path("//@bPack/@serviceimpl", *service.implemented_by));
    }
    if (options.full) append_methods(node, service.methods);
    bpack.children.push_back(std::move(node));
  }
  for (const psm::ServiceImpl& impl : model.business.serviceimpls) {
    xml::Element node = make_element("serviceimpl");
    set_attr(node, "name", impl.name);
    std::string interfaces;
    for (psm::Index index : impl.interfaces) {
      if (!interfaces.empty()) interfaces += ' ';
      interfaces += index_path("//@bPack/@services", index);
    }
    if (!interfaces.empty()) set_attr(node, "interfaces", interfaces);
    bpack.children.push_back(std::move(node));
  }
  for (const psm::Dto& dto : model.business.dtos) {
    xml::Element node = make_element("dto");
    set_attr(node, "name", dto.name);
    if (dto.pojo) set_attr(node, "pojos", index_path("//@dPack/@pojo", *dto.pojo));
    if (options.full) append_attributes(node, dto.attributes);
    bpack.children.push_back(std::move(node));
  }
  root.children.push_back(std::move(bpack));

  xml::Element dpack = make_element("dPack");
  set_attr(dpack, "name", model.dao.name);
  for (const psm::Dao& dao : model.dao.daos) {
    xml::Element node = make_element("dao");
    set_attr(node, "name", dao.name);
    if (dao.implemented_by) {
      set_attr(node, "implementedBy", index_path("//@dPack/@daoimpl", *dao.implemented_by));
    }
    if (options.full) append_methods(node, dao.methods);
    dpack.children.push_back(std::move(node));
  }
  for (const psm::Pojo& pojo : model.dao.pojos) {
    xml::Element node = make_element("pojo");
    set_attr(node, "name", pojo.name);
    if (pojo.dto) set_attr(node, "dto", index_path("//@bPack/@dto", *pojo.dto));
    if (options.full) append_attributes(node, pojo.attributes);
    dpack.children.push_back(std::move(node));
  }
  for (const psm::DaoImpl& impl : model.dao.daoimpls) {
    xml::Element node = make_element("daoimpl");
    set_attr(node, "name", impl.name);
    std::string interfaces;
    for (psm::Index index : impl.interfaces) {
      if (!interfaces.empty()) interfaces += ' ';
      interfaces += index_path("//@dPack/@dao", index);
    }
    if (!interfaces.empty()) set_attr(node, "interfaces", interfaces);
    dpack.children.push_back(std::move(node));
  }
  root.children.push_back(std::move(dpack));
  return root;
}

void print_element(const xml::Element& element, int depth, std::string& out) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += '<';
  out += element.name;
  for (const auto& [name, value] : element.attributes) {
    out += ' ';
    out += name;
    out += "=\"";
    out += xml::escape_attribute(value);
    out += '"';
  }
  if (element.children.empty()) {
    out += "/>\n";
    return;
  }
  out += ">\n";
  for (const xml::Element& child : element.children) print_element(child, depth + 1, out);
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += "</";
  out += element.name;
  out += ">\n";
}

}  // namespace

pim::Model parse_pim(std::string_view document) {
  pim::Model model = pim_from_xml(xml::parse_document(document));
  ValidationReport report = validate_pim(model);
  if (!report.ok()) {
    throw ValidationError(errc::validation_failed, std::move(report),
                          "source model fails validation");
  }
  return model;
}

std::string serialize_psm(const psm::Model& model, SerializeOptions options) {
  ValidationReport report = validate_psm(model);
  if (!report.ok()) {
    throw ValidationError(errc::invalid_model, std::move(report),
                          "target model fails validation, refusing to serialize");
  }
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  print_element(psm_to_xml(model, options), 0, out);
  return out;
}

psm::Model parse_psm(std::string_view document) {
  return PsmReader().read(xml::parse_document(document));
}

ModelKind sniff_kind(std::string_view document) {
  const xml::Element root = xml::parse_document(document);
  if (root.name == pim_root_element) return ModelKind::Pim;
  if (root.name == psm_root_element) return ModelKind::Psm;
  schema_fail(root, "unknown root element <" + root.name + ">");
}

// Structural diff over a uniform tree projection of either model kind.

namespace {

struct TreeNode {
  std::string feature;
  std::string label;
  std::string path;
  std::vector<std::pair<std::string, std::string>> fields;

  struct Link {
    std::string attribute;
    std::string target_feature;
    std::string target_label;
    std::string target_path;
  };
  std::vector<Link> links;

  struct Group {
    std::string feature;
    std::vector<TreeNode> children;
  };
  std::vector<Group> groups;
};

TreeNode make_node(std::string_view feature, std::string_view label, std::string path) {
  TreeNode node;
  node.feature = feature;
  node.label = label;
  node.path = std::move(path);
  return node;
}

template <typename T>
std::string label_or(const std::vector<T>& elements, std::size_t index) {
  return index < elements.size() ? elements[index].name : "<out-of-range>";
}

TreeNode project_parameter(const pim::Parameter& parameter, std::string path) {
  TreeNode node = make_node("parameter", parameter.name, std::move(path));
  node.fields.emplace_back("type", parameter.type);
  node.fields.emplace_back("direction", std::string(to_string(parameter.direction)));
  return node;
}

TreeNode project_method(std::string_view feature, const psm::Method& method, const std::string& path) {
  TreeNode node = make_node(feature, method.name, path);
  TreeNode::Group parameters{"parameter", {}};
  for (std::size_t p = 0; p < method.parameters.size(); ++p) {
    parameters.children.push_back(
        project_parameter(method.parameters[p], index_path(path + "/@parameter", p)));
  }
  node.groups.push_back(std::move(parameters));
  return node;
}

template <typename T>
TreeNode project_attribute_owner(std::string_view feature, const T& owner, const std::string& path) {
  TreeNode node = make_node(feature, owner.name, path);
  TreeNode::Group attributes{"attribute", {}};
  for (std::size_t a = 0; a < owner.attributes.size(); ++a) {
    TreeNode attr = make_node("attribute", owner.attributes[a].name, index_path(path + "/@attribute", a));
    attr.fields.emplace_back("type", owner.attributes[a].type);
    attributes.children.push_back(std::move(attr));
  }
  node.groups.push_back(std::move(attributes));
  return node;
}

TreeNode project(const pim::Model& model) {
  TreeNode root = make_node("package", model.name, "");
  TreeNode::Group classes{"class", {}};
  for (std::size_t c = 0; c < model.classes.size(); ++c) {
    const pim::Class& cls = model.classes[c];
    const std::string class_path = index_path("//@class", c);
    TreeNode node = project_attribute_owner("class", cls, class_path);
    TreeNode::Group operations{"operation", {}};
    for (std::size_t o = 0; o < cls.operations.size(); ++o) {
      const pim::Operation& operation = cls.operations[o];
      const std::string op_path = index_path(class_path + "/@operation", o);
      TreeNode op = make_node("operation", operation.name, op_path);
      TreeNode::Group parameters{"parameter", {}};
      for (std::size_t p = 0; p < operation.parameters.size(); ++p) {
        parameters.children.push_back(
            project_parameter(operation.parameters[p], index_path(op_path + "/@parameter", p)));
      }
      op.groups.push_back(std::move(parameters));
      operations.children.push_back(std::move(op));
    }
    node.groups.push_back(std::move(operations));
    classes.children.push_back(std::move(node));
  }
  root.groups.push_back(std::move(classes));

  TreeNode::Group datatypes{"datatype", {}};
  for (std::size_t d = 0; d < model.datatypes.size(); ++d) {
    datatypes.children.push_back(
        make_node("datatype", model.datatypes[d].name, index_path("//@datatype", d)));
  }
  root.groups.push_back(std::move(datatypes));
  return root;
}

TreeNode project(const psm::Model& model) {
  TreeNode root = make_node("project", model.name, "");

  TreeNode upack = make_node("uPack", model.ui.name, "//@uPack");
  TreeNode vpack = make_node("vPack", model.ui.view.name, "//@uPack/@vPack");
  TreeNode::Group jsps{"jsp", {}};
  for (std::size_t i = 0; i < model.ui.view.pages.size(); ++i) {
    jsps.children.push_back(
        make_node("jsp", model.ui.view.pages[i].name, index_path("//@uPack/@vPack/@jsp", i)));
  }
  vpack.groups.push_back(std::move(jsps));

  TreeNode cpack = make_node("cPack", model.ui.controller.name, "//@uPack/@cPack");
  TreeNode mapping = make_node("actionmapping", "", "//@uPack/@cPack/@actionmapping");
  const psm::ActionMapping& am = model.ui.controller.mapping;
  TreeNode::Group actions{"action", {}};
  for (std::size_t i = 0; i < am.actions.size(); ++i) {
    const psm::Action& action = am.actions[i];
    TreeNode node =
        make_node("action", action.name, index_path("//@uPack/@cPack/@actionmapping/@action", i));
    if (action.forward) {
      node.links.push_back({"forward", "jsp", label_or(model.ui.view.pages, action.forward->target),
                            index_path("//@uPack/@vPack/@jsp", action.forward->target)});
    }
    if (action.form) {
      node.links.push_back({"form", "form", label_or(am.forms, *action.form),
                            index_path("//@uPack/@cPack/@actionmapping/@form", *action.form)});
    }
    actions.children.push_back(std::move(node));
  }
  mapping.groups.push_back(std::move(actions));
  TreeNode::Group forms{"form", {}};
  for (std::size_t i = 0; i < am.forms.size(); ++i) {
    const psm::ActionForm& form = am.forms[i];
    TreeNode node = make_node("form", form.name, index_path("//@uPack/@cPack/@actionmapping/@form", i));
    node.links.push_back({"attribute", "action", label_or(am.actions, form.attribute),
                          index_path("//@uPack/@cPack/@actionmapping/@action", form.attribute)});
    node.links.push_back({"input", "jsp", label_or(model.ui.view.pages, form.input),
                          index_path("//@uPack/@vPack/@jsp", form.input)});
    forms.children.push_back(std::move(node));
  }
  mapping.groups.push_back(std::move(forms));
  cpack.groups.push_back({"actionmapping", {std::move(mapping)}});
  upack.groups.push_back({"vPack", {std::move(vpack)}});
  upack.groups.push_back({"cPack", {std::move(cpack)}});
  root.groups.push_back({"uPack", {std::move(upack)}});

  TreeNode bpack = make_node("bPack", model.business.name, "//@bPack");
  TreeNode::Group services{"services", {}};
  for (std::size_t i = 0; i < model.business.services.size(); ++i) {
    const psm::Service& service = model.business.services[i];
    const std::string path = index_path("//@bPack/@services", i);
    TreeNode node = make_node("services", service.name, path);
    if (service.implemented_by) {
      node.links.push_back({"implementedBy", "serviceimpl",
                            label_or(model.business.serviceimpls, *service.implemented_by),
                            index_path("//@bPack/@serviceimpl", *service.implemented_by)});
    }
    TreeNode::Group methods{"method", {}};
    for (std::size_t m = 0; m < service.methods.size(); ++m) {
      methods.children.push_back(
          project_method("method", service.methods[m], index_path(path + "/@method", m)));
    }
    node.groups.push_back(std::move(methods));
    services.children.push_back(std::move(node));
  }
  bpack.groups.push_back(std::move(services));

  TreeNode::Group serviceimpls{"serviceimpl", {}};
  for (std::size_t i = 0; i < model.business.serviceimpls.size(); ++i) {
    const psm::ServiceImpl& impl = model.business.serviceimpls[i];
    TreeNode node = make_node("serviceimpl", impl.name, index_path("//@bPack/@serviceimpl", i));
    for (psm::Index index : impl.interfaces) {
      node.links.push_back({"interfaces", "services", label_or(model.business.services, index),
                            index_path("//@bPack/@services", index)});
    }
    serviceimpls.children.push_back(std::move(node));
  }
  bpack.groups.push_back(std::move(serviceimpls));

  TreeNode::Group dtos{"dto", {}};
  for (std::size_t i = 0; i < model.business.dtos.size(); ++i) {
    const psm::Dto& dto = model.business.dtos[i];
    TreeNode node = project_attribute_owner("dto", dto, index_path("//@bPack/@dto", i));
    if (dto.pojo) {
      node.links.push_back({"pojos", "pojo", label_or(model.dao.pojos, *dto.pojo),
                            index_path("//@dPack/@pojo", *dto.pojo)});
    }
    dtos.children.push_back(std::move(node));
  }
  bpack.groups.push_back(std::move(dtos));
  root.groups.push_back({"bPack", {std::move(bpack)}});

  TreeNode dpack = make_node("dPack", model.dao.name, "//@dPack");
  TreeNode::Group daos{"dao", {}};
  for (std::size_t i = 0; i < model.dao.daos.size(); ++i) {
    const psm::Dao& dao = model.dao.daos[i];
    const std::string path = index_path("//@dPack/@dao", i);
    TreeNode node = make_node("dao", dao.name, path);
    if (dao.implemented_by) {
      node.links.push_back({"implementedBy", "daoimpl", label_or(model.dao.daoimpls, *dao.implemented_by),
                            index_path("//@dPack/@daoimpl", *dao.implemented_by)});
    }
    TreeNode::Group methods{"method", {}};
    for (std::size_t m = 0; m < dao.methods.size(); ++m) {
      methods.children.push_back(
          project_method("method", dao.methods[m], index_path(path + "/@method", m)));
    }
    node.groups.push_back(std::move(methods));
    daos.children.push_back(std::move(node));
  }
  dpack.groups.push_back(std::move(daos));

  TreeNode::Group pojos{"pojo", {}};
  for (std::size_t i = 0; i < model.dao.pojos.size(); ++i) {
    const psm::Pojo& pojo = model.dao.pojos[i];
    TreeNode node = project_attribute_owner("pojo", pojo, index_path("//@dPack/@pojo", i));
    if (pojo.dto) {
      node.links.push_back({"dto", "dto", label_or(model.business.dtos, *pojo.dto),
                            index_path("//@bPack/@dto", *pojo.dto)});
    }
    pojos.children.push_back(std::move(node));
  }
  dpack.groups.push_back(std::move(pojos));

  TreeNode::Group daoimpls{"daoimpl", {}};
  for (std::size_t i = 0; i < model.dao.daoimpls.size(); ++i) {
    const psm::DaoImpl& impl = model.dao.daoimpls[i];
    TreeNode node = make_node("daoimpl", impl.name, index_path("//@dPack/@daoimpl", i));
    for (psm::Index index : impl.interfaces) {
      node.links.push_back({"interfaces", "dao", label_or(model.dao.daos, index),
                            index_path("//@dPack/@dao", index)});
    }
    daoimpls.children.push_back(std::move(node));
  }
  dpack.groups.push_back(std::move(daoimpls));
  root.groups.push_back({"dPack", {std::move(dpack)}});
  return root;
}

std::string describe_node(const TreeNode& node) {
  if (node.label.empty()) return node.feature;
  return node.feature + " \"" + node.label + "\"";
}

/// Renders all targets of one link attribute for comparison. Order-sensitive
/// mode compares positional target paths; order-insensitive mode compares
/// the sorted set of (feature, name) targets.
std::string render_links(const TreeNode& node, const std::string& attribute, bool order_sensitive) {
  std::vector<std::string> targets;
  for (const TreeNode::Link& link : node.links) {
    if (link.attribute != attribute) continue;
    targets.push_back(order_sensitive ? link.target_path
                                      : link.target_feature + " \"" + link.target_label + "\"");
  }
  if (!order_sensitive) std::sort(targets.begin(), targets.end());
  std::string out;
  for (const std::string& target : targets) {
    if (!out.empty()) out += ", ";
    out += target;
  }
  return out;
}

void diff_nodes(const TreeNode& a, const TreeNode& b, bool order_sensitive,
                std::vector<DiffEntry>& out);

void diff_groups(const TreeNode::Group& a, const TreeNode::Group& b, bool order_sensitive,
                 std::vector<DiffEntry>& out) {
  const std::vector<TreeNode>& as = a.children;
  const std::vector<TreeNode>& bs = b.children;
  if (order_sensitive) {
    const std::size_t common = std::min(as.size(), bs.size());
    for (std::size_t i = 0; i < common; ++i) diff_nodes(as[i], bs[i], order_sensitive, out);
    for (std::size_t i = common; i < as.size(); ++i) {
      out.push_back({DiffKind::Removed, as[i].path, describe_node(as[i])});
    }
    for (std::size_t i = common; i < bs.size(); ++i) {
      out.push_back({DiffKind::Added, bs[i].path, describe_node(bs[i])});
    }
    return;
  }
  std::vector<bool> used(bs.size(), false);
  for (const TreeNode& an : as) {
    bool matched = false;
    for (std::size_t j = 0; j < bs.size(); ++j) {
      if (used[j] || bs[j].label != an.label) continue;
      used[j] = true;
      matched = true;
      diff_nodes(an, bs[j], order_sensitive, out);
      break;
    }
    if (!matched) out.push_back({DiffKind::Removed, an.path, describe_node(an)});
  }
  for (std::size_t j = 0; j < bs.size(); ++j) {
    if (!used[j]) out.push_back({DiffKind::Added, bs[j].path, describe_node(bs[j])});
  }
}

void diff_nodes(const TreeNode& a, const TreeNode& b, bool order_sensitive,
                std::vector<DiffEntry>& out) {
  if (a.label != b.label) {
    out.push_back({DiffKind::Renamed, a.path, "\"" + a.label + "\" -> \"" + b.label + "\""});
  }
  for (std::size_t i = 0; i < a.fields.size() && i < b.fields.size(); ++i) {
    if (a.fields[i] != b.fields[i]) {
      out.push_back({DiffKind::Relinked, a.path,
                     a.fields[i].first + ": \"" + a.fields[i].second + "\" -> \"" + b.fields[i].second +
                         "\""});
    }
  }
  std::vector<std::string> attributes;
  auto note_attribute = [&attributes](const TreeNode& node) {
    for (const TreeNode::Link& link : node.links) {
      if (std::find(attributes.begin(), attributes.end(), link.attribute) == attributes.end()) {
        attributes.push_back(link.attribute);
      }
    }
  };
  note_attribute(a);
  note_attribute(b);
  for (const std::string& attribute : attributes) {
    const std::string left = render_links(a, attribute, order_sensitive);
    const std::string right = render_links(b, attribute, order_sensitive);
    if (left != right) {
      out.push_back({DiffKind::Relinked, a.path, attribute + ": [" + left + "] -> [" + right + "]"});
    }
  }
  for (std::size_t g = 0; g < a.groups.size() && g < b.groups.size(); ++g) {
    diff_groups(a.groups[g], b.groups[g], order_sensitive, out);
  }
}

StructuralDiff diff_trees(const TreeNode& a, const TreeNode& b, DiffOptions options) {
  StructuralDiff result;
  diff_nodes(a, b, options.order_sensitive, result.entries);
  return result;
}

}  // namespace

std::string_view to_string(DiffKind kind) {
  switch (kind) {
    case DiffKind::Added: return "added";
    case DiffKind::Removed: return "removed";
    case DiffKind::Renamed: return "renamed";
    case DiffKind::Relinked: return "relinked";
  }
  return "unknown";
}

StructuralDiff diff(const pim::Model& a, const pim::Model& b, DiffOptions options) {
  return diff_trees(project(a), project(b), options);
}

StructuralDiff diff(const psm::Model& a, const psm::Model& b, DiffOptions options) {
  return diff_trees(project(a), project(b), options);
}

StructuralDiff diff_documents(std::string_view a, std::string_view b, DiffOptions options) {
  const ModelKind kind_a = sniff_kind(a);
  const ModelKind kind_b = sniff_kind(b);
  if (kind_a != kind_b) {
    throw Error(errc::kind_mismatch, "cannot compare a source-model document with a target-model document");
  }
  if (kind_a == ModelKind::Pim) return diff(parse_pim(a), parse_pim(b), options);
  return diff(parse_psm(a), parse_psm(b), options);
}

std::string format_diff(const StructuralDiff& diff) {
  std::string out;
  for (const DiffEntry& entry : diff.entries) {
    out += to_string(entry.kind);
    out += ' ';
    out += entry.path.empty() ? "(root)" : entry.path;
    out += ' ';
    out += entry.detail;
    out += '\n';
  }
  return out;
}

}  // namespace ntiers::io

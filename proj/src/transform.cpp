#include "ntiers/transform.hpp"

#include <optional>
#include <set>
#include <utility>

#include "ntiers/error.hpp"
#include "ntiers/names.hpp"
#include "ntiers/validate.hpp"

namespace ntiers::engine {

std::string_view to_string(Rule rule) {
  switch (rule) {
    case Rule::Pojo: return "pojo";
    case Rule::IDao: return "idao";
    case Rule::DaoImpl: return "daoimpl";
    case Rule::Dto: return "dto";
    case Rule::IService: return "iservice";
    case Rule::ServiceImpl: return "serviceimpl";
    case Rule::View: return "view";
    case Rule::Controller: return "controller";
  }
  return "unknown";
}

std::string format_trace(const TraceLog& trace) {
  std::string out;
  for (const TraceLink& link : trace.links) {
    out += to_string(link.rule);
    out += '\t';
    out += link.source.str();
    out += '\t';
    out += link.target.str();
    out += '\n';
  }
  return out;
}

namespace {

// Operation-name classification is a case-insensitive exact-token match:
// input casing of operation names is unconstrained.
bool is_remove(const std::string& name) { return ascii_lower(name) == "remove"; }
bool is_create(const std::string& name) { return ascii_lower(name) == "create"; }
bool is_update(const std::string& name) { return ascii_lower(name) == "update"; }

std::vector<psm::Method> method_declarations(const pim::Class& cls) {
  std::vector<psm::Method> methods;
  methods.reserve(cls.operations.size());
  for (const pim::Operation& operation : cls.operations) {
    methods.push_back({operation.name, operation.parameters});
  }
  return methods;
}

FragmentPath make_path(std::vector<FragmentPath::Segment> segments) {
  FragmentPath path;
  path.segments = std::move(segments);
  return path;
}

FragmentPath class_path(std::size_t index) { return make_path({{"class", index}}); }

}  // namespace

psm::Pojo rule_pojo(const pim::Class& cls) {
  psm::Pojo pojo;
  pojo.name = cls.name;
  pojo.attributes.reserve(cls.attributes.size());
  for (const pim::Attribute& attribute : cls.attributes) {
    pojo.attributes.push_back({attribute.name, attribute.type});
  }
  return pojo;
}

psm::Dao rule_idao(const pim::Class& cls) {
  psm::Dao dao;
  dao.name = "I" + cls.name + "Dao";
  dao.methods = method_declarations(cls);
  return dao;
}

psm::Index rule_daoimpl(const pim::Class& cls, psm::DaoPackage& dp) {
  psm::DaoImpl impl;
  impl.name = cls.name + "DaoImpl";
  const std::string wanted = "I" + cls.name + "Dao";
  for (psm::Index i = 0; i < dp.daos.size(); ++i) {
    if (dp.daos[i].name == wanted) impl.interfaces.push_back(i);
  }
  if (impl.interfaces.empty()) {
    throw Error(errc::missing_interface,
                "no dao interface named \"" + wanted + "\" exists for class " + cls.name);
  }
  const psm::Index index = dp.daoimpls.size();
  for (psm::Index i : impl.interfaces) dp.daos[i].implemented_by = index;
  dp.daoimpls.push_back(std::move(impl));
  return index;
}

psm::Index rule_dto(psm::Index pojo, psm::DaoPackage& dp, psm::BusinessPackage& bp) {
  psm::Pojo& source = dp.pojos.at(pojo);
  psm::Dto dto;
  dto.name = source.name + "DTO";
  dto.attributes = source.attributes;
  dto.pojo = pojo;
  const psm::Index index = bp.dtos.size();
  source.dto = index;
  bp.dtos.push_back(std::move(dto));
  return index;
}

psm::Service rule_iservice(const pim::Class& cls) {
  psm::Service service;
  service.name = "I" + cls.name + "Service";
  service.methods = method_declarations(cls);
  return service;
}

psm::Index rule_serviceimpl(const pim::Class& cls, psm::BusinessPackage& bp) {
  psm::ServiceImpl impl;
  impl.name = cls.name + "ServiceImpl";
  const std::string wanted = "I" + cls.name + "Service";
  for (psm::Index i = 0; i < bp.services.size(); ++i) {
    if (bp.services[i].name == wanted) impl.interfaces.push_back(i);
  }
  if (impl.interfaces.empty()) {
    throw Error(errc::missing_interface,
                "no service interface named \"" + wanted + "\" exists for class " + cls.name);
  }
  const psm::Index index = bp.serviceimpls.size();
  for (psm::Index i : impl.interfaces) bp.services[i].implemented_by = index;
  bp.serviceimpls.push_back(std::move(impl));
  return index;
}

psm::ViewPackage rule_view(const std::vector<pim::Class>& classes) {
  psm::ViewPackage vp;
  vp.name = view_package_name;
  for (const pim::Class& cls : classes) {
    for (const pim::Operation& operation : cls.operations) {
      if (is_remove(operation.name)) continue;
      vp.pages.push_back({capitalize_first(operation.name) + cls.name + "Page.jsp"});
    }
  }
  return vp;
}

psm::ControllerPackage rule_controller(const std::vector<pim::Class>& classes,
                                       const psm::ViewPackage& view) {
  psm::ControllerPackage cp;
  cp.name = controller_package_name;
  psm::ActionMapping& mapping = cp.mapping;

  auto find_page = [&view](const std::string& name) -> std::optional<psm::Index> {
    for (psm::Index i = 0; i < view.pages.size(); ++i) {
      if (view.pages[i].name == name) return i;
    }
    return std::nullopt;
  };

  for (const pim::Class& cls : classes) {
    const std::optional<psm::Index> display_page = find_page("Display" + cls.name + "Page.jsp");
    for (const pim::Operation& operation : cls.operations) {
      const std::string stem = capitalize_first(operation.name) + cls.name;

      std::optional<psm::Index> own_page;
      if (!is_remove(operation.name)) {
        own_page = find_page(stem + "Page.jsp");
        if (!own_page) {
          throw Error(errc::inconsistent_view, "view package lacks page \"" + stem +
                                                   "Page.jsp\" required for operation " + operation.name +
                                                   " of class " + cls.name);
        }
      }
      // The forward lands on the class's display page when one exists, else
      // on the operation's own page; remove without a display page gets none.
      const std::optional<psm::Index> forward = display_page ? display_page : own_page;

      psm::Action action;
      action.name = stem + "Action";
      if (forward) action.forward = psm::ActionForward{*forward};
      mapping.actions.push_back(std::move(action));

      if (is_create(operation.name) || is_update(operation.name)) {
        psm::Action end;
        end.name = stem + "EndAction";
        if (forward) end.forward = psm::ActionForward{*forward};
        const psm::Index end_index = mapping.actions.size();
        mapping.actions.push_back(std::move(end));

        psm::ActionForm form;
        form.name = stem + "Form";
        form.input = *own_page;
        form.attribute = end_index;
        mapping.actions[end_index].form = mapping.forms.size();
        mapping.forms.push_back(std::move(form));
      }
    }
  }
  return cp;
}

namespace {

template <typename T>
void check_generated_names(std::string_view feature, const std::vector<T>& elements) {
  std::set<std::string> names;
  for (const T& element : elements) {
    if (!names.insert(element.name).second) {
      throw Error(errc::generated_name_collision, "generated " + std::string(feature) + " name \"" +
                                                      element.name + "\" collides with an earlier one");
    }
  }
}

}  // namespace

TransformResult transform(const pim::Model& pim) {
  ValidationReport report = validate_pim(pim);
  if (!report.ok()) {
    throw ValidationError(errc::invalid_input, std::move(report), "source model fails validation");
  }

  TransformResult result;
  psm::Model& crud = result.psm;
  std::vector<TraceLink>& trace = result.trace.links;

  crud.name = std::string(root_name_prefix) + pim.name;
  crud.ui.name = ui_package_name;
  crud.business.name = business_package_name;
  crud.dao.name = dao_package_name;

  for (std::size_t c = 0; c < pim.classes.size(); ++c) {
    const pim::Class& cls = pim.classes[c];
    crud.dao.pojos.push_back(rule_pojo(cls));
    trace.push_back(
        {Rule::Pojo, class_path(c), make_path({{"dPack", {}}, {"pojo", crud.dao.pojos.size() - 1}})});
    crud.dao.daos.push_back(rule_idao(cls));
    trace.push_back(
        {Rule::IDao, class_path(c), make_path({{"dPack", {}}, {"dao", crud.dao.daos.size() - 1}})});
    const psm::Index impl = rule_daoimpl(cls, crud.dao);
    trace.push_back({Rule::DaoImpl, class_path(c), make_path({{"dPack", {}}, {"daoimpl", impl}})});
  }

  for (psm::Index p = 0; p < crud.dao.pojos.size(); ++p) {
    const psm::Index dto = rule_dto(p, crud.dao, crud.business);
    trace.push_back(
        {Rule::Dto, make_path({{"dPack", {}}, {"pojo", p}}), make_path({{"bPack", {}}, {"dto", dto}})});
  }

  for (std::size_t c = 0; c < pim.classes.size(); ++c) {
    const pim::Class& cls = pim.classes[c];
    crud.business.services.push_back(rule_iservice(cls));
    trace.push_back({Rule::IService, class_path(c),
                     make_path({{"bPack", {}}, {"services", crud.business.services.size() - 1}})});
    const psm::Index impl = rule_serviceimpl(cls, crud.business);
    trace.push_back({Rule::ServiceImpl, class_path(c), make_path({{"bPack", {}}, {"serviceimpl", impl}})});
  }

  crud.ui.view = rule_view(pim.classes);
  {
    std::size_t page = 0;
    for (std::size_t c = 0; c < pim.classes.size(); ++c) {
      for (const pim::Operation& operation : pim.classes[c].operations) {
        if (is_remove(operation.name)) continue;
        trace.push_back(
            {Rule::View, class_path(c), make_path({{"uPack", {}}, {"vPack", {}}, {"jsp", page}})});
        ++page;
      }
    }
  }

  crud.ui.controller = rule_controller(pim.classes, crud.ui.view);
  {
    std::size_t action = 0;
    std::size_t form = 0;
    auto action_path = [](std::size_t index) {
      return make_path({{"uPack", {}}, {"cPack", {}}, {"actionmapping", {}}, {"action", index}});
    };
    auto form_path = [](std::size_t index) {
      return make_path({{"uPack", {}}, {"cPack", {}}, {"actionmapping", {}}, {"form", index}});
    };
    for (std::size_t c = 0; c < pim.classes.size(); ++c) {
      for (const pim::Operation& operation : pim.classes[c].operations) {
        trace.push_back({Rule::Controller, class_path(c), action_path(action++)});
        if (is_create(operation.name) || is_update(operation.name)) {
          trace.push_back({Rule::Controller, class_path(c), action_path(action++)});
          trace.push_back({Rule::Controller, class_path(c), form_path(form++)});
        }
      }
    }
  }

  check_generated_names("pojo", crud.dao.pojos);
  check_generated_names("dao", crud.dao.daos);
  check_generated_names("daoimpl", crud.dao.daoimpls);
  check_generated_names("dto", crud.business.dtos);
  check_generated_names("services", crud.business.services);
  check_generated_names("serviceimpl", crud.business.serviceimpls);
  check_generated_names("jsp", crud.ui.view.pages);
  check_generated_names("action", crud.ui.controller.mapping.actions);
  check_generated_names("form", crud.ui.controller.mapping.forms);

  return result;
}

}  // namespace ntiers::engine

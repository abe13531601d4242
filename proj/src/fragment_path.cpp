#include "ntiers/fragment_path.hpp"

#include <charconv>
#include <type_traits>

#include "ntiers/error.hpp"

namespace ntiers {

namespace {

[[noreturn]] void fail_parse(std::string_view text, const std::string& why) {
  throw Error(errc::unresolved_path, "malformed fragment path \"" + std::string(text) + "\": " + why);
}

[[noreturn]] void fail_resolve(const FragmentPath& path, const std::string& why) {
  throw Error(errc::unresolved_path, "cannot resolve \"" + path.str() + "\": " + why);
}

}  // namespace

std::string FragmentPath::str() const {
  if (segments.empty()) return "";
  std::string text = "/";
  for (const Segment& segment : segments) {
    text += "/@";
    text += segment.feature;
    if (segment.index) {
      text += '.';
      text += std::to_string(*segment.index);
    }
  }
  return text;
}

FragmentPath FragmentPath::parse(std::string_view text) {
  FragmentPath path;
  if (text.empty()) return path;
  if (text.substr(0, 3) != "//@") fail_parse(text, "expected \"//@\" prefix");
  std::string_view rest = text.substr(1);
  while (!rest.empty()) {
    if (rest.substr(0, 2) != "/@") fail_parse(text, "expected \"/@\" before segment");
    rest.remove_prefix(2);
    std::size_t end = rest.find('/');
    std::string_view segment_text = rest.substr(0, end);
    rest = end == std::string_view::npos ? std::string_view{} : rest.substr(end);

    Segment segment;
    if (std::size_t dot = segment_text.rfind('.'); dot != std::string_view::npos) {
      std::string_view digits = segment_text.substr(dot + 1);
      std::size_t value = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
      if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
        fail_parse(text, "bad index \"" + std::string(digits) + "\"");
      }
      segment.feature = std::string(segment_text.substr(0, dot));
      segment.index = value;
    } else {
      segment.feature = std::string(segment_text);
    }
    if (segment.feature.empty()) fail_parse(text, "empty feature name");
    path.segments.push_back(std::move(segment));
  }
  return path;
}

namespace {

// A single-valued feature admits no index or index 0; anything else is out
// of range.
void check_single(const FragmentPath& path, const FragmentPath::Segment& segment) {
  if (segment.index && *segment.index != 0) {
    fail_resolve(path, "index " + std::to_string(*segment.index) + " out of range for single-valued feature \"" +
                           segment.feature + "\"");
  }
}

template <typename T>
const T& pick(const FragmentPath& path, const FragmentPath::Segment& segment, const std::vector<T>& list) {
  if (!segment.index) fail_resolve(path, "feature \"" + segment.feature + "\" requires an index");
  if (*segment.index >= list.size()) {
    fail_resolve(path, "index " + std::to_string(*segment.index) + " out of range for feature \"" +
                           segment.feature + "\" (size " + std::to_string(list.size()) + ")");
  }
  return list[*segment.index];
}

struct PimResolver {
  const FragmentPath& path;

  PimElementRef step(const pim::Package* pkg, const FragmentPath::Segment& seg) const {
    if (seg.feature == "class") return &pick(path, seg, pkg->classes);
    if (seg.feature == "datatype") return &pick(path, seg, pkg->datatypes);
    return unknown(seg);
  }
  PimElementRef step(const pim::Class* cls, const FragmentPath::Segment& seg) const {
    if (seg.feature == "attribute") return &pick(path, seg, cls->attributes);
    if (seg.feature == "operation") return &pick(path, seg, cls->operations);
    return unknown(seg);
  }
  PimElementRef step(const pim::Operation* op, const FragmentPath::Segment& seg) const {
    if (seg.feature == "parameter") return &pick(path, seg, op->parameters);
    return unknown(seg);
  }
  template <typename T>
  PimElementRef step(const T*, const FragmentPath::Segment& seg) const {
    return unknown(seg);
  }
  [[noreturn]] PimElementRef unknown(const FragmentPath::Segment& seg) const {
    fail_resolve(path, "unknown feature \"" + seg.feature + "\"");
  }
};

struct PsmResolver {
  const FragmentPath& path;

  PsmElementRef step(const psm::Project* root, const FragmentPath::Segment& seg) const {
    if (seg.feature == "uPack") return (check_single(path, seg), &root->ui);
    if (seg.feature == "bPack") return (check_single(path, seg), &root->business);
    if (seg.feature == "dPack") return (check_single(path, seg), &root->dao);
    return unknown(seg);
  }
  PsmElementRef step(const psm::UiPackage* ui, const FragmentPath::Segment& seg) const {
    if (seg.feature == "vPack") return (check_single(path, seg), &ui->view);
    if (seg.feature == "cPack") return (check_single(path, seg), &ui->controller);
    return unknown(seg);
  }
  PsmElementRef step(const psm::ViewPackage* view, const FragmentPath::Segment& seg) const {
    if (seg.feature == "jsp") return &pick(path, seg, view->pages);
    return unknown(seg);
  }
  PsmElementRef step(const psm::ControllerPackage* controller, const FragmentPath::Segment& seg) const {
    if (seg.feature == "actionmapping") return (check_single(path, seg), &controller->mapping);
    return unknown(seg);
  }
  PsmElementRef step(const psm::ActionMapping* mapping, const FragmentPath::Segment& seg) const {
    if (seg.feature == "action") return &pick(path, seg, mapping->actions);
    if (seg.feature == "form") return &pick(path, seg, mapping->forms);
    return unknown(seg);
  }
  PsmElementRef step(const psm::BusinessPackage* business, const FragmentPath::Segment& seg) const {
    if (seg.feature == "services") return &pick(path, seg, business->services);
    if (seg.feature == "serviceimpl") return &pick(path, seg, business->serviceimpls);
    if (seg.feature == "dto") return &pick(path, seg, business->dtos);
    return unknown(seg);
  }
  PsmElementRef step(const psm::DaoPackage* dao, const FragmentPath::Segment& seg) const {
    if (seg.feature == "dao") return &pick(path, seg, dao->daos);
    if (seg.feature == "pojo") return &pick(path, seg, dao->pojos);
    if (seg.feature == "daoimpl") return &pick(path, seg, dao->daoimpls);
    return unknown(seg);
  }
  template <typename T>
  PsmElementRef step(const T*, const FragmentPath::Segment& seg) const {
    return unknown(seg);
  }
  [[noreturn]] PsmElementRef unknown(const FragmentPath::Segment& seg) const {
    fail_resolve(path, "unknown feature \"" + seg.feature + "\"");
  }
};

}  // namespace

PimElementRef resolve_fragment(const pim::Model& model, const FragmentPath& path) {
  PimElementRef current = &model;
  PimResolver resolver{path};
  for (const auto& segment : path.segments) {
    current = std::visit([&](auto* element) { return resolver.step(element, segment); }, current);
  }
  return current;
}

PsmElementRef resolve_fragment(const psm::Model& model, const FragmentPath& path) {
  PsmElementRef current = &model;
  PsmResolver resolver{path};
  for (const auto& segment : path.segments) {
    current = std::visit([&](auto* element) { return resolver.step(element, segment); }, current);
  }
  return current;
}

namespace {

FragmentPath::Segment at(std::string_view feature, std::size_t index) {
  return {std::string(feature), index};
}

FragmentPath::Segment at(std::string_view feature) { return {std::string(feature), std::nullopt}; }

template <typename Ref, typename T>
void emit(std::vector<std::pair<FragmentPath, Ref>>& out, FragmentPath path, const T* element) {
  out.emplace_back(std::move(path), Ref(element));
}

FragmentPath extend(const FragmentPath& base, FragmentPath::Segment segment) {
  FragmentPath path = base;
  path /= std::move(segment);
  return path;
}

}  // namespace

std::vector<std::pair<FragmentPath, PimElementRef>> enumerate_elements(const pim::Model& model) {
  std::vector<std::pair<FragmentPath, PimElementRef>> out;
  FragmentPath root;
  emit(out, root, &model);
  for (std::size_t c = 0; c < model.classes.size(); ++c) {
    const pim::Class& cls = model.classes[c];
    FragmentPath class_path = extend(root, at("class", c));
    emit(out, class_path, &cls);
    for (std::size_t a = 0; a < cls.attributes.size(); ++a) {
      emit(out, extend(class_path, at("attribute", a)), &cls.attributes[a]);
    }
    for (std::size_t o = 0; o < cls.operations.size(); ++o) {
      const pim::Operation& op = cls.operations[o];
      FragmentPath op_path = extend(class_path, at("operation", o));
      emit(out, op_path, &op);
      for (std::size_t p = 0; p < op.parameters.size(); ++p) {
        emit(out, extend(op_path, at("parameter", p)), &op.parameters[p]);
      }
    }
  }
  for (std::size_t d = 0; d < model.datatypes.size(); ++d) {
    emit(out, extend(root, at("datatype", d)), &model.datatypes[d]);
  }
  return out;
}

std::vector<std::pair<FragmentPath, PsmElementRef>> enumerate_elements(const psm::Model& model) {
  std::vector<std::pair<FragmentPath, PsmElementRef>> out;
  FragmentPath root;
  emit(out, root, &model);

  FragmentPath ui_path = extend(root, at("uPack"));
  emit(out, ui_path, &model.ui);
  FragmentPath view_path = extend(ui_path, at("vPack"));
  emit(out, view_path, &model.ui.view);
  for (std::size_t i = 0; i < model.ui.view.pages.size(); ++i) {
    emit(out, extend(view_path, at("jsp", i)), &model.ui.view.pages[i]);
  }
  FragmentPath controller_path = extend(ui_path, at("cPack"));
  emit(out, controller_path, &model.ui.controller);
  FragmentPath mapping_path = extend(controller_path, at("actionmapping"));
  emit(out, mapping_path, &model.ui.controller.mapping);
  for (std::size_t i = 0; i < model.ui.controller.mapping.actions.size(); ++i) {
    emit(out, extend(mapping_path, at("action", i)), &model.ui.controller.mapping.actions[i]);
  }
  for (std::size_t i = 0; i < model.ui.controller.mapping.forms.size(); ++i) {
    emit(out, extend(mapping_path, at("form", i)), &model.ui.controller.mapping.forms[i]);
  }

  FragmentPath business_path = extend(root, at("bPack"));
  emit(out, business_path, &model.business);
  for (std::size_t i = 0; i < model.business.services.size(); ++i) {
    emit(out, extend(business_path, at("services", i)), &model.business.services[i]);
  }
  for (std::size_t i = 0; i < model.business.serviceimpls.size(); ++i) {
    emit(out, extend(business_path, at("serviceimpl", i)), &model.business.serviceimpls[i]);
  }
  for (std::size_t i = 0; i < model.business.dtos.size(); ++i) {
    emit(out, extend(business_path, at("dto", i)), &model.business.dtos[i]);
  }

  FragmentPath dao_path = extend(root, at("dPack"));
  emit(out, dao_path, &model.dao);
  for (std::size_t i = 0; i < model.dao.daos.size(); ++i) {
    emit(out, extend(dao_path, at("dao", i)), &model.dao.daos[i]);
  }
  for (std::size_t i = 0; i < model.dao.pojos.size(); ++i) {
    emit(out, extend(dao_path, at("pojo", i)), &model.dao.pojos[i]);
  }
  for (std::size_t i = 0; i < model.dao.daoimpls.size(); ++i) {
    emit(out, extend(dao_path, at("daoimpl", i)), &model.dao.daoimpls[i]);
  }
  return out;
}

namespace {

template <typename Model, typename Ref>
FragmentPath path_of_impl(const Model& model, const Ref& element) {
  for (auto& [path, ref] : enumerate_elements(model)) {
    if (ref == element) return path;
  }
  throw Error(errc::detached_element,
              "element is not contained in the given model root");
}

}  // namespace

FragmentPath fragment_path_of(const pim::Model& model, const PimElementRef& element) {
  return path_of_impl(model, element);
}

FragmentPath fragment_path_of(const psm::Model& model, const PsmElementRef& element) {
  return path_of_impl(model, element);
}

std::string_view element_kind(const PimElementRef& ref) {
  struct Visitor {
    std::string_view operator()(const pim::Package*) const { return "package"; }
    std::string_view operator()(const pim::Class*) const { return "class"; }
    std::string_view operator()(const pim::DataType*) const { return "datatype"; }
    std::string_view operator()(const pim::Attribute*) const { return "attribute"; }
    std::string_view operator()(const pim::Operation*) const { return "operation"; }
    std::string_view operator()(const pim::Parameter*) const { return "parameter"; }
  };
  return std::visit(Visitor{}, ref);
}

std::string_view element_kind(const PsmElementRef& ref) {
  struct Visitor {
    std::string_view operator()(const psm::Project*) const { return "project"; }
    std::string_view operator()(const psm::UiPackage*) const { return "uPack"; }
    std::string_view operator()(const psm::ViewPackage*) const { return "vPack"; }
    std::string_view operator()(const psm::ControllerPackage*) const { return "cPack"; }
    std::string_view operator()(const psm::ActionMapping*) const { return "actionmapping"; }
    std::string_view operator()(const psm::JspPage*) const { return "jsp"; }
    std::string_view operator()(const psm::Action*) const { return "action"; }
    std::string_view operator()(const psm::ActionForm*) const { return "form"; }
    std::string_view operator()(const psm::BusinessPackage*) const { return "bPack"; }
    std::string_view operator()(const psm::Service*) const { return "services"; }
    std::string_view operator()(const psm::ServiceImpl*) const { return "serviceimpl"; }
    std::string_view operator()(const psm::Dto*) const { return "dto"; }
    std::string_view operator()(const psm::DaoPackage*) const { return "dPack"; }
    std::string_view operator()(const psm::Dao*) const { return "dao"; }
    std::string_view operator()(const psm::Pojo*) const { return "pojo"; }
    std::string_view operator()(const psm::DaoImpl*) const { return "daoimpl"; }
  };
  return std::visit(Visitor{}, ref);
}

std::string element_name(const PimElementRef& ref) {
  return std::visit([](auto* element) { return element->name; }, ref);
}

std::string element_name(const PsmElementRef& ref) {
  return std::visit(
      [](auto* element) -> std::string {
        if constexpr (std::is_same_v<std::remove_cvref_t<decltype(element)>,
                                     const psm::ActionMapping*>) {
          return "";
        } else {
          return element->name;
        }
      },
      ref);
}

}  // namespace ntiers

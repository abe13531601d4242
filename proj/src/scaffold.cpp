#include "ntiers/scaffold.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <system_error>
#include <utility>

#include "ntiers/error.hpp"
#include "ntiers/validate.hpp"

namespace ntiers::scaffold {

namespace fs = std::filesystem;

std::string_view to_string(Kind kind) {
  switch (kind) {
    case Kind::Pojo: return "pojo";
    case Kind::Dao: return "dao";
    case Kind::DaoImpl: return "daoimpl";
    case Kind::Dto: return "dto";
    case Kind::Service: return "service";
    case Kind::ServiceImpl: return "serviceimpl";
    case Kind::Jsp: return "jsp";
    case Kind::Config: return "config";
  }
  return "unknown";
}

namespace {

constexpr std::array<Kind, kind_count> all_kinds = {Kind::Pojo,    Kind::Dao,         Kind::DaoImpl,
                                                    Kind::Dto,     Kind::Service,     Kind::ServiceImpl,
                                                    Kind::Jsp,     Kind::Config};

}  // namespace

TemplateSet TemplateSet::defaults() {
  TemplateSet set;
  set.set(Kind::Pojo, "pojo {name}\npackage {package}\n{attributes}");
  set.set(Kind::Dao, "dao interface {name}\npackage {package}\n{methods}");
  set.set(Kind::DaoImpl, "dao implementation {name}\npackage {package}\nimplements {interface}\n");
  set.set(Kind::Dto, "dto {name}\npackage {package}\n{attributes}");
  set.set(Kind::Service, "service interface {name}\npackage {package}\n{methods}");
  set.set(Kind::ServiceImpl,
          "service implementation {name}\npackage {package}\nimplements {interface}\n");
  set.set(Kind::Jsp, "jsp page {name}\npackage {package}\n");
  set.set(Kind::Config, "controller configuration for {name}\npackage {package}\n{methods}{attributes}");
  return set;
}

TemplateSet TemplateSet::load(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw Error(errc::io_failure, "template directory " + dir.string() + " is not readable");
  }
  TemplateSet set = defaults();
  for (Kind kind : all_kinds) {
    const fs::path file = dir / (std::string(to_string(kind)) + ".template");
    if (!fs::exists(file, ec)) continue;
    std::ifstream in(file, std::ios::binary);
    if (!in) throw Error(errc::io_failure, "cannot read template file " + file.string());
    std::ostringstream text;
    text << in.rdbuf();
    set.set(kind, std::move(text).str());
  }
  return set;
}

const std::string& TemplateSet::text(Kind kind) const {
  return texts_[static_cast<std::size_t>(kind)];
}

void TemplateSet::set(Kind kind, std::string text) {
  texts_[static_cast<std::size_t>(kind)] = std::move(text);
}

std::string format_manifest(const ScaffoldManifest& manifest) {
  std::string out;
  for (const ScaffoldEntry& entry : manifest.entries) {
    out += entry.path;
    out += '\t';
    out += entry.source.str();
    out += '\t';
    out += std::to_string(entry.size);
    out += '\n';
  }
  return out;
}

namespace {

using Values = std::map<std::string, std::string, std::less<>>;

std::string render(Kind kind, const std::string& template_text, const Values& values) {
  std::string out;
  std::size_t pos = 0;
  while (pos < template_text.size()) {
    const char c = template_text[pos];
    if (c != '{') {
      out.push_back(c);
      ++pos;
      continue;
    }
    std::size_t end = pos + 1;
    while (end < template_text.size() &&
           std::islower(static_cast<unsigned char>(template_text[end]))) {
      ++end;
    }
    if (end == pos + 1 || end >= template_text.size() || template_text[end] != '}') {
      out.push_back(c);
      ++pos;
      continue;
    }
    const std::string_view token(template_text.data() + pos + 1, end - pos - 1);
    auto found = values.find(token);
    if (found == values.end()) {
      throw Error(errc::template_error, "template for kind \"" + std::string(to_string(kind)) +
                                            "\" uses unresolvable placeholder {" + std::string(token) +
                                            "}");
    }
    out += found->second;
    pos = end + 1;
  }
  return out;
}

std::string attribute_lines(const std::vector<psm::Attribute>& attributes) {
  std::string out;
  for (const psm::Attribute& attribute : attributes) {
    out += "# attribute " + attribute.name + ": " + attribute.type + "\n";
  }
  return out;
}

std::string method_lines(const std::vector<psm::Method>& methods) {
  std::string out;
  for (const psm::Method& method : methods) {
    out += "# method " + method.name + "(";
    for (std::size_t p = 0; p < method.parameters.size(); ++p) {
      const pim::Parameter& parameter = method.parameters[p];
      if (p != 0) out += ", ";
      out += parameter.name + ": " + parameter.type + " " + std::string(to_string(parameter.direction));
    }
    out += ")\n";
  }
  return out;
}

template <typename T>
std::string joined_names(const std::vector<T>& elements, const std::vector<psm::Index>& indices) {
  std::string out;
  for (psm::Index index : indices) {
    if (!out.empty()) out += ", ";
    out += index < elements.size() ? elements[index].name : "<out-of-range>";
  }
  return out;
}

FragmentPath make_path(std::vector<FragmentPath::Segment> segments) {
  FragmentPath path;
  path.segments = std::move(segments);
  return path;
}

/// Element names become file names; reject anything that would leave the
/// output directory.
void check_file_name(const std::string& name) {
  if (name.empty() || name == "." || name == ".." || name.find('/') != std::string::npos ||
      name.find('\\') != std::string::npos) {
    throw Error(errc::io_failure, "element name \"" + name + "\" is not usable as a file name");
  }
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(errc::io_failure, "cannot open " + path.string() + " for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw Error(errc::io_failure, "cannot write " + path.string());
}

void make_directory(const fs::path& path) {
  std::error_code ec;
  fs::create_directories(path, ec);
  if (ec || !fs::is_directory(path)) {
    throw Error(errc::io_failure, "cannot create directory " + path.string());
  }
}

}  // namespace

ScaffoldManifest emit_scaffold(const psm::Model& model, const TemplateSet& templates,
                               const fs::path& out_dir) {
  ValidationReport report = validate_psm(model);
  if (!report.ok()) {
    throw ValidationError(errc::invalid_model, std::move(report),
                          "target model fails validation, refusing to scaffold");
  }

  make_directory(out_dir);
  make_directory(out_dir / "dao");
  make_directory(out_dir / "business");
  make_directory(out_dir / "view");

  ScaffoldManifest manifest;
  auto emit = [&](Kind kind, std::string_view sub_dir, const std::string& file_name,
                  FragmentPath source, const Values& values) {
    check_file_name(file_name);
    const std::string content = render(kind, templates.text(kind), values);
    std::string relative = sub_dir.empty() ? file_name : std::string(sub_dir) + "/" + file_name;
    write_file(out_dir / relative, content);
    manifest.entries.push_back({std::move(relative), std::move(source), content.size()});
  };

  for (std::size_t i = 0; i < model.dao.daos.size(); ++i) {
    const psm::Dao& dao = model.dao.daos[i];
    emit(Kind::Dao, "dao", dao.name + ".dao.txt", make_path({{"dPack", {}}, {"dao", i}}),
         {{"name", dao.name}, {"package", model.dao.name}, {"methods", method_lines(dao.methods)}});
  }
  for (std::size_t i = 0; i < model.dao.pojos.size(); ++i) {
    const psm::Pojo& pojo = model.dao.pojos[i];
    emit(Kind::Pojo, "dao", pojo.name + ".pojo.txt", make_path({{"dPack", {}}, {"pojo", i}}),
         {{"name", pojo.name},
          {"package", model.dao.name},
          {"attributes", attribute_lines(pojo.attributes)}});
  }
  for (std::size_t i = 0; i < model.dao.daoimpls.size(); ++i) {
    const psm::DaoImpl& impl = model.dao.daoimpls[i];
    emit(Kind::DaoImpl, "dao", impl.name + ".daoimpl.txt", make_path({{"dPack", {}}, {"daoimpl", i}}),
         {{"name", impl.name},
          {"package", model.dao.name},
          {"interface", joined_names(model.dao.daos, impl.interfaces)}});
  }

  for (std::size_t i = 0; i < model.business.services.size(); ++i) {
    const psm::Service& service = model.business.services[i];
    emit(Kind::Service, "business", service.name + ".service.txt",
         make_path({{"bPack", {}}, {"services", i}}),
         {{"name", service.name},
          {"package", model.business.name},
          {"methods", method_lines(service.methods)}});
  }
  for (std::size_t i = 0; i < model.business.serviceimpls.size(); ++i) {
    const psm::ServiceImpl& impl = model.business.serviceimpls[i];
    emit(Kind::ServiceImpl, "business", impl.name + ".serviceimpl.txt",
         make_path({{"bPack", {}}, {"serviceimpl", i}}),
         {{"name", impl.name},
          {"package", model.business.name},
          {"interface", joined_names(model.business.services, impl.interfaces)}});
  }
  for (std::size_t i = 0; i < model.business.dtos.size(); ++i) {
    const psm::Dto& dto = model.business.dtos[i];
    emit(Kind::Dto, "business", dto.name + ".dto.txt", make_path({{"bPack", {}}, {"dto", i}}),
         {{"name", dto.name},
          {"package", model.business.name},
          {"attributes", attribute_lines(dto.attributes)}});
  }

  for (std::size_t i = 0; i < model.ui.view.pages.size(); ++i) {
    const psm::JspPage& page = model.ui.view.pages[i];
    emit(Kind::Jsp, "view", page.name, make_path({{"uPack", {}}, {"vPack", {}}, {"jsp", i}}),
         {{"name", page.name}, {"package", model.ui.view.name}});
  }

  const psm::ActionMapping& mapping = model.ui.controller.mapping;
  std::string actions;
  for (const psm::Action& action : mapping.actions) {
    actions += "# action " + action.name;
    actions += " forward=";
    actions += action.forward && action.forward->target < model.ui.view.pages.size()
                   ? model.ui.view.pages[action.forward->target].name
                   : "-";
    actions += " form=";
    actions += action.form && *action.form < mapping.forms.size() ? mapping.forms[*action.form].name
                                                                  : "-";
    actions += '\n';
  }
  std::string forms;
  for (const psm::ActionForm& form : mapping.forms) {
    forms += "# form " + form.name;
    forms += " input=";
    forms += form.input < model.ui.view.pages.size() ? model.ui.view.pages[form.input].name : "-";
    forms += " attribute=";
    forms += form.attribute < mapping.actions.size() ? mapping.actions[form.attribute].name : "-";
    forms += '\n';
  }
  emit(Kind::Config, "", model.name + ".config.txt",
       make_path({{"uPack", {}}, {"cPack", {}}, {"actionmapping", {}}}),
       {{"name", model.name},
        {"package", model.ui.controller.name},
        {"methods", std::move(actions)},
        {"attributes", std::move(forms)}});

  return manifest;
}

}  // namespace ntiers::scaffold

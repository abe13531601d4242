#include "ntiers/cli.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <utility>

#include "ntiers/error.hpp"
#include "ntiers/model_io.hpp"
#include "ntiers/scaffold.hpp"
#include "ntiers/transform.hpp"
#include "ntiers/validate.hpp"

namespace ntiers::cli {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(errc::io_failure, "cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  if (in.bad()) throw Error(errc::io_failure, "cannot read " + path.string());
  return std::move(text).str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(errc::io_failure, "cannot open " + path.string() + " for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw Error(errc::io_failure, "cannot write " + path.string());
}

std::string display_path(const FragmentPath& path) {
  std::string text = path.str();
  return text.empty() ? "(root)" : text;
}

void print_report(const ValidationReport& report, std::ostream& err) {
  for (const Diagnostic& diagnostic : report.diagnostics) {
    err << to_string(diagnostic.severity) << ' ' << display_path(diagnostic.path) << ' '
        << diagnostic.code << ' ' << diagnostic.message << '\n';
  }
}

template <typename Body>
int run_checked(std::ostream& err, Body body) {
  try {
    return body();
  } catch (const ValidationError& error) {
    print_report(error.report(), err);
    return exit_validation;
  } catch (const std::exception& error) {
    err << "error: " << error.what() << '\n';
    return exit_io;
  }
}

}  // namespace

int cmd_transform(const TransformArgs& args, std::ostream& out, std::ostream& err) {
  return run_checked(err, [&] {
    const pim::Model pim = io::parse_pim(read_file(args.input));
    engine::TransformResult result = engine::transform(pim);
    io::SerializeOptions options;
    options.full = !args.fig9_compat;
    write_file(args.output, io::serialize_psm(result.psm, options));
    if (args.trace) write_file(*args.trace, engine::format_trace(result.trace));
    out << "classes: " << pim.classes.size() << '\n'
        << "pojos: " << result.psm.dao.pojos.size() << '\n'
        << "pages: " << result.psm.ui.view.pages.size() << '\n'
        << "actions: " << result.psm.ui.controller.mapping.actions.size() << '\n';
    return exit_ok;
  });
}

int cmd_validate(const ValidateArgs& args, std::ostream& out, std::ostream& err) {
  (void)out;
  return run_checked(err, [&] {
    const std::string document = read_file(args.input);
    if (args.kind == "pim") {
      io::parse_pim(document);
      return exit_ok;
    }
    if (args.kind == "psm") {
      const ValidationReport report = validate_psm(io::parse_psm(document));
      if (!report.ok()) {
        print_report(report, err);
        return exit_validation;
      }
      return exit_ok;
    }
    throw Error(errc::invalid_input, "kind must be \"pim\" or \"psm\", got \"" + args.kind + "\"");
  });
}

namespace {

template <typename T>
void print_feature(std::ostream& out, std::string_view feature, const std::vector<T>& elements) {
  out << feature << " (" << elements.size() << "):";
  for (const T& element : elements) out << ' ' << element.name;
  out << '\n';
}

}  // namespace

int cmd_inspect(const InspectArgs& args, std::ostream& out, std::ostream& err) {
  return run_checked(err, [&] {
    const psm::Model model = io::parse_psm(read_file(args.input));
    out << "name: " << model.name << '\n';
    print_feature(out, "jsp", model.ui.view.pages);
    print_feature(out, "action", model.ui.controller.mapping.actions);
    print_feature(out, "form", model.ui.controller.mapping.forms);
    print_feature(out, "services", model.business.services);
    print_feature(out, "serviceimpl", model.business.serviceimpls);
    print_feature(out, "dto", model.business.dtos);
    print_feature(out, "dao", model.dao.daos);
    print_feature(out, "pojo", model.dao.pojos);
    print_feature(out, "daoimpl", model.dao.daoimpls);
    return exit_ok;
  });
}

int cmd_diff(const DiffArgs& args, std::ostream& out, std::ostream& err) {
  return run_checked(err, [&] {
    io::DiffOptions options;
    options.order_sensitive = !args.order_insensitive;
    const io::StructuralDiff result =
        io::diff_documents(read_file(args.left), read_file(args.right), options);
    out << io::format_diff(result);
    return result.empty() ? exit_ok : exit_validation;
  });
}

int cmd_scaffold(const ScaffoldArgs& args, std::ostream& out, std::ostream& err) {
  return run_checked(err, [&] {
    const psm::Model model = io::parse_psm(read_file(args.input));
    const scaffold::TemplateSet templates =
        args.templates ? scaffold::TemplateSet::load(*args.templates) : scaffold::TemplateSet::defaults();
    const scaffold::ScaffoldManifest manifest = scaffold::emit_scaffold(model, templates, args.out_dir);
    out << "files: " << manifest.entries.size() << '\n';
    if (args.print_manifest) out << scaffold::format_manifest(manifest);
    return exit_ok;
  });
}

}  // namespace ntiers::cli

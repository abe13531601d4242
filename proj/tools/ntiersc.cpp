#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "ntiers/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"N-tiers model compiler: transforms a platform-independent class model into a "
               "layered platform-specific model, with validation, inspection, structural diff, "
               "and code scaffolding"};
  app.require_subcommand(1);

  ntiers::cli::TransformArgs transform_args;
  std::string transform_trace;
  bool full = false;
  CLI::App* transform = app.add_subcommand("transform", "Transform a source model into a target model");
  transform->add_option("input", transform_args.input, "source model document")->required();
  transform->add_option("-o,--out", transform_args.output, "target model document to write")->required();
  transform->add_option("--trace", transform_trace, "also write the rule-application trace to this file");
  CLI::Option* full_flag = transform->add_flag(
      "--full", full, "emit attribute and method declarations (the default shape)");
  CLI::Option* compat_flag = transform->add_flag(
      "--fig9-compat", transform_args.fig9_compat,
      "emit the name-only compatibility shape without attribute and method declarations");
  full_flag->excludes(compat_flag);
  compat_flag->excludes(full_flag);

  ntiers::cli::ValidateArgs validate_args;
  CLI::App* validate = app.add_subcommand("validate", "Check a model document for well-formedness");
  validate->add_option("input", validate_args.input, "model document")->required();
  validate->add_option("--kind", validate_args.kind, "model kind of the document")
      ->required()
      ->check(CLI::IsMember({"pim", "psm"}));

  ntiers::cli::InspectArgs inspect_args;
  CLI::App* inspect = app.add_subcommand("inspect", "Print per-feature counts and names of a target model");
  inspect->add_option("input", inspect_args.input, "target model document")->required();

  ntiers::cli::DiffArgs diff_args;
  CLI::App* diff = app.add_subcommand("diff", "Structurally compare two model documents of the same kind");
  diff->add_option("left", diff_args.left, "first model document")->required();
  diff->add_option("right", diff_args.right, "second model document")->required();
  diff->add_flag("--order-insensitive", diff_args.order_insensitive,
                 "pair elements by name instead of position");

  ntiers::cli::ScaffoldArgs scaffold_args;
  std::string scaffold_templates;
  CLI::App* scaffold = app.add_subcommand("scaffold", "Emit stub source files from a target model");
  scaffold->add_option("input", scaffold_args.input, "target model document")->required();
  scaffold->add_option("-o,--out", scaffold_args.out_dir, "output directory")->required();
  scaffold->add_option("--templates", scaffold_templates,
                       "directory of <kind>.template files overriding the built-in templates");
  scaffold->add_flag("--manifest", scaffold_args.print_manifest,
                     "print the full manifest after the summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error);
    return code == 0 ? ntiers::cli::exit_ok : ntiers::cli::exit_io;
  }

  if (!transform_trace.empty()) transform_args.trace = transform_trace;
  if (!scaffold_templates.empty()) scaffold_args.templates = scaffold_templates;

  if (transform->parsed()) return ntiers::cli::cmd_transform(transform_args, std::cout, std::cerr);
  if (validate->parsed()) return ntiers::cli::cmd_validate(validate_args, std::cout, std::cerr);
  if (inspect->parsed()) return ntiers::cli::cmd_inspect(inspect_args, std::cout, std::cerr);
  if (diff->parsed()) return ntiers::cli::cmd_diff(diff_args, std::cout, std::cerr);
  if (scaffold->parsed()) return ntiers::cli::cmd_scaffold(scaffold_args, std::cout, std::cerr);
  return ntiers::cli::exit_io;
}

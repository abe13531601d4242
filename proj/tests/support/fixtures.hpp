#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ntiers/pim.hpp"

namespace ntiers::testing {

std::filesystem::path fixture_dir();
std::filesystem::path fixture_path(std::string_view name);
std::string read_fixture(std::string_view name);
std::string read_text_file(const std::filesystem::path& path);

/// Fresh empty directory under the test working directory.
std::filesystem::path fresh_dir(std::string_view name);

/// In-memory twin of fixtures/laboratory_pim.xml.
pim::Model laboratory_pim();

/// Builders for small hand-rolled models. make_class gives every operation
/// one canonical parameter so method-fidelity checks have something to copy.
pim::Class make_class(std::string name, std::vector<std::string> operation_names,
                      std::vector<pim::Attribute> attributes = {});
pim::Model make_model(std::string name, std::vector<pim::Class> classes);

}  // namespace ntiers::testing

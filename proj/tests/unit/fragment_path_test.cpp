#include "ntiers/fragment_path.hpp"

#include <random>
#include <variant>

#include "doctest.h"
#include "ntiers/error.hpp"
#include "ntiers/transform.hpp"
#include "support/fixtures.hpp"
#include "support/random_model.hpp"

using namespace ntiers;
using ntiers::engine::transform;

TEST_CASE("fragment paths print and parse losslessly") {
  const FragmentPath root;
  CHECK(root.str() == "");
  CHECK(FragmentPath::parse("") == root);

  FragmentPath path;
  path /= {"bPack", std::nullopt};
  path /= {"services", 0};
  CHECK(path.str() == "//@bPack/@services.0");
  CHECK(FragmentPath::parse("//@bPack/@services.0") == path);

  FragmentPath nested;
  nested /= {"uPack", std::nullopt};
  nested /= {"cPack", std::nullopt};
  nested /= {"actionmapping", std::nullopt};
  nested /= {"action", 17};
  CHECK(FragmentPath::parse(nested.str()) == nested);
}

TEST_CASE("malformed fragment text is rejected") {
  for (const char* bad : {"/", "//", "//@", "//bPack", "//@bPack/", "//@bPack//@dao.0",
                          "//@dao.", "//@dao.x", "//@dao.1x", "@dao.1", "//@dao.1 "}) {
    CHECK_THROWS_AS(FragmentPath::parse(bad), Error);
  }
  try {
    FragmentPath::parse("//@");
  } catch (const Error& error) {
    CHECK(error.code() == errc::unresolved_path);
  }
}

TEST_CASE("resolution follows containment features from the root") {
  const auto result = transform(testing::laboratory_pim());
  const psm::Model& model = result.psm;

  const auto root = resolve_fragment(model, FragmentPath::parse(""));
  CHECK(std::holds_alternative<const psm::Project*>(root));
  CHECK(element_name(root) == "crudlaboratoire");

  const auto service = resolve_fragment(model, FragmentPath::parse("//@bPack/@services.0"));
  REQUIRE(std::holds_alternative<const psm::Service*>(service));
  CHECK(std::get<const psm::Service*>(service)->name == "IPatientService");
  CHECK(element_kind(service) == "services");

  const auto mapping =
      resolve_fragment(model, FragmentPath::parse("//@uPack/@cPack/@actionmapping"));
  CHECK(std::holds_alternative<const psm::ActionMapping*>(mapping));
  CHECK(element_name(mapping) == "");

  const auto pojo = resolve_fragment(model, FragmentPath::parse("//@dPack/@pojo.3"));
  REQUIRE(std::holds_alternative<const psm::Pojo*>(pojo));
  CHECK(std::get<const psm::Pojo*>(pojo)->name == "Sample");
}

TEST_CASE("resolution failures name the offending step") {
  const auto result = transform(testing::laboratory_pim());

  CHECK_THROWS_AS(resolve_fragment(result.psm, FragmentPath::parse("//@bPack/@services.99")),
                  Error);
  CHECK_THROWS_AS(resolve_fragment(result.psm, FragmentPath::parse("//@nosuch")), Error);
  CHECK_THROWS_AS(
      resolve_fragment(result.psm, FragmentPath::parse("//@bPack/@services.0/@deeper.0")), Error);
  // Single-valued features admit index 0 and nothing else; multi-valued
  // features demand an index.
  CHECK_THROWS_AS(resolve_fragment(result.psm, FragmentPath::parse("//@bPack.1")), Error);
  CHECK_THROWS_AS(resolve_fragment(result.psm, FragmentPath::parse("//@bPack/@services")), Error);
  CHECK(element_kind(resolve_fragment(result.psm, FragmentPath::parse("//@bPack.0"))) == "bPack");

  try {
    resolve_fragment(result.psm, FragmentPath::parse("//@bPack/@services.99"));
    FAIL("expected unresolved_path");
  } catch (const Error& error) {
    CHECK(error.code() == errc::unresolved_path);
  }
}

TEST_CASE("enumerate and fragment_path_of invert resolve_fragment") {
  std::mt19937 rng(20260814);
  for (int round = 0; round < 5; ++round) {
    const pim::Model source = testing::random_pim(rng, 6, 5);
    const psm::Model model = transform(source).psm;

    const auto elements = enumerate_elements(model);
    REQUIRE(!elements.empty());
    CHECK(elements.front().first.empty());

    for (const auto& [path, element] : elements) {
      const auto resolved = resolve_fragment(model, path);
      CHECK(resolved == element);
      CHECK(fragment_path_of(model, element) == path);
    }
  }
}

TEST_CASE("elements of another model are reported as detached") {
  const auto one = transform(testing::laboratory_pim());
  const auto two = transform(testing::laboratory_pim());
  REQUIRE(!two.psm.dao.pojos.empty());
  const PsmElementRef foreign = &two.psm.dao.pojos[0];
  CHECK_THROWS_AS(fragment_path_of(one.psm, foreign), Error);
  try {
    fragment_path_of(one.psm, foreign);
  } catch (const Error& error) {
    CHECK(error.code() == errc::detached_element);
  }
}

TEST_CASE("source models enumerate attributes, operations, and parameters") {
  const pim::Model model = testing::laboratory_pim();
  const auto elements = enumerate_elements(model);

  // package + 4 classes + 3 datatypes + 4*3 attributes + 4*4 operations
  // + 16 single-parameter operations.
  CHECK(elements.size() == 1 + 4 + 3 + 12 + 16 + 16);

  const auto attr = resolve_fragment(model, FragmentPath::parse("//@class.0/@attribute.1"));
  REQUIRE(std::holds_alternative<const pim::Attribute*>(attr));
  CHECK(std::get<const pim::Attribute*>(attr)->name == "fullName");

  const auto param =
      resolve_fragment(model, FragmentPath::parse("//@class.1/@operation.0/@parameter.0"));
  REQUIRE(std::holds_alternative<const pim::Parameter*>(param));
  CHECK(std::get<const pim::Parameter*>(param)->type == "Request");
}

#include "ntiers/names.hpp"

#include "doctest.h"

using namespace ntiers;

TEST_CASE("identifiers start with a letter and continue alphanumerically") {
  CHECK(is_identifier("patient"));
  CHECK(is_identifier("Patient"));
  CHECK(is_identifier("full_name2"));
  CHECK(is_identifier("x"));

  CHECK_FALSE(is_identifier(""));
  CHECK_FALSE(is_identifier("2fast"));
  CHECK_FALSE(is_identifier("_hidden"));
  CHECK_FALSE(is_identifier("full name"));
  CHECK_FALSE(is_identifier("naïve"));
  CHECK_FALSE(is_identifier("a-b"));
}

TEST_CASE("class identifiers additionally require an uppercase first letter") {
  CHECK(is_class_identifier("Patient"));
  CHECK(is_class_identifier("X9_y"));

  CHECK_FALSE(is_class_identifier("patient"));
  CHECK_FALSE(is_class_identifier(""));
  CHECK_FALSE(is_class_identifier("9Patient"));
}

TEST_CASE("capitalize_first touches only the first character") {
  CHECK(capitalize_first("create") == "Create");
  CHECK(capitalize_first("Create") == "Create");
  CHECK(capitalize_first("uRL") == "URL");
  CHECK(capitalize_first("x") == "X");
  CHECK(capitalize_first("") == "");
  CHECK(capitalize_first("9lives") == "9lives");
}

TEST_CASE("ascii_lower folds only ASCII letters") {
  CHECK(ascii_lower("CREATE") == "create");
  CHECK(ascii_lower("ReMoVe") == "remove");
  CHECK(ascii_lower("display") == "display");
  CHECK(ascii_lower("A1_b") == "a1_b");
}

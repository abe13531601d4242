#include "support/random_model.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "ntiers/names.hpp"

namespace ntiers::testing {

namespace {

char lower_letter(std::mt19937& rng) {
  std::uniform_int_distribution<int> letters(0, 25);
  return static_cast<char>('a' + letters(rng));
}

std::string lower_word(std::mt19937& rng, std::size_t length) {
  std::string word;
  word.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    word.push_back(lower_letter(rng));
  }
  return word;
}

// Fixed-length class names with a lowercase tail keep every derived artifact
// name collision-free: equal-length suffixes only match when the classes match.
std::string class_name(std::mt19937& rng, std::set<std::string>& used) {
  for (;;) {
    std::string name = "C" + lower_word(rng, 5);
    if (used.insert(name).second) {
      return name;
    }
  }
}

std::string operation_name(std::mt19937& rng) {
  static const std::vector<std::string> verbs = {"create", "remove", "update", "display"};
  std::uniform_int_distribution<int> percent(0, 99);
  if (percent(rng) < 60) {
    std::string verb = verbs[std::uniform_int_distribution<std::size_t>(0, verbs.size() - 1)(rng)];
    if (percent(rng) < 25) {
      verb[0] = static_cast<char>(verb[0] - 'a' + 'A');
    }
    return verb;
  }
  std::uniform_int_distribution<std::size_t> length(4, 10);
  return lower_word(rng, length(rng));
}

}  // namespace

pim::Model random_pim(std::mt19937& rng, std::size_t max_classes, std::size_t max_operations) {
  pim::Model model;
  model.name = lower_word(rng, 6);
  model.datatypes = {{"Integer"}, {"String"}, {"Date"}};

  std::set<std::string> class_names;
  std::uniform_int_distribution<std::size_t> class_count(0, max_classes);
  const std::size_t classes = class_count(rng);
  for (std::size_t i = 0; i < classes; ++i) {
    pim::Class cls;
    cls.name = class_name(rng, class_names);
    model.classes.push_back(std::move(cls));
  }

  std::vector<std::string> type_pool = {"Integer", "String", "Date"};
  for (const pim::Class& cls : model.classes) {
    type_pool.push_back(cls.name);
  }
  const auto pick_type = [&] {
    std::uniform_int_distribution<std::size_t> index(0, type_pool.size() - 1);
    return type_pool[index(rng)];
  };

  for (pim::Class& cls : model.classes) {
    std::uniform_int_distribution<std::size_t> attr_count(0, 4);
    std::set<std::string> attr_names;
    const std::size_t attrs = attr_count(rng);
    while (cls.attributes.size() < attrs) {
      std::string name = lower_word(rng, 4);
      if (attr_names.insert(name).second) {
        cls.attributes.push_back({std::move(name), pick_type()});
      }
    }

    std::uniform_int_distribution<std::size_t> op_count(0, max_operations);
    const std::size_t ops = op_count(rng);
    std::set<std::string> op_stems;  // capitalized names, the basis of page ids
    while (cls.operations.size() < ops) {
      std::string name = operation_name(rng);
      if (!op_stems.insert(capitalize_first(name)).second) {
        continue;
      }
      pim::Operation op;
      op.name = std::move(name);
      std::uniform_int_distribution<std::size_t> param_count(0, 3);
      std::set<std::string> param_names;
      const std::size_t params = param_count(rng);
      while (op.parameters.size() < params) {
        std::string pname = lower_word(rng, 3);
        if (!param_names.insert(pname).second) {
          continue;
        }
        const auto direction = std::uniform_int_distribution<int>(0, 1)(rng) == 0
                                   ? pim::Direction::In
                                   : pim::Direction::Out;
        op.parameters.push_back({std::move(pname), pick_type(), direction});
      }
      cls.operations.push_back(std::move(op));
    }
  }

  return model;
}

}  // namespace ntiers::testing

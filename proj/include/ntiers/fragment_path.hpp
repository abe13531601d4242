#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ntiers/pim.hpp"
#include "ntiers/psm.hpp"

namespace ntiers {

/// Positional reference into a rooted model, in the XMI fragment style:
/// the empty path addresses the root, and each segment follows one
/// containment feature. Multi-valued features carry an index
/// ("//@dPack/@pojo.0"); single-valued features carry none ("//@bPack").
struct FragmentPath {
  struct Segment {
    std::string feature;
    std::optional<std::size_t> index;

    bool operator==(const Segment&) const = default;
  };

  std::vector<Segment> segments;

  bool empty() const { return segments.empty(); }
  bool operator==(const FragmentPath&) const = default;

  FragmentPath& operator/=(Segment segment) {
    segments.push_back(std::move(segment));
    return *this;
  }

  /// Textual form: "" for the root, "//@feat.i/@feat/@feat.j" otherwise.
  /// parse(str()) round-trips losslessly.
  std::string str() const;

  /// Throws Error(errc::unresolved_path) on malformed text.
  static FragmentPath parse(std::string_view text);
};

using PimElementRef = std::variant<const pim::Package*, const pim::Class*, const pim::DataType*,
                                   const pim::Attribute*, const pim::Operation*, const pim::Parameter*>;

using PsmElementRef =
    std::variant<const psm::Project*, const psm::UiPackage*, const psm::ViewPackage*,
                 const psm::ControllerPackage*, const psm::ActionMapping*, const psm::JspPage*,
                 const psm::Action*, const psm::ActionForm*, const psm::BusinessPackage*,
                 const psm::Service*, const psm::ServiceImpl*, const psm::Dto*,
                 const psm::DaoPackage*, const psm::Dao*, const psm::Pojo*, const psm::DaoImpl*>;

/// Feature name the element is contained under ("class", "pojo", ...);
/// the root reports its element kind ("package" / "project").
std::string_view element_kind(const PimElementRef& ref);
std::string_view element_kind(const PsmElementRef& ref);

/// Element name, "" for unnamed elements (the action mapping).
std::string element_name(const PimElementRef& ref);
std::string element_name(const PsmElementRef& ref);

/// Follows containment features from the root. Throws
/// Error(errc::unresolved_path) when a feature name is unknown for the
/// element reached so far or an index is out of range.
PimElementRef resolve_fragment(const pim::Model& model, const FragmentPath& path);
PsmElementRef resolve_fragment(const psm::Model& model, const FragmentPath& path);

/// Inverse of resolve_fragment. Throws Error(errc::detached_element) when
/// the element is not reachable from the given root.
FragmentPath fragment_path_of(const pim::Model& model, const PimElementRef& element);
FragmentPath fragment_path_of(const psm::Model& model, const PsmElementRef& element);

/// Every element of the model paired with its path, in depth-first
/// containment order; the root comes first with the empty path.
std::vector<std::pair<FragmentPath, PimElementRef>> enumerate_elements(const pim::Model& model);
std::vector<std::pair<FragmentPath, PsmElementRef>> enumerate_elements(const psm::Model& model);

}  // namespace ntiers

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ntiers/fragment_path.hpp"
#include "ntiers/pim.hpp"
#include "ntiers/psm.hpp"

namespace ntiers::engine {

/// Fixed names of the generated packages and the root-name prefix.
inline constexpr std::string_view root_name_prefix = "crud";
inline constexpr std::string_view ui_package_name = "presentationPackage";
inline constexpr std::string_view view_package_name = "viewPackage";
inline constexpr std::string_view controller_package_name = "controllerPackage";
inline constexpr std::string_view business_package_name = "businessPackage";
inline constexpr std::string_view dao_package_name = "daoPackage";

enum class Rule { Pojo, IDao, DaoImpl, Dto, IService, ServiceImpl, View, Controller };

std::string_view to_string(Rule rule);

/// One rule application. `source` is the path of the class that produced the
/// element, except for dto links where it is the path of the producing pojo
/// in the output model. `target` always resolves in the output model.
struct TraceLink {
  Rule rule;
  FragmentPath source;
  FragmentPath target;

  bool operator==(const TraceLink&) const = default;
};

struct TraceLog {
  std::vector<TraceLink> links;

  bool operator==(const TraceLog&) const = default;
};

/// One record per line, tab-separated: rule, source path, target path.
std::string format_trace(const TraceLog& trace);

struct TransformResult {
  psm::Model psm;
  TraceLog trace;
};

/// Runs the whole source-to-target transformation: the data-access loop
/// (pojo, idao, daoimpl per class), the business loop (dto per pojo, then
/// iservice and serviceimpl per class), the view rule, and the controller
/// rule. The result always validates, and every generated element is the
/// target of exactly one trace link. Throws
/// ValidationError(errc::invalid_input) for an invalid source model and
/// Error(errc::generated_name_collision) when a generated name collides
/// with one already present in its package.
TransformResult transform(const pim::Model& pim);

/// The individual rules. The lookup rules (daoimpl, serviceimpl, dto) append
/// to their package and wire the bidirectional links, returning the new
/// element's position; the constructor rules return the element by value.
psm::Pojo rule_pojo(const pim::Class& cls);
psm::Dao rule_idao(const pim::Class& cls);
psm::Index rule_daoimpl(const pim::Class& cls, psm::DaoPackage& dp);
psm::Index rule_dto(psm::Index pojo, psm::DaoPackage& dp, psm::BusinessPackage& bp);
psm::Service rule_iservice(const pim::Class& cls);
psm::Index rule_serviceimpl(const pim::Class& cls, psm::BusinessPackage& bp);
psm::ViewPackage rule_view(const std::vector<pim::Class>& classes);
psm::ControllerPackage rule_controller(const std::vector<pim::Class>& classes,
                                       const psm::ViewPackage& view);

}  // namespace ntiers::engine

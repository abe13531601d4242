#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ntiers/pim.hpp"

namespace ntiers::psm {

/// Cross-references between elements are positions into the owning package's
/// feature lists. A sealed model is therefore a plain value: copying it keeps
/// every link intact, and serialized reference paths are computed from actual
/// positions rather than stored identities.
using Index = std::size_t;

struct Attribute {
  std::string name;
  std::string type;

  bool operator==(const Attribute&) const = default;
};

/// Method declaration copied verbatim from the source operation that
/// produced it.
struct Method {
  std::string name;
  std::vector<pim::Parameter> parameters;

  bool operator==(const Method&) const = default;
};

struct Pojo {
  std::string name;
  std::vector<Attribute> attributes;
  std::optional<Index> dto;  // into BusinessPackage::dtos

  bool operator==(const Pojo&) const = default;
};

/// Data-access interface declaration ("IDao").
struct Dao {
  std::string name;
  std::vector<Method> methods;
  std::optional<Index> implemented_by;  // into DaoPackage::daoimpls

  bool operator==(const Dao&) const = default;
};

struct DaoImpl {
  std::string name;
  std::vector<Index> interfaces;  // into DaoPackage::daos

  bool operator==(const DaoImpl&) const = default;
};

struct DaoPackage {
  std::string name;
  std::vector<Dao> daos;
  std::vector<Pojo> pojos;
  std::vector<DaoImpl> daoimpls;

  bool operator==(const DaoPackage&) const = default;
};

struct Dto {
  std::string name;
  std::vector<Attribute> attributes;  // value copy of the pojo's attributes
  std::optional<Index> pojo;          // into DaoPackage::pojos

  bool operator==(const Dto&) const = default;
};

/// Service interface declaration ("IService").
struct Service {
  std::string name;
  std::vector<Method> methods;
  std::optional<Index> implemented_by;  // into BusinessPackage::serviceimpls

  bool operator==(const Service&) const = default;
};

struct ServiceImpl {
  std::string name;
  std::vector<Index> interfaces;  // into BusinessPackage::services

  bool operator==(const ServiceImpl&) const = default;
};

struct BusinessPackage {
  std::string name;
  std::vector<Service> services;
  std::vector<ServiceImpl> serviceimpls;
  std::vector<Dto> dtos;

  bool operator==(const BusinessPackage&) const = default;
};

struct JspPage {
  std::string name;  // <OpName><ClassName>Page.jsp

  bool operator==(const JspPage&) const = default;
};

struct ViewPackage {
  std::string name;
  std::vector<JspPage> pages;

  bool operator==(const ViewPackage&) const = default;
};

struct ActionForward {
  Index target = 0;  // into ViewPackage::pages

  bool operator==(const ActionForward&) const = default;
};

struct Action {
  std::string name;  // ends in "Action"
  std::optional<ActionForward> forward;
  std::optional<Index> form;  // into ActionMapping::forms

  bool operator==(const Action&) const = default;
};

struct ActionForm {
  std::string name;
  Index input = 0;      // into ViewPackage::pages
  Index attribute = 0;  // into ActionMapping::actions

  bool operator==(const ActionForm&) const = default;
};

struct ActionMapping {
  std::vector<Action> actions;
  std::vector<ActionForm> forms;

  bool operator==(const ActionMapping&) const = default;
};

struct ControllerPackage {
  std::string name;
  ActionMapping mapping;

  bool operator==(const ControllerPackage&) const = default;
};

struct UiPackage {
  std::string name;
  ViewPackage view;
  ControllerPackage controller;

  bool operator==(const UiPackage&) const = default;
};

/// Root of the target model: exactly one ui, business, and dao package,
/// always present even when empty.
struct Project {
  std::string name;
  UiPackage ui;
  BusinessPackage business;
  DaoPackage dao;

  bool operator==(const Project&) const = default;
};

using Model = Project;

}  // namespace ntiers::psm

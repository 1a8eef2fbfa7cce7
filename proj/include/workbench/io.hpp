#pragma once

#include <map>
#include <memory>
#include <string>

#include <json.hpp>

#include "modrep/module.hpp"

namespace workbench {

using algebra::Algebra;
using ffla::Mat;
using ffla::Row;
using ffla::Subspace;
using modrep::Module;

// One input file, fully validated: an algebra, its named modules, and any
// named submodule seeds. The algebra is heap-held so modules can keep
// pointing at it while the context moves around.
struct Context {
  std::unique_ptr<Algebra> alg;
  std::vector<std::string> labels;
  std::map<std::string, Module> modules;
  std::map<std::string, Subspace> submodules;

  const Module& module(const std::string& name) const;
};

// Every shape and axiom failure names the offending key, index pair, or
// triple, so a hand-written file can be fixed from the message alone.
Context load_json(const nlohmann::json& j);
Context load_file(const std::string& path);

}  // namespace workbench

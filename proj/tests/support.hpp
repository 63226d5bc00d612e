#pragma once

#include <string>

#include "yaxl/io.hpp"
#include "yaxl/magma.hpp"
#include "yaxl/solution_table.hpp"

namespace fixture {

  inline std::string path(std::string const& name) {
    return std::string(YAXL_FIXTURE_DIR) + "/" + name;
  }

  inline std::string text(std::string const& name) { return yaxl::read_file(path(name)); }

  inline yaxl::Magma magma(std::string const& name) {
    std::string t = text(name);
    return yaxl::parse_magma(t, yaxl::detect_format(t));
  }

  inline yaxl::SolutionTable solution(std::string const& name) {
    std::string t = text(name);
    return yaxl::parse_solution(t, yaxl::detect_format(t));
  }

}  // namespace fixture

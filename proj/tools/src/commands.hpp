#pragma once

#include <string>

#include "config.hpp"

namespace ellsol::cli {

int run_figure(const std::string& name, const RunConfig& cfg, bool svg);
int run_build(const RunConfig& cfg, const std::string& out_name, bool svg);
int run_verify(const RunConfig& cfg);
int run_eval(const std::string& what, double x, const RunConfig& cfg);
int run_roots(const RunConfig& cfg);

}  // namespace ellsol::cli

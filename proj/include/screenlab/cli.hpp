#pragma once
#include <ostream>
#include <string>
#include <vector>

#include "screenlab/environment.hpp"
#include "screenlab/noise.hpp"

namespace screenlab {

// args excludes the program name. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Prints every model check; 0 when all pass.
int validate_report(const NoiseModel& noise, const Environment& env, std::ostream& out);

}  // namespace screenlab

#ifndef CSLAB_CLI_HPP
#define CSLAB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cslab {

// Dispatches one CLI invocation. Exit codes: 0 success, 1 property false,
// 2 invalid input, 3 limit exceeded.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

// Accepts a JSON image array ("[1,0,2]", 0-based) or a 1-based cycle string
// ("(1,2)(3)").
class Perm;
Perm parse_perm_text(const std::string& text, int degree);

}  // namespace cslab

#endif

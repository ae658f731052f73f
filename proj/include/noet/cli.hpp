#ifndef NOET_CLI_HPP
#define NOET_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace noet {

// Runs one CLI invocation (argv without the program name). Exit status:
// 0 success, 1 usage/parse error, 2 check failed (cover not certified,
// uncovered samples found).
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace noet

#endif

#ifndef ORBITSTAB_CLI_HPP
#define ORBITSTAB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace orbitstab {

/// Dispatch a subcommand; prints one JSON document to out. Exit status:
/// 0 success, 1 parse error, 2 hypothesis not met, 3 size limit exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace orbitstab

#endif

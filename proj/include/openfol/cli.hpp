// Command-line front end. Exit codes are a contract:
//   0  accepted / valid / all sound / all pass
//   1  rejected / countermodel / audit counterexample / corpus failure
//   2  usage, I/O or parse error
//   3  search inconclusive (model cap hit)

#ifndef OPENFOL_CLI_HPP
#define OPENFOL_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace openfol {

int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace openfol

#endif  // OPENFOL_CLI_HPP

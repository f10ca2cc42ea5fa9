#ifndef MONTDIV_CLI_HPP
#define MONTDIV_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "montdiv/biguint.hpp"

namespace montdiv::cli {

// Literal forms accepted everywhere a big integer is expected: decimal,
// 0x hex, "2^K", "2^K+c", "2^K-c", or "@path" naming a limb file.
BigUint parse_biguint(const std::string& text);

// Dispatches one subcommand. Exit status: 0 success (or predicate true),
// 1 predicate false (isdiv/mersenne/fermat), 2 usage or input error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace montdiv::cli

#endif

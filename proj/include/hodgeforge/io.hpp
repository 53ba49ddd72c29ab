#ifndef HODGEFORGE_IO_HPP
#define HODGEFORGE_IO_HPP

#include <string>

#include "hodgeforge/hodge_table.hpp"
#include "hodgeforge/xi.hpp"

namespace hodgeforge {

// { g, r, kL, entries: [ { bL, j, value: "num/den" } ] }
std::string block_to_json(const HodgeBlock& block);
HodgeBlock block_from_json(const std::string& text);

// Header row "r,k,m,p,c"; one coefficient per line.
std::string xi_table_to_csv(const XiCoeffTable& table);
XiCoeffTable xi_table_from_csv(const std::string& text);

}  // namespace hodgeforge

#endif

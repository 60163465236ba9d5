#include "projcalc/statements.hpp"

#include <algorithm>

namespace projcalc {

bool is_known_statement(std::string_view id) {
  return std::find(kStatementIds.begin(), kStatementIds.end(), id) != kStatementIds.end();
}

std::vector<std::string> all_statement_ids() { return {kStatementIds.begin(), kStatementIds.end()}; }

}  // namespace projcalc

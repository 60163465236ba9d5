#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "projcalc/idempotents.hpp"

namespace projcalc {

inline constexpr std::array<std::string_view, 19> kStatementIds = {
    "L2.2",   "L2.3",   "L2.5",  "L3.1",  "L3.2.1",   "L3.2.2",   "L3.2.3",   "L3.2.4", "L3.3", "T3.4",
    "C3.5",   "C3.6",   "R3.8",  "T3.9",  "C3.10",    "T3.11.1",  "T3.11.2",  "T3.11.3", "T3.13"};

bool is_known_statement(std::string_view id);

std::vector<std::string> all_statement_ids();

// Runs one statement on an analysed pair. Throws UnknownStatement.
template <StarRingBackend B>
TheoremReport verify(std::string_view id, const PairAnalysis<B>& an) {
  if (id == "L2.2") return check_b_products(an);
  if (id == "L2.3") return check_transfer_identities(an);
  if (id == "L2.5") return check_closed_form_inverses(an);
  if (id == "L3.1") return check_pqp_absorbs_pq(an);
  if (id == "L3.2.1") return check_transfer_inverse(an);
  if (id == "L3.2.2") return check_join(an);
  if (id == "L3.2.3") return check_meet(an);
  if (id == "L3.2.4") return check_surjectivity_criterion(an);
  if (id == "L3.3") return check_idempotent_ranges(an);
  if (id == "T3.4") return check_oblique_qbar_p(an);
  if (id == "C3.5") return check_meet_trivial_case(an);
  if (id == "C3.6") return check_join_full_case(an);
  if (id == "R3.8") return check_meet_trivial_invertible(an);
  if (id == "T3.9") return check_oblique_pair_witnesses(an);
  if (id == "C3.10") return check_direct_sum_case(an);
  if (id == "T3.11.1") return check_inverse_equivalence(an, 1);
  if (id == "T3.11.2") return check_inverse_equivalence(an, 2);
  if (id == "T3.11.3") return check_inverse_equivalence(an, 3);
  if (id == "T3.13") return check_orthogonal_decomposition(an);
  throw UnknownStatement("unknown statement id '" + std::string(id) + "'");
}

template <StarRingBackend B>
TheoremReport verify(std::string_view id, const ProjectionPair<B>& pair) {
  if (!is_known_statement(id)) throw UnknownStatement("unknown statement id '" + std::string(id) + "'");
  return verify(id, PairAnalysis<B>(pair));
}

}  // namespace projcalc

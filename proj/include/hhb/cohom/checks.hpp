#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hhb/blocks/brauer.hpp"
#include "hhb/cohom/cohomology.hpp"

namespace hhb::cohom {

enum class Status { pass, fail, skipped };

std::string to_string(Status s);

/// One compared quantity: lhs must relate to rhs as the check requires.
struct CheckRow {
  std::string label;
  std::size_t degree = 0;
  std::size_t lhs = 0;
  std::size_t rhs = 0;
  bool ok = false;
};

struct CheckResult {
  std::string check;
  Status status = Status::skipped;
  std::string reason;
  std::vector<CheckRow> rows;
  std::optional<bool> witness;
};

/// tr from the defect group P onto H^i(G; B) is surjective for i <= n, and
/// Tr^G_P(y) = b has a solution y in B^P.
CheckResult check_transfer_surjectivity(const GroupAlgebra& a, const blocks::Block& b, unsigned n,
                                        const Resolution& res);

/// The transfers of H^i(Q; B_(Q,e)) over the Brauer pair representatives
/// span H^i(G; B), for i <= n. Skipped when |G| exceeds max_order.
CheckResult check_brauer_decomposition(const GroupAlgebra& a, const blocks::Block& b, unsigned n,
                                       const Resolution& res, std::size_t max_order);

/// dim tr^G_Q(H^i(Q; B_(Q,e))) <= dim H^i(L; kL e) with L = Q C_G(Q), for
/// every Brauer pair and i <= n.
CheckResult check_brauer_pair_inequality(const GroupAlgebra& a, const blocks::Block& b, unsigned n,
                                         const Resolution& res, std::size_t resolution_cap = kDefaultResolutionCap);

/// With Z the least central subgroup of order p and bars denoting images in
/// k[G/Z]: dim H^i(G; B) <= p * sum_{j <= i} dim H^j(G/Z; Bbar), i <= n.
/// Skipped when Z(G) has no element of order p.
CheckResult check_central_quotient_bound(const GroupAlgebra& a, const blocks::Block& b, unsigned n,
                                         const Resolution& res, std::size_t resolution_cap = kDefaultResolutionCap);

}  // namespace hhb::cohom

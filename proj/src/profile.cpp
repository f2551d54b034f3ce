#include "modgraph/profile.hpp"

#include "modgraph/stabilize.hpp"

namespace modgraph {

VarietyProfile projective_space(int r) {
  return {"P" + std::to_string(r), 1, r, LinearForm({-(r + 1)}), LinearForm({1})};
}

VarietyProfile point_profile() { return {"point", 0, 0, LinearForm(), LinearForm()}; }

std::optional<VarietyProfile> named_profile(const std::string& name) {
  if (name == "P1") return projective_space(1);
  if (name == "P2") return projective_space(2);
  if (name == "P3") return projective_space(3);
  if (name == "point") return point_profile();
  return std::nullopt;
}

std::vector<Violation> check_profile(const VarietyProfile& p) {
  std::vector<Violation> out;
  if (p.canonical.rank() != p.rank || p.ample.rank() != p.rank) {
    out.push_back({"profile-rank", "canonical and ample forms must have the profile's rank"});
  }
  if (!p.ample.is_positive()) {
    out.push_back({"ample-positive", "ample form must have positive coefficients"});
  }
  if (p.dimension < 0) out.push_back({"profile-dimension", "dimension must be non-negative"});
  return out;
}

namespace {

void require_rank(const VarietyProfile& p, const AGraph& tau) {
  if (p.rank != tau.rank()) {
    throw Error(ErrorKind::domain, "graph rank differs from profile rank",
                {{"rank-mismatch", "profile " + p.name}});
  }
}

}  // namespace

long dim_graph(const VarietyProfile& p, const AGraph& tau) {
  require_rank(p, tau);
  return euler_characteristic(tau) * (p.dimension - 3) - p.canonical(total_class(tau)) +
         static_cast<long>(tails(tau).size()) - static_cast<long>(edges(tau).size());
}

long deg_graph(const VarietyProfile& p, const AGraph& tau) {
  require_rank(p, tau);
  const AGraph s = absolute_stabilization(tau);
  const long ds = static_cast<long>(tails(s).size()) - static_cast<long>(tails(tau).size());
  const long de = static_cast<long>(edges(s).size()) - static_cast<long>(edges(tau).size());
  return p.canonical(total_class(tau)) +
         (p.dimension - 3) * (euler_characteristic(s) - euler_characteristic(tau)) + ds - de;
}

}  // namespace modgraph

#include "modgraph/marked.hpp"

namespace modgraph {

std::vector<Violation> check_marked(const MarkedMorphism& m) {
  std::vector<Violation> out = check_combinatorial(m.comb);
  for (auto& v : check_contraction(m.contraction)) out.push_back(std::move(v));
  if (!(m.comb.xi == m.xi)) out.push_back({"marked-xi", "combinatorial part does not cover xi"});
  if (!(m.comb.source == m.contraction.source)) {
    out.push_back({"marked-mid", "combinatorial part and contraction start at different graphs"});
  }
  if (!is_stable(m.source())) out.push_back({"not-stable", "source is not stable"});
  if (!is_stable(m.mid())) out.push_back({"not-stable", "middle graph is not stable"});
  if (!is_stable(m.target())) out.push_back({"not-stable", "target is not stable"});
  return out;
}

}  // namespace modgraph

#include "modgraph/enumerate.hpp"

#include <functional>

#include "modgraph/canonical.hpp"

namespace modgraph {

bool is_admissible_member(const VarietyProfile& p, const AGraph& tau,
                          const AdmissibilityFilter& filter) {
  if (std::holds_alternative<ForestFilter>(filter)) return is_forest(tau);
  const Coord bound = std::get<DegreeBound>(filter).bound;
  for (const auto& [v, data] : tau.vertices()) {
    if (p.ample(data.cls) >= bound) return false;
  }
  return true;
}

namespace {

// Calls visit for every vector of `parts` non-negative ints summing to total.
void compositions(int total, int parts, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& visit) {
  if (static_cast<int>(cur.size()) + 1 == parts) {
    cur.push_back(total);
    visit(cur);
    cur.pop_back();
    return;
  }
  for (int x = 0; x <= total; ++x) {
    cur.push_back(x);
    compositions(total - x, parts, cur, visit);
    cur.pop_back();
  }
}

}  // namespace

std::vector<AGraph> enumerate_stable_graphs(const VarietyProfile& p,
                                            const EnumerationConstraints& c,
                                            std::size_t max_flags) {
  require_valid("invalid profile", check_profile(p));
  if (c.genus < 0 || c.tails < 0 || c.max_vertices < 1 || c.max_degree < 0) {
    throw_domain("enumeration-bounds", "bounds must be non-negative and allow a vertex");
  }
  const long worst = c.tails + 2L * (c.genus + c.max_vertices - 1);
  if (worst > static_cast<long>(max_flags)) {
    throw Error(ErrorKind::size, "enumeration bounds allow " + std::to_string(worst) +
                                     " flags, above the cap of " + std::to_string(max_flags));
  }
  const std::vector<MonoidElement> classes = elements_of_degree_at_most(p.ample, c.max_degree);

  std::map<std::vector<std::int64_t>, AGraph> found;
  for (int nv = 1; nv <= c.max_vertices; ++nv) {
    std::vector<std::pair<int, int>> slots;  // possible edge endpoints i <= j
    for (int i = 0; i < nv; ++i) {
      for (int j = i; j < nv; ++j) slots.push_back({i, j});
    }
    std::vector<int> genera(nv, 0);
    std::function<void(int, int)> choose_genera = [&](int v, int used) {
      if (v < nv) {
        for (int gv = 0; used + gv <= c.genus; ++gv) {
          genera[v] = gv;
          choose_genera(v + 1, used + gv);
        }
        return;
      }
      const int num_edges = c.genus - used + nv - 1;
      std::vector<int> edge_counts;
      std::vector<int> tail_counts;
      std::vector<std::size_t> class_index(nv, 0);

      auto emit = [&]() {
        AGraph g(p.rank);
        Coord degree = 0;
        for (int v2 = 0; v2 < nv; ++v2) {
          degree += p.ample(classes[class_index[v2]]);
          g.add_vertex(v2, genera[v2], classes[class_index[v2]]);
        }
        if (degree > c.max_degree) return;
        FlagId next = 0;
        for (int v2 = 0; v2 < nv; ++v2) {
          for (int t = 0; t < tail_counts[v2]; ++t) g.add_tail(next++, v2);
        }
        for (std::size_t s = 0; s < slots.size(); ++s) {
          for (int e = 0; e < edge_counts[s]; ++e) {
            g.add_edge(next, slots[s].first, next + 1, slots[s].second);
            next += 2;
          }
        }
        if (!is_stable(g) || connected_components(g).size() != 1) return;
        CanonicalForm cf = canonical_labeling(g, {}, max_flags);
        found.emplace(cf.key, std::move(cf.graph));
      };

      std::function<void(int)> choose_classes = [&](int v2) {
        if (v2 == nv) {
          emit();
          return;
        }
        for (std::size_t i = 0; i < classes.size(); ++i) {
          class_index[v2] = static_cast<int>(i);
          choose_classes(v2 + 1);
        }
      };

      std::vector<int> cur;
      compositions(num_edges, static_cast<int>(slots.size()), cur, [&](const std::vector<int>& ec) {
        edge_counts = ec;
        std::vector<int> cur2;
        compositions(c.tails, nv, cur2, [&](const std::vector<int>& tc) {
          tail_counts = tc;
          choose_classes(0);
        });
      });
    };
    choose_genera(0, 0);
  }

  std::vector<AGraph> out;
  out.reserve(found.size());
  for (auto& [key, g] : found) out.push_back(std::move(g));
  return out;
}

}  // namespace modgraph

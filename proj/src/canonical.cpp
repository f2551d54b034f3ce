#include "modgraph/canonical.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

namespace modgraph {

namespace {

using Code = std::vector<std::int64_t>;

const Color kNoColor{};

const Color& color_of(const std::map<int, Color>& m, int id) {
  auto it = m.find(id);
  return it == m.end() ? kNoColor : it->second;
}

void append_color(Code& code, const Color& c) {
  code.push_back(static_cast<std::int64_t>(c.size()));
  code.insert(code.end(), c.begin(), c.end());
}

// Dense ranks of a set of values, used to keep refinement signatures small.
template <class T>
std::map<T, int> dense_ranks(std::vector<T> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::map<T, int> out;
  for (std::size_t i = 0; i < values.size(); ++i) out[values[i]] = static_cast<int>(i);
  return out;
}

struct LocalFlag {
  FlagId id;
  int other;          // local index of the partner's vertex, -1 for a tail
  FlagId partner;
  int color;          // dense color rank
  int partner_color;
};

// One connected component, with vertices indexed 0..n-1 locally.
class Component {
 public:
  Component(const AGraph& g, const std::vector<VertexId>& vs,
            const Coloring& colors, const std::map<Color, int>& flag_rank)
      : g_(g), colors_(colors), ids_(vs), flags_(vs.size()) {
    std::map<VertexId, int> local;
    for (std::size_t i = 0; i < vs.size(); ++i) local[vs[i]] = static_cast<int>(i);
    for (const auto& [f, fl] : g.flags()) {
      auto it = local.find(fl.vertex);
      if (it == local.end()) continue;
      LocalFlag lf{f, -1, fl.partner, flag_rank.at(color_of(colors.flag, f)), 0};
      lf.partner_color = flag_rank.at(color_of(colors.flag, fl.partner));
      if (fl.partner != f) lf.other = local.at(g.boundary(fl.partner));
      flags_[static_cast<std::size_t>(it->second)].push_back(lf);
    }
  }

  std::size_t size() const { return ids_.size(); }
  VertexId id(int i) const { return ids_[static_cast<std::size_t>(i)]; }
  const std::vector<LocalFlag>& flags(int i) const {
    return flags_[static_cast<std::size_t>(i)];
  }

  // Returns the minimal leaf code and the vertex order that produces it.
  std::pair<Code, std::vector<int>> canonicalize() {
    std::vector<Code> initial(size());
    for (std::size_t i = 0; i < size(); ++i) initial[i] = initial_invariant(static_cast<int>(i));
    auto ranks = dense_ranks(initial);
    std::vector<int> cells(size());
    for (std::size_t i = 0; i < size(); ++i) cells[i] = ranks.at(initial[i]);
    refine(cells);
    best_.reset();
    search(cells);
    return *best_;
  }

 private:
  Code initial_invariant(int v) const {
    const auto& vx = g_.vertex(id(v));
    Code inv{vx.genus};
    for (Coord c : vx.cls.coords()) inv.push_back(c);
    append_color(inv, color_of(colors_.vertex, id(v)));
    inv.push_back(static_cast<std::int64_t>(flags(v).size()));
    std::vector<std::int64_t> tail_colors;
    std::vector<std::pair<int, int>> loops;
    for (const auto& lf : flags(v)) {
      if (lf.other < 0) {
        tail_colors.push_back(lf.color);
      } else if (lf.other == v) {
        loops.emplace_back(std::min(lf.color, lf.partner_color),
                           std::max(lf.color, lf.partner_color));
      }
    }
    std::sort(tail_colors.begin(), tail_colors.end());
    std::sort(loops.begin(), loops.end());
    inv.push_back(static_cast<std::int64_t>(tail_colors.size()));
    inv.insert(inv.end(), tail_colors.begin(), tail_colors.end());
    inv.push_back(static_cast<std::int64_t>(loops.size()));
    for (auto [a, b] : loops) {
      inv.push_back(a);
      inv.push_back(b);
    }
    return inv;
  }

  // Iterated neighbourhood refinement of an ordered partition. Cell values
  // are dense ranks, and the order of existing cells is preserved.
  void refine(std::vector<int>& cells) const {
    std::size_t count = std::set<int>(cells.begin(), cells.end()).size();
    while (true) {
      std::vector<Code> sig(size());
      for (std::size_t v = 0; v < size(); ++v) {
        std::vector<std::tuple<int, int, int>> nb;
        for (const auto& lf : flags(static_cast<int>(v))) {
          if (lf.other >= 0 && lf.other != static_cast<int>(v)) {
            nb.emplace_back(cells[static_cast<std::size_t>(lf.other)], lf.color,
                            lf.partner_color);
          }
        }
        std::sort(nb.begin(), nb.end());
        sig[v].push_back(cells[v]);
        for (auto [c, a, b] : nb) {
          sig[v].push_back(c);
          sig[v].push_back(a);
          sig[v].push_back(b);
        }
      }
      auto ranks = dense_ranks(sig);
      for (std::size_t v = 0; v < size(); ++v) cells[v] = ranks.at(sig[v]);
      if (ranks.size() == count) return;
      count = ranks.size();
    }
  }

  void search(const std::vector<int>& cells) {
    std::map<int, std::vector<int>> members;
    for (std::size_t v = 0; v < size(); ++v) members[cells[v]].push_back(static_cast<int>(v));
    const std::vector<int>* target = nullptr;
    for (const auto& [c, vs] : members) {
      if (vs.size() > 1) {
        target = &vs;
        break;
      }
    }
    if (target == nullptr) {
      std::vector<int> order(size());
      for (std::size_t v = 0; v < size(); ++v) order[static_cast<std::size_t>(cells[v])] = static_cast<int>(v);
      Code code = leaf_code(order);
      if (!best_ || code < best_->first) best_ = {std::move(code), std::move(order)};
      return;
    }
    const int split_cell = cells[static_cast<std::size_t>(target->front())];
    for (int chosen : *target) {
      std::vector<int> next(size());
      for (std::size_t v = 0; v < size(); ++v) {
        next[v] = 2 * cells[v] + (cells[v] == split_cell && static_cast<int>(v) != chosen);
      }
      auto ranks = dense_ranks(next);
      for (auto& c : next) c = ranks.at(c);
      refine(next);
      search(next);
    }
  }

  Code leaf_code(const std::vector<int>& order) const {
    const std::size_t n = order.size();
    std::vector<int> pos(n);
    for (std::size_t p = 0; p < n; ++p) pos[static_cast<std::size_t>(order[p])] = static_cast<int>(p);
    Code code{static_cast<std::int64_t>(n)};
    for (int v : order) {
      const auto& vx = g_.vertex(id(v));
      code.push_back(vx.genus);
      for (Coord c : vx.cls.coords()) code.push_back(c);
      append_color(code, color_of(colors_.vertex, id(v)));
      std::vector<Color> tails;
      for (const auto& lf : flags(v)) {
        if (lf.other < 0) tails.push_back(color_of(colors_.flag, lf.id));
      }
      std::sort(tails.begin(), tails.end());
      code.push_back(static_cast<std::int64_t>(tails.size()));
      for (const auto& c : tails) append_color(code, c);
    }
    for (std::size_t p = 0; p < n; ++p) {
      const int v = order[p];
      std::map<std::size_t, std::vector<std::pair<Color, Color>>> by_partner;
      for (const auto& lf : flags(v)) {
        if (lf.other < 0) continue;
        const std::size_t q = static_cast<std::size_t>(pos[static_cast<std::size_t>(lf.other)]);
        if (q < p) continue;
        Color a = color_of(colors_.flag, lf.id);
        Color b = color_of(colors_.flag, lf.partner);
        if (q == p) {
          if (b < a) continue;  // each loop once, smaller color first
          if (a == b && lf.partner < lf.id) continue;
        }
        by_partner[q].emplace_back(std::move(a), std::move(b));
      }
      for (std::size_t q = p; q < n; ++q) {
        auto& list = by_partner[q];
        std::sort(list.begin(), list.end());
        code.push_back(static_cast<std::int64_t>(list.size()));
        for (const auto& [a, b] : list) {
          append_color(code, a);
          append_color(code, b);
        }
      }
    }
    return code;
  }

  const AGraph& g_;
  const Coloring& colors_;
  std::vector<VertexId> ids_;
  std::vector<std::vector<LocalFlag>> flags_;
  std::optional<std::pair<Code, std::vector<int>>> best_;
};

}  // namespace

Relabeling inverse(const Relabeling& r) {
  Relabeling out;
  for (const auto& [a, b] : r.vertices) out.vertices[b] = a;
  for (const auto& [a, b] : r.flags) out.flags[b] = a;
  return out;
}

AGraph relabel(const AGraph& g, const Relabeling& r) {
  AGraph out(g.rank());
  for (const auto& [v, vx] : g.vertices()) out.add_vertex(r.vertices.at(v), vx.genus, vx.cls);
  for (const auto& [f, fl] : g.flags()) out.add_tail(r.flags.at(f), r.vertices.at(fl.vertex));
  for (const auto& [f, fl] : g.flags()) {
    if (f < fl.partner) out.join(r.flags.at(f), r.flags.at(fl.partner));
  }
  return out;
}

CanonicalForm canonical_labeling(const AGraph& g, const Coloring& colors,
                                 std::size_t max_flags) {
  if (g.num_flags() > max_flags) {
    throw Error(ErrorKind::size,
                "graph has " + std::to_string(g.num_flags()) +
                    " flags, more than the cap of " + std::to_string(max_flags),
                {{"max-flags", std::to_string(max_flags)}});
  }
  std::vector<Color> all_colors{kNoColor};
  for (const auto& [f, c] : colors.flag) all_colors.push_back(c);
  const auto flag_rank = dense_ranks(all_colors);

  struct Done {
    Code code;
    std::vector<VertexId> order;
  };
  std::vector<Done> parts;
  std::vector<Component> comps;
  for (const auto& vs : connected_components(g)) {
    Component comp(g, vs, colors, flag_rank);
    auto [code, order] = comp.canonicalize();
    Done d{std::move(code), {}};
    for (int i : order) d.order.push_back(comp.id(i));
    parts.push_back(std::move(d));
  }
  std::sort(parts.begin(), parts.end(),
            [](const Done& a, const Done& b) { return a.code < b.code; });

  CanonicalForm out;
  out.key = {static_cast<std::int64_t>(g.rank()), static_cast<std::int64_t>(parts.size())};
  std::vector<VertexId> order;
  for (const auto& d : parts) {
    out.key.insert(out.key.end(), d.code.begin(), d.code.end());
    order.insert(order.end(), d.order.begin(), d.order.end());
  }
  std::map<VertexId, int> pos;
  for (std::size_t i = 0; i < order.size(); ++i) {
    pos[order[i]] = static_cast<int>(i);
    out.relabeling.vertices[order[i]] = static_cast<VertexId>(i);
  }

  auto colored = [&](FlagId f) { return std::make_pair(color_of(colors.flag, f), f); };
  FlagId next = 0;
  for (VertexId v : order) {
    std::vector<std::pair<Color, FlagId>> ts;
    for (FlagId f : flags_at(g, v)) {
      if (g.is_tail(f)) ts.push_back(colored(f));
    }
    std::sort(ts.begin(), ts.end());
    for (const auto& t : ts) out.relabeling.flags[t.second] = next++;
  }
  for (std::size_t p = 0; p < order.size(); ++p) {
    std::map<int, std::vector<std::tuple<Color, Color, FlagId, FlagId>>> by_partner;
    for (FlagId f : flags_at(g, order[p])) {
      if (g.is_tail(f)) continue;
      const FlagId h = g.involution(f);
      const int q = pos.at(g.boundary(h));
      if (q < static_cast<int>(p)) continue;
      auto a = colored(f);
      auto b = colored(h);
      if (q == static_cast<int>(p) && b < a) continue;
      by_partner[q].emplace_back(a.first, b.first, f, h);
    }
    for (auto& [q, list] : by_partner) {
      std::sort(list.begin(), list.end());
      for (const auto& e : list) {
        out.relabeling.flags[std::get<2>(e)] = next++;
        out.relabeling.flags[std::get<3>(e)] = next++;
      }
    }
  }
  out.graph = relabel(g, out.relabeling);
  return out;
}

AGraph canonical_form(const AGraph& g, std::size_t max_flags) {
  return canonical_labeling(g, {}, max_flags).graph;
}

std::vector<std::int64_t> canonical_key(const AGraph& g, std::size_t max_flags) {
  return canonical_labeling(g, {}, max_flags).key;
}

bool is_isomorphic(const AGraph& a, const AGraph& b, std::size_t max_flags) {
  if (a.rank() != b.rank() || a.num_flags() != b.num_flags() ||
      a.num_vertices() != b.num_vertices()) {
    return false;
  }
  return canonical_key(a, max_flags) == canonical_key(b, max_flags);
}

std::optional<Relabeling> find_isomorphism(const AGraph& a, const AGraph& b,
                                           const Coloring& ca, const Coloring& cb,
                                           std::size_t max_flags) {
  if (a.rank() != b.rank() || a.num_flags() != b.num_flags() ||
      a.num_vertices() != b.num_vertices()) {
    return std::nullopt;
  }
  const auto la = canonical_labeling(a, ca, max_flags);
  const auto lb = canonical_labeling(b, cb, max_flags);
  if (la.key != lb.key) return std::nullopt;
  const Relabeling back = inverse(lb.relabeling);
  Relabeling out;
  for (const auto& [v, c] : la.relabeling.vertices) out.vertices[v] = back.vertices.at(c);
  for (const auto& [f, c] : la.relabeling.flags) out.flags[f] = back.flags.at(c);
  if (relabel(a, out) != b) throw std::logic_error("canonical labeling is inconsistent");
  return out;
}

}  // namespace modgraph

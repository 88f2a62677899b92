#include "tropgw/gwh.hpp"

#include "tropgw/perm_hurwitz.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace tropgw {

namespace {

Integer ul(std::uint64_t x) { return Integer(static_cast<unsigned long>(x)); }

// Distinct ways to split the parts of mu into unordered nonempty blocks.
std::vector<std::vector<Partition>> multiset_partitions(const Partition& mu) {
  const auto n = static_cast<std::size_t>(mu.length());
  std::set<std::vector<Partition>> seen;
  std::vector<int> block(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int blocks) {
    if (i == n) {
      std::vector<std::vector<int>> parts(static_cast<std::size_t>(blocks));
      for (std::size_t j = 0; j < n; ++j) parts[static_cast<std::size_t>(block[j])].push_back(mu[j]);
      std::vector<Partition> ps;
      for (auto& p : parts) ps.emplace_back(std::move(p));
      std::sort(ps.begin(), ps.end());
      seen.insert(std::move(ps));
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      block[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  rec(0, 0);
  return {seen.begin(), seen.end()};
}

Partition with_ones(const Partition& mu, int ones) { return mu.joined(Partition::ones(ones)); }

Rational vertex_hurwitz(const TripodVertex& v) {
  const std::vector<Partition> prof{v.left, with_ones(v.marked, v.unmarked), v.right};
  return local_hurwitz(v.genus, 0, prof);
}

}  // namespace

LocalExpansion local_expand(const VertexData& star) {
  if (star.left.size() != star.right.size() || star.left.size() == 0) {
    throw std::invalid_argument("vertex profiles must have equal positive size");
  }
  const int k = star.descendant_power();
  if (k < 0 || star.genus < 0) throw std::invalid_argument("vertex has negative descendant power or genus");
  const auto cc = completion_coefficients(k);
  const Rational kf(factorial(static_cast<unsigned>(k)));

  std::set<std::vector<TripodVertex>> seen;
  LocalExpansion out;
  out.total = 0;
  for (const auto& alphas : multiset_partitions(star.left)) {
    const std::size_t blocks = alphas.size();
    // distribute the right parts over the blocks with matching sizes
    std::vector<std::vector<int>> betas(blocks);
    std::vector<int> room(blocks);
    for (std::size_t b = 0; b < blocks; ++b) room[b] = alphas[b].size();
    std::set<std::vector<std::pair<Partition, Partition>>> seen_pairs;
    std::function<void(int)> place = [&](int j) {
      if (j == star.right.length()) {
        std::vector<std::pair<Partition, Partition>> pairs;
        for (std::size_t b = 0; b < blocks; ++b) pairs.emplace_back(alphas[b], Partition(betas[b]));
        std::sort(pairs.begin(), pairs.end());
        seen_pairs.insert(pairs);
        return;
      }
      const int w = star.right[static_cast<std::size_t>(j)];
      for (std::size_t b = 0; b < blocks; ++b) {
        if (room[b] < w) continue;
        room[b] -= w;
        betas[b].push_back(w);
        place(j + 1);
        betas[b].pop_back();
        room[b] += w;
      }
    };
    place(0);

    for (const auto& pairs : seen_pairs) {
      std::vector<TripodVertex> chosen(blocks);
      std::function<void(std::size_t)> vertical = [&](std::size_t b) {
        if (b == blocks) {
          auto sorted = chosen;
          std::sort(sorted.begin(), sorted.end());
          seen.insert(std::move(sorted));
          return;
        }
        const auto& [alpha, beta] = pairs[b];
        const int d = alpha.size();
        int ram = (alpha.size() - alpha.length()) + (beta.size() - beta.length());
        for (int m = 1; m <= d; ++m) {
          for (const auto& marked : enumerate_partitions(m)) {
            const int two_g = ram + (marked.size() - marked.length()) - 2 * d + 2;
            if (two_g < 0 || two_g % 2 != 0) continue;
            chosen[b] = TripodVertex{two_g / 2, alpha, beta, marked, d - m};
            vertical(b + 1);
          }
        }
      };
      vertical(0);
    }
  }

  for (const auto& vertices : seen) {
    std::vector<int> marked_parts;
    int genus = 1;
    for (const auto& v : vertices) {
      genus += v.genus - 1;
      for (int p : v.marked) marked_parts.push_back(p);
    }
    const Partition mu_x(marked_parts);
    if (2 * genus + mu_x.length() + k - mu_x.size() != 2 * star.genus) continue;
    const Rational rho = cc.expansion.coefficient(mu_x);
    if (sgn(rho) == 0) continue;
    Rational h = 1;
    Integer aut = 1;
    for (std::size_t i = 0; i < vertices.size();) {
      std::size_t j = i;
      while (j < vertices.size() && vertices[j] == vertices[i]) ++j;
      aut *= factorial(static_cast<unsigned>(j - i));
      i = j;
    }
    for (const auto& v : vertices) {
      h *= vertex_hurwitz(v);
      aut *= ul(aut_count(v.left)) * ul(aut_count(v.right)) * ul(aut_count(v.marked)) *
             factorial(static_cast<unsigned>(v.unmarked));
    }
    TripodCover x;
    x.vertices = vertices;
    x.marked_profile = mu_x;
    x.genus = genus;
    x.coefficient = rho / kf;
    x.hurwitz = h / Rational(aut);
    x.weight = x.coefficient * x.hurwitz;
    out.total += x.weight;
    out.terms.push_back(std::move(x));
  }
  const Rational expected = vertex_multiplicity(star) / Rational(ul(aut_count(star.left)) * ul(aut_count(star.right)));
  if (out.total != expected) {
    throw std::logic_error("local expansion total " + to_string(out.total) + " differs from " + to_string(expected));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct FlatEdge {
  int from;  // fiber or kLeftEnd
  int to;    // fiber or kRightEnd
  int weight;
};

// Assignment of the individual edges at a vertex to tripod-vertex slots.
struct SlotAssignment {
  std::vector<int> in_slot;   // edge id -> tripod vertex, for edges ending here
  std::vector<int> out_slot;  // edge id -> tripod vertex, for edges starting here
};

// Every bijection between the listed edges and the slots with equal weights.
void for_each_slotting(const std::vector<int>& edge_ids, const std::vector<FlatEdge>& edges,
                       const std::vector<std::pair<int, int>>& slots,  // (weight, tripod vertex)
                       const std::function<void(const std::map<int, int>&)>& fn) {
  std::map<int, std::vector<int>> by_weight_edges, by_weight_slots;
  for (int e : edge_ids) by_weight_edges[edges[static_cast<std::size_t>(e)].weight].push_back(e);
  for (const auto& [w, t] : slots) by_weight_slots[w].push_back(t);
  std::vector<std::pair<std::vector<int>, std::vector<int>>> groups;
  for (auto& [w, es] : by_weight_edges) {
    auto& ts = by_weight_slots[w];
    if (ts.size() != es.size()) return;
    std::sort(ts.begin(), ts.end());
    groups.emplace_back(es, ts);
  }
  std::map<int, int> assignment;
  std::function<void(std::size_t)> rec = [&](std::size_t g) {
    if (g == groups.size()) {
      fn(assignment);
      return;
    }
    auto ts = groups[g].second;
    do {
      for (std::size_t i = 0; i < ts.size(); ++i) assignment[groups[g].first[i]] = ts[i];
      rec(g + 1);
    } while (std::next_permutation(ts.begin(), ts.end()));
  };
  rec(0);
}

Rational marked_coefficient(const TropicalCover& cover, const std::vector<int>& insertions) {
  Rational c = 1;
  for (std::size_t i = 0; i < insertions.size(); ++i) {
    std::vector<int> parts;
    for (const auto& e : cover.vertical_ends) {
      if (!e.marked || cover.vertices[static_cast<std::size_t>(e.vertex)].position != static_cast<int>(i)) continue;
      for (int r = 0; r < e.multiplicity; ++r) parts.push_back(e.weight);
    }
    const int k = insertions[i];
    c *= completion_coefficients(k).expansion.coefficient(Partition(parts)) /
         Rational(factorial(static_cast<unsigned>(k)));
  }
  return c;
}

}  // namespace

SurgeryResult tgwh_surgery(const TropicalCover& cover, const std::vector<int>& insertions) {
  const int n = static_cast<int>(insertions.size());
  if (static_cast<int>(cover.vertices.size()) != n) {
    throw std::invalid_argument("the cover must have one vertex per insertion point");
  }
  for (int i = 0; i < n; ++i) {
    if (cover.vertices[static_cast<std::size_t>(i)].position != i) {
      throw std::invalid_argument("vertex ids must equal their insertion positions");
    }
  }
  std::vector<FlatEdge> edges;
  for (const auto& e : cover.edges)
    for (int r = 0; r < e.multiplicity; ++r) edges.push_back(FlatEdge{e.from, e.to, e.weight});

  // local expansions per vertex
  std::vector<std::vector<int>> in_edges(static_cast<std::size_t>(n)), out_edges(static_cast<std::size_t>(n));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].to >= 0) in_edges[static_cast<std::size_t>(edges[e].to)].push_back(static_cast<int>(e));
    if (edges[e].from >= 0) out_edges[static_cast<std::size_t>(edges[e].from)].push_back(static_cast<int>(e));
  }
  std::vector<LocalExpansion> expansions;
  for (int i = 0; i < n; ++i) {
    const auto star = vertex_star(cover, i);
    expansions.push_back(local_expand(VertexData{cover.vertices[static_cast<std::size_t>(i)].genus, star.in, star.out}));
  }

  std::map<std::string, SurgeryEntry> found;
  std::vector<const TripodCover*> pick(static_cast<std::size_t>(n));
  std::vector<std::map<int, int>> in_assign(static_cast<std::size_t>(n)), out_assign(static_cast<std::size_t>(n));

  auto build = [&]() {
    TropicalCover out;
    out.degree = cover.degree;
    std::vector<std::vector<int>> tripod_ids(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      for (const auto& tv : pick[static_cast<std::size_t>(i)]->vertices) {
        const int id = static_cast<int>(out.vertices.size());
        tripod_ids[static_cast<std::size_t>(i)].push_back(id);
        out.vertices.push_back(CoverVertex{i, tv.genus});
        for (int p : tv.marked) out.vertical_ends.push_back(VerticalEnd{id, p, 1, true});
        if (tv.unmarked > 0) out.vertical_ends.push_back(VerticalEnd{id, 1, tv.unmarked, false});
      }
    }
    std::vector<EdgeClass> segs;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const auto& fe = edges[e];
      int prev = fe.from >= 0 ? tripod_ids[static_cast<std::size_t>(fe.from)][static_cast<std::size_t>(
                                    out_assign[static_cast<std::size_t>(fe.from)].at(static_cast<int>(e)))]
                              : kLeftEnd;
      const int first = fe.from >= 0 ? fe.from + 1 : 0;
      const int last = fe.to >= 0 ? fe.to : n;  // exclusive
      for (int x = first; x < last; ++x) {
        const int id = static_cast<int>(out.vertices.size());
        out.vertices.push_back(CoverVertex{x, 0});
        out.vertical_ends.push_back(VerticalEnd{id, 1, fe.weight, false});
        segs.push_back(EdgeClass{prev, id, fe.weight, 1, false});
        prev = id;
      }
      const int end = fe.to >= 0 ? tripod_ids[static_cast<std::size_t>(fe.to)][static_cast<std::size_t>(
                                       in_assign[static_cast<std::size_t>(fe.to)].at(static_cast<int>(e)))]
                                 : kRightEnd;
      segs.push_back(EdgeClass{prev, end, fe.weight, 1, false});
    }
    std::map<std::tuple<int, int, int>, int> merged;
    for (const auto& s : segs) merged[{s.from, s.to, s.weight}] += 1;
    for (const auto& [key, m] : merged) {
      const auto& [f, t, w] = key;
      out.edges.push_back(EdgeClass{f, t, w, m, false});
    }
    std::map<std::tuple<int, int, bool>, int> vmerged;
    for (const auto& v : out.vertical_ends) vmerged[{v.vertex, v.weight, v.marked}] += v.multiplicity;
    out.vertical_ends.clear();
    for (const auto& [key, m] : vmerged) {
      const auto& [v, w, mk] = key;
      out.vertical_ends.push_back(VerticalEnd{v, w, m, mk});
    }
    out.genus = cover_genus(out);
    auto key = canonical_key(out);
    if (found.count(key)) return;
    SurgeryEntry entry;
    entry.coefficient = marked_coefficient(out, insertions);
    entry.multiplicity = hurwitz_cover_multiplicity(out);
    entry.contribution = entry.coefficient * entry.multiplicity.total;
    entry.cover = std::move(out);
    found.emplace(std::move(key), std::move(entry));
  };

  std::function<void(int)> per_vertex = [&](int i) {
    if (i == n) {
      build();
      return;
    }
    const auto ui = static_cast<std::size_t>(i);
    for (const auto& x : expansions[ui].terms) {
      pick[ui] = &x;
      std::vector<std::pair<int, int>> in_slots, out_slots;
      for (std::size_t t = 0; t < x.vertices.size(); ++t) {
        for (int w : x.vertices[t].left) in_slots.emplace_back(w, static_cast<int>(t));
        for (int w : x.vertices[t].right) out_slots.emplace_back(w, static_cast<int>(t));
      }
      for_each_slotting(in_edges[ui], edges, in_slots, [&](const std::map<int, int>& ia) {
        in_assign[ui] = ia;
        for_each_slotting(out_edges[ui], edges, out_slots, [&](const std::map<int, int>& oa) {
          out_assign[ui] = oa;
          per_vertex(i + 1);
        });
      });
    }
  };
  per_vertex(0);

  SurgeryResult result;
  result.total = 0;
  for (auto& [key, entry] : found) {
    result.total += entry.contribution;
    result.entries.push_back(std::move(entry));
  }
  return result;
}

TropicalCover collapse_surgery_cover(const TropicalCover& c, const std::vector<int>& insertions) {
  const auto nv = c.vertices.size();
  std::vector<bool> tripod(nv, false);
  for (const auto& e : c.vertical_ends)
    if (e.marked) tripod[static_cast<std::size_t>(e.vertex)] = true;
  std::vector<std::vector<const EdgeClass*>> outgoing(nv);
  for (const auto& e : c.edges)
    if (e.from >= 0) outgoing[static_cast<std::size_t>(e.from)].push_back(&e);

  TropicalCover g;
  g.degree = c.degree;
  for (std::size_t i = 0; i < insertions.size(); ++i) g.vertices.push_back(CoverVertex{static_cast<int>(i), 0});
  auto image = [&](int v) -> int {
    if (v < 0) return v;
    return c.vertices[static_cast<std::size_t>(v)].position;
  };
  std::vector<EdgeClass> edges;
  for (const auto& e : c.edges) {
    if (e.from >= 0 && !tripod[static_cast<std::size_t>(e.from)]) continue;  // starts inside a chain
    for (int r = 0; r < e.multiplicity; ++r) {
      int to = e.to;
      while (to >= 0 && !tripod[static_cast<std::size_t>(to)]) {
        const auto& next = outgoing[static_cast<std::size_t>(to)];
        if (next.size() != 1 || next.front()->multiplicity != 1) {
          throw std::invalid_argument("an unmarked vertex must have exactly one outgoing edge");
        }
        to = next.front()->to;
      }
      edges.push_back(EdgeClass{image(e.from), image(to), e.weight, 1, false});
    }
  }
  std::map<std::tuple<int, int, int>, int> merged;
  for (const auto& s : edges) merged[{s.from, s.to, s.weight}] += 1;
  for (const auto& [key, m] : merged) {
    const auto& [f, t, w] = key;
    g.edges.push_back(EdgeClass{f, t, w, m, false});
  }
  for (std::size_t i = 0; i < insertions.size(); ++i) {
    const auto star = vertex_star(g, static_cast<int>(i));
    const int slack = insertions[i] + 2 - star.in.length() - star.out.length();
    if (slack < 0 || slack % 2 != 0) throw std::invalid_argument("collapsed vertex has the wrong valence");
    g.vertices[i].genus = slack / 2;
  }
  g.genus = cover_genus(g);
  return g;
}

Rational substitute_and_evaluate(const Partition& mu, const Partition& nu, const std::vector<int>& insertions) {
  if (mu.size() != nu.size()) throw std::invalid_argument("|mu| != |nu|");
  std::vector<WElement> conditions{WElement::basis(mu)};
  for (int k : insertions) {
    conditions.push_back(1 / Rational(factorial(static_cast<unsigned>(k))) * completion_coefficients(k).expansion);
  }
  conditions.push_back(WElement::basis(nu));
  return eval_hurwitz_extended(mu.size(), conditions);
}

}  // namespace tropgw

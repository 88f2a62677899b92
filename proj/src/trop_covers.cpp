#include "tropgw/trop_covers.hpp"

#include "tropgw/local_gw.hpp"
#include "tropgw/perm_hurwitz.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace tropgw {

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  }
  void join(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

Integer int_factorial(int n) { return factorial(static_cast<unsigned>(n)); }

Integer int_power(int base, int exp) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
  return r;
}

// Merges parallel classes and sorts; drops empty classes.
std::vector<EdgeClass> normalize_edges(std::vector<EdgeClass> edges) {
  std::map<std::tuple<int, int, int, bool>, int> merged;
  for (const auto& e : edges) merged[{e.from, e.to, e.weight, e.wraps}] += e.multiplicity;
  std::vector<EdgeClass> out;
  for (const auto& [key, m] : merged) {
    if (m == 0) continue;
    const auto& [from, to, w, wraps] = key;
    out.push_back(EdgeClass{from, to, w, m, wraps});
  }
  return out;
}

std::vector<VerticalEnd> normalize_vertical(std::vector<VerticalEnd> ends) {
  std::map<std::tuple<int, int, bool>, int> merged;
  for (const auto& e : ends) merged[{e.vertex, e.weight, e.marked}] += e.multiplicity;
  std::vector<VerticalEnd> out;
  for (const auto& [key, m] : merged) {
    if (m == 0) continue;
    const auto& [v, w, marked] = key;
    out.push_back(VerticalEnd{v, w, m, marked});
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Graph structure

int cover_genus(const TropicalCover& cover) {
  int g = 1;
  for (const auto& v : cover.vertices) g += v.genus - 1;
  for (const auto& e : cover.edges) {
    if (e.bounded()) g += e.multiplicity;
    if (e.from == kLeftEnd && e.to == kRightEnd) g -= e.multiplicity;  // each line is a sphere
  }
  return g;
}

bool cover_connected(const TropicalCover& cover) {
  const auto nv = cover.vertices.size();
  int lines = 0;
  for (const auto& e : cover.edges)
    if (e.from == kLeftEnd && e.to == kRightEnd) lines += e.multiplicity;
  if (nv == 0) return lines == 1;
  if (lines > 0) return false;
  DisjointSets ds(nv);
  for (const auto& e : cover.edges)
    if (e.bounded()) ds.join(e.from, e.to);
  for (std::size_t v = 1; v < nv; ++v)
    if (ds.find(static_cast<int>(v)) != ds.find(0)) return false;
  return true;
}

VertexStar vertex_star(const TropicalCover& cover, int vertex) {
  std::vector<int> in, vert, out;
  for (const auto& e : cover.edges) {
    for (int i = 0; i < e.multiplicity; ++i) {
      if (e.to == vertex) in.push_back(e.weight);
      if (e.from == vertex) out.push_back(e.weight);
    }
  }
  for (const auto& e : cover.vertical_ends)
    if (e.vertex == vertex)
      for (int i = 0; i < e.multiplicity; ++i) vert.push_back(e.weight);
  return VertexStar{Partition(in), Partition(vert), Partition(out)};
}

namespace {

// Canonical labeling by color refinement followed by exhaustive search over
// vertex orderings that respect the refined colors, one component at a time.
struct Canonical {
  std::string key;
  Integer vertex_automorphisms;
};

Canonical canonicalize(const TropicalCover& cover) {
  const auto nv = cover.vertices.size();
  DisjointSets ds(nv);
  for (const auto& e : cover.edges)
    if (e.bounded()) ds.join(e.from, e.to);

  // Initial colors: local data that never depends on labels.
  std::vector<std::string> base(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    std::ostringstream os;
    os << 'p' << cover.vertices[v].position << 'g' << cover.vertices[v].genus << 'V';
    std::vector<std::tuple<int, bool, int>> vert;
    for (const auto& e : cover.vertical_ends)
      if (e.vertex == static_cast<int>(v)) vert.emplace_back(e.weight, e.marked, e.multiplicity);
    std::sort(vert.begin(), vert.end());
    for (const auto& [w, mk, m] : vert) os << w << (mk ? 'M' : 'u') << m << ',';
    std::vector<std::tuple<int, int, int>> ends;
    for (const auto& e : cover.edges) {
      if (e.to == static_cast<int>(v) && e.from == kLeftEnd) ends.emplace_back(0, e.weight, e.multiplicity);
      if (e.from == static_cast<int>(v) && e.to == kRightEnd) ends.emplace_back(1, e.weight, e.multiplicity);
    }
    std::sort(ends.begin(), ends.end());
    os << 'E';
    for (const auto& [side, w, m] : ends) os << side << ':' << w << 'x' << m << ',';
    base[v] = os.str();
  }

  std::map<int, std::vector<int>> components;
  for (std::size_t v = 0; v < nv; ++v) components[ds.find(static_cast<int>(v))].push_back(static_cast<int>(v));

  std::vector<std::string> comp_keys;
  Integer vertex_aut = 1;
  for (const auto& [root, members] : components) {
    const auto n = members.size();
    std::map<int, std::size_t> local;
    for (std::size_t i = 0; i < n; ++i) local[members[i]] = i;
    std::vector<EdgeClass> internal;
    for (const auto& e : cover.edges)
      if (e.bounded() && local.count(e.from)) internal.push_back(e);

    std::vector<std::string> color(n);
    for (std::size_t i = 0; i < n; ++i) color[i] = base[static_cast<std::size_t>(members[i])];
    auto rank_colors = [&](const std::vector<std::string>& c) {
      std::vector<std::string> sorted = c;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      std::vector<int> r(n);
      for (std::size_t i = 0; i < n; ++i)
        r[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), c[i]) - sorted.begin());
      return std::make_pair(r, sorted.size());
    };
    auto [ids, distinct] = rank_colors(color);
    std::vector<std::string> names = color;
    while (true) {
      std::vector<std::string> next(n);
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::tuple<int, int, int, int, bool>> nb;
        for (const auto& e : internal) {
          if (local.at(e.from) == i) nb.emplace_back(1, ids[local.at(e.to)], e.weight, e.multiplicity, e.wraps);
          if (local.at(e.to) == i) nb.emplace_back(0, ids[local.at(e.from)], e.weight, e.multiplicity, e.wraps);
        }
        std::sort(nb.begin(), nb.end());
        std::ostringstream os;
        os << ids[i] << '[';
        for (const auto& [dir, c, w, m, wr] : nb) os << dir << ':' << c << ':' << w << ':' << m << ':' << wr << ';';
        os << ']';
        next[i] = os.str();
      }
      auto [next_ids, next_distinct] = rank_colors(next);
      ids = next_ids;
      if (next_distinct == distinct) break;
      distinct = next_distinct;
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return ids[a] < ids[b]; });
    std::vector<std::pair<std::size_t, std::size_t>> groups;  // [begin, end) in order
    double search = 1;
    for (std::size_t i = 0; i < n;) {
      std::size_t j = i;
      while (j < n && ids[order[j]] == ids[order[i]]) ++j;
      groups.emplace_back(i, j);
      for (std::size_t f = 2; f <= j - i; ++f) search *= static_cast<double>(f);
      i = j;
    }
    if (search > 5e6) throw std::runtime_error("cover too symmetric for canonical labeling");
    for (auto& [b, e] : groups) std::sort(order.begin() + static_cast<long>(b), order.begin() + static_cast<long>(e));

    std::string best;
    Integer hits = 0;
    std::vector<std::size_t> position(n);
    std::function<void(std::size_t)> search_groups = [&](std::size_t gi) {
      if (gi == groups.size()) {
        for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;
        std::vector<std::tuple<std::size_t, std::size_t, int, int, bool>> enc;
        for (const auto& e : internal)
          enc.emplace_back(position[local.at(e.from)], position[local.at(e.to)], e.weight, e.multiplicity, e.wraps);
        std::sort(enc.begin(), enc.end());
        std::ostringstream os;
        for (const auto& [a, b, w, m, wr] : enc) os << a << '>' << b << ':' << w << 'x' << m << (wr ? "w" : "") << ';';
        const std::string s = os.str();
        if (hits == 0 || s < best) {
          best = s;
          hits = 1;
        } else if (s == best) {
          ++hits;
        }
        return;
      }
      const auto [b, e] = groups[gi];
      do {
        search_groups(gi + 1);
      } while (std::next_permutation(order.begin() + static_cast<long>(b), order.begin() + static_cast<long>(e)));
    };
    search_groups(0);
    std::ostringstream comp;
    comp << '{';
    for (std::size_t i = 0; i < n; ++i) comp << names[order[i]] << '#' << ids[order[i]] << '|';
    comp << best << '}';
    comp_keys.push_back(comp.str());
    vertex_aut *= hits;
  }
  std::sort(comp_keys.begin(), comp_keys.end());
  std::string key;
  for (std::size_t i = 0; i < comp_keys.size();) {
    std::size_t j = i;
    while (j < comp_keys.size() && comp_keys[j] == comp_keys[i]) ++j;
    vertex_aut *= int_factorial(static_cast<int>(j - i));
    i = j;
  }
  for (const auto& k : comp_keys) key += k;
  // Vertex-free lines are components too.
  std::vector<std::tuple<int, int, bool>> lines;
  for (const auto& e : cover.edges)
    if (!e.bounded() && e.from == kLeftEnd && e.to == kRightEnd) lines.emplace_back(e.weight, e.multiplicity, e.wraps);
  std::sort(lines.begin(), lines.end());
  for (const auto& [w, m, wr] : lines) key += "L" + std::to_string(w) + "x" + std::to_string(m) + (wr ? "w" : "");
  return Canonical{key, vertex_aut};
}

}  // namespace

std::string canonical_key(const TropicalCover& cover) { return canonicalize(cover).key; }

Integer automorphism_count(const TropicalCover& cover) {
  Integer aut = canonicalize(cover).vertex_automorphisms;
  for (const auto& e : cover.edges) aut *= int_factorial(e.multiplicity);
  for (const auto& e : cover.vertical_ends) aut *= int_factorial(e.multiplicity);
  return aut;
}

// ---------------------------------------------------------------------------
// Descendant covers of the line

std::optional<int> descendant_genus(const Partition& mu, const Partition& nu, const std::vector<int>& insertions) {
  const int total = std::accumulate(insertions.begin(), insertions.end(), 0);
  const int two_g = total + 2 - mu.length() - nu.length();
  if (two_g % 2 != 0) return std::nullopt;
  return two_g / 2;
}

namespace {

struct OpenClass {
  int weight;
  int origin;
  int count;
  friend auto operator<=>(const OpenClass&, const OpenClass&) = default;
};

void add_open(std::vector<OpenClass>& open, int weight, int origin, int count) {
  for (auto& c : open) {
    if (c.weight == weight && c.origin == origin) {
      c.count += count;
      return;
    }
  }
  open.push_back(OpenClass{weight, origin, count});
}

class DescendantSweep {
 public:
  explicit DescendantSweep(const DescendantProblem& p) : p_(p) {}

  std::vector<WeightedCover> run() {
    std::vector<OpenClass> open;
    for (int w : p_.left) add_open(open, w, kLeftEnd, 1);
    vertex(0, open);
    return std::move(out_);
  }

 private:
  void vertex(std::size_t i, std::vector<OpenClass> open) {
    if (i == p_.insertions.size()) {
      finish(open);
      return;
    }
    const int valence = p_.insertions[i] + 2;
    std::vector<int> take(open.size(), 0);
    // choose how many strands of each open class terminate at vertex i
    std::function<void(std::size_t, int, int)> choose = [&](std::size_t c, int taken, int degree) {
      if (c == open.size()) {
        if (taken == 0) return;
        emit(i, open, take, taken, degree, valence);
        return;
      }
      for (int t = 0; t <= open[c].count && taken + t <= valence - 1; ++t) {
        take[c] = t;
        choose(c + 1, taken + t, degree + t * open[c].weight);
      }
      take[c] = 0;
    };
    choose(0, 0, 0);
  }

  void emit(std::size_t i, const std::vector<OpenClass>& open, const std::vector<int>& take, int in_count, int degree,
            int valence) {
    std::vector<int> in_parts;
    for (std::size_t c = 0; c < open.size(); ++c)
      for (int t = 0; t < take[c]; ++t) in_parts.push_back(open[c].weight);
    const Partition in(in_parts);
    for (const auto& out : enumerate_partitions(degree, valence - in_count)) {
      const int slack = valence - in_count - out.length();
      if (slack % 2 != 0) continue;
      const int g = slack / 2;
      const Rational m = vertex_multiplicity(g, in, out);
      if (sgn(m) == 0) continue;
      std::vector<OpenClass> next;
      const int id = static_cast<int>(i);
      for (std::size_t c = 0; c < open.size(); ++c) {
        if (take[c] > 0) edges_.push_back(EdgeClass{open[c].origin, id, open[c].weight, take[c], false});
        if (open[c].count > take[c]) next.push_back(OpenClass{open[c].weight, open[c].origin, open[c].count - take[c]});
      }
      for (int w : out) add_open(next, w, id, 1);
      const auto saved_edges = edges_.size();
      vertices_.push_back(CoverVertex{id, g});
      factors_.push_back(m);
      vertex(i + 1, next);
      vertices_.pop_back();
      factors_.pop_back();
      std::size_t pushed = 0;
      for (std::size_t c = 0; c < open.size(); ++c) pushed += take[c] > 0;
      edges_.resize(saved_edges - pushed);
    }
  }

  void finish(const std::vector<OpenClass>& open) {
    std::vector<int> weights;
    for (const auto& c : open)
      for (int t = 0; t < c.count; ++t) weights.push_back(c.weight);
    if (Partition(weights) != p_.right) return;
    TropicalCover cover;
    cover.degree = p_.left.size();
    cover.vertices = vertices_;
    std::vector<EdgeClass> edges = edges_;
    for (const auto& c : open) edges.push_back(EdgeClass{c.origin, kRightEnd, c.weight, c.count, false});
    cover.edges = normalize_edges(std::move(edges));
    cover.genus = cover_genus(cover);
    if (p_.genus && *p_.genus != cover.genus) return;
    if (p_.connected && !cover_connected(cover)) return;

    CoverMultiplicity mult;
    Integer aut = 1;
    for (const auto& e : cover.edges) {
      aut *= int_factorial(e.multiplicity);
      if (e.bounded()) mult.edge_factor *= int_power(e.weight, e.multiplicity);
      // a vertex-free line of weight w also has the Z/w deck rotations
      if (e.from == kLeftEnd && e.to == kRightEnd) aut *= int_power(e.weight, e.multiplicity);
    }
    for (const auto& f : factors_) mult.vertex_factor *= f;
    mult.automorphisms = Rational(aut);
    mult.total = mult.vertex_factor * Rational(mult.edge_factor) / mult.automorphisms;
    out_.push_back(WeightedCover{std::move(cover), mult});
  }

  const DescendantProblem& p_;
  std::vector<CoverVertex> vertices_;
  std::vector<EdgeClass> edges_;
  std::vector<Rational> factors_;
  std::vector<WeightedCover> out_;
};

}  // namespace

std::vector<WeightedCover> enumerate_descendant_covers(const DescendantProblem& p) {
  if (p.left.size() != p.right.size()) {
    throw std::invalid_argument("|mu| = " + std::to_string(p.left.size()) + " differs from |nu| = " +
                                std::to_string(p.right.size()));
  }
  for (int k : p.insertions)
    if (k < 0) throw std::invalid_argument("descendant powers must be non-negative");
  const auto g = descendant_genus(p.left, p.right, p.insertions);
  if (!g || (p.genus && *p.genus != *g)) return {};
  if (p.left.empty()) {
    // degree 0: the empty cover only contributes without insertions
    if (!p.insertions.empty() || p.connected) return {};
    TropicalCover empty;
    empty.genus = 1;
    return {WeightedCover{empty, CoverMultiplicity{1, 1, 1, 1}}};
  }
  return DescendantSweep(p).run();
}

Rational descendant_invariant(const DescendantProblem& p) {
  Rational total = 0;
  for (const auto& c : enumerate_descendant_covers(p)) total += c.multiplicity.total;
  return total;
}

// ---------------------------------------------------------------------------
// Hurwitz covers of caterpillars and cycles

CoverMultiplicity hurwitz_cover_multiplicity(const TropicalCover& cover) {
  CoverMultiplicity m;
  for (std::size_t v = 0; v < cover.vertices.size(); ++v) {
    const auto star = vertex_star(cover, static_cast<int>(v));
    const std::vector<Partition> prof{star.in, star.vertical, star.out};
    m.vertex_factor *= local_hurwitz(cover.vertices[v].genus, 0, prof);
  }
  for (const auto& e : cover.edges)
    if (e.bounded()) m.edge_factor *= int_power(e.weight, e.multiplicity);
  m.automorphisms = Rational(automorphism_count(cover));
  m.total = m.vertex_factor * Rational(m.edge_factor) / m.automorphisms;
  return m;
}

namespace {

constexpr int kWrapOrigin = -3;

struct Strand {
  int weight;
  int origin;  // vertex id, kLeftEnd, or kWrapOrigin
  int slot;    // wrap slot for kWrapOrigin strands
};

struct BlockChoice {
  std::vector<std::size_t> strands;
  std::vector<std::pair<int, int>> signature;  // (weight, origin) of the strands, sorted
  Partition vertical;
  Partition out;
  int genus = 0;
  auto key() const { return std::tie(signature, vertical, out, genus); }
};

// All ways the open strands can end at the source vertices over one fiber,
// up to permuting identical strands.
std::vector<std::vector<BlockChoice>> fiber_choices(const std::vector<Strand>& strands, const Partition& vertical) {
  const std::size_t m = strands.size();
  std::vector<std::vector<BlockChoice>> result;
  std::set<std::vector<std::tuple<std::vector<std::pair<int, int>>, Partition, Partition, int>>> seen_full;
  std::set<std::vector<std::vector<std::pair<int, int>>>> seen_partitions;

  std::vector<int> block_of(m, 0);
  std::function<void(std::size_t, int)> set_partitions = [&](std::size_t i, int blocks) {
    if (i < m) {
      for (int b = 0; b <= blocks; ++b) {
        block_of[i] = b;
        set_partitions(i + 1, std::max(blocks, b + 1));
      }
      return;
    }
    std::vector<BlockChoice> bl(static_cast<std::size_t>(blocks));
    std::vector<int> degree(static_cast<std::size_t>(blocks), 0);
    for (std::size_t s = 0; s < m; ++s) {
      auto& b = bl[static_cast<std::size_t>(block_of[s])];
      b.strands.push_back(s);
      b.signature.emplace_back(strands[s].weight, strands[s].origin);
      degree[static_cast<std::size_t>(block_of[s])] += strands[s].weight;
    }
    for (auto& b : bl) std::sort(b.signature.begin(), b.signature.end());
    std::vector<std::vector<std::pair<int, int>>> sig;
    for (const auto& b : bl) sig.push_back(b.signature);
    std::sort(sig.begin(), sig.end());
    if (!seen_partitions.insert(sig).second) return;

    // distribute the vertical parts so that each block's parts sum to its degree
    std::vector<std::vector<int>> vert(static_cast<std::size_t>(blocks));
    std::vector<int> room = degree;
    std::set<std::vector<std::pair<std::vector<std::pair<int, int>>, std::vector<int>>>> seen_vertical;
    std::function<void(std::size_t)> place = [&](std::size_t part) {
      if (part == static_cast<std::size_t>(vertical.length())) {
        for (int r : room)
          if (r != 0) return;
        std::vector<std::pair<std::vector<std::pair<int, int>>, std::vector<int>>> vk;
        for (std::size_t b = 0; b < bl.size(); ++b) vk.emplace_back(bl[b].signature, vert[b]);
        std::sort(vk.begin(), vk.end());
        if (!seen_vertical.insert(vk).second) return;
        // choose the outgoing partition of every block
        std::vector<BlockChoice> chosen = bl;
        for (std::size_t b = 0; b < bl.size(); ++b) chosen[b].vertical = Partition(vert[b]);
        std::function<void(std::size_t)> outs = [&](std::size_t b) {
          if (b == chosen.size()) {
            std::vector<std::tuple<std::vector<std::pair<int, int>>, Partition, Partition, int>> full;
            for (const auto& c : chosen) full.emplace_back(c.signature, c.vertical, c.out, c.genus);
            std::sort(full.begin(), full.end());
            if (!seen_full.insert(full).second) return;
            auto sorted = chosen;
            std::sort(sorted.begin(), sorted.end(), [](const BlockChoice& x, const BlockChoice& y) { return x.key() < y.key(); });
            result.push_back(std::move(sorted));
            return;
          }
          const int d = degree[b];
          int ram = 0;
          for (const auto& [w, o] : chosen[b].signature) ram += w - 1;
          for (int w : chosen[b].vertical) ram += w - 1;
          for (const auto& out : enumerate_partitions(d)) {
            const int two_g = ram + (out.size() - out.length()) - 2 * d + 2;
            if (two_g < 0 || two_g % 2 != 0) continue;
            chosen[b].out = out;
            chosen[b].genus = two_g / 2;
            outs(b + 1);
          }
        };
        outs(0);
        return;
      }
      const int w = vertical[part];
      for (std::size_t b = 0; b < vert.size(); ++b) {
        if (room[b] < w) continue;
        room[b] -= w;
        vert[b].push_back(w);
        place(part + 1);
        vert[b].pop_back();
        room[b] += w;
      }
    };
    place(0);
  };
  set_partitions(0, 0);
  return result;
}

class HurwitzSweep {
 public:
  HurwitzSweep(const HurwitzTarget& t, int d) : target_(t), d_(d) {
    const bool cycle = t.shape == HurwitzTarget::Shape::Cycle;
    auto prof = t.profiles;
    for (const auto& mu : prof) {
      if (mu.size() != d) {
        throw std::invalid_argument("profile (" + to_string(mu) + ") is not a partition of d=" + std::to_string(d));
      }
    }
    if (cycle) {
      verticals_ = prof.empty() ? std::vector<Partition>{Partition::ones(d)} : prof;
    } else {
      while (prof.size() < 3) prof.insert(prof.begin() + (prof.empty() ? 0 : 1), Partition::ones(d));
      left_ = prof.front();
      right_ = prof.back();
      verticals_.assign(prof.begin() + 1, prof.end() - 1);
    }
  }

  std::vector<WeightedCover> run() {
    if (target_.shape == HurwitzTarget::Shape::Cycle) {
      for (const auto& wrap : enumerate_partitions(d_)) {
        wrap_ = wrap;
        wrap_dest_.assign(static_cast<std::size_t>(wrap.length()), -1);
        std::vector<Strand> s;
        for (int i = 0; i < wrap.length(); ++i) s.push_back(Strand{wrap[static_cast<std::size_t>(i)], kWrapOrigin, i});
        fiber(0, s);
      }
    } else {
      std::vector<Strand> s;
      for (int w : left_) s.push_back(Strand{w, kLeftEnd, -1});
      fiber(0, s);
    }
    std::vector<WeightedCover> out;
    for (auto& [key, cover] : found_) {
      auto m = hurwitz_cover_multiplicity(cover);
      out.push_back(WeightedCover{std::move(cover), m});
    }
    return out;
  }

 private:
  void fiber(std::size_t j, const std::vector<Strand>& strands) {
    if (j == verticals_.size()) {
      finish(strands);
      return;
    }
    for (const auto& choice : fiber_choices(strands, verticals_[j])) {
      const auto nv = vertices_.size(), ne = edges_.size(), nvert = vertical_.size();
      const auto saved_dest = wrap_dest_;
      std::vector<Strand> next;
      for (const auto& b : choice) {
        const int id = static_cast<int>(vertices_.size());
        vertices_.push_back(CoverVertex{static_cast<int>(j), b.genus});
        for (auto s : b.strands) {
          const auto& st = strands[s];
          if (st.origin == kWrapOrigin) {
            wrap_dest_[static_cast<std::size_t>(st.slot)] = id;
          } else {
            edges_.push_back(EdgeClass{st.origin, id, st.weight, 1, false});
          }
        }
        for (int w : b.vertical) vertical_.push_back(VerticalEnd{id, w, 1, true});
        for (int w : b.out) next.push_back(Strand{w, id, -1});
      }
      fiber(j + 1, next);
      vertices_.resize(nv);
      edges_.resize(ne);
      vertical_.resize(nvert);
      wrap_dest_ = saved_dest;
    }
  }

  void finish(const std::vector<Strand>& strands) {
    std::vector<int> weights;
    for (const auto& s : strands) weights.push_back(s.weight);
    const Partition final_profile(weights);
    if (target_.shape == HurwitzTarget::Shape::Caterpillar) {
      if (final_profile != right_) return;
      auto edges = edges_;
      for (const auto& s : strands) edges.push_back(EdgeClass{s.origin, kRightEnd, s.weight, 1, false});
      record(std::move(edges));
      return;
    }
    if (final_profile != wrap_) return;
    // glue outgoing strands of the last fiber to the wrap slots, weight by weight
    std::map<int, std::vector<int>> sources, dests;
    for (const auto& s : strands) sources[s.weight].push_back(s.origin);
    for (std::size_t i = 0; i < wrap_dest_.size(); ++i) dests[wrap_[i]].push_back(wrap_dest_[i]);
    std::vector<std::pair<std::vector<int>, std::vector<int>>> groups;
    std::vector<int> group_weight;
    for (auto& [w, src] : sources) {
      std::sort(dests[w].begin(), dests[w].end());
      groups.emplace_back(src, dests[w]);
      group_weight.push_back(w);
    }
    std::function<void(std::size_t, std::vector<EdgeClass>&)> glue = [&](std::size_t gi, std::vector<EdgeClass>& edges) {
      if (gi == groups.size()) {
        record(edges);
        return;
      }
      auto& [src, dst] = groups[gi];
      std::sort(dst.begin(), dst.end());
      do {
        const auto n = edges.size();
        for (std::size_t i = 0; i < src.size(); ++i) edges.push_back(EdgeClass{src[i], dst[i], group_weight[gi], 1, true});
        glue(gi + 1, edges);
        edges.resize(n);
      } while (std::next_permutation(dst.begin(), dst.end()));
    };
    auto edges = edges_;
    glue(0, edges);
  }

  void record(std::vector<EdgeClass> edges) {
    TropicalCover cover;
    cover.degree = d_;
    cover.vertices = vertices_;
    cover.edges = normalize_edges(std::move(edges));
    cover.vertical_ends = normalize_vertical(vertical_);
    cover.genus = cover_genus(cover);
    if (target_.genus && *target_.genus != cover.genus) return;
    if (target_.connected && !cover_connected(cover)) return;
    auto key = canonical_key(cover);
    found_.emplace(std::move(key), std::move(cover));
  }

  const HurwitzTarget& target_;
  int d_;
  Partition left_, right_, wrap_;
  std::vector<Partition> verticals_;
  std::vector<CoverVertex> vertices_;
  std::vector<EdgeClass> edges_;
  std::vector<VerticalEnd> vertical_;
  std::vector<int> wrap_dest_;
  std::map<std::string, TropicalCover> found_;
};

}  // namespace

std::vector<WeightedCover> enumerate_hurwitz_covers(const HurwitzTarget& target, int degree) {
  if (degree < 1) throw std::invalid_argument("degree must be positive");
  return HurwitzSweep(target, degree).run();
}

Rational tropical_hurwitz(const HurwitzTarget& target, int degree) {
  Rational total = 0;
  for (const auto& c : enumerate_hurwitz_covers(target, degree)) total += c.multiplicity.total;
  return total;
}

// ---------------------------------------------------------------------------
// Degeneration

std::vector<SplitCheck> split_at_point(const Partition& mu, const Partition& nu, const std::vector<int>& insertions) {
  if (mu.size() != nu.size()) throw std::invalid_argument("|mu| != |nu|");
  const Rational direct = descendant_invariant(DescendantProblem{mu, nu, insertions, false, std::nullopt});
  std::vector<SplitCheck> checks;
  for (std::size_t s = 0; s <= insertions.size(); ++s) {
    const std::vector<int> left(insertions.begin(), insertions.begin() + static_cast<long>(s));
    const std::vector<int> right(insertions.begin() + static_cast<long>(s), insertions.end());
    Rational glued = 0;
    for (const auto& eta : enumerate_partitions(mu.size())) {
      const Rational a = descendant_invariant(DescendantProblem{mu, eta, left, false, std::nullopt});
      if (sgn(a) == 0) continue;
      const Rational b = descendant_invariant(DescendantProblem{eta, nu, right, false, std::nullopt});
      glued += centralizer_rational(eta) * a * b;
    }
    checks.push_back(SplitCheck{static_cast<int>(s), direct, glued});
  }
  return checks;
}

}  // namespace tropgw

#include "gk/prime_graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace gk {

  namespace {

    std::uint64_t bit(std::size_t i) {
      return std::uint64_t{1} << i;
    }

    std::vector<Prime> mask_to_primes(PrimeGraph const& g, std::uint64_t mask) {
      std::vector<Prime> out;
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (mask & bit(i)) {
          out.push_back(g.vertices()[i]);
        }
      }
      return out;
    }

    // Include-first branch and bound. Vertices are tried in ascending
    // order, so the first maximum set reached is the lexicographically
    // least one; later sets only replace it when strictly larger.
    struct MaxIndependent {
      PrimeGraph const& g;
      std::uint64_t     best_mask = 0;
      unsigned          best_size = 0;

      void search(std::uint64_t chosen, unsigned size, std::uint64_t candidates) {
        if (size > best_size) {
          best_size = size;
          best_mask = chosen;
        }
        while (candidates != 0) {
          if (size + static_cast<unsigned>(std::popcount(candidates))
              <= best_size) {
            return;
          }
          std::size_t   v    = static_cast<std::size_t>(std::countr_zero(candidates));
          std::uint64_t rest = candidates & ~bit(v);
          search(chosen | bit(v), size + 1, rest & ~g.neighbours(v));
          candidates = rest;
        }
      }
    };
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // PrimeGraph
  ////////////////////////////////////////////////////////////////////////

  PrimeGraph::PrimeGraph(std::vector<Prime> vertices,
                         std::vector<Edge> const& edges)
      : _vertices(std::move(vertices)), _adj(_vertices.size(), 0) {
    if (_vertices.size() > kMaxVertices) {
      throw BoundsError("PrimeGraph: more than 64 vertices");
    }
    for (std::size_t i = 1; i < _vertices.size(); ++i) {
      if (_vertices[i - 1] >= _vertices[i]) {
        throw DomainError("PrimeGraph: vertices must be strictly increasing");
      }
    }
    for (auto [p, q] : edges) {
      if (p == q) {
        throw DomainError("PrimeGraph: self-loop at " + std::to_string(p));
      }
      std::size_t i = index_of(p), j = index_of(q);
      _adj[i] |= bit(j);
      _adj[j] |= bit(i);
    }
  }

  PrimeGraph PrimeGraph::from_masks(std::vector<Prime>         vertices,
                                    std::vector<std::uint64_t> adjacency) {
    PrimeGraph g;
    g._vertices = std::move(vertices);
    g._adj      = std::move(adjacency);
    return g;
  }

  bool PrimeGraph::contains(Prime p) const {
    return std::binary_search(_vertices.begin(), _vertices.end(), p);
  }

  std::size_t PrimeGraph::index_of(Prime p) const {
    auto it = std::lower_bound(_vertices.begin(), _vertices.end(), p);
    if (it == _vertices.end() || *it != p) {
      throw DomainError(std::to_string(p) + " is not a vertex");
    }
    return static_cast<std::size_t>(it - _vertices.begin());
  }

  bool PrimeGraph::adjacent(Prime p, Prime q) const {
    return (_adj[index_of(p)] & bit(index_of(q))) != 0;
  }

  unsigned PrimeGraph::degree(Prime p) const {
    return static_cast<unsigned>(std::popcount(_adj[index_of(p)]));
  }

  std::vector<Edge> PrimeGraph::edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = i + 1; j < size(); ++j) {
        if (_adj[i] & bit(j)) {
          out.emplace_back(_vertices[i], _vertices[j]);
        }
      }
    }
    return out;
  }

  std::size_t PrimeGraph::edge_count() const {
    std::size_t twice = 0;
    for (auto m : _adj) {
      twice += static_cast<std::size_t>(std::popcount(m));
    }
    return twice / 2;
  }

  ////////////////////////////////////////////////////////////////////////
  // Construction and statistics
  ////////////////////////////////////////////////////////////////////////

  PrimeGraph build_gk(Factorization const& order, NatSet const& mu) {
    if (!order.complete()) {
      throw DomainError("build_gk: group order is not completely factored");
    }
    std::vector<Prime> const vertices = order.primes();
    std::vector<Prime> const from_mu  = spectrum_primes(mu);
    if (vertices != from_mu) {
      std::vector<Prime> diff;
      std::set_symmetric_difference(vertices.begin(), vertices.end(),
                                    from_mu.begin(), from_mu.end(),
                                    std::back_inserter(diff));
      Prime bad = diff.front();
      bool  in_order = std::binary_search(vertices.begin(), vertices.end(), bad);
      throw ConsistencyError(
          "build_gk: prime " + std::to_string(bad)
          + (in_order ? " divides the order but no element order"
                      : " divides an element order but not the order"));
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      for (std::size_t j = i + 1; j < vertices.size(); ++j) {
        Nat pq = Nat(vertices[i]) * vertices[j];
        if (std::any_of(mu.begin(), mu.end(),
                        [&](Nat const& m) { return m % pq == 0; })) {
          edges.emplace_back(vertices[i], vertices[j]);
        }
      }
    }
    return PrimeGraph(vertices, edges);
  }

  DegreePattern degree_pattern(PrimeGraph const& g) {
    DegreePattern d;
    d.primes = g.vertices();
    for (std::size_t i = 0; i < g.size(); ++i) {
      d.degrees.push_back(static_cast<unsigned>(std::popcount(g.neighbours(i))));
    }
    return d;
  }

  std::vector<std::vector<Prime>> connected_components(PrimeGraph const& g) {
    std::vector<std::uint64_t> masks;
    std::uint64_t              seen = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (seen & bit(i)) {
        continue;
      }
      std::uint64_t comp = bit(i), frontier = bit(i);
      while (frontier != 0) {
        std::size_t v = static_cast<std::size_t>(std::countr_zero(frontier));
        frontier &= frontier - 1;
        std::uint64_t fresh = g.neighbours(v) & ~comp;
        comp |= fresh;
        frontier |= fresh;
      }
      seen |= comp;
      masks.push_back(comp);
    }
    // Discovery order is by smallest vertex; move the component of 2 first.
    std::vector<std::vector<Prime>> out;
    for (auto m : masks) {
      out.push_back(mask_to_primes(g, m));
    }
    auto two = std::find_if(out.begin(), out.end(), [](auto const& c) {
      return c.front() == 2;
    });
    if (two != out.end()) {
      std::rotate(out.begin(), two, two + 1);
    }
    return out;
  }

  OrderComponents components(PrimeGraph const& g, Factorization const& order) {
    if (order.primes() != g.vertices()) {
      throw DomainError("components: prime divisors of the order differ from "
                        "the graph's vertices");
    }
    OrderComponents out;
    for (auto& comp : connected_components(g)) {
      std::vector<PrimePower> factors;
      for (Prime p : comp) {
        factors.push_back({p, order.exponent(p)});
      }
      out.components.push_back({std::move(comp), Factorization(std::move(factors))});
    }
    return out;
  }

  IndependentSet independence(PrimeGraph const& g) {
    MaxIndependent search{g};
    std::uint64_t  all = g.size() == 64 ? ~std::uint64_t{0} : bit(g.size()) - 1;
    search.search(0, 0, all);
    return {search.best_size, mask_to_primes(g, search.best_mask)};
  }

  IndependentSet independence_at(PrimeGraph const& g, Prime r) {
    std::size_t const ri = g.index_of(r);
    MaxIndependent    search{g};
    std::uint64_t all = g.size() == 64 ? ~std::uint64_t{0} : bit(g.size()) - 1;
    std::uint64_t candidates = all & ~bit(ri) & ~g.neighbours(ri);
    search.search(bit(ri), 1, candidates);
    return {search.best_size, mask_to_primes(g, search.best_mask)};
  }

  SuzukiDecomposition suzuki_decomposition(PrimeGraph const& g) {
    SuzukiDecomposition out;
    auto                comps = connected_components(g);
    for (std::size_t c = 1; c < comps.size(); ++c) {
      auto const& comp = comps[c];
      for (std::size_t i = 0; i < comp.size() && out.holds; ++i) {
        for (std::size_t j = i + 1; j < comp.size(); ++j) {
          if (!g.adjacent(comp[i], comp[j])) {
            out.holds     = false;
            out.violation = Edge{comp[i], comp[j]};
            break;
          }
        }
      }
      if (!out.holds) {
        out.clique_sizes.clear();
        return out;
      }
      out.clique_sizes.push_back(static_cast<unsigned>(comp.size()));
    }
    return out;
  }

  DegreeClasses degree_classes(PrimeGraph const& g) {
    DegreeClasses out;
    auto const    pattern = degree_pattern(g);
    for (std::size_t i = 0; i < pattern.primes.size(); ++i) {
      out.classes[pattern.degrees[i]].push_back(pattern.primes[i]);
    }
    out.s = connected_components(g).size();
    auto isolated = out.classes.find(0);
    std::size_t d0 = isolated == out.classes.end() ? 0 : isolated->second.size();
    out.isolated_bound_holds = out.s >= d0;
    if (g.size() > 0) {
      unsigned const top       = static_cast<unsigned>(g.size() - 1);
      out.full_degree_present  = out.classes.contains(top);
      out.full_degree_implies_connected = !out.full_degree_present || out.s == 1;
    }
    if (!out.isolated_bound_holds || !out.full_degree_implies_connected) {
      throw ConsistencyError("degree_classes: structural bound violated");
    }
    return out;
  }

  std::string to_dot(PrimeGraph const& g, std::string_view label) {
    std::ostringstream os;
    os << "graph GK {\n";
    if (!label.empty()) {
      os << "  label=\"" << label << "\";\n";
    }
    for (Prime p : g.vertices()) {
      os << "  " << p << ";\n";
    }
    for (auto [p, q] : g.edges()) {
      os << "  " << p << " -- " << q << ";\n";
    }
    os << "}\n";
    return os.str();
  }

}  // namespace gk

// Gruenberg-Kegel prime graphs and the statistics computed from them:
// degree pattern, connected components and order components, independence
// numbers t(G) and t(r, G), Suzuki clique decomposition, degree classes.

#ifndef GK_PRIME_GRAPH_HPP_
#define GK_PRIME_GRAPH_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gk/arith.hpp"
#include "gk/spectra.hpp"

namespace gk {

  using Prime = std::uint64_t;
  using Edge  = std::pair<Prime, Prime>;  // first < second

  // Simple graph on ascending primes. At most 64 vertices; adjacency is
  // held as one bitmask per vertex.
  class PrimeGraph {
   public:
    static constexpr std::size_t kMaxVertices = 64;

    PrimeGraph() = default;
    PrimeGraph(std::vector<Prime> vertices, std::vector<Edge> const& edges);

    std::vector<Prime> const& vertices() const noexcept {
      return _vertices;
    }
    std::size_t size() const noexcept {
      return _vertices.size();
    }
    bool                 contains(Prime p) const;
    std::size_t          index_of(Prime p) const;  // DomainError if absent
    bool                 adjacent(Prime p, Prime q) const;
    unsigned             degree(Prime p) const;
    std::vector<Edge>    edges() const;  // lexicographically sorted
    std::size_t          edge_count() const;

    // Bitmask of neighbours of the vertex with index i.
    std::uint64_t neighbours(std::size_t i) const {
      return _adj[i];
    }
    std::vector<std::uint64_t> const& adjacency() const noexcept {
      return _adj;
    }

    // Graph on the same vertices built from index-space bitmasks; used by
    // the enumerator.
    static PrimeGraph from_masks(std::vector<Prime>         vertices,
                                 std::vector<std::uint64_t> adjacency);

    bool operator==(PrimeGraph const&) const = default;

   private:
    std::vector<Prime>         _vertices;
    std::vector<std::uint64_t> _adj;
  };

  struct DegreePattern {
    std::vector<Prime>    primes;
    std::vector<unsigned> degrees;

    bool operator==(DegreePattern const&) const = default;
  };

  struct OrderComponent {
    std::vector<Prime> primes;
    Factorization      m;
  };

  struct OrderComponents {
    std::vector<OrderComponent> components;

    std::size_t s() const noexcept {
      return components.size();
    }
  };

  struct IndependentSet {
    unsigned           size = 0;
    std::vector<Prime> witness;  // lexicographically least maximum set
  };

  struct SuzukiDecomposition {
    bool                 holds = true;
    std::vector<unsigned> clique_sizes;  // n_2, ..., n_s
    std::optional<Edge>   violation;     // first missing edge found
  };

  struct DegreeClasses {
    std::map<unsigned, std::vector<Prime>> classes;  // n -> D_n
    std::size_t                            s = 0;
    // s >= |D_0|
    bool isolated_bound_holds = true;
    // D_{k-1} nonempty, where k = |vertices|
    bool full_degree_present = false;
    // D_{k-1} nonempty implies s == 1
    bool full_degree_implies_connected = true;
  };

  // Vertices are pi(order); p ~ q iff p*q divides some member of mu.
  // ConsistencyError if the primes of mu differ from those of the order.
  PrimeGraph build_gk(Factorization const& order, NatSet const& mu);

  DegreePattern degree_pattern(PrimeGraph const& g);

  // Connected components as vertex sets. The component containing 2 comes
  // first; the rest (and all of them for graphs without 2) are ordered by
  // smallest prime.
  std::vector<std::vector<Prime>> connected_components(PrimeGraph const& g);

  OrderComponents components(PrimeGraph const& g, Factorization const& order);

  IndependentSet independence(PrimeGraph const& g);
  IndependentSet independence_at(PrimeGraph const& g, Prime r);

  SuzukiDecomposition suzuki_decomposition(PrimeGraph const& g);

  DegreeClasses degree_classes(PrimeGraph const& g);

  // Deterministic DOT text: nodes ascending, then edges in lexicographic
  // order, one statement per line.
  std::string to_dot(PrimeGraph const& g, std::string_view label = {});

}  // namespace gk

#endif  // GK_PRIME_GRAPH_HPP_

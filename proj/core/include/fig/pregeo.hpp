#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fig/error.hpp"

namespace fig {

/// Undirected graph on 0..n-1 with sorted adjacency lists.
struct Graph {
  std::vector<std::vector<int>> adj;

  explicit Graph(std::size_t n = 0) : adj(n) {}
  std::size_t size() const { return adj.size(); }
  void add_edge(int a, int b);
  bool has_edge(int a, int b) const;
  bool connected() const;
  std::vector<int> components() const;  // component id per vertex

  /// BFS eccentricity maximum; -1 encodes infinity (disconnected).
  int diameter() const;
};

/// Finite pregeometry: typed elements with a reflexive symmetric incidence
/// relation satisfying (Pre): incident elements of equal type coincide.
/// Elements carry dense integer ids; adjacency excludes the reflexive loops.
class Pregeometry {
 public:
  Pregeometry() = default;

  int add_element(int typ, std::string label = "");
  void add_incidence(int a, int b);

  /// Validates (Pre) and symmetry; called by the named constructors below and
  /// by deserialization. Throws TypeClash on a (Pre) violation.
  void validate() const;

  std::size_t size() const { return typ_.size(); }
  int typ(int id) const { return typ_.at(id); }
  const std::string& label(int id) const { return labels_.at(id); }
  const std::vector<int>& neighbors(int id) const { return adj_.at(id); }
  bool incident(int a, int b) const;

  std::vector<int> type_set() const;  // sorted distinct types
  std::size_t rank() const { return type_set().size(); }
  std::vector<int> elements_of_type(int t) const;

  bool is_flag(const std::vector<int>& ids) const;          // pairwise incident, types distinct
  bool is_chamber(const std::vector<int>& ids) const;

  /// (Geo): every flag extends to a chamber. On failure returns a maximal
  /// non-extendable flag as witness.
  struct GeoCheck {
    bool is_geometry = false;
    std::vector<int> witness;  // a flag that extends to no chamber
  };
  GeoCheck check_geometry() const;

  /// Residue of a flag; result element i corresponds to original id
  /// back_map[i]. Shares nothing with the parent (materialized).
  Pregeometry residue(const std::vector<int>& flag, std::vector<int>* back_map = nullptr) const;

  Pregeometry truncate(const std::vector<int>& types, std::vector<int>* back_map = nullptr) const;

  /// Direct sum: disjoint type sets, full cross incidence.
  static Pregeometry direct_sum(const Pregeometry& a, const Pregeometry& b);

  bool is_connected() const;

  /// Lounge: every type-injective subset of S is a flag. Hall: lounge whose
  /// types cover the full type set.
  bool is_lounge(const std::vector<int>& s) const;
  bool is_hall(const std::vector<int>& s) const;

  /// Basic diagram: types i ~ j iff some flag of cotype {i,j} has two
  /// non-incident elements in its residue. Exhaustive below the given flag
  /// budget, sampled otherwise (exhaustive flag in the result tells which).
  struct Diagram {
    Graph graph{0};
    std::vector<int> types;  // vertex order of graph
    bool exhaustive = true;
  };
  Diagram basic_diagram(std::size_t exhaustive_budget = 100000,
                        std::size_t samples = 2000, std::uint64_t seed = 1) const;

  /// Collinearity graph on type-1 elements (adjacent iff on a common type-2
  /// element). Requires type 1 to exist with a unique diagram neighbor when
  /// check_diagram is set.
  Graph collinearity_graph(int point_type, int line_type) const;

  /// Incidence graph including all elements (the graph (X,*)).
  const std::vector<std::vector<int>>& incidence_adj() const { return adj_; }

  /// All 3-cliques of the incidence graph (= pennants, by (Pre)).
  std::vector<std::array<int, 3>> pennants() const;

  std::vector<std::vector<int>> chambers(std::size_t cap = SIZE_MAX) const;

  /// All flags (nonempty), optionally restricted to a given cardinality.
  std::vector<std::vector<int>> flags_of_cardinality(std::size_t k, std::size_t cap = SIZE_MAX) const;

  /// Flags whose type set equals the given one, up to the budget; the bool
  /// reports whether the enumeration was complete.
  std::pair<std::vector<std::vector<int>>, bool> flags_with_types(
      const std::vector<int>& types, std::size_t budget) const;

  /// One random flag of the given type set, if the greedy walk finds one.
  std::optional<std::vector<int>> sample_flag_with_types(const std::vector<int>& types,
                                                         std::uint64_t& state) const;

 private:
  std::vector<int> typ_;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> adj_;

  void extend_flags(std::vector<std::vector<int>>& out, std::vector<int>& cur, int start,
                    std::size_t k, std::size_t cap) const;
};

}  // namespace fig

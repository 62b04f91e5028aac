#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/graph.hpp"

namespace matchcx {

inline constexpr std::uint64_t kDefaultFaceBudget = 50'000'000;

using Facet = std::vector<std::uint32_t>;

/// Finite abstract simplicial complex stored by its facets. Facets are sorted
/// index vectors into vertices(), kept as a sorted antichain. The complex
/// whose only face is the empty set has the single facet [].
class SimplicialComplex {
 public:
  SimplicialComplex();

  /// Builds from arbitrary faces: non-maximal ones are dropped and the
  /// vertex set becomes the union of the faces. An empty list gives {∅}.
  static SimplicialComplex from_faces(const std::vector<LabelSet>& faces);
  /// Same, over an explicit vertex list; facets index into `vertices`.
  static SimplicialComplex from_index_faces(const std::vector<VertexLabel>& vertices,
                                            std::vector<Facet> faces, bool already_maximal = false);

  const std::vector<VertexLabel>& vertices() const noexcept { return vertices_; }
  const std::vector<Facet>& facets() const noexcept { return facets_; }
  std::vector<LabelSet> facet_labels() const;
  /// -1 for {∅}.
  int dimension() const noexcept;
  bool is_face(const LabelSet& s) const;
  /// True when the facet list is a duplicate-free antichain covering every vertex.
  bool satisfies_invariants() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<VertexLabel> vertices_;
  std::vector<Facet> facets_;
};

/// Maximal independent sets of g as facets. Throws ResourceError if more
/// than `budget` facets are found.
SimplicialComplex independence_complex(const Graph& g, std::uint64_t budget = kDefaultFaceBudget);
SimplicialComplex matching_complex(const Graph& g, std::uint64_t budget = kDefaultFaceBudget);

SimplicialComplex link(const SimplicialComplex& k, const LabelSet& sigma);
SimplicialComplex deletion(const SimplicialComplex& k, const LabelSet& sigma);
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex cone(const SimplicialComplex& k, const VertexLabel& apex);
SimplicialComplex suspension(const SimplicialComplex& k, const VertexLabel& north,
                             const VertexLabel& south);
/// The full simplex on `vs`.
SimplicialComplex simplex(const LabelSet& vs);

/// Explicit faces by dimension, each list sorted lexicographically on the
/// vertex index vectors. Dimension -1 (the empty face) is implicit.
class FaceTable {
 public:
  const std::vector<VertexLabel>& vertices() const noexcept { return vertices_; }
  /// Highest dimension stored, -1 if no vertices.
  int max_dim() const noexcept { return static_cast<int>(data_.size()) - 1; }
  std::size_t count(int d) const;
  std::vector<std::size_t> counts() const;
  std::uint64_t total() const noexcept;
  std::span<const std::uint32_t> face(int d, std::size_t i) const;
  std::optional<std::size_t> find(int d, std::span<const std::uint32_t> f) const;

 private:
  friend FaceTable face_table(const SimplicialComplex&, std::optional<int>, std::uint64_t);
  std::vector<VertexLabel> vertices_;
  std::vector<std::vector<std::uint32_t>> data_;  // data_[d] holds count(d) faces of d+1 entries
};

/// Materializes faces up to max_dim (default: dim k). Throws ResourceError
/// naming the dimension at which the total passes `budget`.
FaceTable face_table(const SimplicialComplex& k, std::optional<int> max_dim = std::nullopt,
                     std::uint64_t budget = kDefaultFaceBudget);

/// -1 + sum_d (-1)^d #faces_d.
long long euler_characteristic_reduced(const FaceTable& t);
long long euler_characteristic_reduced(const SimplicialComplex& k,
                                       std::uint64_t budget = kDefaultFaceBudget);

/// `# facets of <name>` followed by one facet per line.
std::string format_facets(const SimplicialComplex& k, const std::string& name);

}  // namespace matchcx

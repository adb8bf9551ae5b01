#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "flamingo/combinat.hpp"

namespace flamingo {

enum class VertexColor { kWhite, kBlack };

/// Interior vertices are `w<i>`, `u<i>`, `b<i>`; boundary vertices are the
/// decimal labels `1` .. `2n`.
struct DiagramVertex {
  std::string id;
  VertexColor color = VertexColor::kBlack;
  bool boundary = false;

  bool operator==(const DiagramVertex&) const = default;
};

struct DiagramEdge {
  std::string from;
  std::string to;
  int weight = 0;

  bool operator==(const DiagramEdge&) const = default;
};

/// A weighted bicolored graph with 2n black boundary vertices of type (n, 2n).
struct TensorDiagram {
  int n = 0;
  std::vector<DiagramVertex> vertices;  // boundary first, then interior
  std::vector<DiagramEdge> edges;

  const DiagramVertex* find(const std::string& id) const;
  /// Sum of weights at a vertex.
  int weight_at(const std::string& id) const;
  /// Number of incident edges.
  int degree(const std::string& id) const;

  bool operator==(const TensorDiagram&) const = default;
};

/// W_{pi,r}: w_i joins E and pi_i + n; u_i joins S; b_i joins w_i with weight
/// nu - |pi_i|, u_i with weight r*d and w_d with weight nu_i. Edges of weight 0
/// are left out. Throws kBlockTooSmall for undersized blocks.
TensorDiagram build_tensor_diagram(const OrderedSetPartition& pi, int r);

/// Interior weight sums different from n, edges joining equal colors, edges
/// between two boundary vertices, nonpositive weights, unknown endpoints.
/// Empty when the diagram is valid.
std::vector<std::string> validate(const TensorDiagram& diagram);

/// Boundary vertices per degree expected for W_{pi,r}: S -> d-1, E -> d,
/// pi_i + n -> 1, [r] -> 0. Returns the mismatches.
std::vector<std::string> check_boundary_degrees(const TensorDiagram& diagram,
                                                const OrderedSetPartition& pi, int r);

/// Whether the unclasping (each boundary vertex of degree k split into k
/// leaves) has no cycle. It is a forest rather than a tree when some b_i edge
/// has weight 0.
bool unclasped_is_acyclic(const TensorDiagram& diagram);

/// Formats: "dot" or "json". Throws kUnknownFormat otherwise.
std::string export_diagram(const TensorDiagram& diagram, const std::string& format);
nlohmann::json diagram_to_json(const TensorDiagram& diagram);
TensorDiagram diagram_from_json(const nlohmann::json& j);

}  // namespace flamingo

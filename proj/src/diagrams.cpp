#include "flamingo/diagrams.hpp"

#include <cmath>
#include <iomanip>
#include <map>
#include <numeric>
#include <sstream>

#include "flamingo/error.hpp"

namespace flamingo {

namespace {

std::string interior_id(char kind, int i) { return std::string(1, kind) + std::to_string(i); }

const char* color_name(VertexColor c) { return c == VertexColor::kWhite ? "white" : "black"; }

}  // namespace

const DiagramVertex* TensorDiagram::find(const std::string& id) const {
  for (const DiagramVertex& v : vertices) {
    if (v.id == id) return &v;
  }
  return nullptr;
}

int TensorDiagram::weight_at(const std::string& id) const {
  int total = 0;
  for (const DiagramEdge& e : edges) {
    if (e.from == id || e.to == id) total += e.weight;
  }
  return total;
}

int TensorDiagram::degree(const std::string& id) const {
  int count = 0;
  for (const DiagramEdge& e : edges) {
    if (e.from == id || e.to == id) ++count;
  }
  return count;
}

TensorDiagram build_tensor_diagram(const OrderedSetPartition& pi, int r) {
  const FlamingoContext ctx = FlamingoContext::of(pi, r);
  if (!ctx.admissible()) {
    throw Error(ErrorKind::kBlockTooSmall,
                "every block needs at least r = " + std::to_string(r) + " elements");
  }
  const int n = ctx.n;
  const int d = ctx.d;
  TensorDiagram w;
  w.n = n;
  for (int k = 1; k <= 2 * n; ++k) w.vertices.push_back({std::to_string(k), VertexColor::kBlack, true});
  for (int i = 1; i <= d; ++i) w.vertices.push_back({interior_id('w', i), VertexColor::kWhite, false});
  for (int i = 1; i < d; ++i) w.vertices.push_back({interior_id('u', i), VertexColor::kWhite, false});
  for (int i = 1; i < d; ++i) w.vertices.push_back({interior_id('b', i), VertexColor::kBlack, false});

  auto connect = [&w](std::string a, std::string b, int weight) {
    if (weight > 0) w.edges.push_back({std::move(a), std::move(b), weight});
  };
  const auto lower = ctx.lower_rows();
  const auto tentacles = ctx.tentacle_rows();
  for (int i = 1; i <= d; ++i) {
    for (int e : lower) connect(interior_id('w', i), std::to_string(e), 1);
    for (int v : pi.block(i)) connect(interior_id('w', i), std::to_string(v + n), 1);
  }
  for (int i = 1; i < d; ++i) {
    for (int s : tentacles) connect(interior_id('u', i), std::to_string(s), 1);
  }
  for (int i = 1; i < d; ++i) {
    const int block_size = static_cast<int>(pi.block(i).size());
    connect(interior_id('b', i), interior_id('w', i), ctx.nu - block_size);
    connect(interior_id('b', i), interior_id('u', i), r * d);
    connect(interior_id('b', i), interior_id('w', d), ctx.nu_i[static_cast<std::size_t>(i - 1)]);
  }
  return w;
}

std::vector<std::string> validate(const TensorDiagram& diagram) {
  std::vector<std::string> problems;
  for (const DiagramEdge& e : diagram.edges) {
    const DiagramVertex* a = diagram.find(e.from);
    const DiagramVertex* b = diagram.find(e.to);
    const std::string name = e.from + "-" + e.to;
    if (!a || !b) {
      problems.push_back("edge " + name + " has an unknown endpoint");
      continue;
    }
    if (e.weight < 1 || e.weight > diagram.n) {
      problems.push_back("edge " + name + " has weight " + std::to_string(e.weight));
    }
    if (a->color == b->color) problems.push_back("edge " + name + " joins two " + color_name(a->color) + " vertices");
    if (a->boundary && b->boundary) problems.push_back("edge " + name + " joins two boundary vertices");
  }
  for (const DiagramVertex& v : diagram.vertices) {
    if (v.boundary) continue;
    const int total = diagram.weight_at(v.id);
    if (total != diagram.n) {
      problems.push_back("vertex " + v.id + " has weight sum " + std::to_string(total) +
                         ", expected " + std::to_string(diagram.n));
    }
  }
  return problems;
}

std::vector<std::string> check_boundary_degrees(const TensorDiagram& diagram,
                                                const OrderedSetPartition& pi, int r) {
  const FlamingoContext ctx = FlamingoContext::of(pi, r);
  const int n = ctx.n;
  std::vector<int> expected(static_cast<std::size_t>(2 * n) + 1, 1);  // pi_i + n
  for (int k = 1; k <= n; ++k) {
    if (k <= r) {
      expected[static_cast<std::size_t>(k)] = 0;
    } else if (k <= ctx.nu) {
      expected[static_cast<std::size_t>(k)] = ctx.d - 1;
    } else {
      expected[static_cast<std::size_t>(k)] = ctx.d;
    }
  }
  std::vector<std::string> problems;
  for (int k = 1; k <= 2 * n; ++k) {
    const int got = diagram.degree(std::to_string(k));
    if (got != expected[static_cast<std::size_t>(k)]) {
      problems.push_back("boundary vertex " + std::to_string(k) + " has degree " + std::to_string(got) +
                         ", expected " + std::to_string(expected[static_cast<std::size_t>(k)]));
    }
  }
  return problems;
}

bool unclasped_is_acyclic(const TensorDiagram& diagram) {
  // Boundary endpoints become leaves after unclasping, so only edges between
  // interior vertices can close a cycle.
  std::map<std::string, std::size_t> index;
  for (const DiagramVertex& v : diagram.vertices) {
    if (!v.boundary) index.emplace(v.id, index.size());
  }
  std::vector<std::size_t> parent(index.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&parent](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const DiagramEdge& e : diagram.edges) {
    auto a = index.find(e.from);
    auto b = index.find(e.to);
    if (a == index.end() || b == index.end()) continue;
    const std::size_t ra = root(a->second);
    const std::size_t rb = root(b->second);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return true;
}

nlohmann::json diagram_to_json(const TensorDiagram& diagram) {
  nlohmann::json vertices = nlohmann::json::array();
  for (const DiagramVertex& v : diagram.vertices) {
    vertices.push_back({{"id", v.id}, {"color", color_name(v.color)}, {"boundary", v.boundary}});
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const DiagramEdge& e : diagram.edges) {
    edges.push_back({{"from", e.from}, {"to", e.to}, {"weight", e.weight}});
  }
  return {{"n", diagram.n}, {"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

TensorDiagram diagram_from_json(const nlohmann::json& j) {
  try {
    TensorDiagram d;
    d.n = j.at("n").get<int>();
    for (const auto& v : j.at("vertices")) {
      const auto color = v.at("color").get<std::string>();
      if (color != "white" && color != "black") throw Error(ErrorKind::kParse, "unknown color " + color);
      d.vertices.push_back({v.at("id").get<std::string>(),
                            color == "white" ? VertexColor::kWhite : VertexColor::kBlack,
                            v.at("boundary").get<bool>()});
    }
    for (const auto& e : j.at("edges")) {
      d.edges.push_back({e.at("from").get<std::string>(), e.at("to").get<std::string>(),
                         e.at("weight").get<int>()});
    }
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParse, std::string("diagram JSON: ") + e.what());
  }
}

namespace {

std::string to_dot(const TensorDiagram& diagram) {
  std::ostringstream os;
  os << "graph W {\n  layout=neato;\n  node [fontsize=10];\n";
  const int boundary = 2 * diagram.n;
  const double radius = std::max(2.0, boundary / 3.0);
  os << std::fixed << std::setprecision(3);
  for (const DiagramVertex& v : diagram.vertices) {
    os << "  " << v.id << " [shape=circle";
    if (v.color == VertexColor::kBlack) {
      os << ", style=filled, fillcolor=black, fontcolor=white";
    } else {
      os << ", style=solid";
    }
    if (v.boundary) {
      // Clockwise from the top of the disk.
      const int k = std::stoi(v.id);
      const double angle = M_PI / 2 - 2 * M_PI * (k - 1) / boundary;
      os << ", pos=\"" << radius * std::cos(angle) << ',' << radius * std::sin(angle) << "!\"";
    }
    os << "];\n";
  }
  for (const DiagramEdge& e : diagram.edges) {
    os << "  " << e.from << " -- " << e.to << " [label=" << e.weight << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace

std::string export_diagram(const TensorDiagram& diagram, const std::string& format) {
  if (format == "dot") return to_dot(diagram);
  if (format == "json") return diagram_to_json(diagram).dump(2) + "\n";
  throw Error(ErrorKind::kUnknownFormat, "unknown diagram format '" + format + "'");
}

}  // namespace flamingo

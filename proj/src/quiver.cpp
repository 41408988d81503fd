#include "lgcrit/quiver.hpp"

#include <optional>
#include <sstream>

namespace lgcrit {

namespace {

std::vector<std::string> generator_names(const BundleSpec& spec) {
  std::vector<std::string> gens;
  for (int i = 0; i <= spec.s; ++i) gens.push_back("v" + std::to_string(i));
  for (int j = 0; j <= spec.r(); ++j) gens.push_back("e" + std::to_string(j));
  return gens;
}

std::optional<ExcLabel> step(const BundleSpec& spec, const ExcLabel& p, const std::string& gen) {
  const int idx = std::stoi(gen.substr(1));
  ExcLabel q = p;
  if (gen[0] == 'v') {
    q.k += 1;
  } else if (idx == 0) {
    q.l += 1;
  } else {
    q.k -= spec.a[idx - 1];
    q.l += 1;
  }
  if (q.k < 0 || q.k > spec.s || q.l < 0 || q.l > spec.r()) return std::nullopt;
  return q;
}

std::string gen_color(const std::string& gen) {
  if (gen[0] == 'v') return "blue";
  const int idx = std::stoi(gen.substr(1));
  if (idx == 0) return "black";
  return (idx % 2 == 1) ? "red" : "green";
}

}  // namespace

Quiver build_quiver(const BundleSpec& spec) {
  validate_spec(spec);
  Quiver q;
  q.spec = spec;
  q.nodes = collection(spec);
  const std::vector<std::string> gens = generator_names(spec);
  for (const std::string& g : gens)
    for (size_t i = 0; i < q.nodes.size(); ++i)
      if (const auto to = step(spec, q.nodes[i], g))
        q.arrows.push_back({static_cast<int>(i), label_index(spec, *to), g});
  for (size_t i = 0; i < q.nodes.size(); ++i)
    for (size_t g1 = 0; g1 < gens.size(); ++g1)
      for (size_t g2 = g1 + 1; g2 < gens.size(); ++g2) {
        const auto a = step(spec, q.nodes[i], gens[g1]);
        const auto b = step(spec, q.nodes[i], gens[g2]);
        if (a && b && step(spec, *a, gens[g2]) && step(spec, *b, gens[g1]))
          q.relations.push_back({static_cast<int>(i), gens[g1], gens[g2]});
      }
  return q;
}

std::string quiver_dot(const Quiver& q) {
  std::ostringstream out;
  out << "digraph quiver {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=ellipse];\n";
  for (size_t i = 0; i < q.nodes.size(); ++i)
    out << "  n" << i << " [label=\"" << label_to_string(q.nodes[i]) << "\"];\n";
  for (const QuiverArrow& a : q.arrows)
    out << "  n" << a.src << " -> n" << a.dst << " [label=\"" << a.gen << "\", color=\""
        << gen_color(a.gen) << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string quiver_json(const Quiver& q) {
  std::ostringstream out;
  out << "{\"s\":" << q.spec.s << ",\"a\":[";
  for (int j = 0; j < q.spec.r(); ++j) out << (j ? "," : "") << q.spec.a[j];
  out << "],\"nodes\":[";
  for (size_t i = 0; i < q.nodes.size(); ++i)
    out << (i ? "," : "") << "{\"k\":" << q.nodes[i].k << ",\"l\":" << q.nodes[i].l << "}";
  out << "],\"arrows\":[";
  for (size_t i = 0; i < q.arrows.size(); ++i)
    out << (i ? "," : "") << "{\"src\":" << q.arrows[i].src << ",\"dst\":" << q.arrows[i].dst
        << ",\"generator\":\"" << q.arrows[i].gen << "\"}";
  out << "],\"relations\":[";
  for (size_t i = 0; i < q.relations.size(); ++i)
    out << (i ? "," : "") << "{\"node\":" << q.relations[i].node << ",\"g1\":\""
        << q.relations[i].g1 << "\",\"g2\":\"" << q.relations[i].g2 << "\"}";
  out << "]}";
  return out.str();
}

}  // namespace lgcrit

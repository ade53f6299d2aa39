#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <optional>

namespace zxcf {

using VertexId = int;
using VertexSet = std::set<VertexId>;

/// Measurement plane or Pauli label of a non-output vertex.
enum class MeasLabel : std::uint8_t { X, Y, Z, XY, XZ, YZ };

std::string labelToString(MeasLabel l);
std::optional<MeasLabel> labelFromString(const std::string& s);
bool isPauli(MeasLabel l);

/// Labelled open graph: simple undirected graph with input and output vertex
/// sets and a measurement label on every non-output vertex. Value type;
/// rewrite operations return new graphs.
class LabelledOpenGraph {
public:
    void addVertex(VertexId v);
    void addEdge(VertexId u, VertexId v);
    void removeEdge(VertexId u, VertexId v);
    void toggleEdge(VertexId u, VertexId v);
    void removeVertex(VertexId v);

    void setInput(VertexId v, bool isInput);
    void setOutput(VertexId v, bool isOutput);
    void setLabel(VertexId v, MeasLabel l);
    void clearLabel(VertexId v);

    [[nodiscard]] bool hasVertex(VertexId v) const { return adj_.count(v) > 0; }
    [[nodiscard]] bool hasEdge(VertexId u, VertexId v) const;
    [[nodiscard]] const VertexSet& neighbours(VertexId v) const;
    [[nodiscard]] const VertexSet& inputs() const { return inputs_; }
    [[nodiscard]] const VertexSet& outputs() const { return outputs_; }
    [[nodiscard]] VertexSet vertices() const;
    [[nodiscard]] std::set<std::pair<VertexId, VertexId>> edges() const;
    [[nodiscard]] std::optional<MeasLabel> label(VertexId v) const;
    [[nodiscard]] bool isInput(VertexId v) const { return inputs_.count(v) > 0; }
    [[nodiscard]] bool isOutput(VertexId v) const { return outputs_.count(v) > 0; }
    [[nodiscard]] VertexSet measuredVertices() const; // V \ O

    /// {v in V : |N(v) ∩ S| odd}. Throws UnknownVertexError on unknown ids.
    [[nodiscard]] VertexSet oddNeighbourhood(const VertexSet& s) const;

    /// G ⋆ u: toggle every edge between distinct neighbours of u.
    [[nodiscard]] LabelledOpenGraph localComplemented(VertexId u) const;

    /// G ∧ uv via the direct three-set characterization (toggle connectivity
    /// between the exclusive neighbourhoods and the common neighbourhood,
    /// then exchange u and v). Requires (u,v) to be an edge. Equals
    /// G ⋆ u ⋆ v ⋆ u.
    [[nodiscard]] LabelledOpenGraph pivoted(VertexId u, VertexId v) const;

    /// Consistency check: labels total on V\O, none on O, no unknown ids.
    void validate() const;

    friend bool operator==(const LabelledOpenGraph&, const LabelledOpenGraph&) = default;

private:
    void requireVertex(VertexId v) const;

    std::map<VertexId, VertexSet> adj_;
    VertexSet inputs_;
    VertexSet outputs_;
    std::map<VertexId, MeasLabel> labels_;
};

} // namespace zxcf

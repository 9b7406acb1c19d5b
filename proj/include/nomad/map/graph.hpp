#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "nomad/result.hpp"

namespace nomad {

using NodeId = std::string;

enum class NodeKind { kRoot, kTopic, kConcept, kHypothesis, kInsight, kDocument };

std::string node_kind_name(NodeKind k);
std::optional<NodeKind> parse_node_kind(const std::string& s);

enum class EdgeKind { kParentChild, kDocConcept };

std::string edge_kind_name(EdgeKind k);
std::optional<EdgeKind> parse_edge_kind(const std::string& s);

struct Node {
    NodeId id;
    NodeKind kind = NodeKind::kTopic;
    std::string name;
    std::string description;
    std::map<std::string, std::string> attributes;

    bool operator==(const Node&) const = default;
};

struct Edge {
    NodeId from;
    NodeId to;
    EdgeKind kind = EdgeKind::kParentChild;

    bool operator==(const Edge&) const = default;
};

enum class HypothesisOrigin { kConceptLayer, kGenerationBatch, kExplorerBranch };

std::string hypothesis_origin_name(HypothesisOrigin o);
std::optional<HypothesisOrigin> parse_hypothesis_origin(const std::string& s);

struct HypothesisScores {
    double relevance = 0;  // 1-10
    double impact = 0;     // 1-10
    double diversity = 0;  // 0-10
    double overall = 0;    // w_r*r + w_i*i + w_d*d
};

/// View over a Hypothesis node. `explored` is derived from the structure (a
/// hypothesis is explored iff it has an Insight child); scores and origin live
/// in the node's attribute map so they survive serialization.
struct HypothesisRecord {
    NodeId node;
    std::string text;
    bool explored = false;
    std::optional<HypothesisScores> scores;
    HypothesisOrigin origin = HypothesisOrigin::kGenerationBatch;
};

/// Typed directed graph of Root/Topic/Concept/Hypothesis/Insight/Document
/// nodes; the control state of exploration. Single-writer, multi-reader:
/// mutations go through one owner, score queries are safe on a snapshot.
class ExplorationMap {
public:
    ExplorationMap() = default;

    /// Fresh map holding only a Root node named after the goal.
    static ExplorationMap create(const std::string& goal);

    const std::string& goal() const { return goal_; }
    void set_goal(std::string goal) { goal_ = std::move(goal); }
    const std::string& created_at() const { return created_at_; }
    void set_created_at(std::string ts) { created_at_ = std::move(ts); }

    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }

    const Node* find(const NodeId& id) const;
    Node* find_mutable(const NodeId& id);

    /// Mints a fresh id ("n000042"); ids are never reused.
    NodeId add_node(NodeKind kind, const std::string& name, const std::string& description = "",
                    std::map<std::string, std::string> attributes = {});
    /// Inserts a node with a caller-chosen id (deserialization, tests).
    Status add_node_with_id(Node node);
    /// Edges are recorded as given; validate() reports kind violations.
    void add_edge(const NodeId& from, const NodeId& to, EdgeKind kind);

    NodeId root() const;
    std::vector<NodeId> children(const NodeId& id) const;        // parent-child, insertion order
    std::optional<NodeId> parent(const NodeId& id) const;        // parent-child
    std::vector<NodeId> documents_of(const NodeId& concept_id) const;
    std::vector<NodeId> concepts_of(const NodeId& document) const;
    std::vector<NodeId> nodes_of_kind(NodeKind kind) const;
    int depth(const NodeId& id) const;  // parent-child hops from Root

    // Hypothesis pool helpers.
    bool is_explored(const NodeId& hypothesis) const;
    Result<HypothesisRecord> hypothesis_record(const NodeId& hypothesis) const;
    NodeId add_hypothesis(const NodeId& parent, const std::string& text, HypothesisOrigin origin);
    Status set_hypothesis_scores(const NodeId& hypothesis, const HypothesisScores& scores);
    /// Attaches the Insight child that flips the hypothesis to explored.
    Result<NodeId> mark_explored(const NodeId& hypothesis, const std::string& insight_statement);
    /// Unexplored hypotheses in `node`'s subtree, insertion order.
    std::vector<NodeId> unexplored_hypotheses(const NodeId& node) const;

    /// Count of unexplored Hypothesis descendants ("insight potential").
    Result<int> insight_potential_score(const NodeId& node) const;
    /// Count of explored Hypothesis descendants.
    Result<int> exploration_score(const NodeId& node) const;

    /// Empty iff every structural invariant holds; each violation names the
    /// node or edge and the rule it breaks. Violations are data, not errors.
    std::vector<std::string> validate() const;

    bool operator==(const ExplorationMap& other) const {
        return goal_ == other.goal_ && nodes_ == other.nodes_ && edges_ == other.edges_;
    }

private:
    Result<int> count_hypotheses(const NodeId& node, bool explored) const;
    void index_node(size_t pos);
    void index_edge(size_t pos);

    std::string goal_;
    std::string created_at_;
    std::vector<Node> nodes_;
    std::vector<Edge> edges_;
    std::unordered_map<std::string, size_t> node_index_;
    std::unordered_map<std::string, std::vector<NodeId>> child_index_;
    std::unordered_map<std::string, NodeId> parent_index_;
    std::unordered_map<std::string, std::vector<NodeId>> doc_edge_index_;  // both directions
    uint64_t next_id_ = 1;
};

}  // namespace nomad

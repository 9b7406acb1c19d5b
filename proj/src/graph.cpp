#include "nomad/map/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <set>

namespace nomad {

std::string node_kind_name(NodeKind k) {
    switch (k) {
        case NodeKind::kRoot: return "Root";
        case NodeKind::kTopic: return "Topic";
        case NodeKind::kConcept: return "Concept";
        case NodeKind::kHypothesis: return "Hypothesis";
        case NodeKind::kInsight: return "Insight";
        case NodeKind::kDocument: return "Document";
    }
    return "Topic";
}

std::optional<NodeKind> parse_node_kind(const std::string& s) {
    if (s == "Root") return NodeKind::kRoot;
    if (s == "Topic") return NodeKind::kTopic;
    if (s == "Concept") return NodeKind::kConcept;
    if (s == "Hypothesis") return NodeKind::kHypothesis;
    if (s == "Insight") return NodeKind::kInsight;
    if (s == "Document") return NodeKind::kDocument;
    return std::nullopt;
}

std::string edge_kind_name(EdgeKind k) {
    return k == EdgeKind::kParentChild ? "parent-child" : "doc-concept";
}

std::optional<EdgeKind> parse_edge_kind(const std::string& s) {
    if (s == "parent-child") return EdgeKind::kParentChild;
    if (s == "doc-concept") return EdgeKind::kDocConcept;
    return std::nullopt;
}

std::string hypothesis_origin_name(HypothesisOrigin o) {
    switch (o) {
        case HypothesisOrigin::kConceptLayer: return "concept_layer";
        case HypothesisOrigin::kGenerationBatch: return "generation_batch";
        case HypothesisOrigin::kExplorerBranch: return "explorer_branch";
    }
    return "generation_batch";
}

std::optional<HypothesisOrigin> parse_hypothesis_origin(const std::string& s) {
    if (s == "concept_layer") return HypothesisOrigin::kConceptLayer;
    if (s == "generation_batch") return HypothesisOrigin::kGenerationBatch;
    if (s == "explorer_branch") return HypothesisOrigin::kExplorerBranch;
    return std::nullopt;
}

ExplorationMap ExplorationMap::create(const std::string& goal) {
    ExplorationMap map;
    map.goal_ = goal;
    map.add_node(NodeKind::kRoot, goal.empty() ? "root" : goal);
    return map;
}

const Node* ExplorationMap::find(const NodeId& id) const {
    auto it = node_index_.find(id);
    return it == node_index_.end() ? nullptr : &nodes_[it->second];
}

Node* ExplorationMap::find_mutable(const NodeId& id) {
    auto it = node_index_.find(id);
    return it == node_index_.end() ? nullptr : &nodes_[it->second];
}

NodeId ExplorationMap::add_node(NodeKind kind, const std::string& name,
                                const std::string& description,
                                std::map<std::string, std::string> attributes) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "n%06llu", static_cast<unsigned long long>(next_id_++));
    Node node{buf, kind, name, description, std::move(attributes)};
    NodeId id = node.id;
    nodes_.push_back(std::move(node));
    index_node(nodes_.size() - 1);
    return id;
}

Status ExplorationMap::add_node_with_id(Node node) {
    if (node.id.empty()) return make_error("node id must be non-empty");
    if (node_index_.count(node.id)) return make_error("duplicate node id: " + node.id);
    // Keep minted ids ahead of any numeric id already present.
    if (node.id.size() > 1 && node.id[0] == 'n') {
        bool numeric = true;
        for (size_t i = 1; i < node.id.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(node.id[i]))) { numeric = false; break; }
        }
        if (numeric) {
            uint64_t v = std::strtoull(node.id.c_str() + 1, nullptr, 10);
            if (v >= next_id_) next_id_ = v + 1;
        }
    }
    nodes_.push_back(std::move(node));
    index_node(nodes_.size() - 1);
    return {};
}

void ExplorationMap::add_edge(const NodeId& from, const NodeId& to, EdgeKind kind) {
    edges_.push_back(Edge{from, to, kind});
    index_edge(edges_.size() - 1);
}

void ExplorationMap::index_node(size_t pos) { node_index_[nodes_[pos].id] = pos; }

void ExplorationMap::index_edge(size_t pos) {
    const Edge& e = edges_[pos];
    if (e.kind == EdgeKind::kParentChild) {
        child_index_[e.from].push_back(e.to);
        parent_index_[e.to] = e.from;
    } else {
        doc_edge_index_[e.from].push_back(e.to);
        doc_edge_index_[e.to].push_back(e.from);
    }
}

NodeId ExplorationMap::root() const {
    for (const auto& n : nodes_) {
        if (n.kind == NodeKind::kRoot) return n.id;
    }
    return {};
}

std::vector<NodeId> ExplorationMap::children(const NodeId& id) const {
    auto it = child_index_.find(id);
    return it == child_index_.end() ? std::vector<NodeId>{} : it->second;
}

std::optional<NodeId> ExplorationMap::parent(const NodeId& id) const {
    auto it = parent_index_.find(id);
    if (it == parent_index_.end()) return std::nullopt;
    return it->second;
}

std::vector<NodeId> ExplorationMap::documents_of(const NodeId& concept_id) const {
    std::vector<NodeId> out;
    auto it = doc_edge_index_.find(concept_id);
    if (it == doc_edge_index_.end()) return out;
    for (const auto& other : it->second) {
        const Node* n = find(other);
        if (n && n->kind == NodeKind::kDocument) out.push_back(other);
    }
    return out;
}

std::vector<NodeId> ExplorationMap::concepts_of(const NodeId& document) const {
    std::vector<NodeId> out;
    auto it = doc_edge_index_.find(document);
    if (it == doc_edge_index_.end()) return out;
    for (const auto& other : it->second) {
        const Node* n = find(other);
        if (n && n->kind == NodeKind::kConcept) out.push_back(other);
    }
    return out;
}

std::vector<NodeId> ExplorationMap::nodes_of_kind(NodeKind kind) const {
    std::vector<NodeId> out;
    for (const auto& n : nodes_) {
        if (n.kind == kind) out.push_back(n.id);
    }
    return out;
}

int ExplorationMap::depth(const NodeId& id) const {
    int d = 0;
    NodeId cur = id;
    while (true) {
        auto p = parent(cur);
        if (!p) break;
        cur = *p;
        ++d;
        if (d > static_cast<int>(nodes_.size())) return -1;  // cycle guard
    }
    return d;
}

bool ExplorationMap::is_explored(const NodeId& hypothesis) const {
    for (const auto& child : children(hypothesis)) {
        const Node* n = find(child);
        if (n && n->kind == NodeKind::kInsight) return true;
    }
    return false;
}

Result<HypothesisRecord> ExplorationMap::hypothesis_record(const NodeId& hypothesis) const {
    const Node* n = find(hypothesis);
    if (!n) return make_error("unknown node id: " + hypothesis);
    if (n->kind != NodeKind::kHypothesis) {
        return make_error("node " + hypothesis + " is not a Hypothesis");
    }
    HypothesisRecord rec;
    rec.node = hypothesis;
    rec.text = n->description.empty() ? n->name : n->description;
    rec.explored = is_explored(hypothesis);
    auto origin_it = n->attributes.find("origin");
    if (origin_it != n->attributes.end()) {
        auto parsed = parse_hypothesis_origin(origin_it->second);
        if (parsed) rec.origin = *parsed;
    }
    auto get = [&](const char* key, double& out) {
        auto it = n->attributes.find(key);
        if (it == n->attributes.end()) return false;
        out = std::strtod(it->second.c_str(), nullptr);
        return true;
    };
    HypothesisScores s;
    if (get("score_relevance", s.relevance) && get("score_impact", s.impact) &&
        get("score_diversity", s.diversity) && get("score_overall", s.overall)) {
        rec.scores = s;
    }
    return rec;
}

NodeId ExplorationMap::add_hypothesis(const NodeId& parent_id, const std::string& text,
                                      HypothesisOrigin origin) {
    std::map<std::string, std::string> attrs{{"origin", hypothesis_origin_name(origin)}};
    NodeId id = add_node(NodeKind::kHypothesis, "hypothesis", text, std::move(attrs));
    add_edge(parent_id, id, EdgeKind::kParentChild);
    return id;
}

Status ExplorationMap::set_hypothesis_scores(const NodeId& hypothesis,
                                             const HypothesisScores& scores) {
    Node* n = find_mutable(hypothesis);
    if (!n) return make_error("unknown node id: " + hypothesis);
    if (n->kind != NodeKind::kHypothesis) {
        return make_error("node " + hypothesis + " is not a Hypothesis");
    }
    char buf[64];
    auto put = [&](const char* key, double v) {
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        n->attributes[key] = buf;
    };
    put("score_relevance", scores.relevance);
    put("score_impact", scores.impact);
    put("score_diversity", scores.diversity);
    put("score_overall", scores.overall);
    return {};
}

Result<NodeId> ExplorationMap::mark_explored(const NodeId& hypothesis,
                                             const std::string& insight_statement) {
    const Node* n = find(hypothesis);
    if (!n) return make_error("unknown node id: " + hypothesis);
    if (n->kind != NodeKind::kHypothesis) {
        return make_error("node " + hypothesis + " is not a Hypothesis");
    }
    if (is_explored(hypothesis)) {
        return make_error("hypothesis " + hypothesis + " already has an Insight child");
    }
    NodeId id = add_node(NodeKind::kInsight, "insight", insight_statement);
    add_edge(hypothesis, id, EdgeKind::kParentChild);
    return id;
}

std::vector<NodeId> ExplorationMap::unexplored_hypotheses(const NodeId& node) const {
    std::vector<NodeId> out;
    std::deque<NodeId> queue{node};
    while (!queue.empty()) {
        NodeId cur = queue.front();
        queue.pop_front();
        const Node* n = find(cur);
        if (!n) continue;
        if (n->kind == NodeKind::kHypothesis && !is_explored(cur)) out.push_back(cur);
        for (const auto& c : children(cur)) queue.push_back(c);
    }
    // BFS order can interleave levels; restore insertion order for stability.
    std::sort(out.begin(), out.end(), [&](const NodeId& a, const NodeId& b) {
        return node_index_.at(a) < node_index_.at(b);
    });
    return out;
}

Result<int> ExplorationMap::count_hypotheses(const NodeId& node, bool explored) const {
    const Node* n = find(node);
    if (!n) return make_error("unknown node id: " + node);
    if (n->kind != NodeKind::kRoot && n->kind != NodeKind::kTopic && n->kind != NodeKind::kConcept) {
        return make_error("score query on node " + node + " of kind " + node_kind_name(n->kind) +
                          "; expected Root, Topic, or Concept");
    }
    int count = 0;
    std::deque<NodeId> queue{node};
    size_t guard = 0;
    while (!queue.empty()) {
        NodeId cur = queue.front();
        queue.pop_front();
        if (++guard > nodes_.size() * 2 + 16) break;  // cycle guard
        const Node* c = find(cur);
        if (!c) continue;
        if (c->kind == NodeKind::kHypothesis && is_explored(cur) == explored) ++count;
        for (const auto& child : children(cur)) queue.push_back(child);
    }
    return count;
}

Result<int> ExplorationMap::insight_potential_score(const NodeId& node) const {
    return count_hypotheses(node, false);
}

Result<int> ExplorationMap::exploration_score(const NodeId& node) const {
    return count_hypotheses(node, true);
}

std::vector<std::string> ExplorationMap::validate() const {
    std::vector<std::string> violations;
    auto add = [&](const std::string& v) { violations.push_back(v); };

    int roots = 0;
    for (const auto& n : nodes_) {
        if (n.kind == NodeKind::kRoot) ++roots;
    }
    if (roots != 1) {
        add("map has " + std::to_string(roots) + " Root nodes; expected exactly 1");
    }

    std::map<NodeId, int> parent_count;
    for (size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        const Node* from = find(e.from);
        const Node* to = find(e.to);
        std::string label = "edge " + e.from + "->" + e.to + " (" + edge_kind_name(e.kind) + ")";
        if (!from || !to) {
            add(label + ": endpoint does not exist");
            continue;
        }
        if (e.kind == EdgeKind::kDocConcept) {
            if (from->kind != NodeKind::kDocument || to->kind != NodeKind::kConcept) {
                add(label + ": doc-concept endpoint kinds must be Document->Concept");
            }
            continue;
        }
        ++parent_count[e.to];
        switch (to->kind) {
            case NodeKind::kRoot:
                add(label + ": Root cannot be a child");
                break;
            case NodeKind::kTopic:
                if (from->kind != NodeKind::kRoot && from->kind != NodeKind::kTopic) {
                    add(label + ": Topic parent must be Root or Topic");
                }
                break;
            case NodeKind::kConcept:
                if (from->kind != NodeKind::kTopic) {
                    add(label + ": Concept parents are Topic nodes only");
                }
                break;
            case NodeKind::kHypothesis:
                if (from->kind != NodeKind::kTopic && from->kind != NodeKind::kConcept) {
                    add(label + ": Hypothesis parent must be Topic or Concept");
                }
                break;
            case NodeKind::kInsight:
                if (from->kind != NodeKind::kHypothesis) {
                    add(label + ": Insight parent must be Hypothesis");
                }
                break;
            case NodeKind::kDocument:
                add(label + ": Document nodes connect only via doc-concept edges");
                break;
        }
        if (from->kind == NodeKind::kDocument) {
            add(label + ": Document nodes connect only via doc-concept edges");
        }
    }

    for (const auto& [id, count] : parent_count) {
        if (count > 1) {
            add("node " + id + " has " + std::to_string(count) +
                " parent-child parents; tree requires at most 1");
        }
    }

    for (const auto& n : nodes_) {
        auto kids = children(n.id);
        if (n.kind == NodeKind::kConcept) {
            int hyp = 0;
            for (const auto& c : kids) {
                const Node* cn = find(c);
                if (cn && cn->kind == NodeKind::kHypothesis) ++hyp;
            }
            if (hyp > 1) {
                add("node " + n.id + ": Concept has " + std::to_string(hyp) +
                    " Hypothesis children; at most 1 allowed");
            }
        }
        if (n.kind == NodeKind::kHypothesis && kids.size() > 1) {
            add("node " + n.id + ": Hypothesis has " + std::to_string(kids.size()) +
                " children; at most one Insight child allowed");
        }
        if (n.kind == NodeKind::kInsight && !kids.empty()) {
            add("node " + n.id + ": Insight nodes are leaves");
        }
    }

    // Cycle detection over parent-child edges.
    std::set<NodeId> visiting, done;
    for (const auto& n : nodes_) {
        if (done.count(n.id)) continue;
        NodeId cur = n.id;
        std::vector<NodeId> chain;
        while (true) {
            if (visiting.count(cur)) {
                add("node " + cur + ": parent-child edges form a cycle");
                break;
            }
            if (done.count(cur)) break;
            visiting.insert(cur);
            chain.push_back(cur);
            auto p = parent(cur);
            if (!p) break;
            cur = *p;
        }
        for (const auto& c : chain) {
            visiting.erase(c);
            done.insert(c);
        }
    }

    return violations;
}

}  // namespace nomad

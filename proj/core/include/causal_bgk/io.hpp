#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "causal_bgk/dcc.hpp"
#include "causal_bgk/effects.hpp"
#include "causal_bgk/graph.hpp"

namespace causal_bgk {

// Line format: "vertex L", "a -> b", "a -- b"; '#' starts a comment.
// Vertex ids follow first appearance. Throws ParseError.
Pdag parse_graph(std::string_view text);
std::string format_graph(const Pdag& g);

using KnowledgeItem = std::variant<PairwiseConstraint, Dcc>;

struct Knowledge {
    std::vector<KnowledgeItem> items;  // file order
    std::vector<VertexSet> tiers;      // ascending tier number, empty if none declared
    std::vector<std::string> warnings;
};

// Line format: "a -> b", "a ~> b", "a !~> b", "a => {b,c}", "tier k: a,b".
// Labels must exist in g.
Knowledge parse_knowledge(const Pdag& g, std::string_view text);

// items in order, then the constraints implied by the tiers
std::vector<KnowledgeItem> expand_tiers(const Pdag& g, const Knowledge& k);
DccSet knowledge_to_dccs(const Pdag& g, const Knowledge& k);

// header row of labels, then one numeric row per label (an optional leading
// label column is accepted); reordered to g's vertex ids
Covariance parse_covariance_csv(const Pdag& g, std::string_view text);

std::string read_file(const std::string& path);

}  // namespace causal_bgk

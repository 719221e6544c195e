#pragma once

#include <string>

#include "causal_bgk/dcc.hpp"
#include "causal_bgk/graph.hpp"
#include "causal_bgk/io.hpp"

namespace fixtures {

using namespace causal_bgk;

inline Pdag graph(const std::string& text) { return parse_graph(text); }

// smoking - bronchitis - dyspnea
inline const char* chain_text = "S -- B\nB -- D\n";

inline const char* f4_text =
    "vertex A\nvertex B\nvertex C\nvertex D\nvertex X\nvertex Y\n"
    "A -- B\nA -- C\nA -- X\nB -- X\nC -- X\nA -- D\nD -- X\nB -> Y\nC -> Y\n";

inline const char* f6_text =
    "vertex A\nvertex B\nvertex C\nvertex D\nvertex X\nvertex Y\n"
    "A -- B\nA -- X\nA -- C\nB -- X\nB -- C\nX -- C\nB -> Y\nD -> Y\n";

inline const char* f8_text =
    "vertex A\nvertex B\nvertex C\nvertex D\nvertex E\nvertex F\nvertex G\nvertex H\n"
    "A -- B\nA -- E\nB -- E\nB -- D\nD -- E\nC -- E\nB -- F\nE -- F\nF -- G\nB -- G\nB -- H\nF -- H\nG -- H\n";

inline const char* fig3_text =
    "vertex A\nvertex B\nvertex C\nvertex D\nvertex E\n"
    "A -> B\nA -> C\nA -> D\nA -> E\nC -> B\nB -- D\nC -- D\nB -> E\nD -> E\n";

inline const char* fig5_text =
    "vertex X\nvertex A\nvertex B\nvertex Y\n"
    "X -- A\nX -- B\nA -- B\nA -- Y\nB -- Y\n";

inline const char* fig7_text =
    "vertex A\nvertex B\nvertex C\nvertex D\nvertex E\n"
    "B -- C\nC -- D\nB -- D\nE -- C\nE -- D\nA -- B\nA -- C\n";

// the MPDAG; its CPDAG is the skeleton
inline const char* f10_text =
    "vertex X\nvertex A\nvertex B\nvertex C\nvertex Y\n"
    "X -- A\nX -- B\nX -- C\nA -- B\nA -- C\nB -- C\nA -> Y\nC -> Y\n";

inline Dcc clause(const Pdag& g, const std::string& tail, std::initializer_list<const char*> heads) {
    Dcc c{g.vertex(tail), VertexSet(g.size())};
    for (auto h : heads) c.heads.insert(g.vertex(h));
    return c;
}

inline VertexSet set(const Pdag& g, std::initializer_list<const char*> ls) {
    VertexSet s(g.size());
    for (auto l : ls) s.insert(g.vertex(l));
    return s;
}

inline DccSet k6(const Pdag& g) {
    return {clause(g, "A", {"X", "B", "D"}), clause(g, "B", {"X", "A"}), clause(g, "B", {"X", "C", "Y"}),
            clause(g, "X", {"B", "C"})};
}

inline DccSet k8(const Pdag& g) {
    return {clause(g, "D", {"E", "B"}), clause(g, "E", {"A", "C"}), clause(g, "E", {"B", "F"}),
            clause(g, "G", {"B", "H"})};
}

// the two clauses drawn on the MPDAG plus the directed edges it carries
inline DccSet k10(const Pdag& g) {
    return {clause(g, "A", {"Y"}), clause(g, "C", {"Y"}), clause(g, "A", {"B", "C"}), clause(g, "C", {"A", "X"})};
}

inline std::string edge_list(const Pdag& g) {
    std::string out;
    for (auto e : g.directed_edges()) out += g.label(e.tail) + "->" + g.label(e.head) + " ";
    return out;
}

}  // namespace fixtures

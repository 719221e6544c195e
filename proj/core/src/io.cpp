#include "causal_bgk/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>

#include "causal_bgk/errors.hpp"

namespace causal_bgk {

namespace {

std::string strip(std::string_view s) {
    auto hash = s.find('#');
    if (hash != std::string_view::npos) s = s.substr(0, hash);
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

std::vector<std::string> lines_of(std::string_view text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

const std::string label_re = R"(([^\s{},:#]+))";

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::string t = strip(item);
        if (!t.empty()) out.push_back(t);
    }
    return out;
}

}  // namespace

Pdag parse_graph(std::string_view text) {
    static const std::regex vertex_line("^vertex\\s+" + label_re + "$");
    static const std::regex edge_line("^" + label_re + "\\s*(->|--)\\s*" + label_re + "$");
    struct RawEdge {
        std::string a, b;
        bool directed;
        int line;
    };
    std::vector<std::string> labels;
    std::map<std::string, int> id;
    std::vector<RawEdge> edges;
    auto touch = [&](const std::string& l) {
        if (!id.count(l)) {
            id[l] = static_cast<int>(labels.size());
            labels.push_back(l);
        }
    };
    auto ls = lines_of(text);
    for (std::size_t i = 0; i < ls.size(); ++i) {
        std::string line = strip(ls[i]);
        if (line.empty()) continue;
        std::smatch m;
        int no = static_cast<int>(i) + 1;
        if (std::regex_match(line, m, vertex_line)) {
            touch(m[1]);
        } else if (std::regex_match(line, m, edge_line)) {
            if (m[1] == m[3]) throw ParseError("self loop on " + m[1].str(), no);
            touch(m[1]);
            touch(m[3]);
            edges.push_back({m[1], m[3], m[2] == "->", no});
        } else {
            throw ParseError("cannot parse '" + line + "'", no);
        }
    }
    Pdag g(labels);
    for (auto& e : edges) {
        int a = id[e.a], b = id[e.b];
        if (g.adjacent(a, b)) throw ParseError("duplicate edge between " + e.a + " and " + e.b, e.line);
        if (e.directed)
            g.add_directed(a, b);
        else
            g.add_undirected(a, b);
    }
    return g;
}

std::string format_graph(const Pdag& g) {
    std::string out;
    for (int v = 0; v < g.size(); ++v) out += "vertex " + g.label(v) + "\n";
    for (auto e : g.directed_edges()) out += g.label(e.tail) + " -> " + g.label(e.head) + "\n";
    for (auto e : g.undirected_edges()) out += g.label(e.tail) + " -- " + g.label(e.head) + "\n";
    return out;
}

Knowledge parse_knowledge(const Pdag& g, std::string_view text) {
    static const std::regex pair_line("^" + label_re + "\\s*(!~>|~>|->)\\s*" + label_re + "$");
    static const std::regex dcc_line("^" + label_re + "\\s*=>\\s*\\{([^}]*)\\}$");
    static const std::regex tier_line("^tier\\s+(-?\\d+)\\s*:(.*)$");
    Knowledge k;
    std::map<long, VertexSet> tiers;
    auto ls = lines_of(text);
    for (std::size_t i = 0; i < ls.size(); ++i) {
        std::string line = strip(ls[i]);
        if (line.empty()) continue;
        int no = static_cast<int>(i) + 1;
        auto lookup = [&](const std::string& l) {
            auto v = g.find(l);
            if (!v) throw ParseError("unknown vertex '" + l + "'", no);
            return *v;
        };
        std::smatch m;
        if (std::regex_match(line, m, tier_line)) {
            long t = std::stol(m[1]);
            auto it = tiers.try_emplace(t, VertexSet(g.size())).first;
            for (auto& l : split_list(m[2])) it->second.insert(lookup(l));
        } else if (std::regex_match(line, m, pair_line)) {
            Vertex a = lookup(m[1]), b = lookup(m[3]);
            if (a == b) throw ParseError("constraint between a vertex and itself", no);
            ConstraintKind kind = m[2] == "->"   ? ConstraintKind::direct
                                  : m[2] == "~>" ? ConstraintKind::ancestral
                                                 : ConstraintKind::non_ancestral;
            k.items.emplace_back(PairwiseConstraint{kind, a, b});
        } else if (std::regex_match(line, m, dcc_line)) {
            Dcc c{lookup(m[1]), VertexSet(g.size())};
            for (auto& l : split_list(m[2])) c.heads.insert(lookup(l));
            if (c.heads.contains(c.tail)) throw ParseError("clause tail among its heads", no);
            VertexSet far = c.heads - g.neighbors(c.tail);
            if (!far.empty())
                k.warnings.push_back("line " + std::to_string(no) + ": heads " + format_set(g, far) +
                                     " are not adjacent to " + g.label(c.tail) + " and can never be its children");
            k.items.emplace_back(std::move(c));
        } else {
            throw ParseError("cannot parse '" + line + "'", no);
        }
    }
    for (auto& [t, s] : tiers) k.tiers.push_back(s);
    return k;
}

std::vector<KnowledgeItem> expand_tiers(const Pdag& g, const Knowledge& k) {
    std::vector<KnowledgeItem> out = k.items;
    if (!k.tiers.empty())
        for (auto& c : tiered_to_direct(g, k.tiers)) out.emplace_back(c);
    return out;
}

DccSet knowledge_to_dccs(const Pdag& g, const Knowledge& k) {
    DccSet out;
    for (auto& item : expand_tiers(g, k)) {
        if (auto* c = std::get_if<Dcc>(&item)) {
            out.push_back(*c);
        } else {
            for (auto& d : constraints_to_dccs(g, {std::get<PairwiseConstraint>(item)})) out.push_back(d);
        }
    }
    return out;
}

Covariance parse_covariance_csv(const Pdag& g, std::string_view text) {
    std::vector<std::vector<std::string>> rows;
    for (auto& raw : lines_of(text)) {
        std::string line = strip(raw);
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string c;
        while (std::getline(ss, c, ',')) cells.push_back(strip(c));
        rows.push_back(cells);
    }
    if (rows.empty()) throw ParseError("empty covariance file");
    auto header = rows[0];
    if (!header.empty() && header[0].empty()) header.erase(header.begin());
    const int n = static_cast<int>(header.size());
    if (n != g.size()) throw ParseError("covariance has " + std::to_string(n) + " columns, graph has " +
                                        std::to_string(g.size()) + " vertices", 1);
    if (static_cast<int>(rows.size()) != n + 1) throw ParseError("covariance needs one row per label");
    std::vector<int> to_id(n);
    for (int i = 0; i < n; ++i) {
        auto v = g.find(header[i]);
        if (!v) throw ParseError("unknown vertex '" + header[i] + "' in covariance header", 1);
        to_id[i] = *v;
    }
    Eigen::MatrixXd m(n, n);
    for (int r = 0; r < n; ++r) {
        auto cells = rows[r + 1];
        if (static_cast<int>(cells.size()) == n + 1) cells.erase(cells.begin());
        if (static_cast<int>(cells.size()) != n) throw ParseError("wrong number of cells", r + 2);
        for (int c = 0; c < n; ++c) {
            double val = 0;
            const auto& s = cells[c];
            auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), val);
            if (ec != std::errc() || p != s.data() + s.size()) throw ParseError("bad number '" + s + "'", r + 2);
            m(to_id[r], to_id[c]) = val;
        }
    }
    return Covariance(m);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace causal_bgk

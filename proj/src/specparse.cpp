#include "symbreak/specparse.hpp"

#include "symbreak/errors.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace symbreak {

namespace {

std::string trimmed(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

int parse_int(const std::string& s, const std::string& where) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw input_error("graph spec: expected integer in '" + where + "'");
    try {
        return std::stoi(s);
    } catch (const std::exception&) {
        throw input_error("graph spec: integer out of range in '" + where + "'");
    }
}

std::vector<int> parse_params(const std::string& s, char sep, const std::string& where) {
    std::vector<int> out;
    size_t start = 0;
    for (;;) {
        size_t pos = s.find(sep, start);
        out.push_back(parse_int(trimmed(s.substr(start, pos - start)), where));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

Graph parse_single(const std::string& spec) {
    if (spec.rfind("file:", 0) == 0) return read_edge_list_file(spec.substr(5));
    return family(parse_family(spec));
}

} // namespace

FamilySpec parse_family(const std::string& text) {
    const std::string spec = trimmed(text);
    size_t colon = spec.find(':');
    if (colon == std::string::npos)
        throw input_error("graph spec: '" + spec + "' has no ':' (expected e.g. path:4)");
    const std::string name = spec.substr(0, colon);
    const std::string args = spec.substr(colon + 1);
    if (name == "path") return {FamilyKind::Path, parse_params(args, ',', spec)};
    if (name == "cycle") return {FamilyKind::Cycle, parse_params(args, ',', spec)};
    if (name == "complete") return {FamilyKind::Complete, parse_params(args, ',', spec)};
    if (name == "kbipartite") return {FamilyKind::CompleteBipartite, parse_params(args, ',', spec)};
    if (name == "hypercube") return {FamilyKind::Hypercube, parse_params(args, ',', spec)};
    if (name == "grid") return {FamilyKind::Grid, parse_params(args, 'x', spec)};
    throw input_error("graph spec: unknown family '" + name + "'");
}

ParsedGraph parse_graph_spec(const std::string& text) {
    // Product factors are separated by a lone 'x' token; split on " x " so
    // 'x' inside grid:4x5 stays put.
    std::vector<std::string> parts;
    std::string current;
    size_t pos = 0;
    const std::string sep = " x ";
    while (true) {
        size_t hit = text.find(sep, pos);
        if (hit == std::string::npos) {
            parts.push_back(trimmed(text.substr(pos)));
            break;
        }
        parts.push_back(trimmed(text.substr(pos, hit - pos)));
        pos = hit + sep.size();
    }
    for (const auto& part : parts)
        if (part.empty()) throw input_error("graph spec: empty factor in '" + text + "'");

    if (parts.size() == 1) return parse_single(parts[0]);
    std::vector<Graph> factors;
    factors.reserve(parts.size());
    for (const auto& part : parts) factors.push_back(parse_single(part));
    return cartesian_product(std::move(factors));
}

const Graph& graph_of(const ParsedGraph& pg) {
    if (const Graph* g = std::get_if<Graph>(&pg)) return *g;
    return std::get<ProductGraph>(pg).graph();
}

const ProductGraph* product_of(const ParsedGraph& pg) {
    return std::get_if<ProductGraph>(&pg);
}

} // namespace symbreak

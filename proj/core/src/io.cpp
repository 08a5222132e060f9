#include "graphcx/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "graphcx/errors.hpp"

namespace graphcx {

OrientedGraph read_graph_text(std::istream& in) {
    int v = 0, e = 0;
    if (!(in >> v >> e)) throw input_error("expected header `V E`");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(std::max(e, 0)));
    for (int i = 0; i < e; ++i) {
        int s = 0, t = 0;
        if (!(in >> s >> t))
            throw input_error("expected " + std::to_string(e) + " edge lines `s t`");
        edges.emplace_back(s, t);
    }
    return make_graph(v, std::move(edges));
}

std::string write_graph_text(const OrientedGraph& g) {
    std::ostringstream out;
    out << g.vertex_count << ' ' << g.edge_count() << '\n';
    for (const auto& [s, t] : g.edges) out << s << ' ' << t << '\n';
    return out.str();
}

OrientedGraph parse_graph_literal(const std::string& text) {
    const auto semi = text.find(';');
    if (semi == std::string::npos)
        throw input_error("graph literal must look like `V;s>t,s>t,...`: " + text);
    int v = 0;
    try {
        v = std::stoi(text.substr(0, semi));
    } catch (const std::exception&) {
        throw input_error("bad vertex count in literal: " + text);
    }
    std::vector<std::pair<int, int>> edges;
    std::string body = text.substr(semi + 1);
    std::istringstream stream(body);
    std::string item;
    while (std::getline(stream, item, ',')) {
        const auto arrow = item.find('>');
        if (arrow == std::string::npos)
            throw input_error("bad edge `" + item + "` in literal (want s>t)");
        try {
            edges.emplace_back(std::stoi(item.substr(0, arrow)),
                               std::stoi(item.substr(arrow + 1)));
        } catch (const std::exception&) {
            throw input_error("bad edge `" + item + "` in literal");
        }
    }
    return make_graph(v, std::move(edges));
}

OrientedGraph load_graph_argument(const std::string& arg) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg);
        if (!in) throw input_error("cannot open " + arg);
        return read_graph_text(in);
    }
    return parse_graph_literal(arg);
}

HalfEdgeRef parse_half_edge(const std::string& text, const OrientedGraph& g) {
    if (text.size() < 4 || text[0] != 'e')
        throw input_error("half-edge must look like `e<k>.s` or `e<k>.t`: " + text);
    const auto dot = text.find('.');
    if (dot == std::string::npos || dot + 2 != text.size() ||
        (text[dot + 1] != 's' && text[dot + 1] != 't'))
        throw input_error("half-edge must end in `.s` or `.t`: " + text);
    int edge = 0;
    try {
        edge = std::stoi(text.substr(1, dot - 1));
    } catch (const std::exception&) {
        throw input_error("bad edge index in half-edge: " + text);
    }
    if (edge < 1 || edge > g.edge_count())
        throw input_error("edge index out of range: " + text);
    return {edge, text[dot + 1] == 's'};
}

std::string render_half_edge(HalfEdgeRef h) {
    return "e" + std::to_string(h.edge) + (h.at_src ? ".s" : ".t");
}

std::string render_tensor_text(const TensorVector& v) {
    if (v.is_zero()) return "0\n";
    std::ostringstream out;
    for (const auto& [tuple, coeff] : v.terms) {
        out << coeff;
        for (const auto& key : tuple) out << '\t' << key.text;
        out << '\n';
    }
    return out.str();
}

std::string render_tensor_json(const TensorVector& v) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [tuple, coeff] : v.terms) {
        nlohmann::json factors = nlohmann::json::array();
        for (const auto& key : tuple) factors.push_back(key.text);
        terms.push_back({{"coeff", coeff}, {"factors", factors}});
    }
    return terms.dump();
}

std::string render_certificate_text(const PairingCertificate& cert) {
    std::ostringstream out;
    out << "family size " << cert.family_size << ", " << cert.pairs.size() << " pairs, "
        << cert.fixed_points.size() << " fixed points (all terms zero), "
        << "flowchart grouping " << (cert.residual_matches ? "matches" : "MISMATCH") << '\n';
    for (const auto& p : cert.pairs)
        out << "pair: " << p.f_desc << "  <->  " << p.partner_desc << '\n';
    for (const auto& f : cert.fixed_points) out << "fixed: " << f.f_desc << '\n';
    return out.str();
}

namespace {

nlohmann::json tensor_json(const TensorVector& v) {
    return nlohmann::json::parse(render_tensor_json(v));
}

} // namespace

std::string render_certificate_json(const PairingCertificate& cert) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& p : cert.pairs) {
        pairs.push_back({{"f", p.f_desc},
                         {"partner", p.partner_desc},
                         {"term_f", tensor_json(p.f_term)},
                         {"term_partner", tensor_json(p.partner_term)},
                         {"sum", tensor_json(add(p.f_term, p.partner_term))}});
    }
    nlohmann::json fixed = nlohmann::json::array();
    for (const auto& f : cert.fixed_points)
        fixed.push_back({{"f", f.f_desc}, {"term", tensor_json(f.term)}});
    nlohmann::json doc = {{"m", cert.m},
                          {"n", cert.n},
                          {"family_size", cert.family_size},
                          {"pairs", pairs},
                          {"fixed_points", fixed},
                          {"residual_matches", cert.residual_matches}};
    return doc.dump(2);
}

} // namespace graphcx

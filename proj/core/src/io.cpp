#include "zacyclic/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace zac {

namespace {

std::vector<std::string> tokens(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

// splits "key: rest" and returns {key, rest tokens}; empty key on blank line
std::pair<std::string, std::vector<std::string>> parse_line(const std::string& line) {
    auto toks = tokens(line);
    if (toks.empty()) return {"", {}};
    std::string key = toks[0];
    if (key.size() < 2 || key.back() != ':')
        throw std::runtime_error("expected `<key>:` at start of line: " + line);
    key.pop_back();
    toks.erase(toks.begin());
    return {key, toks};
}

Rat parse_rat(const std::string& tok) {
    for (char c : tok)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw std::runtime_error("bad number: " + tok);
    try {
        Rat r(tok);
        if (r.get_den() == 0) throw std::runtime_error("zero denominator: " + tok);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw std::runtime_error("bad number: " + tok);
    }
}

std::string rat_string(const Rat& r) {
    std::ostringstream out;
    out << r;
    return out.str();
}

}  // namespace

SimplicialComplex read_complex(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::set<Label> declared;
    bool seen_vertices = false;
    std::vector<std::vector<Label>> facets;
    while (std::getline(in, line)) {
        auto [key, toks] = parse_line(line);
        if (key.empty()) continue;
        if (key == "vertices") {
            if (seen_vertices) throw std::runtime_error("duplicate vertices line");
            seen_vertices = true;
            declared.insert(toks.begin(), toks.end());
            if (declared.size() != toks.size())
                throw std::runtime_error("repeated vertex in vertices line");
        } else if (key == "facet") {
            if (!seen_vertices) throw std::runtime_error("facet before vertices line");
            if (toks.empty()) throw std::runtime_error("empty facet");
            for (const auto& t : toks)
                if (!declared.count(t)) throw std::runtime_error("undeclared vertex: " + t);
            facets.push_back(toks);
        } else {
            throw std::runtime_error("unknown key: " + key);
        }
    }
    if (!seen_vertices) throw std::runtime_error("missing vertices line");
    // keep isolated vertices as 0-faces
    auto listed = facets;
    std::set<Label> covered;
    for (const auto& f : facets) covered.insert(f.begin(), f.end());
    for (const auto& v : declared)
        if (!covered.count(v)) listed.push_back({v});
    try {
        return SimplicialComplex::from_facets(listed);
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(e.what());
    }
}

std::string write_complex(const SimplicialComplex& K) {
    std::ostringstream out;
    out << "vertices:";
    for (const auto& v : K.vertex_set()) out << " " << v;
    out << "\n";
    for (const auto& f : K.facets()) {
        out << "facet:";
        for (const auto& v : f) out << " " << v;
        out << "\n";
    }
    return out.str();
}

namespace {

// shared scanner; preserves line order of the vertex entries
std::pair<Coordinates, std::vector<Label>> scan_coordinates(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Coordinates coords;
    std::vector<Label> order;
    bool seen_dim = false;
    while (std::getline(in, line)) {
        auto [key, toks] = parse_line(line);
        if (key.empty()) continue;
        if (key == "dim") {
            if (seen_dim) throw std::runtime_error("duplicate dim line");
            if (toks.size() != 1) throw std::runtime_error("malformed dim line");
            coords.dim = std::stoi(toks[0]);
            if (coords.dim < 1) throw std::runtime_error("dim must be positive");
            seen_dim = true;
        } else {
            if (!seen_dim) throw std::runtime_error("coordinates before dim line");
            if (static_cast<int>(toks.size()) != coords.dim)
                throw std::runtime_error("wrong arity for vertex " + key);
            if (coords.assignment.count(key))
                throw std::runtime_error("duplicate coordinates for " + key);
            std::vector<Rat> c;
            for (const auto& t : toks) c.push_back(parse_rat(t));
            coords.assignment.emplace(key, Point(std::move(c)));
            order.push_back(key);
        }
    }
    if (!seen_dim) throw std::runtime_error("missing dim line");
    return {coords, order};
}

}  // namespace

Coordinates read_coordinates(const std::string& text) { return scan_coordinates(text).first; }

std::string write_coordinates(const Coordinates& coords) {
    std::ostringstream out;
    out << "dim: " << coords.dim << "\n";
    for (const auto& [v, p] : coords.assignment) {
        out << v << ":";
        for (int i = 0; i < p.dim(); ++i) out << " " << rat_string(p[i]);
        out << "\n";
    }
    return out.str();
}

std::vector<Point> read_curve(const std::string& text) {
    auto [coords, order] = scan_coordinates(text);
    if (coords.dim != 3) throw std::runtime_error("curves must be 3-dimensional");
    if (order.size() < 3) throw std::runtime_error("a closed curve needs at least 3 waypoints");
    std::vector<Point> pts;
    for (const auto& v : order) pts.push_back(coords.at(v));
    return pts;
}

std::string write_curve(const std::vector<Label>& waypoints, const Coordinates& coords) {
    std::ostringstream out;
    out << "dim: " << coords.dim << "\n";
    for (const auto& v : waypoints) {
        const Point& p = coords.at(v);
        out << v << ":";
        for (int i = 0; i < p.dim(); ++i) out << " " << rat_string(p[i]);
        out << "\n";
    }
    return out.str();
}

std::string export_off(const SimplicialComplex& K, const Coordinates& coords) {
    if (coords.dim != 3) throw std::runtime_error("OFF export requires dimension 3");
    std::vector<Label> verts(K.vertex_set().begin(), K.vertex_set().end());
    std::map<Label, std::size_t> index;
    for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = i;

    auto fv = K.f_vector();
    std::size_t f1 = fv.size() > 1 ? fv[1] : 0;
    std::size_t f2 = fv.size() > 2 ? fv[2] : 0;

    std::ostringstream out;
    out << "OFF\n" << verts.size() << " " << f2 << " " << f1 << "\n";
    for (const auto& v : verts) {
        const Point& p = coords.at(v);
        for (int i = 0; i < 3; ++i) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", mpq_get_d(p[i].get_mpq_t()));
            out << (i ? " " : "") << buf;
        }
        out << "\n";
    }
    for (const auto& t : K.faces(2))
        out << "3 " << index[t[0]] << " " << index[t[1]] << " " << index[t[2]] << "\n";
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace zac

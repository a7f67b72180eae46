#pragma once

// The arrangement document format: a line-oriented text format with
// explicit "p/q" rational strings (no floats accepted on input),
// versioned by a leading "format: 1" field.
//
//   format: 1
//   surface: p2 | ruled e=<int> g=<int> | abstract
//   # abstract surfaces then take:
//   rank: <int>
//   labels: <name>,<name>,...
//   gram: <r> <r> ... ; <r> ... ;  ...        (rank rows)
//   canonical: <r> <r> ...                    (optional)
//   c2: <r>                                   (optional)
//   k2: <r>                                   (optional)
//   ample: <r> <r> ...                        (repeatable, optional)
//   curveclass: <r> <r> ...                   (repeatable, optional)
//   # then, for any surface kind:
//   curve: <id> class=<r>,<r>,... [genus=<r>]
//   point: <id> curves=<id>,<id>,...

#include "sesh/arrangement.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace sesh {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_no, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) { out.push_back(cur); cur.clear(); }
        else cur += c;
    }
    out.push_back(cur);
    return out;
}

inline std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

inline std::vector<Rational> parse_rational_list(const std::string& s, char sep, int line) {
    std::vector<Rational> out;
    std::istringstream iss;
    std::vector<std::string> parts;
    if (sep == ' ') {
        std::istringstream ws(s);
        std::string tok;
        while (ws >> tok) parts.push_back(tok);
    } else {
        parts = split(s, sep);
    }
    for (const auto& p : parts) {
        std::string t = trim(p);
        if (t.empty()) throw ParseError(line, "empty rational entry");
        try {
            out.push_back(Rational::parse(t));
        } catch (const std::domain_error& e) {
            throw ParseError(line, e.what());
        }
    }
    return out;
}

}  // namespace detail

inline Arrangement parse_arrangement(std::istream& in) {
    std::string line;
    int line_no = 0;
    bool saw_format = false;

    std::shared_ptr<SurfaceModel> surf;
    bool abstract_pending = false;
    Arrangement arr;

    auto finalize_surface = [&](int at_line) {
        if (abstract_pending) {
            if (surf->rank <= 0) throw ParseError(at_line, "abstract surface needs rank");
            if (static_cast<int>(surf->gram.size()) != surf->rank)
                throw ParseError(at_line, "abstract surface gram has wrong row count");
            if (surf->basis_labels.empty())
                for (int i = 0; i < surf->rank; ++i)
                    surf->basis_labels.push_back("e" + std::to_string(i));
            abstract_pending = false;
            arr.surface = surf;
        }
    };

    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        try {
        auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError(line_no, "expected 'key: value'");
        std::string key = detail::trim(line.substr(0, colon));
        std::string value = detail::trim(line.substr(colon + 1));

        if (key == "format") {
            if (value != "1") throw ParseError(line_no, "unsupported format version '" + value + "'");
            saw_format = true;
            continue;
        }
        if (!saw_format) throw ParseError(line_no, "document must start with 'format: 1'");

        if (key == "surface") {
            std::istringstream ws(value);
            std::string kind;
            ws >> kind;
            if (kind == "p2") {
                arr.surface = SurfaceModel::projective_plane();
            } else if (kind == "ruled") {
                int e = 0, g = 0;
                bool saw_e = false;
                std::string tok;
                while (ws >> tok) {
                    if (tok.rfind("e=", 0) == 0) { e = std::stoi(tok.substr(2)); saw_e = true; }
                    else if (tok.rfind("g=", 0) == 0) g = std::stoi(tok.substr(2));
                    else throw ParseError(line_no, "unknown ruled-surface parameter '" + tok + "'");
                }
                if (!saw_e) throw ParseError(line_no, "ruled surface needs e=<int>");
                arr.surface = SurfaceModel::ruled(g, e);
            } else if (kind == "abstract") {
                surf = std::make_shared<SurfaceModel>();
                surf->kind = SurfaceKind::AbstractLattice;
                abstract_pending = true;
            } else {
                throw ParseError(line_no, "unknown surface kind '" + kind + "'");
            }
            continue;
        }

        if (key == "rank" || key == "labels" || key == "gram" || key == "canonical" ||
            key == "c2" || key == "k2" || key == "ample" || key == "curveclass") {
            if (!abstract_pending)
                throw ParseError(line_no, "'" + key + "' is only valid inside an abstract surface");
            if (key == "rank") {
                surf->rank = std::stoi(value);
            } else if (key == "labels") {
                for (auto& l : detail::split(value, ',')) surf->basis_labels.push_back(detail::trim(l));
            } else if (key == "gram") {
                for (auto& row : detail::split(value, ';')) {
                    auto r = detail::parse_rational_list(detail::trim(row), ' ', line_no);
                    if (static_cast<int>(r.size()) != surf->rank)
                        throw ParseError(line_no, "gram row length != rank");
                    surf->gram.push_back(std::move(r));
                }
            } else if (key == "canonical") {
                surf->canonical_class = detail::parse_rational_list(value, ' ', line_no);
            } else if (key == "c2") {
                surf->chern_c2 = Rational::parse(value);
            } else if (key == "k2") {
                surf->canonical_square = Rational::parse(value);
            } else if (key == "ample") {
                surf->ample_classes.push_back(detail::parse_rational_list(value, ' ', line_no));
            } else {
                surf->curve_classes.push_back(detail::parse_rational_list(value, ' ', line_no));
            }
            continue;
        }

        if (key == "curve") {
            finalize_surface(line_no);
            if (!arr.surface) throw ParseError(line_no, "curve before surface declaration");
            std::istringstream ws(value);
            std::string id, tok;
            ws >> id;
            if (id.empty()) throw ParseError(line_no, "curve needs an id");
            Curve c{id, std::nullopt, std::nullopt};
            while (ws >> tok) {
                if (tok.rfind("class=", 0) == 0) {
                    auto coeffs = detail::parse_rational_list(tok.substr(6), ',', line_no);
                    if (static_cast<int>(coeffs.size()) != arr.surface->rank)
                        throw ParseError(line_no, "class length != surface rank");
                    c.cls = DivisorClass{arr.surface, std::move(coeffs)};
                } else if (tok.rfind("genus=", 0) == 0) {
                    c.genus = Rational::parse(tok.substr(6));
                } else {
                    throw ParseError(line_no, "unknown curve field '" + tok + "'");
                }
            }
            arr.curves.push_back(std::move(c));
            continue;
        }

        if (key == "point") {
            finalize_surface(line_no);
            if (!arr.surface) throw ParseError(line_no, "point before surface declaration");
            std::istringstream ws(value);
            std::string id, tok;
            ws >> id;
            if (id.empty()) throw ParseError(line_no, "point needs an id");
            SingPoint p{id, {}};
            while (ws >> tok) {
                if (tok.rfind("curves=", 0) == 0) {
                    for (auto& cid : detail::split(tok.substr(7), ','))
                        p.curves.push_back(detail::trim(cid));
                } else {
                    throw ParseError(line_no, "unknown point field '" + tok + "'");
                }
            }
            if (p.curves.empty()) throw ParseError(line_no, "point needs curves=<id,...>");
            arr.points.push_back(std::move(p));
            continue;
        }

        throw ParseError(line_no, "unknown key '" + key + "'");
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(line_no, e.what());
        }
    }
    finalize_surface(line_no);
    if (!arr.surface) throw ParseError(line_no, "document declares no surface");
    return arr;
}

inline Arrangement parse_arrangement(const std::string& text) {
    std::istringstream in(text);
    return parse_arrangement(in);
}

inline void serialize_arrangement(const Arrangement& arr, std::ostream& out) {
    out << "format: 1\n";
    const auto& s = *arr.surface;
    switch (s.kind) {
        case SurfaceKind::ProjectivePlane:
            out << "surface: p2\n";
            break;
        case SurfaceKind::RuledSurface:
            out << "surface: ruled e=" << s.ruled_e << " g=" << s.ruled_genus << "\n";
            break;
        case SurfaceKind::AbstractLattice: {
            out << "surface: abstract\n";
            out << "rank: " << s.rank << "\n";
            out << "labels: ";
            for (int i = 0; i < s.rank; ++i) out << (i ? "," : "") << s.basis_labels[i];
            out << "\ngram: ";
            for (int i = 0; i < s.rank; ++i) {
                if (i) out << " ; ";
                for (int j = 0; j < s.rank; ++j) out << (j ? " " : "") << s.gram[i][j].str();
            }
            out << "\n";
            if (s.canonical_class) {
                out << "canonical:";
                for (const auto& x : *s.canonical_class) out << " " << x.str();
                out << "\n";
            }
            if (s.chern_c2) out << "c2: " << s.chern_c2->str() << "\n";
            if (s.canonical_square) out << "k2: " << s.canonical_square->str() << "\n";
            for (const auto& a : s.ample_classes) {
                out << "ample:";
                for (const auto& x : a) out << " " << x.str();
                out << "\n";
            }
            for (const auto& c : s.curve_classes) {
                out << "curveclass:";
                for (const auto& x : c) out << " " << x.str();
                out << "\n";
            }
            break;
        }
    }
    for (const auto& c : arr.curves) {
        out << "curve: " << c.id;
        if (c.cls) out << " class=" << c.cls->str();
        if (c.genus) out << " genus=" << c.genus->str();
        out << "\n";
    }
    for (const auto& p : arr.points) {
        out << "point: " << p.id << " curves=";
        for (size_t i = 0; i < p.curves.size(); ++i) out << (i ? "," : "") << p.curves[i];
        out << "\n";
    }
}

inline std::string serialize_arrangement(const Arrangement& arr) {
    std::ostringstream out;
    serialize_arrangement(arr, out);
    return out.str();
}

}  // namespace sesh

#ifndef HOPFSIMP_IO_HPP
#define HOPFSIMP_IO_HPP

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hopfsimp/complex.hpp"
#include "hopfsimp/core.hpp"
#include "hopfsimp/hopf.hpp"
#include "hopfsimp/polynomial.hpp"
#include "hopfsimp/symfunc.hpp"

namespace hopfsimp {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Complexes
//
// Text:  n=4; {0,1,2},{2,3}
// JSON:  {"n":4,"facets":[[0,1,2],[2,3]]}

inline std::string to_text(const SimplicialComplex& c) {
    std::ostringstream os;
    os << "n=" << c.vertex_count() << ";";
    bool first = true;
    for (const auto& facet : c.facets()) {
        os << (first ? " {" : ",{");
        first = false;
        for (std::size_t i = 0; i < facet.size(); ++i) {
            os << (i ? "," : "") << facet[i];
        }
        os << "}";
    }
    return os.str();
}

inline json to_json(const SimplicialComplex& c) {
    return json{{"n", c.vertex_count()}, {"facets", c.facets()}};
}

inline SimplicialComplex complex_from_json(const json& j) {
    try {
        if (!j.is_object() || !j.contains("n") || !j.contains("facets")) {
            throw InputError("complex JSON needs fields \"n\" and \"facets\"");
        }
        const int n = j.at("n").get<int>();
        const auto facet_list = j.at("facets").get<std::vector<std::vector<int>>>();
        return SimplicialComplex::from_facets(n, facet_list);
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed complex JSON: ") + e.what());
    }
}

inline SimplicialComplex complex_from_text(const std::string& text) {
    std::size_t pos = 0;
    const auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])) != 0) {
            ++pos;
        }
    };
    const auto expect = [&](char ch) {
        skip_ws();
        if (pos >= text.size() || text[pos] != ch) {
            throw InputError(std::string("complex text: expected '") + ch + "' at offset " +
                             std::to_string(pos) + " in \"" + text + "\"");
        }
        ++pos;
    };
    const auto number = [&] {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])) != 0) {
            ++pos;
        }
        if (start == pos) {
            throw InputError("complex text: expected a number at offset " + std::to_string(start));
        }
        return std::stoi(text.substr(start, pos - start));
    };
    expect('n');
    expect('=');
    const int n = number();
    expect(';');
    std::vector<std::vector<int>> facet_list;
    skip_ws();
    while (pos < text.size()) {
        expect('{');
        std::vector<int> facet;
        skip_ws();
        if (pos < text.size() && text[pos] != '}') {
            facet.push_back(number());
            skip_ws();
            while (pos < text.size() && text[pos] == ',') {
                ++pos;
                facet.push_back(number());
                skip_ws();
            }
        }
        expect('}');
        facet_list.push_back(std::move(facet));
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            skip_ws();
        }
    }
    return SimplicialComplex::from_facets(n, facet_list);
}

/// Accepts either the JSON object or the text line.
inline SimplicialComplex parse_complex(const std::string& raw) {
    const auto first = raw.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) {
        throw InputError("empty complex description");
    }
    if (raw[first] == '{') {
        json j;
        try {
            j = json::parse(raw);
        } catch (const json::exception& e) {
            throw InputError(std::string("malformed JSON: ") + e.what());
        }
        return complex_from_json(j);
    }
    const auto last = raw.find_last_not_of(" \t\r\n");
    return complex_from_text(raw.substr(first, last - first + 1));
}

inline SimplicialComplex read_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_complex(buf.str());
}

// ---------------------------------------------------------------------------
// Linear combinations
//
// Text: one "coefficient<TAB>complex text" line per term.
// JSON: [{"coefficient":"p/q","complex":{...}}, ...]

inline json to_json(const LinComb& a) {
    json out = json::array();
    for (const auto& [c, k] : a.terms()) {
        out.push_back(json{{"coefficient", k.str()}, {"complex", to_json(c)}});
    }
    return out;
}

inline LinComb lincomb_from_json(const json& j) {
    if (!j.is_array()) {
        throw InputError("linear combination JSON must be an array");
    }
    LinComb out;
    for (const auto& term : j) {
        if (!term.contains("coefficient") || !term.contains("complex")) {
            throw InputError("linear combination term needs coefficient and complex");
        }
        out.add(complex_from_json(term.at("complex")), parse_rational(term.at("coefficient").get<std::string>()));
    }
    return out;
}

inline std::string to_text(const LinComb& a) {
    std::ostringstream os;
    for (const auto& [c, k] : a.terms()) {
        os << k.str() << "\t" << to_text(c) << "\n";
    }
    return os.str();
}

inline LinComb lincomb_from_text(const std::string& text) {
    LinComb out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        const auto tab = line.find('\t');
        if (tab == std::string::npos) {
            throw InputError("linear combination line lacks a tab separator: " + line);
        }
        out.add(complex_from_text(line.substr(tab + 1)), parse_rational(line.substr(0, tab)));
    }
    return out;
}

inline json to_json(const TensorLinComb& t) {
    json out = json::array();
    for (const auto& [key, k] : t.terms()) {
        out.push_back(json{{"coefficient", k.str()}, {"left", to_json(key.first)}, {"right", to_json(key.second)}});
    }
    return out;
}

inline std::string to_text(const TensorLinComb& t) {
    std::ostringstream os;
    for (const auto& [key, k] : t.terms()) {
        os << k.str() << "\t" << to_text(key.first) << "\t(x)\t" << to_text(key.second) << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Symmetric functions
//
// JSON: {"weight":n,"terms":[{"partition":[...],"poly_q":["p/q",...]}]}

inline json to_json(const SymPoly& f) {
    json terms = json::array();
    for (const auto& [l, c] : f.terms()) {
        terms.push_back(json{{"partition", l.parts()}, {"poly_q", coefficient_strings(c)}});
    }
    return json{{"weight", f.weight()}, {"terms", terms}};
}

inline SymPoly sympoly_from_json(const json& j) {
    try {
        SymPoly out(j.at("weight").get<int>());
        for (const auto& term : j.at("terms")) {
            out.add(Partition(term.at("partition").get<std::vector<int>>()),
                    polyq_from_strings(term.at("poly_q").get<std::vector<std::string>>()));
        }
        return out;
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed symmetric function JSON: ") + e.what());
    }
}

template <class P>
json poly_to_json(const P& p) {
    return coefficient_strings(p);
}

inline json to_json(const FVector& f) {
    json out = json::array();
    for (const Integer& x : f) {
        out.push_back(x.str());
    }
    return out;
}

}  // namespace hopfsimp

#endif  // HOPFSIMP_IO_HPP

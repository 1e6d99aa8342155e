#include "rblie/io.hpp"

#include "rblie/uea.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rblie {

using nlohmann::json;

namespace {

std::pair<int, int> parse_pair_key(const std::string& key) {
    auto comma = key.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("bracket key must be \"i,j\": '" + key + "'");
    int i = std::stoi(key.substr(0, comma));
    int j = std::stoi(key.substr(comma + 1));
    return {i, j};
}

}  // namespace

AlgebraSpec AlgebraSpec::parse(const std::string& json_text) {
    json doc = json::parse(json_text);
    int dim = doc.at("dim").get<int>();
    std::vector<std::string> labels;
    if (doc.contains("labels")) labels = doc["labels"].get<std::vector<std::string>>();

    std::map<std::pair<int, int>, Vec> brackets;
    if (doc.contains("brackets"))
        for (const auto& [key, value] : doc["brackets"].items()) {
            auto [i, j] = parse_pair_key(key);
            if (i < 1 || j <= i || j > dim)
                throw std::invalid_argument("bracket key out of range: '" + key + "'");
            Vec v = zero_vec(dim);
            for (const auto& [ks, cs] : value.items()) {
                int k = std::stoi(ks);
                if (k < 1 || k > dim)
                    throw std::invalid_argument("bracket component index out of range");
                v[k - 1] = parse_rational(cs.get<std::string>());
            }
            brackets[{i - 1, j - 1}] = std::move(v);
        }

    std::vector<Subspace> filtration;
    if (doc.contains("filtration") && doc["filtration"].is_array()) {
        for (const auto& level : doc["filtration"]) {
            Mat rows;
            for (const auto& row : level) {
                Vec v;
                for (const auto& c : row) v.push_back(parse_rational(c.get<std::string>()));
                if (v.size() != static_cast<std::size_t>(dim))
                    throw std::invalid_argument("filtration row has wrong length");
                rows.push_back(std::move(v));
            }
            filtration.push_back(Subspace::span(dim, rows));
        }
    }
    // "standard" (or absent) means the lower central series default

    AlgebraSpec spec;
    spec.algebra = std::make_unique<LieAlgebra>(dim, std::move(labels), std::move(brackets),
                                                std::move(filtration));

    if (doc.contains("rb")) {
        Mat m;
        for (const auto& row : doc["rb"]) {
            Vec v;
            for (const auto& c : row) v.push_back(parse_rational(c.get<std::string>()));
            m.push_back(std::move(v));
        }
        spec.rb = LinearOperator(*spec.algebra, std::move(m));
    }
    return spec;
}

AlgebraSpec AlgebraSpec::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::string AlgebraSpec::serialize() const {
    json doc;
    doc["dim"] = algebra->dim();
    doc["labels"] = algebra->labels();
    json brackets = json::object();
    for (const auto& [ij, v] : algebra->structure_constants()) {
        json entry = json::object();
        for (int k = 0; k < algebra->dim(); ++k)
            if (v[k] != 0) entry[std::to_string(k + 1)] = to_string(v[k]);
        brackets[std::to_string(ij.first + 1) + "," + std::to_string(ij.second + 1)] = entry;
    }
    doc["brackets"] = brackets;
    json filtration = json::array();
    for (const auto& level : algebra->filtration()) {
        json rows = json::array();
        for (const auto& r : level.rows()) {
            json row = json::array();
            for (const auto& c : r) row.push_back(to_string(c));
            rows.push_back(row);
        }
        filtration.push_back(rows);
    }
    doc["filtration"] = filtration;
    if (rb) {
        json m = json::array();
        for (const auto& row : rb->coeffs()) {
            json r = json::array();
            for (const auto& c : row) r.push_back(to_string(c));
            m.push_back(r);
        }
        doc["rb"] = m;
    }
    return doc.dump(2);
}

Vec parse_coords(const std::string& text, int dim) {
    Vec v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(parse_rational(item));
    if (v.size() != static_cast<std::size_t>(dim))
        throw std::invalid_argument("expected " + std::to_string(dim) + " coordinates");
    return v;
}

std::string format_coords(const Vec& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += to_string(v[i]);
    }
    return out;
}

std::string serialize_uea(const UEAElement& e) {
    json arr = json::array();
    for (const auto& [m, c] : e.terms()) {
        json entry;
        json mono = json::array();
        for (int i : m) mono.push_back(i + 1);
        entry["monomial"] = mono;
        entry["coeff"] = to_string(c);
        arr.push_back(entry);
    }
    return arr.dump();
}

}  // namespace rblie

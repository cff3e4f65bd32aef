#include "ncmops/io.hpp"

#include <fstream>

namespace ncmops {

namespace {

int int_field(const Json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    const Json& value = j.at(key);
    if (!value.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
    return value.get<int>();
}

const Json& object_field(const Json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    const Json& value = j.at(key);
    if (!value.is_object()) throw ParseError(std::string("field '") + key + "' must be an object");
    return value;
}

Rat rational_value(const Json& value, const std::string& where) {
    if (!value.is_string()) throw ParseError("expected a rational string at " + where);
    return parse_rational(value.get<std::string>());
}

Json polynomial_to_json(const NcPolynomial& p) {
    Json out = Json::object();
    for (const auto& [w, c] : p.terms()) out[word_string(w)] = fraction_string(c);
    return out;
}

NcPolynomial polynomial_from_json(int d, const Json& j, const std::string& where) {
    if (!j.is_object()) throw ParseError("expected a polynomial object at " + where);
    NcPolynomial p(d);
    for (const auto& [key, value] : j.items())
        p.add_term(parse_word(d, key), rational_value(value, where + "['" + key + "']"));
    return p;
}

}  // namespace

Json moment_table_to_json(const MomentTable& table) {
    Json out;
    out["d"] = table.d;
    out["max_degree"] = table.max_degree;
    Json moments = Json::object();
    for (const auto& [w, value] : table.moments) moments[word_string(w)] = fraction_string(value);
    out["moments"] = std::move(moments);
    return out;
}

MomentTable moment_table_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("moment table must be a JSON object");
    MomentTable table;
    table.d = int_field(j, "d");
    table.max_degree = int_field(j, "max_degree");
    if (table.d < 1) throw ParseError("field 'd' must be >= 1");
    if (table.max_degree < 0) throw ParseError("field 'max_degree' must be >= 0");
    for (const auto& [key, value] : object_field(j, "moments").items()) {
        const Word w = parse_word(table.d, key);
        if (w.length() > table.max_degree)
            throw ParseError("moment word '" + key + "' is longer than max_degree");
        table.moments[w] = rational_value(value, "moments['" + key + "']");
    }
    for (const Word& w : enumerate_words(table.d, table.max_degree)) {
        if (table.moments.count(w)) continue;
        auto rev = table.moments.find(w.reversed());
        if (rev == table.moments.end())
            throw ParseError("missing moment for word '" + word_string(w) + "'");
        table.moments.emplace(w, rev->second);
    }
    return table;
}

Json family_to_json(const MonicFamily& family) {
    Json out;
    out["d"] = family.d;
    out["degree"] = family.degree_bound;
    Json polys = Json::object();
    for (const auto& [u, p] : family.polynomials) polys[word_string(u)] = polynomial_to_json(p);
    out["polynomials"] = std::move(polys);
    Json norms = Json::object();
    for (const auto& [u, value] : family.norm_sq) norms[word_string(u)] = fraction_string(value);
    out["norm_sq"] = std::move(norms);
    return out;
}

MonicFamily family_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("family must be a JSON object");
    MonicFamily family;
    family.d = int_field(j, "d");
    family.degree_bound = int_field(j, "degree");
    if (family.d < 1) throw ParseError("field 'd' must be >= 1");
    if (family.degree_bound < 0) throw ParseError("field 'degree' must be >= 0");
    for (const auto& [key, value] : object_field(j, "polynomials").items())
        family.polynomials.emplace(parse_word(family.d, key),
                                   polynomial_from_json(family.d, value, "polynomials['" + key + "']"));
    for (const auto& [key, value] : object_field(j, "norm_sq").items())
        family.norm_sq.emplace(parse_word(family.d, key), rational_value(value, "norm_sq['" + key + "']"));
    for (const Word& u : enumerate_words(family.d, family.degree_bound)) {
        if (!family.polynomials.count(u))
            throw ParseError("missing polynomial for word '" + word_string(u) + "'");
        if (!family.norm_sq.count(u))
            throw ParseError("missing squared norm for word '" + word_string(u) + "'");
    }
    return family;
}

Json coefficients_to_json(const RecursionCoefficients& coeffs) {
    Json out;
    out["d"] = coeffs.d;
    out["depth"] = coeffs.depth;
    Json c = Json::object();
    for (const auto& [u, value] : coeffs.C) c[word_string(u)] = fraction_string(value);
    out["C"] = std::move(c);
    Json b = Json::object();
    for (const auto& [key, value] : coeffs.B) {
        const auto& [letter, w, u] = key;
        b[std::to_string(letter) + "|" + word_string(w) + "|" + word_string(u)] = fraction_string(value);
    }
    out["B"] = std::move(b);
    return out;
}

RecursionCoefficients coefficients_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("coefficients must be a JSON object");
    RecursionCoefficients coeffs;
    coeffs.d = int_field(j, "d");
    coeffs.depth = int_field(j, "depth");
    if (coeffs.d < 1) throw ParseError("field 'd' must be >= 1");
    if (coeffs.depth < 0) throw ParseError("field 'depth' must be >= 0");
    for (const auto& [key, value] : object_field(j, "C").items())
        coeffs.C.emplace(parse_word(coeffs.d, key), rational_value(value, "C['" + key + "']"));
    for (const auto& [key, value] : object_field(j, "B").items()) {
        const std::size_t first = key.find('|');
        const std::size_t second = first == std::string::npos ? std::string::npos : key.find('|', first + 1);
        if (second == std::string::npos) throw ParseError("bad composite key '" + key + "' in B");
        int letter = 0;
        try {
            letter = std::stoi(key.substr(0, first));
        } catch (const std::exception&) {
            throw ParseError("bad letter in composite key '" + key + "'");
        }
        if (letter < 1 || letter > coeffs.d) throw ParseError("letter out of range in composite key '" + key + "'");
        const Word w = parse_word(coeffs.d, key.substr(first + 1, second - first - 1));
        const Word u = parse_word(coeffs.d, key.substr(second + 1));
        coeffs.B.emplace(std::make_tuple(letter, w, u), rational_value(value, "B['" + key + "']"));
    }
    return coeffs;
}

Json fock_data_to_json(const FockData& data) {
    Json out;
    out["d"] = data.d;
    out["depth"] = data.depth;
    Json c = Json::object();
    for (const auto& level : data.weights)
        for (const auto& [w, value] : level) c[word_string(w)] = fraction_string(value);
    out["C"] = std::move(c);
    Json t = Json::object();
    for (int i = 1; i <= data.d; ++i) {
        Json per_level = Json::object();
        for (int k = 0; k <= data.depth; ++k) {
            const RatMatrix& matrix = data.preservation_at(i, k);
            Json rows = Json::array();
            for (std::size_t r = 0; r < matrix.rows(); ++r) {
                Json row = Json::array();
                for (std::size_t col = 0; col < matrix.cols(); ++col)
                    row.push_back(fraction_string(matrix.at(r, col)));
                rows.push_back(std::move(row));
            }
            per_level[std::to_string(k)] = std::move(rows);
        }
        t[std::to_string(i)] = std::move(per_level);
    }
    out["T"] = std::move(t);
    return out;
}

FockData fock_data_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("Fock data must be a JSON object");
    FockData data;
    data.d = int_field(j, "d");
    data.depth = int_field(j, "depth");
    if (data.d < 1) throw ParseError("field 'd' must be >= 1");
    if (data.depth < 0) throw ParseError("field 'depth' must be >= 0");
    data.weights.assign(static_cast<std::size_t>(data.depth), {});
    for (const auto& [key, value] : object_field(j, "C").items()) {
        const Word w = parse_word(data.d, key);
        if (w.length() < 1 || w.length() > data.depth)
            throw ParseError("weight word '" + key + "' is outside levels 1.." + std::to_string(data.depth));
        data.weights[static_cast<std::size_t>(w.length()) - 1][w] = rational_value(value, "C['" + key + "']");
    }
    for (int k = 1; k <= data.depth; ++k)
        for (const Word& w : words_of_length(data.d, k))
            if (!data.weights[static_cast<std::size_t>(k) - 1].count(w))
                throw ParseError("missing weight for word '" + word_string(w) + "'");
    const Json& t = object_field(j, "T");
    for (int i = 1; i <= data.d; ++i) {
        const std::string letter_key = std::to_string(i);
        if (!t.contains(letter_key)) throw ParseError("missing T entry for letter " + letter_key);
        const Json& per_level = t.at(letter_key);
        if (!per_level.is_object()) throw ParseError("T['" + letter_key + "'] must be an object");
        std::vector<RatMatrix> matrices;
        std::size_t dim = 1;
        for (int k = 0; k <= data.depth; ++k) {
            const std::string level_key = std::to_string(k);
            if (!per_level.contains(level_key))
                throw ParseError("missing T['" + letter_key + "']['" + level_key + "']");
            const Json& rows = per_level.at(level_key);
            const std::string where = "T['" + letter_key + "']['" + level_key + "']";
            if (!rows.is_array() || rows.size() != dim)
                throw ParseError(where + " must be an array of " + std::to_string(dim) + " rows");
            RatMatrix matrix(dim, dim);
            for (std::size_t r = 0; r < dim; ++r) {
                const Json& row = rows.at(r);
                if (!row.is_array() || row.size() != dim)
                    throw ParseError(where + " row " + std::to_string(r) + " must have " +
                                     std::to_string(dim) + " entries");
                for (std::size_t col = 0; col < dim; ++col)
                    matrix.at(r, col) = rational_value(row.at(col), where);
            }
            matrices.push_back(std::move(matrix));
            dim *= static_cast<std::size_t>(data.d);
        }
        data.preservation.push_back(std::move(matrices));
    }
    return data;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("cannot parse '" + path + "': " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace ncmops

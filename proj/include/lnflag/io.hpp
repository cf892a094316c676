#pragma once

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "lnflag/flag_ring.hpp"
#include "lnflag/gpoly.hpp"
#include "lnflag/subset.hpp"

namespace lnflag {

// Text literals: exponent sequences are comma lists ("2,0,1" means w_1=2,
// w_2=0, w_3=1), subsets are comma lists of elements with the ambient given
// separately; the empty string denotes the zero sequence / empty subset.
// Structured records are JSON with coefficients as decimal strings and all
// containers in canonical order, so identical inputs serialize to identical
// bytes.

namespace iodetail {

inline std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    if (text.empty())
        return out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        std::size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(token, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("malformed ") + what + " literal: '" + text +
                                        "'");
        }
        while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos])))
            ++pos;
        if (pos != token.size())
            throw std::invalid_argument(std::string("malformed ") + what + " literal: '" + text +
                                        "'");
        out.push_back(value);
    }
    if (text.back() == ',')
        throw std::invalid_argument(std::string("malformed ") + what + " literal: '" + text + "'");
    return out;
}

}  // namespace iodetail

inline ExponentSeq parse_exponent_seq(const std::string& text) {
    auto v = iodetail::parse_int_list(text, "exponent sequence");
    for (int e : v)
        if (e < 0)
            throw std::invalid_argument("malformed exponent sequence literal: '" + text + "'");
    return ExponentSeq(std::move(v));
}

inline std::string format_exponent_seq(const ExponentSeq& w) { return w.str(); }

inline SubsetQ parse_subset(const std::string& text, int ambient) {
    auto v = iodetail::parse_int_list(text, "subset");
    return SubsetQ(ambient, std::move(v));
}

inline std::string format_subset(const SubsetQ& q) {
    std::string s;
    for (std::size_t i = 0; i < q.elements().size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(q.elements()[i]);
    }
    return s;
}

namespace iodetail {

inline std::string monomial_text(const ExponentSeq& w, char symbol) {
    if (w.is_zero())
        return "1";
    std::string s;
    for (int i = 1; i <= w.max_index(); ++i) {
        if (w.at(i) == 0)
            continue;
        if (!s.empty())
            s += ' ';
        s += symbol;
        s += std::to_string(i);
        if (w.at(i) > 1)
            s += "^" + std::to_string(w.at(i));
    }
    return s;
}

inline void append_term(std::string& out, const BigInt& coeff, const std::string& mono) {
    bool negative = coeff < 0;
    BigInt abs = negative ? BigInt(-coeff) : coeff;
    if (out.empty())
        out += negative ? "-" : "";
    else
        out += negative ? " - " : " + ";
    if (mono == "1") {
        out += abs.str();
    } else {
        if (abs != 1)
            out += abs.str() + " ";
        out += mono;
    }
}

}  // namespace iodetail

/// Human-readable rendering in canonical term order; `symbol` is 'b' in Hopf
/// contexts and 'g' in geometric ones.
inline std::string render_poly(const GPoly& p, char symbol) {
    if (p.is_zero())
        return "0";
    std::string out;
    for (const auto& [w, c] : p.terms())
        iodetail::append_term(out, c, iodetail::monomial_text(w, symbol));
    return out;
}

inline std::string render_tensor(const GTensor& t, char symbol) {
    if (t.is_zero())
        return "0";
    std::string out;
    for (const auto& [key, c] : t.terms()) {
        std::string mono = iodetail::monomial_text(key.first, symbol) + " (x) " +
                           iodetail::monomial_text(key.second, symbol);
        iodetail::append_term(out, c, mono);
    }
    return out;
}

inline nlohmann::json poly_to_json(const GPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [w, c] : p.terms())
        terms.push_back({{"exp", w.entries()}, {"coeff", c.str()}});
    return terms;
}

inline GPoly poly_from_json(const nlohmann::json& j) {
    GPoly p;
    for (const auto& term : j) {
        std::vector<int> exp = term.at("exp").get<std::vector<int>>();
        BigInt c(term.at("coeff").get<std::string>());
        p.add_term(ExponentSeq(std::move(exp)), c);
    }
    return p;
}

inline nlohmann::json tensor_to_json(const GTensor& t) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, c] : t.terms())
        terms.push_back({{"left", key.first.entries()},
                         {"right", key.second.entries()},
                         {"coeff", c.str()}});
    return terms;
}

inline GTensor tensor_from_json(const nlohmann::json& j) {
    GTensor t;
    for (const auto& term : j) {
        ExponentSeq l{term.at("left").get<std::vector<int>>()};
        ExponentSeq r{term.at("right").get<std::vector<int>>()};
        BigInt c(term.at("coeff").get<std::string>());
        t.add_term(l, r, c);
    }
    return t;
}

inline nlohmann::json flag_elem_to_json(const FlagElem& e) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [mask, coeff] : e.terms()) {
        SubsetQ r = SubsetQ::from_mask(e.context().ambient(), mask);
        terms.push_back({{"R", r.elements()}, {"coeff", poly_to_json(coeff)}});
    }
    return {{"context", {{"n", e.context().ambient()}, {"Q", e.context().q.elements()}}},
            {"terms", terms}};
}

inline FlagElem flag_elem_from_json(const nlohmann::json& j) {
    int n = j.at("context").at("n").get<int>();
    SubsetQ q(n, j.at("context").at("Q").get<std::vector<int>>());
    FlagElem e{FlagContext(q)};
    for (const auto& term : j.at("terms")) {
        SubsetQ r(n, term.at("R").get<std::vector<int>>());
        e.add_term(r.mask(), poly_from_json(term.at("coeff")));
    }
    return e;
}

}  // namespace lnflag

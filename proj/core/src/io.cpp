#include "polyomega/io.hpp"

#include "polyomega/error.hpp"

#include "json_util.hpp"

#include <sstream>

namespace polyomega {

LDSystem parse_system(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::size_t d = 0;
    std::vector<IntVec> rows;
    std::vector<Relation> rel;
    IntVec rhs;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream tokens(line);
        std::vector<std::string> tok;
        for (std::string t; tokens >> t;)
            tok.push_back(t);
        if (tok.empty())
            continue;

        std::size_t op = tok.size();
        for (std::size_t i = 0; i < tok.size(); ++i)
            if (tok[i] == ">=" || tok[i] == "=") {
                op = i;
                break;
            }
        if (op == tok.size())
            throw ParseError("missing relation '>=' or '='", lineno);
        if (op == 0)
            throw ParseError("no coefficients before the relation", lineno);
        if (op + 2 != tok.size())
            throw ParseError("expected exactly one right-hand side after '" + tok[op] + "'",
                             lineno);

        IntVec row;
        try {
            for (std::size_t i = 0; i < op; ++i)
                row.push_back(parse_bigint(tok[i]));
            rhs.push_back(parse_bigint(tok[op + 1]));
        } catch (const ParseError &e) {
            throw ParseError(e.what(), lineno);
        }
        if (d == 0)
            d = row.size();
        else if (row.size() != d)
            throw DimensionError("line " + std::to_string(lineno) + ": " +
                                 std::to_string(row.size()) + " coefficients, expected " +
                                 std::to_string(d));
        rows.push_back(std::move(row));
        rel.push_back(tok[op] == "=" ? Relation::Eq : Relation::Geq);
    }
    if (rows.empty())
        throw ParseError("no constraints in input");
    IntMat a(rows.size(), d);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < d; ++j)
            a(i, j) = rows[i][j];
    return LDSystem::make(std::move(a), std::move(rel), std::move(rhs));
}

std::string format_system(const LDSystem &system) {
    std::string out;
    for (std::size_t i = 0; i < system.num_constraints(); ++i) {
        for (std::size_t j = 0; j < system.num_variables(); ++j)
            out += system.a(i, j).get_str() + " ";
        out += system.rel[i] == Relation::Eq ? "= " : ">= ";
        out += system.b[i].get_str() + "\n";
    }
    return out;
}

std::string cones_to_json(const ConeCombination &combination, std::size_t dimension) {
    nlohmann::json cones = nlohmann::json::array();
    for (const auto &[cone, mult] : combination) {
        nlohmann::json gens = nlohmann::json::array();
        for (std::size_t j = 0; j < cone.num_generators(); ++j) {
            nlohmann::json col = nlohmann::json::array();
            for (const auto &x : cone.generators.column_view(j))
                col.push_back(detail::int_to_json(x));
            gens.push_back(std::move(col));
        }
        nlohmann::json apex = nlohmann::json::array();
        for (const auto &x : cone.apex)
            apex.push_back({{"num", x.get_num().get_str()}, {"den", x.get_den().get_str()}});
        nlohmann::json open = nlohmann::json::array();
        for (auto o : cone.open)
            open.push_back(static_cast<int>(o));
        cones.push_back({{"mult", mult.get_str()},
                         {"generators", std::move(gens)},
                         {"apex", std::move(apex)},
                         {"open", std::move(open)}});
    }
    nlohmann::json doc = {{"dimension", dimension}, {"cones", std::move(cones)}};
    return doc.dump();
}

ConeCombination cones_from_json(const std::string &text, std::size_t *dimension) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        const std::size_t n = doc.at("dimension").get<std::size_t>();
        if (dimension)
            *dimension = n;
        ConeCombination out;
        for (const auto &c : doc.at("cones")) {
            const auto &gens = c.at("generators");
            IntMat v(n, gens.size());
            for (std::size_t j = 0; j < gens.size(); ++j) {
                if (gens[j].size() != n)
                    throw DimensionError("generator length does not match the dimension");
                for (std::size_t i = 0; i < n; ++i)
                    v(i, j) = detail::int_from_json(gens[j][i]);
            }
            RatVec apex;
            for (const auto &x : c.at("apex")) {
                const BigInt num = detail::int_from_json(x.at("num"));
                const BigInt den = detail::int_from_json(x.at("den"));
                if (den == 0)
                    throw ParseError("zero denominator in apex");
                apex.push_back(make_rat(num, den));
            }
            Openness open;
            for (const auto &o : c.at("open")) {
                const int bit = o.get<int>();
                if (bit != 0 && bit != 1)
                    throw ParseError("openness bits must be 0 or 1");
                open.push_back(static_cast<std::uint8_t>(bit));
            }
            out.add(SymbolicCone::make(std::move(v), std::move(apex), std::move(open)),
                    detail::int_from_json(c.at("mult")));
        }
        return out;
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("malformed cone document: ") + e.what());
    }
}

} // namespace polyomega

#include "hodgeforge/io.hpp"

#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace hodgeforge {

using nlohmann::json;

std::string block_to_json(const HodgeBlock& block) {
    json out;
    out["g"] = block.g;
    out["r"] = block.r;
    out["kL"] = block.k;
    json entries = json::array();
    for (const auto& [key, value] : block.entries) {
        const auto& [b, j] = key;
        entries.push_back({{"bL", b}, {"j", j}, {"value", value.str()}});
    }
    out["entries"] = std::move(entries);
    return out.dump(2);
}

HodgeBlock block_from_json(const std::string& text) {
    const json in = json::parse(text);
    HodgeBlock block;
    block.g = in.at("g").get<int>();
    block.r = in.at("r").get<int>();
    block.k = in.at("kL").get<std::vector<int>>();
    for (const auto& e : in.at("entries")) {
        const auto b = e.at("bL").get<DescendentVector>();
        const int j = e.at("j").get<int>();
        block.entries[{b, j}] = Rational::parse(e.at("value").get<std::string>());
    }
    return block;
}

std::string xi_table_to_csv(const XiCoeffTable& table) {
    std::ostringstream out;
    out << "r,k,m,p,c\n";
    for (size_t m = 0; m < table.rows.size(); ++m)
        for (size_t p = 0; p < table.rows[m].size(); ++p)
            out << table.r << ',' << table.k << ',' << m << ',' << p << ','
                << table.rows[m][p].str() << '\n';
    return out.str();
}

XiCoeffTable xi_table_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "r,k,m,p,c")
        throw std::runtime_error("xi_table_from_csv: missing header row");
    XiCoeffTable table;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string field;
        long vals[4];
        for (int i = 0; i < 4; ++i) {
            if (!std::getline(ls, field, ','))
                throw std::runtime_error("xi_table_from_csv: short record: " + line);
            vals[i] = std::stol(field);
        }
        if (!std::getline(ls, field))
            throw std::runtime_error("xi_table_from_csv: missing coefficient: " + line);
        if (first) {
            table.r = static_cast<int>(vals[0]);
            table.k = static_cast<int>(vals[1]);
            first = false;
        }
        const size_t m = static_cast<size_t>(vals[2]);
        if (table.rows.size() <= m) table.rows.resize(m + 1);
        if (table.rows[m].size() <= static_cast<size_t>(vals[3]))
            table.rows[m].resize(vals[3] + 1, BigInt(0));
        table.rows[m][vals[3]] = BigInt(field);
    }
    return table;
}

}  // namespace hodgeforge

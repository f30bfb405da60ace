#include "oharm/render.hpp"

#include <stdexcept>

namespace oharm {

std::string render_terms(const SchurExpansion& f, bool records) {
    std::string out;
    bool single = f.deg2() == 0;
    for (const auto& [key, c] : f.terms()) {
        for (const auto& [e, v] : c.terms()) {
            if (records) {
                out += "kind=term q=" + std::to_string(e) + " l1=" + key.first.str();
                if (!single)
                    out += " l2=" + key.second.str();
                out += " c=" + v.get_str() + "\n";
            } else {
                out += "q^" + std::to_string(e) + "  s" + key.first.str();
                if (!single)
                    out += "*s" + key.second.str();
                out += "  " + v.get_str() + "\n";
            }
        }
    }
    return out;
}

Partition parse_partition(const std::string& s) {
    std::string body = s;
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']')
            throw std::domain_error("parse_partition: unbalanced brackets in '" + s + "'");
        body = body.substr(1, body.size() - 2);
    }
    std::vector<int> parts;
    size_t pos = 0;
    while (pos < body.size()) {
        size_t comma = body.find(',', pos);
        std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                      : comma - pos);
        if (!tok.empty())
            parts.push_back(std::stoi(tok));
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return Partition(parts);
}

}  // namespace oharm

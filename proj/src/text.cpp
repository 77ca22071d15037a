#include "lcp/text.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace lcp {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string t;
    while (ss >> t) out.push_back(t);
    return out;
}

bool valid_label(const std::string& t) {
    return !t.empty() && t.find('<') == std::string::npos && t.find('#') == std::string::npos;
}

}  // namespace

PosetPtr parse_poset(std::istream& in) {
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> pairs;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokens(strip_comment(line));
        if (toks.empty()) continue;
        if (toks[0] == "elem") {
            for (std::size_t i = 1; i < toks.size(); ++i) {
                if (!valid_label(toks[i])) throw ParseError(lineno, "bad label: " + toks[i]);
                labels.push_back(toks[i]);
            }
        } else if (toks.size() == 3 && toks[1] == "<") {
            if (!valid_label(toks[0]) || !valid_label(toks[2]))
                throw ParseError(lineno, "bad label in order pair");
            pairs.emplace_back(toks[0], toks[2]);
        } else {
            throw ParseError(lineno, "expected 'elem ...' or 'a < b', got: " + line);
        }
    }
    try {
        return Poset::from_covers(std::move(labels), pairs);
    } catch (const SizeLimit&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(lineno, e.what());
    }
}

PosetPtr parse_poset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    return parse_poset(in);
}

std::string format_poset(const Poset& p) {
    std::string out = "elem";
    for (const auto& l : p.labels()) out += " " + l;
    out += "\n";
    for (const auto& [x, y] : p.covers()) out += p.label(x) + " < " + p.label(y) + "\n";
    return out;
}

ClosureRelation parse_closure(std::istream& in, const PosetPtr& p) {
    std::vector<int> image(p->size(), -1);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = strip_comment(line);
        auto colon = body.find("closed:");
        if (colon != std::string::npos) {
            std::string rest = body.substr(colon + 7);
            Mask a = 0;
            std::string label;
            for (char c : rest) {
                if (c == '{' || c == '}' || c == ',' || std::isspace(static_cast<unsigned char>(c))) {
                    if (!label.empty()) {
                        auto i = p->index_of(label);
                        if (!i) throw ParseError(lineno, "unknown element: " + label);
                        a |= bit(*i);
                        label.clear();
                    }
                } else {
                    label += c;
                }
            }
            if (!label.empty()) {
                auto i = p->index_of(label);
                if (!i) throw ParseError(lineno, "unknown element: " + label);
                a |= bit(*i);
            }
            return ClosureRelation::from_closed_set(p, a);
        }
        auto toks = tokens(body);
        if (toks.empty()) continue;
        if (toks.size() != 3 || toks[1] != "->")
            throw ParseError(lineno, "expected 'x -> y' or 'closed: {...}'");
        auto x = p->index_of(toks[0]);
        auto y = p->index_of(toks[2]);
        if (!x) throw ParseError(lineno, "unknown element: " + toks[0]);
        if (!y) throw ParseError(lineno, "unknown element: " + toks[2]);
        image[*x] = *y;
    }
    for (int x = 0; x < p->size(); ++x)
        if (image[x] < 0) throw ParseError(lineno, "no image given for " + p->label(x));
    return ClosureRelation::validate(p, std::move(image));
}

ClosureRelation parse_closure_file(const std::string& path, const PosetPtr& p) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    return parse_closure(in, p);
}

}  // namespace lcp

#include "coxstar/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace coxstar {

NodeSet NodeSet::of(std::initializer_list<int> labels) {
    NodeSet s;
    for (int l : labels) s = s.with(l);
    return s;
}

NodeSet NodeSet::parse(const std::string& text, int rank) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t == "-" || t.empty()) return NodeSet{};
    NodeSet s;
    std::size_t pos = 0;
    while (pos < t.size()) {
        std::size_t end = t.find(',', pos);
        if (end == std::string::npos) end = t.size();
        const std::string tok = t.substr(pos, end - pos);
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) {
                return std::isdigit(static_cast<unsigned char>(c)) != 0;
            }))
            throw ParseError("bad subset element '" + tok + "' in '" + text + "'");
        const long label = std::stol(tok);
        if (label < 1 || label > rank)
            throw ParseError("subset element " + tok + " out of range 1.." + std::to_string(rank));
        s = s.with(static_cast<int>(label));
        pos = end + 1;
        if (end == t.size()) break;
        if (pos == t.size()) throw ParseError("trailing comma in subset '" + text + "'");
    }
    return s;
}

std::vector<int> NodeSet::labels() const {
    std::vector<int> out;
    for (int l = 1; l <= 32; ++l)
        if (contains(l)) out.push_back(l);
    return out;
}

std::string NodeSet::str() const {
    if (is_empty()) return "-";
    std::string out;
    for (int l : labels()) {
        if (!out.empty()) out.push_back(',');
        out += std::to_string(l);
    }
    return out;
}

std::string IrreducibleComponent::name() const {
    switch (family) {
        case Family::A: return "A" + std::to_string(rank);
        case Family::B: return "B" + std::to_string(rank);
        case Family::D: return "D" + std::to_string(rank);
        case Family::E: return "E" + std::to_string(rank);
        case Family::F: return "F" + std::to_string(rank);
        case Family::H: return "H" + std::to_string(rank);
        case Family::I2: return "I2(" + std::to_string(bond) + ")";
    }
    return "?";
}

std::vector<std::array<int, 3>> component_edges(Family family, int rank, int bond) {
    std::vector<std::array<int, 3>> edges;
    switch (family) {
        case Family::A:
            for (int i = 1; i < rank; ++i) edges.push_back({i, i + 1, 3});
            break;
        case Family::B:
            for (int i = 1; i < rank - 1; ++i) edges.push_back({i, i + 1, 3});
            edges.push_back({rank - 1, rank, 4});
            break;
        case Family::D:
            for (int i = 1; i < rank - 1; ++i) edges.push_back({i, i + 1, 3});
            edges.push_back({rank - 2, rank, 3});
            break;
        case Family::E:
            // path 1-3-4-5-...-n, branch node 2 attached to 4
            edges.push_back({1, 3, 3});
            for (int i = 3; i < rank; ++i) edges.push_back({i, i + 1, 3});
            edges.push_back({2, 4, 3});
            break;
        case Family::F:
            edges.push_back({1, 2, 3});
            edges.push_back({2, 3, 4});
            edges.push_back({3, 4, 3});
            break;
        case Family::H:
            edges.push_back({1, 2, 5});
            for (int i = 2; i < rank; ++i) edges.push_back({i, i + 1, 3});
            break;
        case Family::I2:
            edges.push_back({1, 2, bond});
            break;
    }
    return edges;
}

CoxeterDiagram::CoxeterDiagram(std::vector<IrreducibleComponent> components)
    : components_(std::move(components)) {
    int label = 1;
    for (auto& c : components_) {
        c.first = label;
        label += c.rank;
    }
    rank_ = label - 1;
    coxmat_.assign(static_cast<std::size_t>(rank_) * rank_, 2);
    for (int i = 1; i <= rank_; ++i) coxmat_[static_cast<std::size_t>(i - 1) * rank_ + (i - 1)] = 1;
    for (const auto& c : components_) {
        for (const auto& [i, j, m] : component_edges(c.family, c.rank, c.bond)) {
            const int gi = c.first + i - 1, gj = c.first + j - 1;
            coxmat_[static_cast<std::size_t>(gi - 1) * rank_ + (gj - 1)] = m;
            coxmat_[static_cast<std::size_t>(gj - 1) * rank_ + (gi - 1)] = m;
        }
    }
    if (std::any_of(components_.begin(), components_.end(),
                    [](const IrreducibleComponent& c) { return c.general_dihedral(); }) &&
        components_.size() > 1)
        throw ParseError("I2(m) with m not in {3,4,6} is only available standalone, not in products");
}

std::string CoxeterDiagram::name() const {
    std::string out;
    for (const auto& c : components_) {
        if (!out.empty()) out.push_back('x');
        out += c.name();
    }
    return out;
}

bool CoxeterDiagram::operator==(const CoxeterDiagram& other) const {
    if (components_.size() != other.components_.size()) return false;
    for (std::size_t k = 0; k < components_.size(); ++k) {
        const auto& a = components_[k];
        const auto& b = other.components_[k];
        if (a.family != b.family || a.rank != b.rank || a.bond != b.bond) return false;
    }
    return true;
}

namespace {

constexpr int kMaxRank = 16;

[[noreturn]] void rank_error(const std::string& comp, const std::string& hint) {
    std::string msg = "invalid type " + comp;
    if (!hint.empty()) msg += "; did you mean " + hint + "?";
    throw ParseError(msg);
}

IrreducibleComponent make_component(char letter, long rank, long bond) {
    switch (letter) {
        case 'A':
            if (rank < 1) rank_error("A" + std::to_string(rank), "");
            return {Family::A, static_cast<int>(rank)};
        case 'B':
            if (rank < 2) rank_error("B" + std::to_string(rank), rank == 1 ? "A1" : "");
            return {Family::B, static_cast<int>(rank)};
        case 'D':
            if (rank < 4)
                rank_error("D" + std::to_string(rank),
                           rank == 3   ? "A3"
                           : rank == 2 ? "A1xA1"
                                       : "");
            return {Family::D, static_cast<int>(rank)};
        case 'E':
            if (rank < 6 || rank > 8)
                rank_error("E" + std::to_string(rank),
                           rank == 5   ? "D5"
                           : rank == 4 ? "A4"
                           : rank == 3 ? "A2xA1"
                                       : "");
            return {Family::E, static_cast<int>(rank)};
        case 'F':
            if (rank != 4) rank_error("F" + std::to_string(rank), "");
            return {Family::F, 4};
        case 'H':
            if (rank < 3 || rank > 4)
                rank_error("H" + std::to_string(rank), rank == 2 ? "I2(5)" : "");
            return {Family::H, static_cast<int>(rank)};
        case 'I':
            if (bond < 3)
                rank_error("I2(" + std::to_string(bond) + ")", bond == 2 ? "A1xA1" : "");
            if (bond == 3) return {Family::A, 2};
            if (bond == 4) return {Family::B, 2};
            return {Family::I2, 2, static_cast<int>(bond)};
        default: break;
    }
    throw ParseError(std::string("unknown family letter '") + letter + "'");
}

long parse_digits(const std::string& text, std::size_t& pos, const char* what) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError(std::string("expected ") + what + " in '" + text + "'");
    if (pos - start > 7) throw ParseError(std::string("absurdly large ") + what + " in '" + text + "'");
    return std::stol(text.substr(start, pos - start));
}

}  // namespace

CoxeterDiagram parse_type(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw ParseError("empty type string");

    std::vector<IrreducibleComponent> comps;
    std::size_t pos = 0;
    while (true) {
        if (pos >= t.size()) throw ParseError("dangling 'x' in '" + text + "'");
        const char letter = t[pos];
        if (letter == 'I') {
            if (t.compare(pos, 3, "I2(") != 0)
                throw ParseError("expected I2(m) at '" + t.substr(pos) + "'");
            pos += 3;
            const long m = parse_digits(t, pos, "bond order");
            if (pos >= t.size() || t[pos] != ')')
                throw ParseError("missing ')' in '" + text + "'");
            ++pos;
            comps.push_back(make_component('I', 2, m));
        } else {
            ++pos;
            const long rank = parse_digits(t, pos, "rank");
            comps.push_back(make_component(letter, rank, 0));
        }
        if (pos == t.size()) break;
        if (t[pos] != 'x') throw ParseError("unexpected '" + t.substr(pos) + "' in '" + text + "'");
        ++pos;
    }

    int total = 0;
    for (const auto& c : comps) total += c.rank;
    if (total > kMaxRank)
        throw ParseError("total rank " + std::to_string(total) + " exceeds the supported maximum " +
                         std::to_string(kMaxRank));
    return CoxeterDiagram(std::move(comps));
}

std::vector<NodeSet> components_of(const CoxeterDiagram& d, NodeSet j) {
    std::vector<NodeSet> parts;
    NodeSet seen;
    for (int seed = 1; seed <= d.rank(); ++seed) {
        if (!j.contains(seed) || seen.contains(seed)) continue;
        NodeSet part = NodeSet::of({seed});
        std::vector<int> stack{seed};
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w = 1; w <= d.rank(); ++w) {
                if (j.contains(w) && !part.contains(w) && d.adjacent(v, w)) {
                    part = part.with(w);
                    stack.push_back(w);
                }
            }
        }
        seen = seen | part;
        parts.push_back(part);
    }
    return parts;
}

std::vector<int> end_points(const CoxeterDiagram& d) {
    if (!d.irreducible()) throw std::invalid_argument("end_points requires an irreducible diagram");
    if (d.rank() == 1) return {1};
    std::vector<int> out;
    for (int i = 1; i <= d.rank(); ++i) {
        int degree = 0;
        for (int j = 1; j <= d.rank(); ++j)
            if (d.adjacent(i, j)) ++degree;
        if (degree == 1) out.push_back(i);
    }
    return out;
}

}  // namespace coxstar

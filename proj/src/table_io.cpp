#include "coxstar/table_io.hpp"

#include <json.hpp>

#include "coxstar/errors.hpp"

namespace coxstar {

namespace {

nlohmann::ordered_json labels_json(std::uint32_t mask) {
    auto arr = nlohmann::ordered_json::array();
    for (int l : NodeSet::from_mask(mask).labels()) arr.push_back(l);
    return arr;
}

std::string quoted(const std::string& s) { return '"' + s + '"'; }

std::string render(std::uint32_t mask) { return NodeSet::from_mask(mask).str(); }

}  // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    if (name == "md") return OutputFormat::md;
    throw ParseError("unknown output format '" + name + "' (expected json, csv, or md)");
}

std::string emit_table(const StarTable& t, OutputFormat f) {
    const std::uint32_t nsub = 1u << t.rank;
    if (f == OutputFormat::json) {
        nlohmann::ordered_json j;
        j["type"] = t.type_name;
        j["rank"] = t.rank;
        auto entries = nlohmann::ordered_json::array();
        for (std::uint32_t m1 = 0; m1 < nsub; ++m1)
            for (std::uint32_t m2 = 0; m2 < nsub; ++m2) {
                nlohmann::ordered_json e;
                e["j1"] = labels_json(m1);
                e["j2"] = labels_json(m2);
                e["star"] = labels_json(t.entry(m1, m2));
                entries.push_back(std::move(e));
            }
        j["entries"] = std::move(entries);
        j["verified"] = {{"closure", t.all_ok(StarTable::kClosure)},
                         {"commutative", t.all_ok(StarTable::kCommutative)},
                         {"containment", t.all_ok(StarTable::kContainment)},
                         {"closed_form_match", t.all_ok(StarTable::kClosedForm)}};
        return j.dump(2) + "\n";
    }
    if (f == OutputFormat::csv) {
        std::string out = "j1,j2,star\n";
        for (std::uint32_t m1 = 0; m1 < nsub; ++m1)
            for (std::uint32_t m2 = 0; m2 < nsub; ++m2)
                out += quoted(render(m1)) + "," + quoted(render(m2)) + "," +
                       quoted(render(t.entry(m1, m2))) + "\n";
        return out;
    }
    // markdown: a square matrix for small ranks, a long table otherwise
    std::string out = "# " + t.type_name + " face monoid\n\n";
    if (t.rank <= 4) {
        out += "| J1 \\ J2 |";
        for (std::uint32_t m2 = 0; m2 < nsub; ++m2) out += " " + render(m2) + " |";
        out += "\n|---|";
        for (std::uint32_t m2 = 0; m2 < nsub; ++m2) out += "---|";
        out += "\n";
        for (std::uint32_t m1 = 0; m1 < nsub; ++m1) {
            out += "| " + render(m1) + " |";
            for (std::uint32_t m2 = 0; m2 < nsub; ++m2) out += " " + render(t.entry(m1, m2)) + " |";
            out += "\n";
        }
    } else {
        out += "| J1 | J2 | star |\n|---|---|---|\n";
        for (std::uint32_t m1 = 0; m1 < nsub; ++m1)
            for (std::uint32_t m2 = 0; m2 < nsub; ++m2)
                out += "| " + render(m1) + " | " + render(m2) + " | " +
                       render(t.entry(m1, m2)) + " |\n";
    }
    return out;
}

StarTable parse_table_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    StarTable t;
    t.type_name = j.at("type").get<std::string>();
    t.rank = j.at("rank").get<int>();
    const std::uint32_t nsub = 1u << t.rank;
    t.entries.assign(static_cast<std::size_t>(nsub) * nsub, 0);
    t.status.assign(static_cast<std::size_t>(nsub) * nsub, 0);
    auto mask_of = [](const nlohmann::json& arr) {
        NodeSet s;
        for (const auto& l : arr) s = s.with(l.get<int>());
        return s.mask();
    };
    for (const auto& e : j.at("entries")) {
        const std::uint32_t m1 = mask_of(e.at("j1"));
        const std::uint32_t m2 = mask_of(e.at("j2"));
        t.entries[(static_cast<std::size_t>(m1) << t.rank) | m2] = mask_of(e.at("star"));
    }
    const auto& v = j.at("verified");
    std::uint8_t bits = 0;
    if (v.at("closure").get<bool>()) bits |= StarTable::kClosure;
    if (v.at("commutative").get<bool>()) bits |= StarTable::kCommutative;
    if (v.at("containment").get<bool>()) bits |= StarTable::kContainment;
    if (v.at("closed_form_match").get<bool>()) bits |= StarTable::kClosedForm;
    for (auto& s : t.status) s = bits;
    return t;
}

}  // namespace coxstar

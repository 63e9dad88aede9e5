#include "homodec/relation_io.hpp"

#include "homodec/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <istream>
#include <sstream>

namespace homodec {

namespace {

Relation relation_from_parsed(const nlohmann::json &doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("classes"))
        fail(errc::parse_error, "relation JSON needs an object with \"n\" and \"classes\"");
    if (!doc["n"].is_number_integer())
        fail(errc::parse_error, "\"n\" must be an integer");
    int n = doc["n"].get<int>();
    if (n < 1)
        fail(errc::parse_error, "\"n\" must be at least 1");
    const nlohmann::json &classes = doc["classes"];
    if (!classes.is_array() || classes.size() != static_cast<std::size_t>(n))
        fail(errc::parse_error, "\"classes\" must list one partition per element");
    std::vector<std::vector<std::vector<Element>>> partitions(static_cast<std::size_t>(n));
    for (std::size_t s = 0; s < classes.size(); ++s) {
        if (!classes[s].is_array())
            fail(errc::parse_error,
                 "partition of element " + std::to_string(s) + " must be an array",
                 static_cast<long>(s));
        for (const nlohmann::json &cls : classes[s]) {
            if (!cls.is_array())
                fail(errc::parse_error,
                     "classes of element " + std::to_string(s) + " must be arrays",
                     static_cast<long>(s));
            std::vector<Element> members;
            for (const nlohmann::json &id : cls) {
                if (!id.is_number_integer())
                    fail(errc::parse_error,
                         "element ids must be integers (element " + std::to_string(s) + ")",
                         static_cast<long>(s));
                members.push_back(id.get<Element>());
            }
            partitions[s].push_back(std::move(members));
        }
    }
    return Relation::from_partitions(n, partitions);
}

nlohmann::json parse_document(const std::string &text) {
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded())
        fail(errc::parse_error, "input is not valid JSON");
    return doc;
}

} // namespace

Relation relation_from_json(const std::string &text) {
    return relation_from_parsed(parse_document(text));
}

Relation relation_from_json(std::istream &in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return relation_from_json(buffer.str());
}

std::string relation_to_json(const Relation &r) {
    nlohmann::ordered_json doc;
    doc["n"] = r.size();
    nlohmann::ordered_json classes = nlohmann::ordered_json::array();
    for (Element s = 0; s < r.size(); ++s) {
        std::vector<ElementSet> parts = r.classes_of(s);
        std::sort(parts.begin(), parts.end());
        nlohmann::ordered_json partition = nlohmann::ordered_json::array();
        for (const ElementSet &part : parts)
            partition.push_back(part.members());
        classes.push_back(std::move(partition));
    }
    doc["classes"] = std::move(classes);
    return doc.dump(2) + "\n";
}

} // namespace homodec

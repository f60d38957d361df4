#include "chebfact/psi_cache.hpp"

#include <cctype>
#include <fstream>

#include <json.hpp>

#include "chebfact/psi.hpp"
#include "chebfact/render.hpp"

namespace chebfact {

namespace {

long long parse_index(const std::string& key) {
    if (key.empty() || key.size() > 18) throw PsiCacheError("entry \"" + key + "\": bad index");
    for (char ch : key)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw PsiCacheError("entry \"" + key + "\": bad index");
    const long long d = std::stoll(key);
    if (d < 1) throw PsiCacheError("entry \"" + key + "\": index must be >= 1");
    return d;
}

IntPoly parse_entry(const std::string& key, const nlohmann::json& value) {
    if (!value.is_array() || value.empty())
        throw PsiCacheError("entry \"" + key + "\": expected a nonempty coefficient array");
    std::vector<BigInt> coeffs;
    coeffs.reserve(value.size());
    for (const auto& item : value) {
        if (!item.is_string())
            throw PsiCacheError("entry \"" + key + "\": coefficients must be decimal strings");
        try {
            coeffs.emplace_back(item.get<std::string>());
        } catch (const std::exception&) {
            throw PsiCacheError("entry \"" + key + "\": coefficient \"" +
                                item.get<std::string>() + "\" is not a decimal integer");
        }
    }
    if (coeffs.back() == 0)
        throw PsiCacheError("entry \"" + key + "\": trailing zero coefficient (not canonical)");
    return IntPoly(std::move(coeffs));
}

}  // namespace

std::map<long long, IntPoly> load_psi_cache(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PsiCacheError("cannot read cache file " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw PsiCacheError("cache file " + path + " is not valid JSON: " + e.what());
    }
    if (!doc.is_object() || !doc.contains("version") || !doc["version"].is_number_integer() ||
        doc["version"].get<long long>() != 1)
        throw PsiCacheError("cache file " + path + " has a missing or unsupported version");
    if (!doc.contains("entries") || !doc["entries"].is_object())
        throw PsiCacheError("cache file " + path + " has no entries object");

    std::map<long long, IntPoly> entries;
    for (const auto& [key, value] : doc["entries"].items()) {
        const long long d = parse_index(key);
        IntPoly poly = parse_entry(key, value);
        const std::string defect = psi_entry_defect(d, poly);
        if (!defect.empty())
            throw PsiCacheError("entry \"" + key + "\": " + defect);
        entries.emplace(d, std::move(poly));
    }
    return entries;
}

void save_psi_cache(const std::string& path, const std::map<long long, IntPoly>& entries) {
    nlohmann::ordered_json doc;
    doc["version"] = 1;
    nlohmann::ordered_json body = nlohmann::ordered_json::object();
    for (const auto& [d, poly] : entries) {  // std::map: ascending d
        nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
        for (const std::string& c : coeff_strings(poly)) coeffs.push_back(c);
        body[std::to_string(d)] = std::move(coeffs);
    }
    doc["entries"] = std::move(body);
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw PsiCacheError("cannot write cache file " + path);
    out << doc.dump() << "\n";
    if (!out) throw PsiCacheError("failed writing cache file " + path);
}

}  // namespace chebfact

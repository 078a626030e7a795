#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "httplib.h"

#include "riordan/oeis.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace riordan {

std::string OeisEntry::a_number() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "A%06ld", number);
    return buf;
}

std::string oeis_normalized_query(const std::vector<long long>& terms) {
    std::string q;
    for (size_t i = 0; i < terms.size(); ++i) {
        if (i > 0) q += ',';
        q += std::to_string(terms[i]);
    }
    return q;
}

std::string oeis_cache_key(const std::vector<long long>& terms) {
    const std::string q = oeis_normalized_query(terms);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : q) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::vector<OeisEntry> parse_oeis_response(const std::string& body) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, "JSON", std::string("malformed OEIS response: ") + e.what());
    }
    const nlohmann::json* results = nullptr;
    if (doc.is_array()) {
        results = &doc;
    } else if (doc.is_object()) {
        auto it = doc.find("results");
        if (it == doc.end())
            throw ParseError(0, "results", "malformed OEIS response: no results field");
        if (it->is_null()) return {};
        if (!it->is_array())
            throw ParseError(0, "results array", "malformed OEIS response: results is not an array");
        results = &*it;
    } else {
        throw ParseError(0, "object or array", "malformed OEIS response: unexpected JSON shape");
    }
    std::vector<OeisEntry> out;
    out.reserve(results->size());
    for (const auto& item : *results) {
        if (!item.is_object() || !item.contains("number") || !item["number"].is_number_integer())
            throw ParseError(0, "number", "malformed OEIS response: entry without a number");
        OeisEntry e;
        e.number = item["number"].get<long>();
        if (item.contains("name") && item["name"].is_string()) e.name = item["name"].get<std::string>();
        out.push_back(std::move(e));
    }
    return out;
}

namespace {

OeisFetch live_fetch(const std::string& query) {
    httplib::SSLClient client("oeis.org", 443);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    client.set_follow_location(true);
    httplib::Result res = client.Get("/search?q=" + query + "&fmt=json");
    if (!res)
        throw NetworkError("OEIS request failed: " + httplib::to_string(res.error()) +
                           " (cache miss for this query)");
    return OeisFetch{res->status, res->body};
}

} // namespace

OeisResult oeis_lookup(const std::vector<long long>& terms, const OeisConfig& cfg,
                       const OeisFetcher& fetcher) {
    if (terms.size() < 4)
        throw ValidationError("OEIS query needs at least 4 terms, got " +
                              std::to_string(terms.size()));
    OeisResult result;
    result.cache_key = oeis_cache_key(terms);
    const std::filesystem::path cache_file = cfg.cache_dir / (result.cache_key + ".json");

    if (std::filesystem::exists(cache_file)) {
        std::ifstream in(cache_file, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        result.matches = parse_oeis_response(buf.str());
        result.from_cache = true;
        return result;
    }
    if (cfg.offline)
        throw OeisOfflineMissError("offline mode: query " + oeis_normalized_query(terms) +
                                   " is not in the cache (" + cache_file.string() + ")");

    const OeisFetch fetched = fetcher ? fetcher(oeis_normalized_query(terms))
                                      : live_fetch(oeis_normalized_query(terms));
    if (fetched.status != 200)
        throw NetworkError("OEIS request returned HTTP " + std::to_string(fetched.status) +
                           " (cache miss for this query)");
    result.matches = parse_oeis_response(fetched.body);

    // Cache entries are written once and never rewritten.
    if (!cfg.cache_dir.empty()) {
        std::filesystem::create_directories(cfg.cache_dir);
        if (!std::filesystem::exists(cache_file)) {
            std::ofstream out(cache_file, std::ios::binary);
            out << fetched.body;
        }
    }
    return result;
}

} // namespace riordan

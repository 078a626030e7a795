#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "riordan/errors.hpp"

namespace riordan {

struct OeisEntry {
    long number = 0;
    std::string name;

    /// Zero-padded identifier, e.g. "A000108".
    std::string a_number() const;
};

struct OeisResult {
    std::vector<OeisEntry> matches;
    std::string cache_key;
    bool from_cache = false;
};

struct OeisConfig {
    std::filesystem::path cache_dir;
    bool offline = false;
};

/// Transport seam: maps a search query string ("1,1,2,5,14,42") to an HTTP
/// status and response body. The default performs a GET against the public
/// OEIS search endpoint; tests inject their own.
struct OeisFetch {
    int status = 0;
    std::string body;
};
using OeisFetcher = std::function<OeisFetch(const std::string& query)>;

/// Normalized query text: terms joined by commas, no spaces.
std::string oeis_normalized_query(const std::vector<long long>& terms);

/// Content hash of the normalized query (FNV-1a 64, lowercase hex);
/// the cache file name is "<key>.json".
std::string oeis_cache_key(const std::vector<long long>& terms);

/// Looks a sequence prefix up, serving from the on-disk cache when
/// possible. Queries of fewer than 4 terms are rejected before any
/// network activity. In offline mode a cache miss raises
/// OeisOfflineMissError and the fetcher is never invoked.
OeisResult oeis_lookup(const std::vector<long long>& terms, const OeisConfig& cfg,
                       const OeisFetcher& fetcher = {});

/// Parses an OEIS &fmt=json response body (either the legacy
/// {"results": [...]} object or the newer top-level array).
std::vector<OeisEntry> parse_oeis_response(const std::string& body);

} // namespace riordan

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "locbez/bezout.hpp"
#include "locbez/tangentcone.hpp"

namespace locbez {

/// One golden-test row: a named curve pair and the values it must produce.
struct CorpusEntry {
  std::string name;
  std::string f_text;
  std::string g_text;
  /// Keys among e, c, d, t, ell, lambda, e1, e2, e3.
  std::vector<std::pair<std::string, long>> expected;
};

/// Parses `name | f | g | k=v,...` records; blank lines and lines starting
/// with '#' are skipped. Throws ParseError naming the offending line.
std::vector<CorpusEntry> parse_corpus(std::string_view text);

/// The folium/circle rows for a = 1, 0, 3/2, the two cubic pairs and the axes.
std::vector<CorpusEntry> builtin_corpus(std::string_view name);

/// Report value by key; throws InvalidInput for an unknown key.
long report_value(const BezoutReport& report, std::string_view key);

/// "key: expected X, got Y" for every expected value the report misses.
std::vector<std::string> expected_mismatches(const CorpusEntry& entry, const BezoutReport& report);

/// Random pair with no constant terms and no common factor. Initial forms are
/// products of linear forms drawn from a small shared pool, so common tangents
/// and axis tangents occur often.
CurvePair random_pair(std::mt19937_64& rng, unsigned max_degree, Field field = Field::rationals());

}  // namespace locbez

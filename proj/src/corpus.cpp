#include "locbez/corpus.hpp"

#include <algorithm>
#include <array>
#include <charconv>

#include "locbez/errors.hpp"

namespace locbez {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

constexpr std::string_view kKeys[] = {"e", "c", "d", "t", "ell", "lambda", "e1", "e2", "e3"};

bool known_key(std::string_view k) { return std::find(std::begin(kKeys), std::end(kKeys), k) != std::end(kKeys); }

}  // namespace

std::vector<CorpusEntry> parse_corpus(std::string_view text) {
  std::vector<CorpusEntry> out;
  std::size_t line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto where = [&](const std::string& msg) { return "corpus line " + std::to_string(line_no) + ": " + msg; };
    const auto fields = split(line, '|');
    if (fields.size() < 3 || fields.size() > 4) throw ParseError(where("expected name | f | g [| expected]"), 0);
    CorpusEntry entry{std::string(fields[0]), std::string(fields[1]), std::string(fields[2]), {}};
    if (entry.name.empty() || entry.f_text.empty() || entry.g_text.empty())
      throw ParseError(where("empty field"), 0);
    if (fields.size() == 4 && !fields[3].empty()) {
      for (std::string_view assignment : split(fields[3], ',')) {
        const auto eq = assignment.find('=');
        if (eq == std::string_view::npos) throw ParseError(where("expected key=value"), 0);
        const std::string_view key = trim(assignment.substr(0, eq));
        const std::string_view val = trim(assignment.substr(eq + 1));
        if (!known_key(key)) throw ParseError(where("unknown key '" + std::string(key) + "'"), 0);
        long v = 0;
        const auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
        if (ec != std::errc{} || ptr != val.data() + val.size() || val.empty())
          throw ParseError(where("bad integer '" + std::string(val) + "'"), 0);
        entry.expected.emplace_back(std::string(key), v);
      }
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<CorpusEntry> builtin_corpus(std::string_view name) {
  if (name != "paper") throw InvalidInput("unknown builtin corpus '" + std::string(name) + "'");
  const std::string folium = "x^3+y^3-3*x*y";
  return {
      {"folium-circle-a1", folium, "x^2+y^2-2*x",
       {{"e", 3}, {"c", 2}, {"d", 1}, {"t", 1}, {"ell", 0}, {"e1", 1}, {"e2", 0}, {"e3", 0}}},
      {"folium-circle-a0", folium, "x^2+y^2",
       {{"e", 4}, {"c", 2}, {"d", 2}, {"t", 0}, {"ell", 0}, {"e1", 0}, {"e2", 0}, {"e3", 0}}},
      {"folium-circle-a3/2", folium, "x^2+y^2-3*x",
       {{"e", 5}, {"c", 2}, {"d", 1}, {"t", 1}, {"ell", 2}, {"e1", 3}, {"e2", 0}, {"e3", 0}}},
      {"cubic-pair-1", "x^3-(x^2-y^2)", "y^3-(y^2-x^2)",
       {{"e", 7}, {"c", 2}, {"d", 2}, {"e1", 3}, {"e2", 3}, {"e3", 3}}},
      {"cubic-pair-2", "(x+y)^3-4*x*y", "(x-y)^3+4*x*y",
       {{"e", 7}, {"c", 2}, {"d", 2}, {"e1", 2}, {"e2", 1}, {"e3", 0}}},
      {"axes", "x", "y",
       {{"e", 1}, {"c", 1}, {"d", 1}, {"t", 0}, {"ell", 0}, {"e1", 0}, {"e2", 0}, {"e3", 0}}},
  };
}

long report_value(const BezoutReport& r, std::string_view key) {
  if (key == "e") return r.e;
  if (key == "c") return r.c;
  if (key == "d") return r.d;
  if (key == "t") return r.t;
  if (key == "ell") return r.ell;
  if (key == "lambda") return r.lambda;
  if (key == "e1") return r.e1;
  if (key == "e2") return r.e2;
  if (key == "e3") return r.e3;
  throw InvalidInput("unknown report key '" + std::string(key) + "'");
}

std::vector<std::string> expected_mismatches(const CorpusEntry& entry, const BezoutReport& report) {
  std::vector<std::string> out;
  for (const auto& [key, want] : entry.expected) {
    const long got = report_value(report, key);
    if (got != want) out.push_back(key + ": expected " + std::to_string(want) + ", got " + std::to_string(got));
  }
  return out;
}

namespace {

long uniform(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

long nonzero(std::mt19937_64& rng, long bound) {
  const long v = uniform(rng, 1, bound);
  return uniform(rng, 0, 1) ? v : -v;
}

MultiPoly random_curve(std::mt19937_64& rng, const RingPtr& ring, unsigned max_degree, const std::vector<MultiPoly>& pool) {
  const unsigned c = static_cast<unsigned>(uniform(rng, 1, std::min<long>(3, max_degree)));
  MultiPoly f = MultiPoly::constant(ring, nonzero(rng, 3));
  for (unsigned i = 0; i < c; ++i) f = f * pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(pool.size()) - 1))];
  for (unsigned deg = c + 1; deg <= max_degree; ++deg) {
    for (unsigned i = 0; i <= deg; ++i) {
      if (uniform(rng, 0, 9) >= 3) continue;
      const long coeff = nonzero(rng, 3);
      f = f + MultiPoly::monomial(ring, Monomial::from_exponents(std::array<unsigned, 2>{i, deg - i}), FieldElem(coeff, ring->field()));
    }
  }
  return f;
}

}  // namespace

CurvePair random_pair(std::mt19937_64& rng, unsigned max_degree, Field field) {
  if (max_degree < 1) throw InvalidInput("max_degree must be at least 1");
  const RingPtr ring = make_ring({"x", "y"}, field);
  const MultiPoly x = MultiPoly::variable(ring, 0);
  const MultiPoly y = MultiPoly::variable(ring, 1);
  for (;;) {
    std::vector<MultiPoly> pool;
    for (int i = 0; i < 3; ++i) {
      switch (uniform(rng, 0, 3)) {
        case 0: pool.push_back(x); break;
        case 1: pool.push_back(y); break;
        default: {
          const long a = nonzero(rng, 2);
          const long b = nonzero(rng, 2);
          pool.push_back(x.scaled(FieldElem(a, field)) + y.scaled(FieldElem(b, field)));
        }
      }
    }
    MultiPoly f = random_curve(rng, ring, max_degree, pool);
    MultiPoly g = random_curve(rng, ring, max_degree, pool);
    if (f.is_zero() || g.is_zero() || share_common_factor(f, g)) continue;
    return CurvePair(std::move(f), std::move(g));
  }
}

}  // namespace locbez

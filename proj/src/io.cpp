#include "kset/io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace kset {

ParseError::ParseError(Kind kind, int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      kind_(kind),
      line_(line) {}

const char* to_string(ParseError::Kind kind) {
  switch (kind) {
    case ParseError::Kind::Syntax:
      return "Syntax";
    case ParseError::Kind::BadRational:
      return "BadRational";
    case ParseError::Kind::CountMismatch:
      return "CountMismatch";
    case ParseError::Kind::GeneralPositionViolation:
      return "GeneralPositionViolation";
  }
  return "Syntax";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

bool signed_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return all_digits(s);
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

mpz_class to_mpz(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rat parse_rational(std::string_view token) {
  const auto slash = token.find('/');
  if (slash == std::string_view::npos) {
    if (!signed_integer(token)) throw ParseError(ParseError::Kind::Syntax, 0, "not a number: '" + std::string(token) + "'");
    return Rat(to_mpz(token));
  }
  const auto num = token.substr(0, slash);
  const auto den = token.substr(slash + 1);
  if (!signed_integer(num) || !signed_integer(den))
    throw ParseError(ParseError::Kind::Syntax, 0, "not a rational: '" + std::string(token) + "'");
  mpz_class q = to_mpz(den);
  if (q <= 0 || den.front() == '-')
    throw ParseError(ParseError::Kind::BadRational, 0, "denominator must be positive in '" + std::string(token) + "'");
  Rat r(to_mpz(num), q);
  r.canonicalize();
  return r;
}

Instance parse_instance(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> data;  // (line number, content)
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto tokens = split_ws(line);
    if (!tokens.empty() && tokens.front().front() != '#') data.emplace_back(lineno, line);
    if (end == text.size()) break;
    pos = end + 1;
  }
  if (data.empty()) throw ParseError(ParseError::Kind::Syntax, 0, "missing point count");

  auto count_tokens = split_ws(data.front().second);
  if (count_tokens.size() != 1 || !all_digits(count_tokens.front()))
    throw ParseError(ParseError::Kind::Syntax, data.front().first, "first line must be the point count");
  const unsigned long n = std::stoul(std::string(count_tokens.front()));

  std::vector<Point> pts;
  for (std::size_t d = 1; d < data.size(); ++d) {
    const int ln = data[d].first;
    auto tokens = split_ws(data[d].second);
    if (tokens.size() != 2) throw ParseError(ParseError::Kind::Syntax, ln, "expected \"x y\"");
    try {
      Rat x = parse_rational(tokens[0]);
      Rat y = parse_rational(tokens[1]);
      pts.push_back(Point{std::move(x), std::move(y)});
    } catch (const ParseError& e) {
      throw ParseError(e.kind(), ln, e.what());
    }
  }
  if (pts.size() != n)
    throw ParseError(ParseError::Kind::CountMismatch, data.front().first,
                     "declared " + std::to_string(n) + " points, found " + std::to_string(pts.size()));
  if (n < 2) throw ParseError(ParseError::Kind::Syntax, data.front().first, "an instance needs at least 2 points");

  auto violations = validate_general_position(pts);
  if (!violations.empty()) {
    const auto& v = violations.front();
    // report the line of the last point involved in the first violation
    const int ln = data[1 + v.indices.back()].first;
    throw ParseError(ParseError::Kind::GeneralPositionViolation, ln, v.describe());
  }
  return Instance(std::move(pts));
}

std::string write_instance(const Instance& inst) {
  std::ostringstream os;
  os << inst.n() << '\n';
  for (const auto& p : inst.points()) os << to_string(p.x) << ' ' << to_string(p.y) << '\n';
  return os.str();
}

nlohmann::ordered_json to_json(const Verdict& v) {
  nlohmann::ordered_json j;
  j["name"] = v.name;
  j["lhs"] = to_string(v.lhs);
  j["rhs"] = to_string(v.rhs);
  j["holds"] = v.holds;
  return j;
}

nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["t"] = r.t;
  j["x"] = r.x;
  j["tangents"] = r.tangents;
  j["chain_crossings"] = r.chain_crossings;
  j["below_level"] = r.below_level;
  j["nk"] = r.nk;
  j["ksets_above"] = r.ksets_above;
  j["ksets_below"] = r.ksets_below;
  j["verdicts"] = nlohmann::ordered_json::array();
  for (const auto& v : r.verdicts) j["verdicts"].push_back(to_json(v));
  j["bound_ok"] = r.bound_ok;
  j["easy_case"] = r.easy_case;
  j["crossing_lemma_applicable"] = r.crossing_lemma_applicable;
  j["errors"] = r.errors;
  return j;
}

nlohmann::ordered_json to_json(const SweepSummary& s) {
  nlohmann::ordered_json j;
  j["trials"] = s.config.trials;
  j["seed"] = s.config.seed;
  j["n"] = s.config.n;
  if (s.config.k)
    j["k"] = *s.config.k;
  else
    j["k"] = "all";
  j["shape"] = to_string(s.config.shape);
  j["range"] = s.config.range;

  auto& results = j["results"] = nlohmann::ordered_json::array();
  for (const auto& t : s.results) {
    nlohmann::ordered_json e;
    e["trial"] = t.trial;
    e["n"] = t.n;
    e["k"] = t.k;
    e["t"] = t.t;
    e["x"] = t.x;
    e["bound_ok"] = t.bound_ok;
    e["easy_case"] = t.easy_case;
    e["ksets_total"] = t.ksets_total;
    results.push_back(std::move(e));
  }
  j["maxima"] = {{"t", s.max_t}, {"directed_kset", s.max_directed_kset}, {"total_kset", s.max_total_kset}};
  j["easy_case_count"] = s.easy_case_count;
  j["crossing_lemma"] = {{"applicable", s.crossing_lemma_applicable}, {"held", s.crossing_lemma_held}};

  auto list = [](const std::vector<SweepFailure>& v) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& f : v) arr.push_back({{"trial", f.trial}, {"k", f.k}, {"what", f.what}});
    return arr;
  };
  j["failures"] = list(s.failures);
  j["skipped"] = list(s.skipped);
  return j;
}

}  // namespace kset

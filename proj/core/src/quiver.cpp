#include "arcbrick/quiver.hpp"

#include <algorithm>
#include <sstream>

#include "arcbrick/errors.hpp"

namespace arcbrick {

namespace {

int parse_index(std::string_view digits, std::string_view whole) {
  if (digits.empty() || digits.size() > 6 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError("malformed quiver letter '" + std::string(whole) + "'");
  }
  const int value = std::stoi(std::string(digits));
  if (value < 1) throw ParseError("quiver indices start at 1: '" + std::string(whole) + "'");
  return value;
}

}  // namespace

std::string Arrow::to_string() const {
  return "a" + std::to_string(index) + (inverse ? "-" : "");
}

Arrow Arrow::parse(std::string_view text) {
  if (text.size() < 2 || text.front() != 'a') {
    throw ParseError("malformed arrow '" + std::string(text) + "'");
  }
  const bool inv = text.back() == '-';
  const auto digits = text.substr(1, text.size() - 1 - (inv ? 1 : 0));
  return Arrow{parse_index(digits, text), inv};
}

Path::Path(int start, std::vector<Arrow> arrows) : start_(start), arrows_(std::move(arrows)) {
  if (start < 1) throw PreconditionError("path start vertex must be >= 1");
  int at = start;
  for (const Arrow& a : arrows_) {
    if (a.index < 1) throw PreconditionError("arrow index must be >= 1");
    if (a.source() != at) {
      throw PreconditionError("non-composable path: " + a.to_string() + " does not leave v" +
                              std::to_string(at));
    }
    at = a.target();
  }
}

Path::Path(std::vector<Arrow> arrows)
    : Path(arrows.empty() ? throw PreconditionError("empty path needs an explicit vertex")
                          : arrows.front().source(),
           arrows) {}

Path Path::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.empty()) throw ParseError("empty path");
  if (tokens.size() == 1 && tokens[0].front() == 'e') {
    return idempotent(parse_index(std::string_view(tokens[0]).substr(1), tokens[0]));
  }
  std::vector<Arrow> arrows;
  for (const auto& tok : tokens) arrows.push_back(Arrow::parse(tok));
  try {
    return Path(std::move(arrows));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

int Path::max_vertex() const noexcept {
  int v = start_;
  for (const Arrow& a : arrows_) v = std::max(v, a.index + 1);
  return v;
}

std::string Path::to_string() const {
  if (arrows_.empty()) return "e" + std::to_string(start_);
  std::string out;
  for (const Arrow& a : arrows_) {
    if (!out.empty()) out += ' ';
    out += a.to_string();
  }
  return out;
}

std::vector<Arrow> all_arrows(int n) {
  std::vector<Arrow> out;
  for (int i = 1; i < n; ++i) out.push_back({i, false});
  for (int i = 1; i < n; ++i) out.push_back({i, true});
  return out;
}

}  // namespace arcbrick

#include "rittlab/group_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "rittlab/error.hpp"

namespace rittlab {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Point parse_point(std::string_view token) {
  if (token.empty()) throw ParseError("empty point");
  Point value = 0;
  for (char c : token) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("bad point '" + std::string(token) + "'");
    }
    value = value * 10 + static_cast<Point>(c - '0');
  }
  return value;
}

std::size_t parse_size(std::string_view token) {
  return static_cast<std::size_t>(parse_point(trim(token)));
}

// Splits "key: value" lines; keys are case-sensitive.
std::vector<std::pair<std::string, std::string>> key_values(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    auto colon = t.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("expected 'key: value', got '" + std::string(t) + "'");
    }
    out.emplace_back(std::string(trim(t.substr(0, colon))), std::string(trim(t.substr(colon + 1))));
  }
  return out;
}

}  // namespace

Permutation parse_permutation(std::string_view text, std::size_t degree) {
  text = trim(text);
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') throw ParseError("expected '(' in '" + std::string(text) + "'");
    auto close = text.find(')', i);
    if (close == std::string_view::npos) throw ParseError("unbalanced '(' in '" + std::string(text) + "'");
    std::vector<Point> cycle;
    std::istringstream body{std::string(text.substr(i + 1, close - i - 1))};
    std::string token;
    while (body >> token) cycle.push_back(parse_point(token));
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    i = close + 1;
  }
  if (text.empty()) throw ParseError("empty permutation");
  try {
    return Permutation::from_cycles(degree, cycles);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

std::vector<Permutation> parse_permutation_list(std::string_view text, std::size_t degree) {
  std::vector<Permutation> out;
  text = trim(text);
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    out.push_back(parse_permutation(text.substr(start, comma - start), degree));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_permutation_list(const std::vector<Permutation>& perms) {
  std::string out;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    if (i) out += ", ";
    out += perms[i].to_cycle_string();
  }
  return out.empty() ? "()" : out;
}

PermutationGroup parse_group(std::string_view text) {
  auto spec = parse_context(text);
  return PermutationGroup::close(spec.degree, spec.generators);
}

std::string format_group(const PermutationGroup& g) {
  return "degree: " + std::to_string(g.degree()) + "\ngenerators: " +
         format_permutation_list(g.generators()) + "\n";
}

ContextSpec parse_context(std::string_view text) {
  ContextSpec spec;
  std::optional<std::string> gens_text, h_text, a_text;
  for (auto& [key, value] : key_values(text)) {
    if (key == "degree") {
      spec.degree = parse_size(value);
    } else if (key == "generators") {
      gens_text = value;
    } else if (key == "H") {
      h_text = value;
    } else if (key == "A") {
      a_text = value;
    } else if (key == "name") {
      spec.name = value;
    } else {
      throw ParseError("unknown key '" + key + "'");
    }
  }
  if (spec.degree == 0) throw ParseError("missing or zero 'degree'");
  if (!gens_text) throw ParseError("missing 'generators'");
  spec.generators = parse_permutation_list(*gens_text, spec.degree);

  auto after_word = [](std::string_view v, std::string_view word) -> std::optional<std::string_view> {
    if (v.substr(0, word.size()) != word) return std::nullopt;
    return trim(v.substr(word.size()));
  };
  if (h_text) {
    if (auto pt = after_word(*h_text, "stabilizer")) {
      spec.h_stabilizer_point = parse_point(*pt);
    } else if (auto gens = after_word(*h_text, "generators")) {
      spec.h_generators = parse_permutation_list(*gens, spec.degree);
    } else {
      throw ParseError("H must be 'stabilizer <pt>' or 'generators <cycles>'");
    }
  }
  if (a_text) {
    auto gens = after_word(*a_text, "generators");
    if (!gens) throw ParseError("A must be 'generators <cycles>'");
    spec.a_generators = parse_permutation_list(*gens, spec.degree);
  }
  return spec;
}

std::string format_context(const ContextSpec& spec) {
  std::string out;
  if (!spec.name.empty()) out += "name: " + spec.name + "\n";
  out += "degree: " + std::to_string(spec.degree) + "\n";
  out += "generators: " + format_permutation_list(spec.generators) + "\n";
  if (spec.h_stabilizer_point) {
    out += "H: stabilizer " + std::to_string(*spec.h_stabilizer_point) + "\n";
  } else if (!spec.h_generators.empty()) {
    out += "H: generators " + format_permutation_list(spec.h_generators) + "\n";
  }
  if (spec.a_generators) out += "A: generators " + format_permutation_list(*spec.a_generators) + "\n";
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace rittlab

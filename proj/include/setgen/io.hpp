#pragma once

// Instance files, mapping files and JSON forms of the core values.
//
// Instance file:   G1: <goal>
//                  G2: <goal>
// Mapping file:    one "left ~ right" per line (a trailing "{X->R, ...}"
//                  renaming line is ignored), or JSON [[leftIndex, rightIndex], ...]
//                  indexing the canonical orders of g1 and g2.

#include <cstddef>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "setgen/error.hpp"
#include "setgen/gen_model.hpp"
#include "setgen/goal.hpp"
#include "setgen/instance_gen.hpp"

namespace setgen {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace detail

inline std::pair<Goal, Goal> parse_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<Goal> g1, g2;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = detail::trim(line);
    if (body.empty() || body.front() == '#' || body.front() == '%') continue;
    std::optional<Goal>* slot = nullptr;
    if (body.starts_with("G1:"))
      slot = &g1;
    else if (body.starts_with("G2:"))
      slot = &g2;
    else
      throw ParseError("expected a line starting with 'G1:' or 'G2:'", line_no, 1);
    if (slot->has_value()) throw ParseError("duplicate goal line", line_no, 1);
    try {
      *slot = parse_goal(body.substr(3));
    } catch (const ParseError& e) {
      throw ParseError(std::string("in goal: ") + e.what(), line_no, e.column() + 3);
    }
  }
  if (!g1 || !g2) throw ParseError("instance needs both a 'G1:' and a 'G2:' line", line_no + 1, 1);
  return {std::move(*g1), std::move(*g2)};
}

inline std::string format_instance(const Goal& g1, const Goal& g2) {
  return "G1: " + print_goal(g1) + "\nG2: " + print_goal(g2) + "\n";
}

inline nlohmann::json metrics_json(const InstanceMetrics& m) {
  return {{"vars1", m.vars1},
          {"vars2", m.vars2},
          {"literals1", m.literals1},
          {"literals2", m.literals2},
          {"var_combinations", m.var_combinations},
          {"literal_matchings", m.matchings}};
}

// JSON form of a mapping: [[leftIndex, rightIndex], ...].
inline nlohmann::json mapping_json(const GenContext& ctx, const PairMapping& phi) {
  nlohmann::json out = nlohmann::json::array();
  phi.pairs().for_each([&](std::size_t i) {
    const auto& c = ctx.candidate(i);
    out.push_back({c.left_index, c.right_index});
  });
  return out;
}

// Reads either mapping form; literals refer to ctx's goals. Throws
// ParseError for unknown or non-variant pairs and Error for an invalid
// (conflicting) mapping.
inline PairMapping parse_mapping(const GenContext& ctx, std::string_view text) {
  CandidateSet pairs = ctx.empty_set();
  std::string_view body = detail::trim(text);
  if (body.starts_with("[")) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad JSON mapping: ") + e.what(), 1, 1);
    }
    for (const auto& p : j) {
      if (!p.is_array() || p.size() != 2) throw ParseError("mapping entries must be [left, right]", 1, 1);
      auto c = ctx.find(p[0].get<std::size_t>(), p[1].get<std::size_t>());
      if (!c) throw ParseError("pair " + p.dump() + " is not a candidate pair", 1, 1);
      pairs.insert(*c);
    }
  } else {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      std::string_view l = detail::trim(line);
      if (l.empty() || l.front() == '#' || l.front() == '{') continue;
      const auto tilde = l.find('~');
      if (tilde == std::string_view::npos) throw ParseError("expected 'left ~ right'", line_no, 1);
      const Literal left = parse_literal(l.substr(0, tilde));
      const Literal right = parse_literal(l.substr(tilde + 1));
      auto c = ctx.find(left, right);
      if (!c) throw ParseError("'" + std::string(l) + "' is not a candidate pair", line_no, 1);
      pairs.insert(*c);
    }
  }
  auto phi = is_generalization(ctx, pairs);
  if (!phi) throw Error("mapping is not a generalization: its pairs conflict");
  return *std::move(phi);
}

}  // namespace setgen

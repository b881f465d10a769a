// Copyright 2026 The vnfplace Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <charconv>
#include <fstream>
#include <sstream>

#include "vnfp/error.hpp"
#include "vnfp/topology.hpp"

namespace vnfp {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) tokens.push_back(std::move(current));
    current.clear();
  };
  for (char c : line) {
    if (c == '(' || c == ')') {
      flush();
      tokens.emplace_back(1, c);
    } else if (c == ' ' || c == '\t' || c == '\r') {
      flush();
    } else {
      current.push_back(c);
    }
  }
  flush();
  return tokens;
}

double parseNumber(const std::string& token, std::size_t line) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected a number, got '" + token + "'");
  }
  return value;
}

std::string formatNumber(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

enum class Section { None, Nodes, Links, Other };

struct PendingLink {
  std::size_t line;
  std::string id;
  std::string a;
  std::string b;
  double capacity;  // 0 when the file carries none
};

}  // namespace

Network parseSndlibNative(std::string_view text, std::optional<double> capacityOverride) {
  Network net;
  std::vector<PendingLink> pendingLinks;
  Section section = Section::None;
  int otherDepth = 0;
  bool sawNodes = false;
  bool sawLinks = false;
  std::size_t lineNo = 0;
  std::size_t sectionStart = 0;

  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineNo;
    const auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (raw[first] == '#' || raw[first] == '?') continue;
    const auto tokens = tokenize(raw);

    switch (section) {
      case Section::None: {
        if (tokens.size() != 2 || tokens[1] != "(") {
          throw ParseError(lineNo, "expected a section header 'NAME (', got '" + raw + "'");
        }
        sectionStart = lineNo;
        if (tokens[0] == "NODES") {
          if (sawNodes) throw ParseError(lineNo, "duplicate NODES section");
          section = Section::Nodes;
          sawNodes = true;
        } else if (tokens[0] == "LINKS") {
          if (sawLinks) throw ParseError(lineNo, "duplicate LINKS section");
          section = Section::Links;
          sawLinks = true;
        } else {
          section = Section::Other;
          otherDepth = 1;
        }
        break;
      }
      case Section::Other: {
        for (const auto& t : tokens) {
          if (t == "(") ++otherDepth;
          if (t == ")") --otherDepth;
        }
        if (otherDepth < 0) throw ParseError(lineNo, "unbalanced ')'");
        if (otherDepth == 0) section = Section::None;
        break;
      }
      case Section::Nodes: {
        if (tokens.size() == 1 && tokens[0] == ")") {
          section = Section::None;
          break;
        }
        // <id> [( <lon> <lat> )]
        const bool bare = tokens.size() == 1;
        const bool withCoords = tokens.size() == 5 && tokens[1] == "(" && tokens[4] == ")";
        if ((!bare && !withCoords) || tokens[0] == "(" || tokens[0] == ")") {
          throw ParseError(lineNo, "malformed node entry '" + raw + "'");
        }
        if (net.findNode(tokens[0])) throw ParseError(lineNo, "duplicate node '" + tokens[0] + "'");
        net.addNode(tokens[0]);
        break;
      }
      case Section::Links: {
        if (tokens.size() == 1 && tokens[0] == ")") {
          section = Section::None;
          break;
        }
        // <id> ( <a> <b> ) <pre_cap> <pre_cap_cost> <routing_cost> <setup_cost> ( {<cap> <cost>}* )
        if (tokens.size() < 5 || tokens[1] != "(" || tokens[4] != ")") {
          throw ParseError(lineNo, "malformed link entry '" + raw + "'");
        }
        PendingLink link{lineNo, tokens[0], tokens[2], tokens[3], 0.0};
        std::size_t pos = 5;
        if (pos < tokens.size() && tokens[pos] != "(") {
          link.capacity = parseNumber(tokens[pos], lineNo);
          if (link.capacity < 0.0) throw ParseError(lineNo, "negative capacity");
          pos = 6;
          while (pos < tokens.size() && tokens[pos] != "(") parseNumber(tokens[pos++], lineNo);
        }
        if (pos < tokens.size()) {
          if (tokens.back() != ")") throw ParseError(lineNo, "unterminated module list");
          if (link.capacity == 0.0 && pos + 2 < tokens.size() - 1) {
            link.capacity = parseNumber(tokens[pos + 1], lineNo);
          }
        }
        pendingLinks.push_back(std::move(link));
        break;
      }
    }
  }
  if (section != Section::None) throw ParseError(sectionStart, "section is never closed");
  if (!sawNodes) throw ParseError(lineNo, "missing NODES section");
  if (!sawLinks) throw ParseError(lineNo, "missing LINKS section");

  for (auto& link : pendingLinks) {
    auto a = net.findNode(link.a);
    auto b = net.findNode(link.b);
    if (!a) throw ParseError(link.line, "link '" + link.id + "' references unknown node '" + link.a + "'");
    if (!b) throw ParseError(link.line, "link '" + link.id + "' references unknown node '" + link.b + "'");
    if (*a == *b) throw ParseError(link.line, "link '" + link.id + "' is a self-loop");
    if (net.linkBetween(*a, *b)) {
      throw ParseError(link.line, "duplicate link between '" + link.a + "' and '" + link.b + "'");
    }
    double capacity = capacityOverride.value_or(link.capacity);
    if (!(capacity > 0.0)) throw ParseError(link.line, "link '" + link.id + "' has no usable capacity");
    net.addLink(link.id, *a, *b, capacity);
  }
  return net;
}

Network loadSndlibNative(const std::string& path, std::optional<double> capacityOverride) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open topology file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parseSndlibNative(buffer.str(), capacityOverride);
}

std::string writeSndlibNative(const Network& net, std::string_view name) {
  std::ostringstream out;
  out << "?SNDlib native format; type: network; version: 1.0\n";
  out << "# network " << name << "\n\n";
  out << "NODES (\n";
  for (std::size_t i = 0; i < net.nodeCount(); ++i) out << "  " << net.nodeName(nodeAt(i)) << "\n";
  out << ")\n\n";
  out << "# <link_id> ( <source> <target> ) <pre_installed_capacity> <pre_installed_capacity_cost> "
         "<routing_cost> <setup_cost> ( {<module_capacity> <module_cost>}* )\n";
  out << "LINKS (\n";
  for (const Link& l : net.links()) {
    out << "  " << l.id << " ( " << net.nodeName(l.a) << " " << net.nodeName(l.b) << " ) "
        << formatNumber(l.capacity) << " 0.00 0.00 0.00 ( )\n";
  }
  out << ")\n";
  return out.str();
}

}  // namespace vnfp

#pragma once

// Line-oriented scanner for the deterministic DOT output: recovers per-member
// label rows and per-edge attributes so style soundness can be checked
// against the model without reimplementing the renderer.

#include <string>
#include <string_view>
#include <vector>

namespace quml::testing {

struct DotNode {
  std::string name;
  std::string title_row;
  std::vector<std::string> attr_rows;
  std::vector<std::string> op_rows;
};

struct DotEdge {
  std::string tail;
  std::string head;
  bool double_stroke = false;
  std::string arrowhead;
};

struct DotScan {
  std::vector<DotNode> nodes;
  std::vector<DotEdge> edges;

  const DotNode* node(std::string_view name) const {
    for (const DotNode& n : nodes) {
      if (n.name == name) return &n;
    }
    return nullptr;
  }
};

inline std::vector<std::string> split_rows(std::string_view labels) {
  std::vector<std::string> rows;
  std::size_t pos = 0;
  while ((pos = labels.find("<tr><td", pos)) != std::string_view::npos) {
    const auto start = labels.find('>', labels.find('>', pos) + 1) + 1;
    const auto end = labels.find("</td></tr>", start);
    rows.emplace_back(labels.substr(start, end - start));
    pos = end;
  }
  return rows;
}

inline DotScan scan_dot(std::string_view dot) {
  DotScan scan;
  std::size_t pos = 0;
  while (pos < dot.size()) {
    auto eol = dot.find('\n', pos);
    if (eol == std::string_view::npos) eol = dot.size();
    std::string_view line = dot.substr(pos, eol - pos);
    pos = eol + 1;

    const auto arrow = line.find("\" -> \"");
    if (arrow != std::string_view::npos) {
      DotEdge edge;
      const auto tail_start = line.find('"') + 1;
      edge.tail = std::string(line.substr(tail_start, arrow - tail_start));
      const auto head_start = arrow + 6;
      const auto head_end = line.find('"', head_start);
      edge.head = std::string(line.substr(head_start, head_end - head_start));
      edge.double_stroke = line.find("color=\"black:invis:black\"") != std::string_view::npos;
      const auto ah = line.find("arrowhead=");
      if (ah != std::string_view::npos) {
        auto end = line.find_first_of(",]", ah);
        edge.arrowhead = std::string(line.substr(ah + 10, end - ah - 10));
      }
      scan.edges.push_back(std::move(edge));
      continue;
    }

    const auto label = line.find("[label=<");
    if (label == std::string_view::npos) continue;
    DotNode node;
    const auto name_start = line.find('"') + 1;
    const auto name_end = line.find('"', name_start);
    node.name = std::string(line.substr(name_start, name_end - name_start));

    // Rows appear as: title, <hr/>, attributes, <hr/>, operations.
    const auto first_hr = line.find("<hr/>");
    const auto second_hr = line.find("<hr/>", first_hr + 1);
    auto title_rows = split_rows(line.substr(label, first_hr - label));
    if (!title_rows.empty()) node.title_row = title_rows.front();
    for (std::string& row : split_rows(line.substr(first_hr, second_hr - first_hr))) {
      if (row != "&#160;") node.attr_rows.push_back(std::move(row));
    }
    for (std::string& row : split_rows(line.substr(second_hr))) {
      if (row != "&#160;") node.op_rows.push_back(std::move(row));
    }
    scan.nodes.push_back(std::move(node));
  }
  return scan;
}

inline bool has_bold(std::string_view text) {
  return text.find("<b>") != std::string_view::npos;
}

}  // namespace quml::testing

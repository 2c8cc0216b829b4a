#include <sstream>

#include "quml/render.hpp"

namespace quml {
namespace {

// Fixed geometry (presentation constants, not part of any contract).
constexpr int kLifelineSpacing = 160;
constexpr int kMessagePitch = 40;
constexpr int kHeaderWidth = 120;
constexpr int kHeaderHeight = 30;
constexpr int kHeaderTop = 10;
constexpr int kFirstMessageY = 80;
constexpr int kSelfLoopWidth = 40;
constexpr int kSelfLoopDrop = 16;

std::string xml_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

int lifeline_x(std::size_t index) {
  return kLifelineSpacing / 2 + static_cast<int>(index) * kLifelineSpacing;
}

void write_line(std::ostringstream& os, int x1, int y1, int x2, int y2, bool dashed) {
  os << "    <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
     << "\" stroke=\"black\"";
  if (dashed) os << " stroke-dasharray=\"6 3\"";
  os << "/>\n";
}

void write_self_path(std::ostringstream& os, int x, int y, int right, int bottom, bool dashed) {
  os << "    <path d=\"M " << x << ' ' << y << " H " << right << " V " << bottom << " H " << x
     << "\" fill=\"none\" stroke=\"black\"";
  if (dashed) os << " stroke-dasharray=\"6 3\"";
  os << "/>\n";
}

}  // namespace

std::optional<RenderDoc> render_sequence_diagram(const Model& m, const QuantumnessMap& q,
                                                 std::string_view name) {
  const SequenceDiagram* seq = m.find_sequence(name);
  if (seq == nullptr) return std::nullopt;

  const std::size_t lifelines = seq->lifelines.size();
  const std::size_t messages = seq->messages.size();
  const int width = kLifelineSpacing * static_cast<int>(lifelines == 0 ? 1 : lifelines);
  const int lifeline_bottom = kFirstMessageY + kMessagePitch * static_cast<int>(messages);
  const int height = lifeline_bottom + 20;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height
     << "\" font-family=\"Helvetica\" font-size=\"12\">\n";
  os << "  <title>" << xml_escape(seq->name) << "</title>\n";

  for (std::size_t i = 0; i < lifelines; ++i) {
    const Lifeline& life = seq->lifelines[i];
    const int cx = lifeline_x(i);
    const bool quantum = q.class_of[life.class_index] == Nature::quantum;
    os << "  <g class=\"lifeline\" id=\"lifeline-" << i << "\">\n";
    os << "    <rect x=\"" << cx - kHeaderWidth / 2 << "\" y=\"" << kHeaderTop << "\" width=\""
       << kHeaderWidth << "\" height=\"" << kHeaderHeight
       << "\" fill=\"white\" stroke=\"black\"/>\n";
    os << "    <text x=\"" << cx << "\" y=\"" << kHeaderTop + 20
       << "\" text-anchor=\"middle\"";
    if (quantum) os << " font-weight=\"bold\"";
    os << '>' << xml_escape(m.classes[life.class_index].name) << "</text>\n";
    os << "    <line x1=\"" << cx << "\" y1=\"" << kHeaderTop + kHeaderHeight << "\" x2=\"" << cx
       << "\" y2=\"" << lifeline_bottom << "\" stroke=\"black\" stroke-dasharray=\"4 4\"/>\n";
    os << "  </g>\n";
  }

  for (std::size_t i = 0; i < messages; ++i) {
    const Message& msg = seq->messages[i];
    const int y = kFirstMessageY + kMessagePitch * static_cast<int>(i);
    const int x1 = lifeline_x(msg.from);
    const int x2 = lifeline_x(msg.to);
    // Unknown operations (E033) fall back to the declared marker so that
    // invalid models still render.
    const Nature payload = message_payload(m, *seq, msg).value_or(msg.declared);
    const bool quantum = payload == Nature::quantum;
    const bool dashed = msg.kind == MsgKind::ret;
    const bool self = msg.from == msg.to;

    os << "  <g class=\"message " << (msg.kind == MsgKind::call ? "call" : "return") << ' '
       << (quantum ? "quantum" : "classical") << (self ? " self" : "") << "\" id=\"message-" << i
       << "\">\n";
    if (self) {
      const int right = x1 + kSelfLoopWidth;
      const int bottom = y + kSelfLoopDrop;
      if (quantum) {
        // Two parallel strokes 2 units apart.
        write_self_path(os, x1, y - 1, right + 1, bottom + 1, dashed);
        write_self_path(os, x1, y + 1, right - 1, bottom - 1, dashed);
      } else {
        write_self_path(os, x1, y, right, bottom, dashed);
      }
      os << "    <polygon points=\"" << x1 << ',' << bottom << ' ' << x1 + 10 << ','
         << bottom - 4 << ' ' << x1 + 10 << ',' << bottom + 4 << "\"/>\n";
      os << "    <text x=\"" << x1 + 8 << "\" y=\"" << y - 6 << "\" text-anchor=\"start\">"
         << xml_escape(msg.op_name) << "</text>\n";
    } else {
      if (quantum) {
        write_line(os, x1, y - 1, x2, y - 1, dashed);
        write_line(os, x1, y + 1, x2, y + 1, dashed);
      } else {
        write_line(os, x1, y, x2, y, dashed);
      }
      const int dir = x2 > x1 ? 1 : -1;
      os << "    <polygon points=\"" << x2 << ',' << y << ' ' << x2 - dir * 10 << ',' << y - 4
         << ' ' << x2 - dir * 10 << ',' << y + 4 << "\"/>\n";
      os << "    <text x=\"" << (x1 + x2) / 2 << "\" y=\"" << y - 6
         << "\" text-anchor=\"middle\">" << xml_escape(msg.op_name) << "</text>\n";
    }
    os << "  </g>\n";
  }

  os << "</svg>\n";
  return RenderDoc{RenderDoc::Format::svg, os.str(), std::string(name)};
}

}  // namespace quml

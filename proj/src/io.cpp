#include "inscribe/io.hpp"

#include "inscribe/error.hpp"

#include <algorithm>
#include <sstream>

namespace inscribe {

namespace {

const char* const kPointsHeader = "# inscribe-points v1";
const char* const kChiHeader = "# inscribe-chi v1";

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

bool blank(const std::string& line) { return line.find_first_not_of(" \t") == std::string::npos; }

void expect_header(const std::vector<std::string>& lines, const char* header) {
  auto first = std::find_if(lines.begin(), lines.end(), [](const std::string& l) { return !blank(l); });
  if (first == lines.end() || *first != header)
    throw DomainError(ErrorCode::Parse, std::string("missing header '") + header + "'");
}

}  // namespace

std::string write_points(const PointsFile& file) {
  std::ostringstream out;
  out << kPointsHeader << '\n';
  for (const auto& p : file.config) {
    out << p.label << ' ' << to_string(p.p.x) << ' ' << to_string(p.p.y);
    bool flagged = p.circle || std::find(file.on_circle.begin(), file.on_circle.end(), p.label) != file.on_circle.end();
    if (flagged) out << " B";
    if (p.circle) out << " t=" << p.circle->str();
    out << '\n';
  }
  return out.str();
}

std::string write_points(const Configuration& config) { return write_points(PointsFile{config, {}}); }

PointsFile parse_points(const std::string& text) {
  const auto lines = split_lines(text);
  expect_header(lines, kPointsHeader);
  PointsFile file;
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const std::string& line = lines[n];
    if (blank(line) || line.find_first_not_of(" \t") == line.find('#')) continue;
    auto w = words(line);
    auto fail = [&](const std::string& why) {
      throw DomainError(ErrorCode::Parse, "line " + std::to_string(n + 1) + ": " + why);
    };
    if (w.size() < 3) fail("expected 'label x y'");
    Point p{parse_rat(w[1]), parse_rat(w[2])};
    bool flagged = false;
    std::optional<CirclePoint> circle;
    for (std::size_t i = 3; i < w.size(); ++i) {
      if (w[i] == "B" && !flagged) {
        flagged = true;
      } else if (w[i].rfind("t=", 0) == 0 && !circle) {
        std::string t = w[i].substr(2);
        circle = t == "inf" ? CirclePoint::infinity() : CirclePoint(parse_rat(t));
      } else {
        fail("unexpected field '" + w[i] + "'");
      }
    }
    file.config.add(w[0], p, circle);
    if (flagged || circle) file.on_circle.push_back(w[0]);
  }
  return file;
}

std::string write_chirotope(const Chirotope& chi) {
  std::ostringstream out;
  out << kChiHeader << '\n' << "n=" << chi.size() << '\n' << "# labels:";
  for (const auto& l : chi.labels()) out << ' ' << l;
  out << '\n' << chi.sign_string() << '\n';
  return out.str();
}

Chirotope parse_chirotope(const std::string& text) {
  const auto lines = split_lines(text);
  expect_header(lines, kChiHeader);
  std::optional<std::size_t> n;
  std::vector<std::string> labels;
  std::optional<std::string> signs;
  bool header_seen = false;
  for (const auto& line : lines) {
    if (blank(line)) continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    if (line.rfind("# labels:", 0) == 0) {
      labels = words(line.substr(9));
    } else if (line[0] == '#') {
      continue;
    } else if (line.rfind("n=", 0) == 0 && !n) {
      try {
        std::size_t used = 0;
        long v = std::stol(line.substr(2), &used);
        if (v < 0 || used != line.size() - 2) throw std::invalid_argument("n");
        n = static_cast<std::size_t>(v);
      } catch (const std::exception&) {
        throw DomainError(ErrorCode::Parse, "bad count line '" + line + "'");
      }
    } else if (n && !signs) {
      signs = words(line).empty() ? std::string() : words(line)[0];
    } else {
      throw DomainError(ErrorCode::Parse, "unexpected line '" + line + "'");
    }
  }
  if (!n) throw DomainError(ErrorCode::Parse, "missing n= line");
  if (!signs) signs = std::string();
  if (signs->size() != triple_count(*n))
    throw DomainError(ErrorCode::Parse, "expected " + std::to_string(triple_count(*n)) + " signs, got " +
                                            std::to_string(signs->size()));
  if (labels.empty())
    for (std::size_t i = 0; i < *n; ++i) labels.push_back("p" + std::to_string(i + 1));
  if (labels.size() != *n) throw DomainError(ErrorCode::Parse, "label count does not match n");
  std::vector<std::int8_t> values;
  for (char c : *signs) {
    if (c == '+') values.push_back(1);
    else if (c == '-') values.push_back(-1);
    else if (c == '0') values.push_back(0);
    else throw DomainError(ErrorCode::Parse, std::string("bad sign character '") + c + "'");
  }
  auto sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DomainError(ErrorCode::Parse, "duplicate labels");
  return Chirotope(labels, values);
}

}  // namespace inscribe
